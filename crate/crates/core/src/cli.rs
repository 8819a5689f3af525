//! Command-line front end.
//!
//! Exit codes: 0 success, 1 numerical or verification failure, 2 usage or
//! domain error. `eval` prints 15 significant digits; `table` and the JSON
//! report print the shortest decimal that round-trips.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dd::{self, make_context, Modulus};
use crate::error::Error;
use crate::verify::run_suite;
use crate::weierstrass::{Invariants, Weierstrass};
use crate::y4::make_y4_context;
use crate::ComplexScalar;

/// Environment variable overriding the default `verify` tolerance.
pub const TOL_ENV: &str = "SIG4_TOL";
pub const DEFAULT_TOL: f64 = 1e-8;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sig4", version, about = "Signature-four elliptic functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval {
        function: Function,
        #[command(flatten)]
        param: Param,
        /// Argument as `a+bi`; `phi` and `d` take real arguments.
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Half-periods of both lattices and their ratios.
    Periods {
        #[arg(long)]
        kappa: f64,
        /// One CSV row with a header instead of labelled lines.
        #[arg(long)]
        csv: bool,
    },
    /// Invariants, discriminant and midpoint values of both lattices.
    Invariants {
        #[arg(long)]
        kappa: f64,
    },
    /// CSV table of a function along a horizontal segment.
    Table {
        function: Function,
        #[command(flatten)]
        param: Param,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        /// Constant imaginary part of the segment.
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        im: f64,
    },
    /// Run every identity check and print a JSON report.
    Verify {
        #[arg(long)]
        kappa: f64,
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Defaults to $SIG4_TOL, else 1e-8.
        #[arg(long)]
        tol: Option<f64>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Dd,
    Y4plus,
    Y4minus,
    Wp,
    Phi,
    D,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Param {
    /// Modulus for dd, phi and d.
    #[arg(long)]
    pub kappa: Option<f64>,
    /// Parameter for y4plus and y4minus.
    #[arg(long)]
    pub lambda: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub g2: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub g3: Option<f64>,
}

/// A failure carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match root(&e) {
            Error::Domain(_) | Error::UnsupportedLattice { .. } => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        Self { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self { code: EXIT_FAILURE, message: e.to_string() }
    }
}

fn root(e: &Error) -> &Error {
    match e {
        Error::Stage { source, .. } => root(source),
        other => other,
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Eval { function, param, z } => {
            let f = Evaluator::new(function, param)?;
            let z = parse_complex(&z)?;
            match f.eval(z) {
                Ok(v) => writeln!(out, "{}", format_complex(v))?,
                Err(Error::Pole) => writeln!(out, "pole")?,
                Err(e) => return Err(e.into()),
            }
            Ok(EXIT_OK)
        }
        Command::Periods { kappa, csv } => periods(kappa, csv, out),
        Command::Invariants { kappa } => invariants(kappa, out),
        Command::Table { function, param, from, to, steps, im } => {
            table(Evaluator::new(function, param)?, from, to, steps, im, out)
        }
        Command::Verify { kappa, n, seed, tol, out: path } => verify(kappa, n, seed, tol, path, out, err),
    }
}

/// One function with its parameters resolved.
enum Evaluator {
    Dd(dd::DDContext),
    Y4 { ctx: crate::y4::Y4Context, plus: bool },
    Wp(Weierstrass),
    Phi(Modulus),
    D(Modulus),
}

impl Evaluator {
    fn new(function: Function, p: Param) -> std::result::Result<Self, Failure> {
        let need = |v: Option<f64>, flag: &str| v.ok_or_else(|| Failure::usage(format!("{function:?} needs --{flag}")));
        Ok(match function {
            Function::Dd => Self::Dd(make_context(need(p.kappa, "kappa")?)?),
            Function::Y4plus | Function::Y4minus => Self::Y4 {
                ctx: make_y4_context(need(p.lambda, "lambda")?)?,
                plus: function == Function::Y4plus,
            },
            Function::Wp => Self::Wp(Weierstrass::new(Invariants::new(need(p.g2, "g2")?, need(p.g3, "g3")?)?)?),
            Function::Phi => Self::Phi(Modulus::new(need(p.kappa, "kappa")?)?),
            Function::D => Self::D(Modulus::new(need(p.kappa, "kappa")?)?),
        })
    }

    fn eval(&self, z: ComplexScalar) -> crate::Result<ComplexScalar> {
        let real = |z: ComplexScalar| {
            if z.im != 0.0 {
                return Err(Error::Domain(format!("real argument expected, got {z}")));
            }
            Ok(z.re)
        };
        match self {
            Self::Dd(ctx) => ctx.dd(z),
            Self::Y4 { ctx, plus: true } => ctx.y4_plus(z),
            Self::Y4 { ctx, plus: false } => ctx.y4_minus(z),
            Self::Wp(f) => f.value(z),
            Self::Phi(m) => dd::phi(real(z)?, m).map(|v| ComplexScalar::new(v, 0.0)),
            Self::D(m) => dd::d_real(real(z)?, m).map(|v| ComplexScalar::new(v, 0.0)),
        }
    }
}

/// Parses `a+bi`, `a-bi`, `a`, `bi`, with optional spaces.
pub fn parse_complex(s: &str) -> crate::Result<ComplexScalar> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    compact
        .parse::<ComplexScalar>()
        .ok()
        .filter(|z| z.re.is_finite() && z.im.is_finite())
        .ok_or_else(|| Error::Domain(format!("cannot parse complex number {s:?}")))
}

/// `x` to 15 significant digits, trailing zeros dropped, in `%g` style.
pub fn format_sig15(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let sci = format!("{:.14e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x))
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// `a` for real values, else `a+bi` or `a-bi`.
pub fn format_complex(z: ComplexScalar) -> String {
    if z.im == 0.0 {
        return format_sig15(z.re);
    }
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{}{}i", format_sig15(z.re), sign, format_sig15(z.im.abs()))
}

fn periods(kappa: f64, csv: bool, out: &mut dyn Write) -> Outcome {
    let ctx = make_context(kappa)?;
    let lambda = ctx.modulus().lambda();
    let big = make_y4_context(lambda)?.periods();
    let small = ctx.periods();
    let cols = [
        ("omega", small.half_real),
        ("omega_prime_abs", small.half_imag_mag),
        ("Omega", big.half_real),
        ("Omega_prime_abs", big.half_imag_mag),
        ("ratio_im", small.ratio().im),
        ("Ratio_im", big.ratio().im),
    ];
    if csv {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["kappa"];
        header.extend(cols.iter().map(|c| c.0));
        w.write_record(&header).map_err(csv_failure)?;
        let mut row = vec![round_trip(kappa)];
        row.extend(cols.iter().map(|c| round_trip(c.1)));
        w.write_record(&row).map_err(csv_failure)?;
        w.flush()?;
    } else {
        writeln!(out, "kappa = {}", format_sig15(kappa))?;
        writeln!(out, "omega = {}", format_sig15(small.half_real))?;
        writeln!(out, "|omega'| = {}", format_sig15(small.half_imag_mag))?;
        writeln!(out, "Omega = {}", format_sig15(big.half_real))?;
        writeln!(out, "|Omega'| = {}", format_sig15(big.half_imag_mag))?;
        writeln!(out, "omega'/omega = {}", format_complex(small.ratio()))?;
        writeln!(out, "Omega'/Omega = {}", format_complex(big.ratio()))?;
    }
    Ok(EXIT_OK)
}

fn invariants(kappa: f64, out: &mut dyn Write) -> Outcome {
    let ctx = make_context(kappa)?;
    let y4 = make_y4_context(ctx.modulus().lambda())?;
    for (label, f) in [("p", ctx.weierstrass()), ("P", y4.weierstrass())] {
        let inv = f.invariants();
        let e = f.midpoints();
        writeln!(out, "{label}: g2 = {}", format_sig15(inv.g2()))?;
        writeln!(out, "{label}: g3 = {}", format_sig15(inv.g3()))?;
        writeln!(out, "{label}: g2^3 - 27 g3^2 = {}", format_sig15(inv.discriminant()))?;
        writeln!(
            out,
            "{label}: e1, e2, e3 = {}, {}, {}",
            format_sig15(e.e1),
            format_sig15(e.e2),
            format_sig15(e.e3)
        )?;
    }
    Ok(EXIT_OK)
}

fn table(f: Evaluator, from: f64, to: f64, steps: usize, im: f64, out: &mut dyn Write) -> Outcome {
    if steps == 0 {
        return Err(Failure::usage("--steps must be at least 1"));
    }
    if !(from.is_finite() && to.is_finite() && im.is_finite()) {
        return Err(Failure::usage("grid bounds must be finite"));
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["re(z)", "im(z)", "re(f)", "im(f)"]).map_err(csv_failure)?;
    for i in 0..=steps {
        let x = if i == steps { to } else { from + (to - from) * i as f64 / steps as f64 };
        let z = ComplexScalar::new(x, im);
        let (re, imf) = match f.eval(z) {
            Ok(v) => (round_trip(v.re), round_trip(v.im)),
            Err(Error::Pole) => ("pole".to_string(), "pole".to_string()),
            Err(e) => return Err(e.into()),
        };
        w.write_record([round_trip(x), round_trip(im), re, imf]).map_err(csv_failure)?;
    }
    w.flush()?;
    Ok(EXIT_OK)
}

/// Shortest decimal that parses back to `x`, in exponent form when tiny or huge.
pub fn round_trip(x: f64) -> String {
    format!("{x:?}")
}

fn csv_failure(e: csv::Error) -> Failure {
    Failure { code: EXIT_FAILURE, message: e.to_string() }
}

/// The `verify` tolerance: the flag, else `$SIG4_TOL`, else [`DEFAULT_TOL`].
pub fn resolve_tol(flag: Option<f64>, env: Option<&str>) -> std::result::Result<f64, String> {
    match (flag, env) {
        (Some(t), _) => Ok(t),
        (None, Some(s)) => s.trim().parse().map_err(|_| format!("{TOL_ENV}={s:?} is not a number")),
        (None, None) => Ok(DEFAULT_TOL),
    }
}

fn verify(
    kappa: f64,
    n: usize,
    seed: u64,
    tol: Option<f64>,
    path: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let env = std::env::var(TOL_ENV).ok();
    let tol = resolve_tol(tol, env.as_deref()).map_err(Failure::usage)?;
    let report = run_suite(kappa, n, seed, tol)?;
    let json = report.to_json();
    match path {
        Some(p) => std::fs::write(p, json + "\n")?,
        None => writeln!(out, "{json}")?,
    }
    for c in &report.checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        writeln!(err, "{mark} {:<15} {:>5} {:.3e}", c.name, c.samples, c.max_residual)?;
    }
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILURE })
}
