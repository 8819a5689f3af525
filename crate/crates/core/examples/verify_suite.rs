//! Runs the seeded identity suite and prints the JSON report.
//!
//! cargo run --release --example verify_suite -- [kappa n seed tol]

use sig4::verify::run_suite;

fn main() -> sig4::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_owned());
    let kappa: f64 = arg(0, "0.6").parse().expect("kappa");
    let n: usize = arg(1, "200").parse().expect("n");
    let seed: u64 = arg(2, "42").parse().expect("seed");
    let tol: f64 = arg(3, "1e-8").parse().expect("tol");

    let report = run_suite(kappa, n, seed, tol)?;
    for c in &report.checks {
        eprintln!("{} {:<15} {:>4} {:.2e}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.samples, c.max_residual);
    }
    println!("{}", report.to_json());
    if !report.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
