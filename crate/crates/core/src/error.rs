use thiserror::Error;

/// Failures raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain an operation supports.
    #[error("domain error: {0}")]
    Domain(String),

    /// The argument sits on (or within the pole threshold of) a pole.
    #[error("pole")]
    Pole,

    /// Tanh-sinh refinement ran out of levels before meeting the tolerance.
    #[error("quadrature did not converge: last estimate {estimate:e}, last change {change:e}")]
    QuadratureBreakdown { estimate: f64, change: f64 },

    /// A root-finder could not reach the requested tolerance.
    #[error("root finder did not converge after {iterations} iterations")]
    RootNotConverged { iterations: usize },

    /// A power series could not reach working precision within its term cap.
    #[error("series did not converge for x = {x}")]
    PrecisionLoss { x: f64 },

    /// The supplied initial value is not a zero of the quartic.
    #[error("not a root: f(w0) = {residual:e}")]
    NotARoot { residual: f64 },

    /// The supplied zero of the quartic is repeated.
    #[error("root not simple: f'(w0) = {derivative:e}")]
    RootNotSimple { derivative: f64 },

    /// Invariants whose discriminant is not positive (no rectangular lattice).
    #[error("unsupported lattice: discriminant g2^3 - 27 g3^2 = {discriminant:e} is not positive")]
    UnsupportedLattice { discriminant: f64 },

    /// A failure while building one stage of a larger computation.
    #[error("{stage}: {source}")]
    Stage { stage: &'static str, source: Box<Error> },
}

impl Error {
    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage { stage, source: Box::new(self) }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
