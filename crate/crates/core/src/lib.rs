//! Signature-four elliptic functions.
//!
//! * [`dd`]: the modulus bundle, the incomplete hypergeometric integral and
//!   its inverse, and the elliptic function `dd` in Weierstrass form.
//! * [`y4`]: elliptic solutions `y₄±` of `(y′)² = T₄(y) − (1 − 2λ²)`.
//! * [`quartic`]: the ℘-form solution of `(w′)² = f(w)`, `w(0) = w₀`, for a
//!   quartic `f` with a simple zero `w₀`.
//! * [`weierstrass`]: ℘ and ℘′ on real rectangular lattices.
//! * [`verify`]: residual checks for every identity relating these and a
//!   seeded batch runner producing a JSON report.
//! * [`cli`]: the `sig4` command (`eval`, `periods`, `invariants`, `table`,
//!   `verify`).

pub mod cli;
pub mod dd;
pub mod error;
pub mod hypergeom;
pub mod numeric;
pub mod quartic;
pub mod verify;
pub mod weierstrass;
pub mod y4;

pub use error::{Error, Result};
pub use numeric::ComplexScalar;
