//! Numerical verification toolkit for Hardy-space inequalities on the unit
//! disc.
//!
//! For analytic functions `f` with derivative of bounded boundary mean, two
//! inequalities are verified over deterministic corpora, together with every
//! intermediate identity of their derivations:
//!
//! * the coefficient-sum inequality `Σ_{k≥1} |f̂(k)| <= π ‖f′‖_{H¹}`,
//! * its integrated analogue
//!   `∫_T |f(ζη) − f(ζ̄η)| / |1−ζ| dm(ζ) <= π ‖f′‖_{H¹}` for every `η` on the
//!   circle, and
//! * the Toeplitz operator norm bound
//!   `‖T_f‖_{H^∞} <= ‖f‖_{H^∞} + π ‖f′‖_{H¹}` that follows from it.
//!
//! Test functions are polynomials ([`TaylorPoly`]); norms are computed from
//! boundary values with error-controlled quadrature; singular integrals are
//! split at their singular abscissae and graded dyadically toward them; and a
//! derivative-free simplex search probes how tight the constants are, without
//! asserting sharpness.
//!
//! Everything is deterministic: seeded corpora, fixed summation orders, and
//! byte-stable reports.
//!
//! # Example
//!
//! ```
//! use hardy_verify::{QuadConfig, TaylorPoly};
//! use hardy_verify::hardy_norms::verify_hardy;
//!
//! // Σ|f̂(k)| = 1 and π‖f′‖_{H¹} = π for f(z) = z.
//! let f = TaylorPoly::from_real(&[0.0, 1.0]);
//! let record = verify_hardy(&f, &QuadConfig::default()).unwrap();
//! assert!(record.pass);
//! assert!((record.rhs - std::f64::consts::PI).abs() < 1e-9);
//! ```
//!
//! The `hardy-verify` binary exposes the same checks as CI-friendly
//! subcommands (`constants`, `verify-hardy`, `verify-thm1`, `kernel-sup`,
//! `toeplitz-check`, `reconstruct-check`, `extremal`); see the crate README
//! and `examples/` for usage.

pub mod analytic_fn;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod extremal;
pub mod hardy_norms;
pub mod quad;
pub mod report;
pub mod singular_quad;
pub mod toeplitz;

pub use analytic_fn::{eta_grid, TaylorPoly, UnitComplex};
pub use error::{Error, Result};
pub use hardy_norms::NormReport;
pub use quad::{QuadConfig, QuadResult};
pub use singular_quad::VerifyRecord;
