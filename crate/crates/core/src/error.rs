//! Crate-wide error type.

use crate::quad::QuadResult;

/// Errors raised by norm computations, quadrature, and spec parsing.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Evaluation point lies outside the closed unit disc.
    #[error("evaluation point has modulus {modulus:.17} > 1 + 1e-12")]
    OutsideDisc { modulus: f64 },

    /// A value expected on the unit circle is not of unit modulus.
    #[error("value has modulus {modulus:.17}, expected unit modulus within 1e-12")]
    NotUnitModulus { modulus: f64 },

    /// Quadrature did not reach the error criterion within the node budget.
    /// Carries the best estimate so the caller can report it honestly.
    #[error(
        "quadrature did not converge within {} nodes (best value {:.17e}, error estimate {:.3e})",
        best.nodes, best.value, best.err_est
    )]
    NonConvergence { best: QuadResult },

    /// Reconstruction requested too close to the boundary circle.
    #[error("reconstruction point has modulus {modulus:.17}; only |z| <= {limit} is supported")]
    OutsideReconstructionDomain { modulus: f64, limit: f64 },

    /// Grid too small for alias-free discrete Fourier analysis.
    #[error("grid size {got} is too small; alias-free transform needs more than {needed} points")]
    Aliasing { needed: usize, got: usize },

    /// A ratio objective was asked for a function with identically zero derivative.
    #[error("ratio undefined: the function has zero derivative")]
    ZeroDerivative,

    /// Malformed function spec string, with the byte offset of the problem.
    #[error("invalid function spec {input:?} at byte {pos}: {reason}")]
    SpecParse {
        input: String,
        pos: usize,
        reason: String,
    },

    /// A best objective exceeded its theorem-backed ceiling: this flags a
    /// numerics fault, never a mathematical discovery.
    #[error(
        "objective {objective:.17} exceeds the ceiling {ceiling:.17}; \
         this indicates a quadrature or implementation fault"
    )]
    CeilingExceeded { objective: f64, ceiling: f64 },

    /// Invalid argument combination (empty grids, out-of-range parameters).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
