//! Toeplitz operator application in the coefficient domain, a boundary-sampled
//! brute-force oracle, and the operator norm bound
//! `‖T_f‖_{H^∞} <= ‖f‖_{H^∞} + π‖f′‖_{H¹}`.
//!
//! `T_f h` is the analytic projection of `f̄·h` on the circle, defined through
//! the Cauchy kernel `1/(1−ζ̄z) = Σ ζ̄ⁿzⁿ`. Expanding and using orthonormality
//! of `{ζ^k}` under normalized arc measure gives the exact coefficient form
//!
//! ```text
//! (T_f h)ˆ(n) = Σ_{k≥0} conj(f̂(k)) · ĥ(n+k) ,   0 <= n <= deg h ,
//! ```
//!
//! which is what [`apply`] computes; no quadrature error enters the operator
//! itself. The integral definition survives as the independent oracle
//! [`apply_bruteforce`], which samples `f̄·h` on a boundary grid and keeps the
//! nonnegative-frequency Fourier coefficients.

use num_complex::Complex64;

use crate::analytic_fn::{TaylorPoly, UnitComplex};
use crate::error::{Error, Result};
use crate::hardy_norms::{h1_norm_boundary, hinf_norm};
use crate::quad::{QuadConfig, QuadResult};

/// Result of applying `T_f` to `h`, with a sampled lower bound on its norm.
///
/// `sup_norm_lb` is a maximum over finitely many boundary samples, hence
/// never exceeds the true `‖T_f h‖_{H^∞}`; and `deg(result) <= deg(h)`.
#[derive(Debug, Clone)]
pub struct ToeplitzApplication {
    pub result: TaylorPoly,
    pub sup_norm_lb: f64,
}

/// Apply the operator in the coefficient domain (exact up to rounding).
pub fn apply(f: &TaylorPoly, h: &TaylorPoly) -> TaylorPoly {
    let deg_h = match h.degree() {
        Some(d) => d,
        None => return TaylorPoly::zero(),
    };
    let coeffs = (0..=deg_h)
        .map(|n| {
            let mut c = Complex64::new(0.0, 0.0);
            for k in 0..f.coeffs().len() {
                if n + k > deg_h {
                    break;
                }
                c += f.coeff(k).conj() * h.coeff(n + k);
            }
            c
        })
        .collect();
    TaylorPoly::new(coeffs)
}

/// Apply `T_f` and record the sampled boundary maximum of the result.
pub fn apply_sampled(f: &TaylorPoly, h: &TaylorPoly, n: usize) -> ToeplitzApplication {
    let result = apply(f, h);
    let sup_norm_lb = if result.is_zero() {
        0.0
    } else {
        result
            .boundary_samples(n, &UnitComplex::one())
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    };
    ToeplitzApplication {
        result,
        sup_norm_lb,
    }
}

/// Independent oracle: sample `conj(f)·h` on an `n`-point boundary grid, take
/// the discrete Fourier transform, and keep frequencies `0..=deg h`.
///
/// Requires `n > deg f + deg h`; coarser grids alias negative frequencies of
/// `f̄·h` into the kept range.
pub fn apply_bruteforce(f: &TaylorPoly, h: &TaylorPoly, n: usize) -> Result<TaylorPoly> {
    let deg_h = match h.degree() {
        Some(d) => d,
        None => return Ok(TaylorPoly::zero()),
    };
    let deg_f = f.degree().unwrap_or(0);
    if n <= deg_f + deg_h {
        return Err(Error::Aliasing {
            needed: deg_f + deg_h,
            got: n,
        });
    }

    let step = 2.0 * std::f64::consts::PI / n as f64;
    let samples: Vec<Complex64> = (0..n)
        .map(|j| {
            let t = j as f64 * step;
            f.eval_on_circle(t).conj() * h.eval_on_circle(t)
        })
        .collect();

    let coeffs = (0..=deg_h)
        .map(|m| {
            let mut c = Complex64::new(0.0, 0.0);
            for (j, v) in samples.iter().enumerate() {
                c += v * Complex64::from_polar(1.0, -step * (j * m % n) as f64);
            }
            c / n as f64
        })
        .collect();
    Ok(TaylorPoly::new(coeffs))
}

/// The norm bound `‖f‖_{H^∞} + π‖f′‖_{H¹}` with its quadrature error.
pub fn operator_bound_quad(f: &TaylorPoly, cfg: &QuadConfig) -> Result<QuadResult> {
    let q = h1_norm_boundary(&f.derivative(), cfg)?;
    Ok(QuadResult::new(
        hinf_norm(f) + std::f64::consts::PI * q.value,
        std::f64::consts::PI * q.err_est,
        q.nodes,
    ))
}

/// The norm bound `‖f‖_{H^∞} + π‖f′‖_{H¹}`.
pub fn operator_bound(f: &TaylorPoly, cfg: &QuadConfig) -> Result<f64> {
    operator_bound_quad(f, cfg).map(|q| q.value)
}

/// Certified lower bound on `‖T_f‖_{H^∞}`: the maximum of
/// `‖T_f h‖_{H^∞} / ‖h‖_{H^∞}` over a finite corpus.
///
/// Corpus members are normalized internally (zero members are skipped), so the
/// bound is monotone nondecreasing under corpus inclusion.
pub fn empirical_norm_lb(f: &TaylorPoly, h_corpus: &[TaylorPoly]) -> f64 {
    empirical_norm_lb_with_witness(f, h_corpus).0
}

/// As [`empirical_norm_lb`], also returning the index of the maximizing `h`.
pub fn empirical_norm_lb_with_witness(
    f: &TaylorPoly,
    h_corpus: &[TaylorPoly],
) -> (f64, Option<usize>) {
    let mut best = 0.0f64;
    let mut witness = None;
    for (i, h) in h_corpus.iter().enumerate() {
        let denom = hinf_norm(h);
        if denom == 0.0 {
            continue;
        }
        let ratio = hinf_norm(&apply(f, h)) / denom;
        if ratio > best {
            best = ratio;
            witness = Some(i);
        }
    }
    (best, witness)
}

/// Boundary samples of `ζ ↦ conj(f(ζ̄η))` on the uniform `n`-point grid.
///
/// This is the boundary trace of the reflected conjugate function used when
/// splitting `f̄(ζη)·h` into a symmetric-difference piece and a piece bounded
/// by `‖f‖_{H^∞}‖h‖_{H^∞}`; its sampled modulus agrees with that of `f`.
pub fn reflected_conjugate_boundary(
    f: &TaylorPoly,
    eta: &UnitComplex,
    n: usize,
) -> Vec<Complex64> {
    assert!(n >= 1, "sample count must be at least 1");
    let step = 2.0 * std::f64::consts::PI / n as f64;
    (0..n)
        .map(|j| {
            let zeta_bar = Complex64::from_polar(1.0, -(j as f64) * step);
            f.eval(zeta_bar * eta.value())
                .expect("boundary point is inside the closed disc")
                .conj()
        })
        .collect()
}
