//! Analytic test functions on the closed unit disc: representation,
//! evaluation, and coefficient algebra.
//!
//! Functions are finite Taylor polynomials `f(z) = Σ a_k z^k`, which are dense
//! enough for every verification performed by this crate. Coefficients are
//! kept in canonical form (trailing zeros trimmed; the zero polynomial is the
//! empty sequence), and every operation is a pure function of its inputs, so
//! values are safe to share between concurrent workers.
//!
//! # Function spec mini-grammar
//!
//! The CLI and JSON reports identify functions by spec strings:
//!
//! ```text
//! spec     := "poly:" coeffs | "logfam:" N | "random:" degree "," seed
//! coeffs   := "" | complex ("," complex)*
//! complex  := float                     real part only, e.g.  1.5  -2
//!           | float "j"                 imaginary only, e.g.  2j  -0.5j
//!           | float sign float "j"      both parts,     e.g.  1+2j  3.5-1j
//! ```
//!
//! Floats use the ordinary decimal syntax accepted by Rust's `f64` parser.
//! `poly:` lists Taylor coefficients `a_0, a_1, …` (an empty list is the zero
//! polynomial); `logfam:N` is the degree-`N` member of the logarithmic family
//! (see [`TaylorPoly::make_log_family`]); `random:d,s` is the seeded Gaussian
//! polynomial of degree `d` (see [`TaylorPoly::random_poly`]).

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const UNIT_MODULUS_TOL: f64 = 1e-12;
const DISC_TOL: f64 = 1e-12;

/// A point of the unit circle, carrying both the complex value and its angle.
///
/// Invariant: `| |value| - 1 | <= 1e-12` and `value = e^{i·angle}` to the same
/// tolerance. Constructors enforce this.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitComplex {
    value: Complex64,
    angle: f64,
}

impl UnitComplex {
    /// The point `e^{iθ}`.
    pub fn from_angle(angle: f64) -> Self {
        Self {
            value: Complex64::from_polar(1.0, angle),
            angle,
        }
    }

    /// Wrap an existing complex value, rejecting anything off the circle.
    pub fn from_value(value: Complex64) -> Result<Self> {
        let modulus = value.norm();
        if (modulus - 1.0).abs() > UNIT_MODULUS_TOL {
            return Err(Error::NotUnitModulus { modulus });
        }
        Ok(Self {
            value,
            angle: value.arg(),
        })
    }

    /// The point `1` (angle zero).
    pub fn one() -> Self {
        Self {
            value: Complex64::new(1.0, 0.0),
            angle: 0.0,
        }
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    /// Complex conjugate (reflection across the real axis).
    pub fn conj(&self) -> Self {
        Self {
            value: self.value.conj(),
            angle: -self.angle,
        }
    }

    /// Product of two circle points, constructed from the angle sum so the
    /// unit-modulus invariant cannot drift.
    pub fn rotate_by(&self, other: &UnitComplex) -> Self {
        Self::from_angle(self.angle + other.angle)
    }
}

/// `n` equispaced circle points `e^{2πij/n}`, `j = 0..n`.
pub fn eta_grid(n: usize) -> Vec<UnitComplex> {
    assert!(n >= 1, "grid size must be at least 1");
    (0..n)
        .map(|j| UnitComplex::from_angle(2.0 * std::f64::consts::PI * j as f64 / n as f64))
        .collect()
}

/// An analytic polynomial `f(z) = Σ_{k=0}^{N} a_k z^k` in canonical form.
#[derive(Debug, Clone)]
pub struct TaylorPoly {
    coeffs: Vec<Complex64>,
    label: Option<String>,
}

impl PartialEq for TaylorPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    // Fixed highest-to-lowest order: deterministic across runs, and padding
    // with trailing zeros cannot change the result bit-for-bit.
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

impl TaylorPoly {
    /// Build from Taylor coefficients `a_0, a_1, …`, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs
            .last()
            .is_some_and(|c| c.re == 0.0 && c.im == 0.0)
        {
            coeffs.pop();
        }
        Self {
            coeffs,
            label: None,
        }
    }

    /// Build from real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The zero polynomial (empty coefficient sequence, degree `None`).
    pub fn zero() -> Self {
        Self {
            coeffs: Vec::new(),
            label: None,
        }
    }

    /// The monomial `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = Complex64::new(1.0, 0.0);
        Self {
            coeffs,
            label: None,
        }
    }

    /// Attach a provenance label (a spec string) used in verification records.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `a_k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs
            .get(k)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Degree of the canonical form; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Evaluate at `z` in the closed unit disc (Horner, fixed order).
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let modulus = z.norm();
        if modulus > 1.0 + DISC_TOL {
            return Err(Error::OutsideDisc { modulus });
        }
        Ok(horner(&self.coeffs, z))
    }

    /// Evaluate at the boundary point `e^{it}` (no domain check needed).
    pub fn eval_on_circle(&self, t: f64) -> Complex64 {
        horner(&self.coeffs, Complex64::from_polar(1.0, t))
    }

    /// Termwise derivative: coefficients `k·a_k` shifted down one index.
    pub fn derivative(&self) -> TaylorPoly {
        if self.coeffs.len() <= 1 {
            return TaylorPoly::zero();
        }
        TaylorPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, &c)| c * (i + 1) as f64)
                .collect(),
        )
    }

    /// The rotated function `g(z) = f(z·η)`, i.e. coefficients `a_k η^k`.
    pub fn rotate(&self, eta: &UnitComplex) -> TaylorPoly {
        let mut power = Complex64::new(1.0, 0.0);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            coeffs.push(c * power);
            power *= eta.value();
        }
        TaylorPoly::new(coeffs)
    }

    /// Values `f(e^{2πij/n}·η)` for `j = 0..n`.
    pub fn boundary_samples(&self, n: usize, eta: &UnitComplex) -> Vec<Complex64> {
        assert!(n >= 1, "sample count must be at least 1");
        let step = 2.0 * std::f64::consts::PI / n as f64;
        (0..n)
            .map(|j| horner(&self.coeffs, Complex64::from_polar(1.0, j as f64 * step) * eta.value()))
            .collect()
    }

    /// Degree-`n` member of the logarithmic family: `a_0 = 0`, `a_k = 1/k`
    /// for `1 <= k <= n` (the partial sums of `-ln(1-z)`), a near-extremal
    /// corpus for the coefficient-sum inequality.
    pub fn make_log_family(n: usize) -> TaylorPoly {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
        for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
            *c = Complex64::new(1.0 / k as f64, 0.0);
        }
        TaylorPoly::new(coeffs).with_label(format!("logfam:{n}"))
    }

    /// Seeded random polynomial: each coefficient is an independent standard
    /// complex Gaussian (real and imaginary parts `N(0, 1/2)`).
    ///
    /// The generator is pinned for reproducibility: a ChaCha8 stream keyed by
    /// `seed`, converted to uniforms from the top 53 bits of each `u64` draw,
    /// then Box–Muller. The same `(degree, seed)` always yields bit-identical
    /// coefficients.
    pub fn random_poly(degree: usize, seed: u64) -> TaylorPoly {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut unit = move || (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        let coeffs = (0..=degree)
            .map(|_| {
                let u1 = 1.0 - unit(); // in (0, 1]
                let u2 = unit();
                let r = (-2.0 * u1.ln()).sqrt() * std::f64::consts::FRAC_1_SQRT_2;
                let phi = 2.0 * std::f64::consts::PI * u2;
                Complex64::new(r * phi.cos(), r * phi.sin())
            })
            .collect();
        TaylorPoly::new(coeffs).with_label(format!("random:{degree},{seed}"))
    }

    /// Scalar multiple `c·f`.
    pub fn scale(&self, c: Complex64) -> TaylorPoly {
        TaylorPoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Pointwise sum `f + g`.
    pub fn add(&self, other: &TaylorPoly) -> TaylorPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        TaylorPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    /// Constant shift `f + c`.
    pub fn add_constant(&self, c: Complex64) -> TaylorPoly {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(c);
        } else {
            coeffs[0] += c;
        }
        TaylorPoly::new(coeffs)
    }

    /// The function's spec string: its provenance label when one was attached
    /// (`logfam:…`, `random:…`, or the string it was parsed from), otherwise
    /// the canonical `poly:…` form.
    pub fn spec_string(&self) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| self.canonical_spec())
    }

    /// Canonical `poly:…` spec string listing the coefficients.
    pub fn canonical_spec(&self) -> String {
        let mut s = String::from("poly:");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format_complex(*c));
        }
        s
    }
}

/// Shortest round-trip text form of a coefficient in the spec grammar.
fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else if c.re == 0.0 {
        format!("{}j", c.im)
    } else if c.im < 0.0 {
        format!("{}{}j", c.re, c.im)
    } else {
        format!("{}+{}j", c.re, c.im)
    }
}
