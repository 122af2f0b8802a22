//! Shared test oracles, independent of the production quadrature path.
//!
//! The production engine is adaptive 15-point Gauss–Kronrod bisection; the
//! oracle here is a non-adaptive, fixed graded mesh of 16-point Gauss–Legendre
//! panels, geometrically refined toward every segment endpoint. Agreement
//! between the two is a genuine dual-method check.

// Positive nodes and weights of the 16-point Gauss-Legendre rule.
const GL16_X: [f64; 8] = [
    0.095_012_509_837_637_440_185,
    0.281_603_550_779_258_913_230,
    0.458_016_777_657_227_386_342,
    0.617_876_244_402_643_748_447,
    0.755_404_408_355_003_033_895,
    0.865_631_202_387_831_743_880,
    0.944_575_023_073_232_576_078,
    0.989_400_934_991_649_932_596,
];
const GL16_W: [f64; 8] = [
    0.189_450_610_455_068_496_285,
    0.182_603_415_044_923_588_867,
    0.169_156_519_395_002_538_189,
    0.149_595_988_816_576_732_081,
    0.124_628_971_255_533_872_052,
    0.095_158_511_682_492_784_810,
    0.062_253_523_938_647_892_863,
    0.027_152_459_411_754_094_852,
];

fn gl16(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for (x, w) in GL16_X.iter().zip(GL16_W.iter()) {
        sum += w * (f(center - half * x) + f(center + half * x));
    }
    sum * half
}

/// Integrate one segment with dyadic grading toward both endpoints.
///
/// The mesh halves geometrically for `levels` steps into each end, which
/// restores full accuracy for integrable endpoint singularities (log or
/// weaker); the innermost slivers of relative width `2^-levels` are dropped,
/// contributing far below 1e-13 for such integrands.
fn graded_segment(f: &dyn Fn(f64) -> f64, a: f64, b: f64, levels: u32) -> f64 {
    let mid = 0.5 * (a + b);
    let half = mid - a;
    let mut sum = 0.0;
    // Grade into the left endpoint; stop once panels collapse to floating
    // resolution (the dropped sliver is negligible for integrable ends).
    for k in 0..levels {
        let lo = a + half * 0.5f64.powi(k as i32 + 1);
        let hi = a + half * 0.5f64.powi(k as i32);
        if lo <= a || lo >= hi {
            break;
        }
        sum += gl16(f, lo, hi);
    }
    for k in 0..levels {
        let lo = b - half * 0.5f64.powi(k as i32);
        let hi = b - half * 0.5f64.powi(k as i32 + 1);
        if hi >= b || lo >= hi {
            break;
        }
        sum += gl16(f, lo, hi);
    }
    sum
}

/// Brute-force graded-mesh integral over consecutive segments; interior
/// break points should mark singular or non-smooth abscissae.
pub fn oracle_integral(f: &dyn Fn(f64) -> f64, breaks: &[f64]) -> f64 {
    assert!(breaks.len() >= 2 && breaks.windows(2).all(|w| w[0] < w[1]));
    breaks
        .windows(2)
        .map(|w| graded_segment(f, w[0], w[1], 52))
        .sum()
}

#[allow(dead_code)]
/// Brute-force fine-grid composite Simpson rule (`panels` must be even).
///
/// Uniform meshes lose order at interior corners of `|·|`-type integrands,
/// but at two million panels the residual O(h²) corner error sits near 1e-12,
/// which is all the dual-method checks need.
pub fn simpson_oracle(f: &dyn Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    assert!(panels >= 2 && panels % 2 == 0);
    let h = (b - a) / panels as f64;
    let mut sum = f(a) + f(b);
    for j in 1..panels {
        let w = if j % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + j as f64 * h);
    }
    sum * h / 3.0
}

#[allow(dead_code)]
/// `2 Σ_{k≥0} (2k+1)^{-2}` by direct summation with an asymptotic tail
/// (accurate to ~1e-16); the series route to the sub-integral constant.
pub fn odd_reciprocal_square_series() -> f64 {
    const K: usize = 100_000;
    // Smallest terms first to keep the summation error at rounding level.
    let mut sum = 0.0;
    for k in (0..K).rev() {
        let d = (2 * k + 1) as f64;
        sum += 1.0 / (d * d);
    }
    // Σ_{k≥K} (2k+1)^{-2} = (1/4) Σ_{j≥K} (j+1/2)^{-2}, expanded at x = K+1/2.
    let x = K as f64 + 0.5;
    let tail = 0.25 * (1.0 / x + 1.0 / (2.0 * x * x) + 1.0 / (6.0 * x * x * x));
    2.0 * (sum + tail)
}
