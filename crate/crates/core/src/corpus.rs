//! Deterministic function corpora used by the verification sweeps.
//!
//! Every corpus is a pure function of documented seeds, so sweep reports are
//! reproducible bit-for-bit across runs and machines.

use num_complex::Complex64;

use crate::analytic_fn::TaylorPoly;

/// Degrees of the standard random verification corpus, ten members each.
pub const CORPUS_DEGREES: [usize; 6] = [1, 2, 4, 8, 16, 32];

/// Seed of the `i`-th member of degree `d`: `1000·d + i`.
pub fn corpus_seed(degree: usize, index: usize) -> u64 {
    (1000 * degree + index) as u64
}

/// The standard 60-member random corpus: degrees `{1, 2, 4, 8, 16, 32}`,
/// ten seeded Gaussian polynomials each.
pub fn verification_corpus() -> Vec<TaylorPoly> {
    let mut corpus = Vec::with_capacity(60);
    for &d in &CORPUS_DEGREES {
        for i in 0..10 {
            corpus.push(TaylorPoly::random_poly(d, corpus_seed(d, i)));
        }
    }
    corpus
}

/// Logarithmic-family members for `n` in `lo..=hi`.
pub fn logfam_range(lo: usize, hi: usize) -> Vec<TaylorPoly> {
    (lo..=hi).map(TaylorPoly::make_log_family).collect()
}

/// Taylor truncation of the disc automorphism `(a − z)/(1 − āz)` to the given
/// degree: coefficients `c_0 = a`, `c_k = ā^{k-1}(|a|² − 1)` for `k >= 1`.
///
/// The full function has `H^∞` norm exactly 1, so truncations are natural
/// near-extremal inputs for operator-norm probing.
pub fn moebius_truncation(a: Complex64, degree: usize) -> TaylorPoly {
    assert!(a.norm() < 1.0, "automorphism parameter must lie inside the disc");
    let mut coeffs = Vec::with_capacity(degree + 1);
    coeffs.push(a);
    let factor = a.norm_sqr() - 1.0;
    let mut power = Complex64::new(1.0, 0.0);
    for _ in 1..=degree {
        coeffs.push(power * factor);
        power *= a.conj();
    }
    TaylorPoly::new(coeffs)
}

/// Seeded test-function corpus for operator-norm lower bounds.
///
/// Layout (fixed): the monomials `z^0 … z^16` first, then alternating seeded
/// Gaussian polynomials (degrees cycling over `{3, 5, 8, 12, 16}`, seeds
/// `seed + i`) and truncated disc automorphisms with parameters
/// `0.35 + 0.55·frac(0.618·i)` at golden-angle arguments, until `len` members.
pub fn h_corpus(seed: u64, len: usize) -> Vec<TaylorPoly> {
    const RANDOM_DEGREES: [usize; 5] = [3, 5, 8, 12, 16];
    const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

    let mut corpus: Vec<TaylorPoly> = (0..=16.min(len.saturating_sub(1)))
        .map(TaylorPoly::monomial)
        .collect();
    let mut i = 0usize;
    while corpus.len() < len {
        if i % 3 == 2 {
            let radius = 0.35 + 0.55 * (0.618 * i as f64).fract();
            let a = Complex64::from_polar(radius, GOLDEN_ANGLE * i as f64);
            corpus.push(moebius_truncation(a, 16));
        } else {
            let d = RANDOM_DEGREES[i % RANDOM_DEGREES.len()];
            corpus.push(TaylorPoly::random_poly(d, seed.wrapping_add(i as u64)));
        }
        i += 1;
    }
    corpus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hardy_norms::hinf_norm;

    #[test]
    fn verification_corpus_layout() {
        let corpus = verification_corpus();
        assert_eq!(corpus.len(), 60);
        for (i, &d) in CORPUS_DEGREES.iter().enumerate() {
            for j in 0..10 {
                assert_eq!(corpus[10 * i + j].degree(), Some(d));
            }
        }
        // Reproducible: regeneration is identical.
        let again = verification_corpus();
        for (a, b) in corpus.iter().zip(&again) {
            assert_eq!(a.coeffs(), b.coeffs());
        }
    }

    #[test]
    fn moebius_truncation_norm_near_one() {
        // The truncation tail is geometric, so high-degree truncations stay
        // close to the unit-norm automorphism.
        let a = Complex64::from_polar(0.5, 1.0);
        let t = moebius_truncation(a, 40);
        let norm = hinf_norm(&t);
        assert!((norm - 1.0).abs() < 0.01, "norm {norm}");
    }

    #[test]
    fn h_corpus_layout() {
        let corpus = h_corpus(7, 50);
        assert_eq!(corpus.len(), 50);
        for (k, member) in corpus.iter().take(17).enumerate() {
            assert_eq!(member, &TaylorPoly::monomial(k));
        }
        assert_eq!(h_corpus(7, 50)[23].coeffs(), corpus[23].coeffs());
    }
}
