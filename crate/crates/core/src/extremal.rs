//! Derivative-free search for functions that make the verified inequalities
//! tight.
//!
//! The two studied ratios are bounded by `π` (their theorem ceilings); the
//! optimizer explores test families and reports empirical suprema only — it
//! asserts nothing about sharpness, and a best value above a ceiling is
//! classified as a numerics fault, never as a discovery.
//!
//! The optimizer is a deterministic Nelder–Mead simplex (reflection,
//! expansion, contraction, shrink) with seeded perturbed restarts. Objective
//! evaluations are cached by coefficient bit pattern, since quadrature
//! dominates the cost of an evaluation.

use std::collections::HashMap;
use std::f64::consts::PI;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analytic_fn::{eta_grid, TaylorPoly, UnitComplex};
use crate::corpus;
use crate::error::{Error, Result};
use crate::hardy_norms::{h1_norm_boundary, hardy_sum};
use crate::quad::QuadConfig;
use crate::singular_quad::theorem1_lhs;
use crate::toeplitz::{empirical_norm_lb, operator_bound};

/// Which ratio the search maximizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// `max_η L(f, η) / ‖f′‖_{H¹}`, ceiling `π`.
    Thm1,
    /// `Σ|f̂(k)| / ‖f′‖_{H¹}`, ceiling `π`.
    Hardy,
    /// `empirical_norm_lb(f) / (‖f‖_{H^∞} + π‖f′‖_{H¹})`, ceiling `1`.
    Toeplitz,
}

impl Objective {
    pub fn ceiling(self) -> f64 {
        match self {
            Objective::Thm1 | Objective::Hardy => PI,
            Objective::Toeplitz => 1.0,
        }
    }
}

/// `max_η L(f, η) / ‖f′‖_{H¹}` over the given rotation grid.
pub fn ratio_theorem1(
    f: &TaylorPoly,
    etas: &[UnitComplex],
    cfg: &QuadConfig,
) -> Result<f64> {
    if f.is_constant() {
        return Err(Error::ZeroDerivative);
    }
    if etas.is_empty() {
        return Err(Error::InvalidInput("eta grid must be nonempty".into()));
    }
    let denom = h1_norm_boundary(&f.derivative(), cfg)?.value;
    if denom == 0.0 {
        return Err(Error::ZeroDerivative);
    }
    let mut best = 0.0f64;
    for eta in etas {
        let lhs = theorem1_lhs(f, eta, cfg)?.value;
        best = best.max(lhs / denom);
    }
    Ok(best)
}

/// `Σ_{k≥1}|f̂(k)| / ‖f′‖_{H¹}`.
pub fn ratio_hardy(f: &TaylorPoly, cfg: &QuadConfig) -> Result<f64> {
    if f.is_constant() {
        return Err(Error::ZeroDerivative);
    }
    let denom = h1_norm_boundary(&f.derivative(), cfg)?.value;
    if denom == 0.0 {
        return Err(Error::ZeroDerivative);
    }
    Ok(hardy_sum(f) / denom)
}

/// Tightness of the operator-norm bound on a finite corpus:
/// `empirical_norm_lb(f) / (‖f‖_{H^∞} + π‖f′‖_{H¹})`, at most 1.
pub fn ratio_toeplitz(
    f: &TaylorPoly,
    h_corpus: &[TaylorPoly],
    cfg: &QuadConfig,
) -> Result<f64> {
    let bound = operator_bound(f, cfg)?;
    if bound == 0.0 {
        return Err(Error::InvalidInput(
            "operator bound is zero (zero symbol)".into(),
        ));
    }
    Ok(empirical_norm_lb(f, h_corpus) / bound)
}

/// A parameterized coefficient family the optimizer explores.
pub trait CoefficientFamily {
    fn name(&self) -> &str;
    fn dim(&self) -> usize;
    fn poly(&self, params: &[f64]) -> TaylorPoly;
    /// Starting point of the first simplex.
    fn start(&self) -> Vec<f64> {
        vec![0.0; self.dim()]
    }
}

/// Single monomials `z^n` with `n = 1 + round(|s|)`, clamped to `max_degree`.
#[derive(Debug, Clone)]
pub struct MonomialFamily {
    pub max_degree: usize,
}

impl CoefficientFamily for MonomialFamily {
    fn name(&self) -> &str {
        "monomial"
    }
    fn dim(&self) -> usize {
        1
    }
    fn poly(&self, params: &[f64]) -> TaylorPoly {
        let n = (1 + params[0].abs().round() as usize).min(self.max_degree.max(1));
        TaylorPoly::monomial(n)
    }
}

/// Span of the logarithmic family: `a_k = c_k / k` for `k = 1..=dim`.
#[derive(Debug, Clone)]
pub struct LogSpanFamily {
    pub dim: usize,
}

impl CoefficientFamily for LogSpanFamily {
    fn name(&self) -> &str {
        "logfam-span"
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn poly(&self, params: &[f64]) -> TaylorPoly {
        let mut coeffs = vec![num_complex::Complex64::new(0.0, 0.0); params.len() + 1];
        for (k, &c) in params.iter().enumerate() {
            coeffs[k + 1] = num_complex::Complex64::new(c / (k + 1) as f64, 0.0);
        }
        TaylorPoly::new(coeffs)
    }
    fn start(&self) -> Vec<f64> {
        let mut s = vec![0.0; self.dim];
        s[0] = 1.0;
        s
    }
}

/// Free low-degree coefficients: `d` complex coefficients `a_1..a_d` from a
/// real `2d`-dimensional parameterization, with `a_0 = 0`.
#[derive(Debug, Clone)]
pub struct FreeCoeffFamily {
    pub dim: usize,
}

impl CoefficientFamily for FreeCoeffFamily {
    fn name(&self) -> &str {
        "free"
    }
    fn dim(&self) -> usize {
        2 * self.dim
    }
    fn poly(&self, params: &[f64]) -> TaylorPoly {
        let mut coeffs = vec![num_complex::Complex64::new(0.0, 0.0); self.dim + 1];
        for k in 0..self.dim {
            coeffs[k + 1] = num_complex::Complex64::new(params[2 * k], params[2 * k + 1]);
        }
        TaylorPoly::new(coeffs)
    }
    fn start(&self) -> Vec<f64> {
        let mut s = vec![0.0; 2 * self.dim];
        s[0] = 1.0;
        s
    }
}

/// Ad-hoc family from a closure; used for custom parameterizations.
pub struct FnFamily<F: Fn(&[f64]) -> TaylorPoly> {
    name: String,
    dim: usize,
    start: Vec<f64>,
    map: F,
}

impl<F: Fn(&[f64]) -> TaylorPoly> FnFamily<F> {
    pub fn new(name: impl Into<String>, dim: usize, map: F) -> Self {
        Self {
            name: name.into(),
            dim,
            start: vec![0.0; dim],
            map,
        }
    }

    pub fn with_start(mut self, start: Vec<f64>) -> Self {
        assert_eq!(start.len(), self.dim);
        self.start = start;
        self
    }
}

impl<F: Fn(&[f64]) -> TaylorPoly> CoefficientFamily for FnFamily<F> {
    fn name(&self) -> &str {
        &self.name
    }
    fn dim(&self) -> usize {
        self.dim
    }
    fn poly(&self, params: &[f64]) -> TaylorPoly {
        (self.map)(params)
    }
    fn start(&self) -> Vec<f64> {
        self.start.clone()
    }
}

/// Optimizer settings. Same `(family, seed, budget)` always reproduces the
/// same trace.
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Maximum number of fresh (non-cached) objective evaluations.
    pub budget: usize,
    pub seed: u64,
    /// Perturbed restarts after the initial simplex run.
    pub restarts: usize,
    /// Rotation-grid size for the `Thm1` objective.
    pub eta_grid_size: usize,
    /// Corpus size for the `Toeplitz` objective.
    pub h_corpus_len: usize,
    /// Initial simplex edge length.
    pub simplex_step: f64,
    /// Simplex convergence: spread of objective values below this.
    pub spread_tol: f64,
    pub quad: QuadConfig,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            budget: 200,
            seed: 0,
            restarts: 3,
            eta_grid_size: 64,
            h_corpus_len: 12,
            simplex_step: 0.5,
            spread_tol: 1e-9,
            quad: QuadConfig::default(),
        }
    }
}

/// Best point found by a search, with the improvement trace.
///
/// `trace` records every strict improvement of the best objective, so it is
/// monotone nondecreasing; `objective` never exceeds `ceiling·(1 + 1e-6)` —
/// that case is reported as [`Error::CeilingExceeded`] instead.
#[derive(Debug, Clone)]
pub struct SearchState {
    pub family: String,
    pub params: Vec<f64>,
    pub objective: f64,
    pub ceiling: f64,
    /// Fresh objective evaluations spent.
    pub iterations: usize,
    pub converged: bool,
    pub trace: Vec<(Vec<f64>, f64)>,
}

const CEILING_SLACK: f64 = 1e-6;

type CoeffKey = Vec<(u64, u64)>;

struct Evaluator<'a> {
    family: &'a dyn CoefficientFamily,
    objective: Objective,
    etas: Vec<UnitComplex>,
    h_corpus: Vec<TaylorPoly>,
    quad: QuadConfig,
    cache: HashMap<CoeffKey, Option<f64>>,
    evals: usize,
    budget: usize,
    best: Option<(Vec<f64>, f64)>,
    trace: Vec<(Vec<f64>, f64)>,
}

enum Eval {
    /// Negated ratio (the simplex minimizes).
    Cost(f64),
    Exhausted,
}

impl Evaluator<'_> {
    fn eval(&mut self, params: &[f64]) -> Eval {
        let poly = self.family.poly(params);
        let key: CoeffKey = poly
            .coeffs()
            .iter()
            .map(|c| (c.re.to_bits(), c.im.to_bits()))
            .collect();
        let value = match self.cache.get(&key) {
            Some(&v) => v,
            None => {
                if self.evals >= self.budget {
                    return Eval::Exhausted;
                }
                self.evals += 1;
                let v = self.compute(&poly).ok();
                self.cache.insert(key, v);
                v
            }
        };
        match value {
            Some(v) => {
                if self.best.as_ref().is_none_or(|(_, b)| v > *b) {
                    self.best = Some((params.to_vec(), v));
                    self.trace.push((params.to_vec(), v));
                }
                Eval::Cost(-v)
            }
            // Failed evaluation: reject the point, keep searching.
            None => Eval::Cost(f64::INFINITY),
        }
    }

    fn compute(&self, poly: &TaylorPoly) -> Result<f64> {
        match self.objective {
            Objective::Thm1 => ratio_theorem1(poly, &self.etas, &self.quad),
            Objective::Hardy => ratio_hardy(poly, &self.quad),
            Objective::Toeplitz => ratio_toeplitz(poly, &self.h_corpus, &self.quad),
        }
    }
}

/// Maximize the chosen ratio over a coefficient family.
///
/// Runs a deterministic simplex from the family's start point, then
/// `cfg.restarts` perturbed restarts around the best point, sharing the
/// evaluation budget and cache. Returns the best state with its trace;
/// `converged = false` when the budget ran out first.
pub fn search(
    family: &dyn CoefficientFamily,
    objective: Objective,
    cfg: &SearchConfig,
) -> Result<SearchState> {
    let dim = family.dim();
    if dim == 0 {
        return Err(Error::InvalidInput("family dimension must be >= 1".into()));
    }
    if cfg.budget == 0 {
        return Err(Error::InvalidInput("evaluation budget must be set".into()));
    }

    let mut ev = Evaluator {
        family,
        objective,
        etas: eta_grid(cfg.eta_grid_size.max(1)),
        h_corpus: if objective == Objective::Toeplitz {
            corpus::h_corpus(cfg.seed, cfg.h_corpus_len.max(1))
        } else {
            Vec::new()
        },
        quad: cfg.quad,
        cache: HashMap::new(),
        evals: 0,
        budget: cfg.budget,
        best: None,
        trace: Vec::new(),
    };

    let mut converged = true;
    let mut start = family.start();
    for run in 0..=cfg.restarts {
        if run > 0 {
            // Perturb around the best-so-far with a per-restart seeded stream.
            let mut rng = ChaCha8Rng::seed_from_u64(
                cfg.seed ^ (run as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
            );
            let base = ev
                .best
                .as_ref()
                .map(|(p, _)| p.clone())
                .unwrap_or_else(|| family.start());
            start = base
                .iter()
                .map(|&x| x + 0.25 * cfg.simplex_step * gauss(&mut rng))
                .collect();
        }
        if !run_simplex(&mut ev, &start, cfg.simplex_step, cfg.spread_tol) {
            converged = false;
            break;
        }
    }

    let (params, objective_value) = ev.best.clone().ok_or_else(|| {
        Error::InvalidInput("no successful objective evaluation in the search".into())
    })?;
    let ceiling = objective.ceiling();
    if objective_value > ceiling * (1.0 + CEILING_SLACK) {
        return Err(Error::CeilingExceeded {
            objective: objective_value,
            ceiling,
        });
    }
    Ok(SearchState {
        family: family.name().to_string(),
        params,
        objective: objective_value,
        ceiling,
        iterations: ev.evals,
        converged,
        trace: ev.trace,
    })
}

fn gauss(rng: &mut ChaCha8Rng) -> f64 {
    let unit = |r: &mut ChaCha8Rng| (r.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    let u1 = 1.0 - unit(rng);
    let u2 = unit(rng);
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

/// One Nelder–Mead run; returns false when the budget was exhausted.
fn run_simplex(ev: &mut Evaluator, start: &[f64], step: f64, spread_tol: f64) -> bool {
    const ALPHA: f64 = 1.0; // reflection
    const GAMMA: f64 = 2.0; // expansion
    const RHO: f64 = 0.5; // contraction
    const SIGMA: f64 = 0.5; // shrink

    let n = start.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(start.to_vec());
    for i in 0..n {
        let mut v = start.to_vec();
        v[i] += step;
        simplex.push(v);
    }
    let mut costs = Vec::with_capacity(n + 1);
    for v in &simplex {
        match ev.eval(v) {
            Eval::Cost(c) => costs.push(c),
            Eval::Exhausted => return false,
        }
    }

    // Hard cap so cache-hit cycles cannot spin forever.
    let max_steps = 200 * (ev.budget + 1);
    for _ in 0..max_steps {
        let mut order: Vec<usize> = (0..simplex.len()).collect();
        order.sort_by(|&a, &b| costs[a].total_cmp(&costs[b]));
        let best = order[0];
        let worst = order[n];
        let second_worst = order[n - 1];

        let spread = costs[worst] - costs[best];
        if spread.is_finite() && spread <= spread_tol {
            return true;
        }

        let mut centroid = vec![0.0; n];
        for &i in order.iter().take(n) {
            for (c, x) in centroid.iter_mut().zip(&simplex[i]) {
                *c += x;
            }
        }
        for c in centroid.iter_mut() {
            *c /= n as f64;
        }

        let relate = |coef: f64, from: &[f64]| -> Vec<f64> {
            centroid
                .iter()
                .zip(from)
                .map(|(c, x)| c + coef * (c - x))
                .collect()
        };

        let reflected = relate(ALPHA, &simplex[worst]);
        let f_reflected = match ev.eval(&reflected) {
            Eval::Cost(c) => c,
            Eval::Exhausted => return false,
        };

        if f_reflected < costs[best] {
            let expanded = relate(GAMMA, &simplex[worst]);
            let f_expanded = match ev.eval(&expanded) {
                Eval::Cost(c) => c,
                Eval::Exhausted => return false,
            };
            if f_expanded < f_reflected {
                simplex[worst] = expanded;
                costs[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                costs[worst] = f_reflected;
            }
        } else if f_reflected < costs[second_worst] {
            simplex[worst] = reflected;
            costs[worst] = f_reflected;
        } else {
            let contracted = relate(-RHO, &simplex[worst]);
            let f_contracted = match ev.eval(&contracted) {
                Eval::Cost(c) => c,
                Eval::Exhausted => return false,
            };
            if f_contracted < costs[worst].min(f_reflected) {
                simplex[worst] = contracted;
                costs[worst] = f_contracted;
            } else {
                let anchor = simplex[best].clone();
                for i in 0..simplex.len() {
                    if i == best {
                        continue;
                    }
                    for (x, a) in simplex[i].iter_mut().zip(&anchor) {
                        *x = a + SIGMA * (*x - a);
                    }
                    match ev.eval(&simplex[i].clone()) {
                        Eval::Cost(c) => costs[i] = c,
                        Eval::Exhausted => return false,
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadConfig {
        QuadConfig::default()
    }

    #[test]
    fn ratio_theorem1_identity_map() {
        let r = ratio_theorem1(&TaylorPoly::from_real(&[0.0, 1.0]), &eta_grid(8), &cfg()).unwrap();
        assert!((r - 4.0 / PI).abs() < 1e-9, "ratio {r}");
    }

    #[test]
    fn ratio_theorem1_below_ceiling_on_samples() {
        for seed in [3u64, 14, 59] {
            let f = TaylorPoly::random_poly(6, seed);
            let r = ratio_theorem1(&f, &eta_grid(8), &cfg()).unwrap();
            assert!(r <= PI + 1e-6, "seed {seed}: ratio {r}");
        }
    }

    #[test]
    fn ratio_theorem1_scale_invariant() {
        let f = TaylorPoly::random_poly(5, 8);
        let grid = eta_grid(8);
        let base = ratio_theorem1(&f, &grid, &cfg()).unwrap();
        for c in [
            num_complex::Complex64::new(2.5, 0.0),
            num_complex::Complex64::new(0.0, -0.4),
            num_complex::Complex64::new(-1.0, 1.0),
        ] {
            let r = ratio_theorem1(&f.scale(c), &grid, &cfg()).unwrap();
            assert!((r - base).abs() < 1e-9, "scale {c}: {r} vs {base}");
        }
    }

    #[test]
    fn ratio_rejects_constant_functions() {
        assert!(matches!(
            ratio_theorem1(&TaylorPoly::from_real(&[3.0]), &eta_grid(4), &cfg()),
            Err(Error::ZeroDerivative)
        ));
        assert!(matches!(
            ratio_hardy(&TaylorPoly::zero(), &cfg()),
            Err(Error::ZeroDerivative)
        ));
    }

    #[test]
    fn ratio_hardy_identity_map() {
        let r = ratio_hardy(&TaylorPoly::from_real(&[0.0, 1.0]), &cfg()).unwrap();
        assert!((r - 1.0).abs() < 1e-10);
    }

    #[test]
    fn ratio_hardy_log_family_fixtures() {
        // Reference values from an independent high-resolution computation.
        let expect = [
            (2usize, 1.178_097_245_096_172_4),
            (4, 1.342_339_121_641_353_3),
            (8, 1.483_235_516_638_437_8),
            (16, 1.599_840_731_585_878_6),
        ];
        for (n, want) in expect {
            let r = ratio_hardy(&TaylorPoly::make_log_family(n), &cfg()).unwrap();
            assert!((r - want).abs() < 1e-8, "N={n}: {r} vs {want}");
        }
    }

    #[test]
    fn ratio_hardy_log_family_sweep_monotone() {
        let mut prev = 0.0;
        let mut n = 2;
        while n <= 256 {
            let r = ratio_hardy(&TaylorPoly::make_log_family(n), &cfg()).unwrap();
            assert!(r <= PI, "N={n}: ratio {r} above π");
            assert!(r >= prev - 1e-9, "N={n}: ratio decreased {prev} -> {r}");
            prev = r;
            n *= 2;
        }
    }

    #[test]
    fn ratio_hardy_rotation_invariant() {
        let f = TaylorPoly::random_poly(6, 21);
        let base = ratio_hardy(&f, &cfg()).unwrap();
        for eta in eta_grid(5) {
            let r = ratio_hardy(&f.rotate(&eta), &cfg()).unwrap();
            assert!((r - base).abs() < 1e-9);
        }
    }

    #[test]
    fn search_never_worse_than_start() {
        // One-parameter family f_s = [0, 1, s] starting at s = 0 (the
        // identity map, ratio 4/π).
        let family = FnFamily::new("quadratic-slice", 1, |p: &[f64]| {
            TaylorPoly::from_real(&[0.0, 1.0, p[0]])
        });
        let cfg = SearchConfig {
            budget: 60,
            eta_grid_size: 8,
            ..SearchConfig::default()
        };
        let state = search(&family, Objective::Thm1, &cfg).unwrap();
        assert!(state.objective >= 4.0 / PI - 1e-12, "{}", state.objective);
        assert!(state.objective <= PI * (1.0 + 1e-6));
    }

    #[test]
    fn search_is_deterministic() {
        let family = LogSpanFamily { dim: 3 };
        let cfg = SearchConfig {
            budget: 80,
            seed: 42,
            ..SearchConfig::default()
        };
        let a = search(&family, Objective::Hardy, &cfg).unwrap();
        let b = search(&family, Objective::Hardy, &cfg).unwrap();
        assert_eq!(a.params, b.params);
        assert_eq!(a.objective, b.objective);
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.iterations, b.iterations);
    }

    #[test]
    fn search_trace_is_monotone() {
        let family = FreeCoeffFamily { dim: 2 };
        let cfg = SearchConfig {
            budget: 120,
            seed: 7,
            ..SearchConfig::default()
        };
        let state = search(&family, Objective::Hardy, &cfg).unwrap();
        for w in state.trace.windows(2) {
            assert!(w[1].1 >= w[0].1);
        }
        assert!(!state.trace.is_empty());
    }

    #[test]
    fn search_budget_exhaustion_flagged() {
        let family = LogSpanFamily { dim: 4 };
        let cfg = SearchConfig {
            budget: 6,
            ..SearchConfig::default()
        };
        let state = search(&family, Objective::Hardy, &cfg).unwrap();
        assert!(!state.converged);
        assert!(state.iterations <= 6);
    }

    #[test]
    fn search_rejects_empty_settings() {
        let family = LogSpanFamily { dim: 0 };
        assert!(search(&family, Objective::Hardy, &SearchConfig::default()).is_err());
        let family = LogSpanFamily { dim: 2 };
        let cfg = SearchConfig {
            budget: 0,
            ..SearchConfig::default()
        };
        assert!(search(&family, Objective::Hardy, &cfg).is_err());
    }

    #[test]
    fn search_logspan_hardy_reaches_interior_ratio() {
        let family = LogSpanFamily { dim: 6 };
        let cfg = SearchConfig {
            budget: 500,
            seed: 1,
            ..SearchConfig::default()
        };
        let state = search(&family, Objective::Hardy, &cfg).unwrap();
        assert!(
            state.objective > 1.0 && state.objective <= PI,
            "objective {}",
            state.objective
        );
    }

    #[test]
    fn toeplitz_objective_bounded_by_one() {
        let family = FreeCoeffFamily { dim: 1 };
        let cfg = SearchConfig {
            budget: 40,
            h_corpus_len: 8,
            ..SearchConfig::default()
        };
        let state = search(&family, Objective::Toeplitz, &cfg).unwrap();
        assert!(state.objective <= 1.0 + 1e-6, "{}", state.objective);
        assert!(state.objective > 0.0);
    }

    #[test]
    fn monomial_family_mapping() {
        let fam = MonomialFamily { max_degree: 16 };
        assert_eq!(fam.poly(&[0.0]), TaylorPoly::monomial(1));
        assert_eq!(fam.poly(&[2.2]), TaylorPoly::monomial(3));
        assert_eq!(fam.poly(&[100.0]), TaylorPoly::monomial(16));
    }
}
