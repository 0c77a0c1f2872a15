//! Checking the sharp bound `|{f}_n| ≤ 2t/e^t` for `f = F*(ω, t)`.
//!
//! Every verdict is stated for the normalized majorant `F = F*/{F*}_1`, so
//! the bound becomes `|{f}_n|² ≤ 1` and exact mode never touches `e^{-t}`.

use std::ops::RangeInclusive;

use num_complex::Complex64;
use num_rational::BigRational;

use crate::caratheodory::{
    convex_to_caratheodory, extension_minors, extension_verdict, CaratheodorySegment,
    Classification, ExtensionVerdict, ToeplitzMinorReport,
};
use crate::error::{Error, Result};
use crate::majorant::{bound_horizon, normalized_coeffs, BoundHorizon};
use crate::poly::{canonical_fraction, reduce_fraction, Polynomial};
use crate::scalar::{rational_to_f64, GaussianRational, Mode, Scalar, SquaredModulus};
use crate::schur::{
    blaschke_series, cayley, reconstruct_inner, sample_omega, BlaschkeProduct, CayleyDirection,
    InnerReconstruction, RationalInner,
};
use crate::series::{power_coefficients, TruncatedSeries};

/// `{g}_n = Σ_{j=1..n} {G}_j·{ω^j}_n` for `n = 1..=n_max`.
pub fn subordination_coeffs<S: Scalar>(
    outer: &TruncatedSeries<S>,
    omega: &TruncatedSeries<S>,
    n_max: usize,
) -> Result<Vec<S>> {
    if !omega.constant().is_zero() {
        return Err(Error::CompositionAtNonzero);
    }
    let available = outer.order().min(omega.order());
    if available < n_max {
        return Err(Error::InsufficientOrder {
            needed: n_max,
            available,
        });
    }
    (1..=n_max)
        .map(|n| {
            let row = power_coefficients(omega, n)?;
            Ok(row
                .iter()
                .enumerate()
                .fold(S::zero(), |acc, (j, w)| acc.add(&outer.coeff(j + 1).mul(w))))
        })
        .collect()
}

/// Where the tested `ω` came from.
#[derive(Debug, Clone, PartialEq)]
pub enum OmegaSource {
    Blaschke {
        seed: Option<u64>,
        product: BlaschkeProduct,
    },
    Explicit,
    Extremal {
        n: usize,
        phi: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundRow {
    pub n: usize,
    /// `{f}_n` of `F(ω(z), t)`.
    pub coefficient: String,
    /// `|{f}_n / {F*}_1(t)|²`; the bound on it is 1.
    pub normalized_sq_modulus: SquaredModulus,
    /// `1 - normalized_sq_modulus`.
    pub margin: SquaredModulus,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheckResult {
    pub t: BigRational,
    pub mode: Mode,
    pub rows: Vec<BoundRow>,
    pub horizon: BoundHorizon,
    pub omega: OmegaSource,
}

impl BoundCheckResult {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn min_margin(&self) -> Option<f64> {
        self.rows.iter().map(|r| r.margin.to_f64()).reduce(f64::min)
    }
}

fn bound_rows<S: Scalar>(coeffs: &[S]) -> Vec<BoundRow> {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let sq = c.squared_modulus();
            let margin = sq.margin_to_one();
            BoundRow {
                n: k + 1,
                coefficient: c.to_string(),
                pass: margin.is_nonnegative_margin(),
                normalized_sq_modulus: sq,
                margin,
            }
        })
        .collect()
}

/// Coefficients `n = 1..=N(t)` of `F(ω(z), t)` against the bound 1.
pub fn verify_bound<S: Scalar>(
    t: &BigRational,
    omega: &TruncatedSeries<S>,
    source: OmegaSource,
) -> Result<BoundCheckResult> {
    let horizon = bound_horizon(t)?;
    let n_max = horizon.horizon;
    if omega.order() < n_max {
        return Err(Error::InsufficientOrder {
            needed: n_max,
            available: omega.order(),
        });
    }
    let outer = normalized_coeffs::<S>(t, n_max)?;
    let coeffs = subordination_coeffs(&outer, omega, n_max)?;
    Ok(BoundCheckResult {
        t: t.clone(),
        mode: S::MODE,
        rows: bound_rows(&coeffs),
        horizon,
        omega: source,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalCheck {
    pub result: BoundCheckResult,
    /// `|{f}_n|² = 1` exactly at the rotation index.
    pub equality_at_n: bool,
    /// `{f}_k = 0` for every `k ≤ N(t)` that is not a multiple of `n`.
    pub vanishes_off_support: bool,
    /// At `k = m·n`, `m ≥ 2`: `|{f}_k|² = |{F}_m|²`.
    pub multiples_match: bool,
}

impl ExtremalCheck {
    pub fn passed(&self) -> bool {
        self.result.passed()
            && self.equality_at_n
            && self.vanishes_off_support
            && self.multiples_match
    }
}

/// Checks that `F*(e^{iφ}z^n, t)` attains the bound at index `n`.
pub fn extremal_equality<S: Scalar>(t: &BigRational, n: usize, phi: f64) -> Result<ExtremalCheck> {
    let horizon = bound_horizon(t)?;
    let n_max = horizon.horizon;
    if n == 0 {
        return Err(Error::InvalidArgument("extremal index must be >= 1".into()));
    }
    if n > n_max {
        return Err(Error::BeyondHorizon { n, horizon: n_max });
    }
    let lambda = S::unimodular(phi).ok_or(Error::NonrationalRotationInExactMode(phi))?;
    let omega = TruncatedSeries::monomial(n, lambda, n_max);
    let result = verify_bound(t, &omega, OmegaSource::Extremal { n, phi })?;
    let outer = normalized_coeffs::<S>(t, n_max)?;
    let row = |k: usize| &result.rows[k - 1].normalized_sq_modulus;
    let equality_at_n = row(n).is_exactly(1);
    let vanishes_off_support = (1..=n_max)
        .filter(|k| k % n != 0)
        .all(|k| row(k).is_exactly(0));
    let multiples_match = (2..)
        .map(|m| m * n)
        .take_while(|&k| k <= n_max)
        .all(|k| row(k).agrees_with(&outer.coeff(k / n).squared_modulus()));
    Ok(ExtremalCheck {
        result,
        equality_at_n,
        vanishes_off_support,
        multiples_match,
    })
}

/// Beyond the horizon nothing is proved; rows carry no verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeRow {
    pub n: usize,
    pub normalized_sq_modulus: SquaredModulus,
    /// Conjectural: `|{f}_n|² ≤ ((2/e)/(2t·e^{-t}))²` in normalized units.
    pub under_conjectural_line: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    pub t: BigRational,
    pub horizon: BoundHorizon,
    /// `((2/e)/(2t·e^{-t}))²`.
    pub conjectural_line_sq: f64,
    pub rows: Vec<ProbeRow>,
}

impl ProbeReport {
    pub const LABEL: &'static str = "conjectural";
}

pub fn probe_beyond<S: Scalar>(
    t: &BigRational,
    omega: &TruncatedSeries<S>,
    n_lo: usize,
    n_hi: usize,
) -> Result<ProbeReport> {
    let horizon = bound_horizon(t)?;
    if n_lo <= horizon.horizon {
        return Err(Error::InvalidArgument(format!(
            "probe range must start beyond the horizon N(t) = {}",
            horizon.horizon
        )));
    }
    if n_hi < n_lo {
        return Err(Error::InvalidArgument(format!(
            "empty probe range {n_lo}..={n_hi}"
        )));
    }
    if omega.order() < n_hi {
        return Err(Error::InsufficientOrder {
            needed: n_hi,
            available: omega.order(),
        });
    }
    let outer = normalized_coeffs::<S>(t, n_hi)?;
    let coeffs = subordination_coeffs(&outer, omega, n_hi)?;
    let line = (2.0 / std::f64::consts::E) / horizon.bound;
    let line_sq = line * line;
    let rows = (n_lo..=n_hi)
        .map(|n| {
            let sq = coeffs[n - 1].squared_modulus();
            ProbeRow {
                n,
                under_conjectural_line: sq.to_f64() <= line_sq,
                normalized_sq_modulus: sq,
            }
        })
        .collect();
    Ok(ProbeReport {
        t: t.clone(),
        horizon,
        conjectural_line_sq: line_sq,
        rows,
    })
}

/// Settings for a seeded Blaschke sweep.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub t: BigRational,
    pub samples: usize,
    pub seed_base: u64,
    /// Number of finite zeros; cycles through the range by seed.
    pub degrees: RangeInclusive<usize>,
    pub denominator_bound: i64,
    pub mode: Mode,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSample {
    pub seed: u64,
    pub result: BoundCheckResult,
}

fn sweep_one(cfg: &SweepConfig, seed: u64) -> Result<SweepSample> {
    let span = (cfg.degrees.end() - cfg.degrees.start() + 1) as u64;
    let degree = cfg.degrees.start() + ((seed - cfg.seed_base) % span) as usize;
    let product = sample_omega(seed, degree, cfg.denominator_bound);
    let horizon = bound_horizon(&cfg.t)?;
    let omega = blaschke_series(&product, horizon.horizon)?;
    let source = OmegaSource::Blaschke {
        seed: Some(seed),
        product,
    };
    let result = match cfg.mode {
        Mode::Exact => verify_bound(&cfg.t, &omega, source)?,
        Mode::Float => verify_bound(&cfg.t, &omega.map(|c| c.to_complex64()), source)?,
    };
    Ok(SweepSample { seed, result })
}

/// Runs `cfg.samples` seeds; output is ordered by seed regardless of scheduling.
pub fn sample_sweep(cfg: &SweepConfig) -> Result<Vec<SweepSample>> {
    if cfg.degrees.is_empty() {
        return Err(Error::InvalidArgument("empty degree range".into()));
    }
    let seeds = cfg.seed_base..cfg.seed_base + cfg.samples as u64;
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        seeds.into_par_iter().map(|s| sweep_one(cfg, s)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        seeds.map(|s| sweep_one(cfg, s)).collect()
    }
}

/// One step of the worked example.
#[derive(Debug, Clone, PartialEq)]
pub struct Stage {
    pub id: char,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// The full `t = 1/2` pipeline with every intermediate value.
#[derive(Debug, Clone, PartialEq)]
pub struct WorkedExample {
    pub t: BigRational,
    pub normalized: Vec<GaussianRational>,
    pub h_segment: CaratheodorySegment<GaussianRational>,
    pub minors: ToeplitzMinorReport,
    pub verdict: ExtensionVerdict,
    pub omega: TruncatedSeries<GaussianRational>,
    pub reconstruction: InnerReconstruction,
    pub h_rational: RationalInner<GaussianRational>,
    /// `f'` from `exp(∫(h-1)/v)` and from the closed-form integrand.
    pub f_prime: Vec<Complex64>,
    pub integrand: Vec<Complex64>,
    pub integrand_residual: f64,
    pub stages: Vec<Stage>,
}

impl WorkedExample {
    pub fn passed(&self) -> bool {
        self.stages.iter().all(|s| s.passed)
    }
}

/// Number of Taylor coefficients compared in the float stage.
pub const INTEGRAND_TERMS: usize = 10;
pub const INTEGRAND_TOL: f64 = 1e-10;

fn ints(v: &[i64]) -> Vec<GaussianRational> {
    v.iter().map(|&x| GaussianRational::from_int(x)).collect()
}

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

/// Taylor coefficients of `A(v)^alpha` for a real series with `A(0) = 1`,
/// by `n·g_n = Σ_{k=1..n} ((alpha+1)k - n)·a_k·g_{n-k}`.
fn real_power(a: &[f64], alpha: f64) -> Vec<f64> {
    let mut g = vec![0.0; a.len()];
    g[0] = 1.0;
    for n in 1..a.len() {
        let s: f64 = (1..=n)
            .map(|k| ((alpha + 1.0) * k as f64 - n as f64) * a[k] * g[n - k])
            .sum();
        g[n] = s / n as f64;
    }
    g
}

/// Coefficients of `((v²+√2v+1)/(v²-√2v+1))^{√2/4} / √(1+v⁴)` through `v^{terms-1}`,
/// by binomial series.
pub fn closed_form_integrand(terms: usize) -> Vec<f64> {
    let r2 = std::f64::consts::SQRT_2;
    let num = [1.0, r2, 1.0];
    let den = [1.0, -r2, 1.0];
    let mut ratio = vec![0.0; terms];
    for n in 0..terms {
        let mut acc = num.get(n).copied().unwrap_or(0.0);
        for k in 1..=n.min(2) {
            acc -= den[k] * ratio[n - k];
        }
        ratio[n] = acc;
    }
    let powered = real_power(&ratio, r2 / 4.0);
    // (1+v⁴)^{-1/2} = Σ binom(-1/2, m) v^{4m}
    let mut damping = vec![0.0; terms];
    let mut binom = 1.0;
    for m in 0..terms.div_ceil(4) {
        damping[4 * m] = binom;
        binom *= (-0.5 - m as f64) / (m as f64 + 1.0);
    }
    (0..terms)
        .map(|n| (0..=n).map(|k| powered[k] * damping[n - k]).sum())
        .collect()
}

/// Reproduces the degenerate `t = 1/2` extension end to end.
pub fn reproduce_worked_example() -> Result<WorkedExample> {
    let t = BigRational::new(1.into(), 2.into());
    let mut stages = Vec::new();
    let mut stage = |id: char, name: &'static str, passed: bool, detail: String| {
        stages.push(Stage {
            id,
            name,
            passed,
            detail,
        });
    };

    // (a) normalized majorant
    let f = normalized_coeffs::<GaussianRational>(&t, 5)?;
    let normalized = f.coeffs()[1..].to_vec();
    let expected_f: Vec<GaussianRational> = [(1, 1), (1, 2), (1, 6), (-1, 24), (-19, 120)]
        .iter()
        .map(|&(p, q)| GaussianRational::ratio(p, q))
        .collect();
    stage(
        'a',
        "normalized majorant coefficients",
        normalized == expected_f,
        join(&normalized),
    );

    // (b) Carathéodory segment
    let h_segment = convex_to_caratheodory(&f.with_constant(GaussianRational::zero()))?;
    stage(
        'b',
        "Caratheodory segment",
        h_segment.coeffs == ints(&[1, 0, -1, -2]),
        join(&h_segment.coeffs),
    );

    // (c) minors and extension verdict
    let minors = extension_minors(&t, 5)?;
    let verdict = extension_verdict(&t, 5)?;
    let minors_ok = minors.minors
        == ints(&[2, 3, 4, 4, 0])
            .into_iter()
            .map(|g| g.re)
            .collect::<Vec<_>>()
        && minors.classification == Classification::PositiveThenZero(4)
        && verdict.extendable
        && verdict.unique;
    stage(
        'c',
        "Toeplitz minors",
        minors_ok,
        format!(
            "{} ({}), unique = {}",
            join(&minors.minors),
            minors.classification.label(),
            verdict.unique
        ),
    );

    // (d) Cayley transform
    let omega = cayley(&h_segment.to_series(), CayleyDirection::CToOmega)?;
    let expected_omega: Vec<GaussianRational> = [(0, 1), (-1, 2), (1, 4), (3, 8), (9, 16)]
        .iter()
        .map(|&(p, q)| GaussianRational::ratio(p, q))
        .collect();
    stage(
        'd',
        "omega series",
        omega.coeffs() == expected_omega.as_slice(),
        join(&omega.coeffs()[1..]),
    );

    // (e) rational inner function
    let reconstruction = reconstruct_inner(&omega, 4)?;
    let expected_inner = RationalInner {
        numerator: Polynomial::from_ints(&[0, 1, 0, -1, -2]),
        denominator: Polynomial::from_ints(&[-2, -1, 0, 1]),
    };
    stage(
        'e',
        "reconstructed omega",
        reconstruction.inner == expected_inner && reconstruction.lambda.is_one(),
        format!(
            "[{}] / [{}], lambda = {}",
            reconstruction.inner.numerator, reconstruction.inner.denominator, reconstruction.lambda
        ),
    );

    // (f) back to h = (1 - ω)/(1 + ω) as a rational function
    let (n, d) = (
        &reconstruction.inner.numerator,
        &reconstruction.inner.denominator,
    );
    let (hn, hd) = reduce_fraction(&d.sub(n), &d.add(n));
    let (hn, hd) = canonical_fraction(&hn, &hd);
    let h_rational = RationalInner {
        numerator: hn,
        denominator: hd,
    };
    let expected_h = RationalInner {
        numerator: Polynomial::from_ints(&[1, 1, 0, -1, -1]),
        denominator: Polynomial::from_ints(&[1, 0, 0, 0, 1]),
    };
    let reexpanded = h_rational.series(4)?;
    stage(
        'f',
        "reconstructed h",
        h_rational == expected_h && reexpanded == h_segment.to_series(),
        format!("[{}] / [{}]", h_rational.numerator, h_rational.denominator),
    );

    // (g) float: f' from h against the closed-form integrand
    let h_float = h_rational
        .series(INTEGRAND_TERMS)?
        .map(|c| c.to_complex64());
    let tail = (&h_float - &TruncatedSeries::one(INTEGRAND_TERMS)).shift_down()?;
    let f_prime_series = tail.integral().exp()?;
    let f_prime: Vec<Complex64> = f_prime_series.coeffs()[..INTEGRAND_TERMS].to_vec();
    let integrand: Vec<Complex64> = closed_form_integrand(INTEGRAND_TERMS)
        .into_iter()
        .map(|x| Complex64::new(x, 0.0))
        .collect();
    let integrand_residual = f_prime
        .iter()
        .zip(&integrand)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    stage(
        'g',
        "closed-form integrand",
        integrand_residual < INTEGRAND_TOL,
        format!("max residual {integrand_residual:.3e} over {INTEGRAND_TERMS} coefficients"),
    );

    Ok(WorkedExample {
        t,
        normalized,
        h_segment,
        minors,
        verdict,
        omega,
        reconstruction,
        h_rational,
        f_prime,
        integrand,
        integrand_residual,
        stages,
    })
}

/// `2t·e^{-t}` for reporting.
pub fn bound_value(t: &BigRational) -> f64 {
    let tf = rational_to_f64(t);
    2.0 * tf * (-tf).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    type G = GaussianRational;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn subordination_examples() {
        let outer = TruncatedSeries::<G>::from_ints(&[9, 1, 2, 3, 4]);
        let id = TruncatedSeries::identity(4);
        assert_eq!(
            subordination_coeffs(&outer, &id, 4).unwrap(),
            ints(&[1, 2, 3, 4])
        );
        let z2 = TruncatedSeries::from_ints(&[0, 0, 1, 0, 0]);
        assert_eq!(
            subordination_coeffs(&outer, &z2, 4).unwrap(),
            ints(&[0, 1, 0, 2])
        );
        assert!(matches!(
            subordination_coeffs(&outer, &TruncatedSeries::identity(2), 4),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn identity_subordination_is_extremal_at_one() {
        for t in [q(1, 2), q(2, 1), q(5, 1)] {
            let r = verify_bound(
                &t,
                &TruncatedSeries::<G>::identity(8),
                OmegaSource::Explicit,
            )
            .unwrap();
            assert!(r.rows[0].normalized_sq_modulus.is_exactly(1));
            assert!(r.rows[0].margin.is_exactly(0));
            assert!(r.passed());
        }
    }

    #[test]
    fn worked_example_omega_passes() {
        let inner = RationalInner {
            numerator: Polynomial::<G>::from_ints(&[0, 1, 0, -1, -2]),
            denominator: Polynomial::from_ints(&[-2, -1, 0, 1]),
        };
        let r = verify_bound(&q(1, 2), &inner.series(5).unwrap(), OmegaSource::Explicit).unwrap();
        assert_eq!(r.rows.len(), 5);
        assert!(r.passed());
    }

    #[test]
    fn verify_needs_order() {
        let r = verify_bound(
            &q(1, 2),
            &TruncatedSeries::<G>::identity(3),
            OmegaSource::Explicit,
        );
        assert_eq!(
            r,
            Err(Error::InsufficientOrder {
                needed: 5,
                available: 3
            })
        );
    }

    #[test]
    fn extremal_examples() {
        let e = extremal_equality::<G>(&q(1, 2), 5, 0.0).unwrap();
        assert!(e.passed());
        let e = extremal_equality::<G>(&q(1, 1), 2, PI).unwrap();
        assert!(e.passed());
        assert!(e.result.rows[0].normalized_sq_modulus.is_exactly(0));
        assert!(e.result.rows[2].normalized_sq_modulus.is_exactly(0));
        let e = extremal_equality::<G>(&q(3, 1), 1, 0.0).unwrap();
        assert_eq!(e.result.rows.len(), 1);
        assert!(e.passed());
        assert_eq!(
            extremal_equality::<G>(&q(3, 1), 2, 0.0).unwrap_err(),
            Error::BeyondHorizon { n: 2, horizon: 1 }
        );
    }

    #[test]
    fn extremal_float_rotation() {
        let e = extremal_equality::<Complex64>(&q(1, 2), 2, 0.7).unwrap();
        assert!(e.passed());
    }

    #[test]
    fn probe_identity_is_zero_beyond_one() {
        let p = probe_beyond(&q(1, 2), &TruncatedSeries::<G>::identity(8), 6, 8).unwrap();
        // ω = z gives f = F, so the rows are |F_n|², which need not vanish;
        // only z^k with k > n_hi makes them zero.
        assert_eq!(p.rows.len(), 3);
        let far = TruncatedSeries::<G>::monomial(9, G::one(), 9);
        let p = probe_beyond(&q(1, 2), &far, 6, 8).unwrap();
        assert!(p.rows.iter().all(|r| r.normalized_sq_modulus.is_exactly(0)));
    }

    #[test]
    fn probe_rejects_range_inside_horizon() {
        assert!(probe_beyond(&q(1, 2), &TruncatedSeries::<G>::identity(8), 5, 8).is_err());
    }

    #[test]
    fn closed_form_integrand_leading_terms() {
        // A^α = 1 + 2√2·α·v + … with α = √2/4 gives 1 + v + …
        let c = closed_form_integrand(4);
        assert!((c[0] - 1.0).abs() < 1e-15);
        assert!((c[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn worked_example_all_stages() {
        let w = reproduce_worked_example().unwrap();
        for s in &w.stages {
            assert!(s.passed, "stage {} ({}) failed: {}", s.id, s.name, s.detail);
        }
        assert_eq!(w.stages.len(), 7);
    }

    #[test]
    fn sweep_is_ordered_and_deterministic() {
        let cfg = SweepConfig {
            t: q(1, 1),
            samples: 40,
            seed_base: 5,
            degrees: 0..=3,
            denominator_bound: 8,
            mode: Mode::Exact,
        };
        let a = sample_sweep(&cfg).unwrap();
        let b = sample_sweep(&cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0].seed + 1 == w[1].seed));
        assert!(a.iter().all(|s| s.result.passed()));
    }

    #[test]
    fn float_sweep_agrees_with_exact() {
        let mut cfg = SweepConfig {
            t: q(1, 2),
            samples: 20,
            seed_base: 0,
            degrees: 0..=4,
            denominator_bound: 8,
            mode: Mode::Exact,
        };
        let exact = sample_sweep(&cfg).unwrap();
        cfg.mode = Mode::Float;
        let float = sample_sweep(&cfg).unwrap();
        for (e, f) in exact.iter().zip(&float) {
            for (re, rf) in e.result.rows.iter().zip(&f.result.rows) {
                assert!(
                    (re.normalized_sq_modulus.to_f64() - rf.normalized_sq_modulus.to_f64()).abs()
                        < 1e-12
                );
            }
        }
    }
}
