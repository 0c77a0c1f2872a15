//! Self-maps of the disk fixing 0: Cayley transform, Schur recursion,
//! finite Blaschke products and reconstruction of rational inner functions
//! from their Taylor data.

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::nullspace;
use crate::poly::{canonical_fraction, reduce_fraction, Polynomial};
use crate::scalar::{DiskPosition, GaussianRational, Scalar};
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleyDirection {
    /// `h(0) = 1` to `ω(0) = 0`.
    CToOmega,
    /// `ω(0) = 0` to `h(0) = 1`.
    OmegaToC,
}

/// `(1 - x)/(1 + x)`, an involution swapping the two normalizations.
pub fn cayley<S: Scalar>(
    x: &TruncatedSeries<S>,
    direction: CayleyDirection,
) -> Result<TruncatedSeries<S>> {
    match direction {
        CayleyDirection::CToOmega if !x.constant().is_one() => {
            return Err(Error::BadConstantTerm {
                op: "cayley c->omega",
                expected: "1",
            });
        }
        CayleyDirection::OmegaToC if !x.constant().is_negligible() => {
            return Err(Error::BadConstantTerm {
                op: "cayley omega->c",
                expected: "0",
            });
        }
        _ => {}
    }
    let one = TruncatedSeries::one(x.order());
    (&one - x).checked_div(&(&one + x))
}

/// The Schur recursion output for `φ = ω/z`.
#[derive(Debug, Clone, PartialEq)]
pub struct SchurParameters<S> {
    pub gammas: Vec<S>,
    /// Index of the first unimodular parameter; the recursion stops there.
    pub degeneracy: Option<usize>,
    /// Degeneracy was decided within the float tolerance.
    pub approximate: bool,
}

/// `γ_k = φ_k(0)`, `φ_{k+1} = (φ_k - γ_k)/(z·(1 - conj(γ_k)·φ_k))`, starting
/// from `φ_0 = ω/z`. Stops at the first `|γ_d| = 1` or when the known
/// coefficients run out.
pub fn schur_parameters<S: Scalar>(omega: &TruncatedSeries<S>) -> Result<SchurParameters<S>> {
    if !omega.constant().is_negligible() {
        return Err(Error::BadConstantTerm {
            op: "schur_parameters",
            expected: "0",
        });
    }
    if omega.order() < 1 {
        return Err(Error::InsufficientOrder {
            needed: 1,
            available: 0,
        });
    }
    let mut phi = omega.shift_down()?;
    let mut gammas = Vec::new();
    loop {
        let k = gammas.len();
        let gamma = phi.constant().clone();
        match gamma.disk_position() {
            DiskPosition::Outside => return Err(Error::NotInOmega { index: k }),
            DiskPosition::OnCircle => {
                gammas.push(gamma);
                return Ok(SchurParameters {
                    gammas,
                    degeneracy: Some(k),
                    approximate: S::MODE == crate::scalar::Mode::Float,
                });
            }
            DiskPosition::Inside => {
                if phi.order() == 0 {
                    gammas.push(gamma);
                    return Ok(SchurParameters {
                        gammas,
                        degeneracy: None,
                        approximate: false,
                    });
                }
                let one = TruncatedSeries::one(phi.order());
                let num = &phi - &TruncatedSeries::monomial(0, gamma.clone(), phi.order());
                let den = &one - &phi.scale(&gamma.conj());
                phi = num.checked_div(&den)?.shift_down()?;
                gammas.push(gamma);
            }
        }
    }
}

/// Runs the recursion backwards, `φ_k = (γ_k + zφ_{k+1})/(1 + conj(γ_k)·zφ_{k+1})`,
/// and returns `ω = zφ_0`. A degenerate parameter list determines `ω` to any
/// order; otherwise `K` parameters determine it through `z^K`.
pub fn schur_synthesis<S: Scalar>(
    params: &SchurParameters<S>,
    order: usize,
) -> Result<TruncatedSeries<S>> {
    if order == 0 {
        return Err(Error::InvalidArgument(
            "synthesis order must be >= 1".into(),
        ));
    }
    let n = params.gammas.len();
    for (k, g) in params.gammas.iter().enumerate() {
        let expected = if params.degeneracy == Some(k) {
            DiskPosition::OnCircle
        } else {
            DiskPosition::Inside
        };
        if g.disk_position() != expected {
            return Err(Error::InvalidParameters(format!(
                "|gamma_{k}| has the wrong modulus for its position"
            )));
        }
    }
    if let Some(d) = params.degeneracy {
        if d + 1 != n {
            return Err(Error::InvalidParameters(format!(
                "degeneracy index {d} is not the last of {n} parameters"
            )));
        }
    }
    let Some(last) = params.gammas.last() else {
        return Ok(TruncatedSeries::zero(0));
    };
    let phi_order = order - 1;
    let start_order = if params.degeneracy.is_some() {
        phi_order
    } else {
        0
    };
    let mut phi = TruncatedSeries::monomial(0, last.clone(), start_order);
    for gamma in params.gammas[..n - 1].iter().rev() {
        let z_phi = phi.shift_up().truncate(phi_order);
        let one = TruncatedSeries::one(z_phi.order());
        let num = &TruncatedSeries::monomial(0, gamma.clone(), z_phi.order()) + &z_phi;
        let den = &one + &z_phi.scale(&gamma.conj());
        phi = num.checked_div(&den)?;
    }
    Ok(phi.truncate(phi_order).shift_up())
}

/// `numerator/denominator` with `numerator(0) = 0` and `denominator(0) ≠ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalInner<S> {
    pub numerator: Polynomial<S>,
    pub denominator: Polynomial<S>,
}

impl<S: Scalar> RationalInner<S> {
    pub fn series(&self, order: usize) -> Result<TruncatedSeries<S>> {
        self.numerator
            .to_series(order)
            .checked_div(&self.denominator.to_series(order))
    }

    pub fn eval_f64(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        self.numerator.eval_f64(z) / self.denominator.eval_f64(z)
    }

    /// Same rational function (cross-multiplication).
    pub fn same_function(&self, other: &Self) -> bool {
        self.numerator.mul(&other.denominator) == other.numerator.mul(&self.denominator)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct InnerReconstruction {
    /// Reduced and canonically scaled.
    pub inner: RationalInner<GaussianRational>,
    /// Unimodular factor in `ω = λ·z·α*(z)/α(z)` when `α_0` is made positive.
    pub lambda: GaussianRational,
    /// `α_0..α_{d-1}` as solved (any real multiple is equivalent).
    pub alphas: Vec<GaussianRational>,
}

/// Finds `α_0..α_{d-1}` with `α(z)·ω(z) = z·α*(z)` through the known order,
/// where `α*(z) = conj(α_{d-1}) + conj(α_{d-2})z + … + conj(α_0)z^{d-1}`.
///
/// The unimodular factor is a gauge (rotating `α` by `c` multiplies it by
/// `c/conj(c)`), so the system is solved with `λ = 1` as an `R`-linear
/// system in the real and imaginary parts of `α`; a unique solution up to
/// real scaling is required.
pub fn reconstruct_inner(
    omega: &TruncatedSeries<GaussianRational>,
    degree: usize,
) -> Result<InnerReconstruction> {
    if !omega.constant().is_zero() {
        return Err(Error::BadConstantTerm {
            op: "reconstruct_inner",
            expected: "0",
        });
    }
    if degree == 0 {
        return Err(Error::InvalidArgument("degree must be >= 1".into()));
    }
    let n = omega.order();
    let d = degree;
    let w = |k: usize| omega.get(k).cloned().unwrap_or_else(GaussianRational::zero);
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    // Column j is Re α_j, column d + j is Im α_j.
    let mut push_equation = |terms: Vec<(usize, GaussianRational)>, conj_index: Option<usize>| {
        let mut re_row = vec![BigRational::zero(); 2 * d];
        let mut im_row = vec![BigRational::zero(); 2 * d];
        for (j, c) in terms {
            re_row[j] += &c.re;
            re_row[d + j] -= &c.im;
            im_row[j] += &c.im;
            im_row[d + j] += &c.re;
        }
        if let Some(j) = conj_index {
            re_row[j] -= BigRational::from_integer(1.into());
            im_row[d + j] += BigRational::from_integer(1.into());
        }
        rows.push(re_row);
        rows.push(im_row);
    };
    for k in 0..d.min(n) {
        let terms = (0..=k).map(|i| (i, w(k + 1 - i))).collect();
        push_equation(terms, Some(d - 1 - k));
    }
    for m in d + 1..=n {
        let terms = (0..d).map(|i| (i, w(m - i))).collect();
        push_equation(terms, None);
    }
    let basis = nullspace(&rows, 2 * d);
    match basis.len() {
        0 => return Err(Error::SingularSystem),
        1 => {}
        dimension => return Err(Error::RankDeficient { dimension }),
    }
    let v = &basis[0];
    let alphas: Vec<GaussianRational> = (0..d)
        .map(|j| GaussianRational::new(v[j].clone(), v[d + j].clone()))
        .collect();
    if alphas[0].is_zero() {
        return Err(Error::SingularSystem);
    }
    let lambda = alphas[0].conj().div(&alphas[0]).expect("alpha_0 != 0");
    let mut num = vec![GaussianRational::zero()];
    num.extend((0..d).map(|k| alphas[d - 1 - k].conj()));
    let (num, den) = reduce_fraction(&Polynomial::new(num), &Polynomial::new(alphas.clone()));
    let (numerator, denominator) = canonical_fraction(&num, &den);
    let inner = RationalInner {
        numerator,
        denominator,
    };
    if inner.denominator.coeff(0).is_zero() || inner.series(n)? != *omega {
        return Err(Error::SingularSystem);
    }
    Ok(InnerReconstruction {
        inner,
        lambda,
        alphas,
    })
}

/// `λ·z^m·Π (a_i - z)/(1 - conj(a_i)·z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    pub zero_order: usize,
    pub zeros: Vec<GaussianRational>,
    pub unimodular: GaussianRational,
}

impl BlaschkeProduct {
    /// Degree as a rational function.
    pub fn degree(&self) -> usize {
        self.zero_order + self.zeros.len()
    }

    /// Zeros of `ω/z` in the disk, with multiplicity; the Schur recursion
    /// on `ω/z` degenerates at exactly this index.
    pub fn schur_degree(&self) -> usize {
        self.degree() - 1
    }

    /// `ω` is a rotation `λz^m` (no finite zeros besides the origin).
    pub fn is_monomial(&self) -> bool {
        self.zeros.iter().all(|a| a.is_zero())
    }

    pub fn eval_f64(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        let mut v = self.unimodular.to_complex64() * z.powu(self.zero_order as u32);
        for a in &self.zeros {
            let a = a.to_complex64();
            v *= (a - z) / (1.0 - a.conj() * z);
        }
        v
    }
}

/// Exact Taylor expansion of a finite Blaschke product.
pub fn blaschke_series(
    b: &BlaschkeProduct,
    order: usize,
) -> Result<TruncatedSeries<GaussianRational>> {
    if b.zero_order == 0 {
        return Err(Error::InvalidArgument(
            "zero_order must be >= 1 so that omega(0) = 0".into(),
        ));
    }
    if b.unimodular.disk_position() != DiskPosition::OnCircle {
        return Err(Error::InvalidArgument(format!(
            "unimodular factor {} has modulus != 1",
            b.unimodular
        )));
    }
    if let Some(a) = b
        .zeros
        .iter()
        .find(|a| a.disk_position() != DiskPosition::Inside)
    {
        return Err(Error::ZeroOutsideDisk(a.to_string()));
    }
    let mut acc = TruncatedSeries::monomial(b.zero_order, b.unimodular.clone(), order);
    for a in &b.zeros {
        let num =
            TruncatedSeries::from_polynomial(&[a.clone(), GaussianRational::from_int(-1)], order);
        let den =
            TruncatedSeries::from_polynomial(&[GaussianRational::one(), a.conj().neg()], order);
        acc = &acc * &num.checked_div(&den)?;
    }
    Ok(acc)
}

/// Default bound on the denominators of sampled zeros.
pub const DEFAULT_DENOMINATOR_BOUND: i64 = 8;

/// A seeded Blaschke product with `degree` finite zeros. Zeros are
/// `(p + i·r)/q` with `q ≤ denominator_bound`, drawn by rejection from the
/// open disk; the zero order at the origin is 1 or 2 and `λ ∈ {1, -1, i, -i}`.
pub fn sample_omega(seed: u64, degree: usize, denominator_bound: i64) -> BlaschkeProduct {
    let bound = denominator_bound.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zero_order = rng.gen_range(1..=2usize);
    let zeros = (0..degree)
        .map(|_| loop {
            let q = rng.gen_range(1..=bound);
            let p = rng.gen_range(-q..=q);
            let r = rng.gen_range(-q..=q);
            if p * p + r * r < q * q {
                break GaussianRational::new(
                    BigRational::new(p.into(), q.into()),
                    BigRational::new(r.into(), q.into()),
                );
            }
        })
        .collect();
    let unimodular = match rng.gen_range(0..4) {
        0 => GaussianRational::one(),
        1 => GaussianRational::from_int(-1),
        2 => GaussianRational::i(),
        _ => GaussianRational::i().neg(),
    };
    BlaschkeProduct {
        zero_order,
        zeros,
        unimodular,
    }
}
