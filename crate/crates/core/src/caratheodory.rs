//! Convex maps, Carathéodory coefficients and Toeplitz positivity.
//!
//! A convex univalent `f` (with `f(0)=0`, `f'(0)=1`) corresponds to
//! `h = 1 + z·f''/f'` of positive real part. A polynomial `1 + Σ h_k z^k`
//! extends to such an `h` iff the Hermitian Toeplitz minors built from it
//! are all positive, or positive up to some index and zero afterwards (the
//! extension is then unique).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::majorant::{check_positive, is_boundary_parameter};
use crate::scalar::{GaussianRational, Scalar};
use crate::series::TruncatedSeries;

/// `{h}_1..{h}_n`; `{h}_0 = 1` is implicit.
#[derive(Debug, Clone, PartialEq)]
pub struct CaratheodorySegment<S> {
    pub coeffs: Vec<S>,
}

impl<S: Scalar> CaratheodorySegment<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        Self { coeffs }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `R(z) = 1 + Σ h_k z^k` as a series of order `len()`.
    pub fn to_series(&self) -> TruncatedSeries<S> {
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(S::one());
        c.extend(self.coeffs.iter().cloned());
        TruncatedSeries::new(c)
    }

    /// Reads `h_1..h_N` off a series with `h_0 = 1`.
    pub fn from_series(h: &TruncatedSeries<S>) -> Result<Self> {
        if !h.constant().is_one() {
            return Err(Error::BadConstantTerm {
                op: "caratheodory segment",
                expected: "1",
            });
        }
        Ok(Self::new(h.coeffs()[1..].to_vec()))
    }
}

/// `h = 1 + z·f''/f'` for `f` with `f(0)=0`, `f'(0)=1`. The output has
/// `order(f) - 1` coefficients.
///
/// The map ignores `f(0)`, but the normalization is still enforced; callers
/// holding the normalized majorant (whose constant is `-1/(2t)`) should
/// zero its constant term first.
pub fn convex_to_caratheodory<S: Scalar>(f: &TruncatedSeries<S>) -> Result<CaratheodorySegment<S>> {
    if f.order() < 2 {
        return Err(Error::InsufficientOrder {
            needed: 2,
            available: f.order(),
        });
    }
    if !f.coeff(0).is_negligible() || !f.coeff(1).is_one() {
        return Err(Error::BadNormalization);
    }
    let fp = f.derivative();
    let z_fpp = fp.derivative().shift_up();
    let ratio = z_fpp.checked_div(&fp)?;
    let h = &TruncatedSeries::one(ratio.order()) + &ratio;
    CaratheodorySegment::from_series(&h)
}

/// Inverse map: `f' = exp(∫₀^z (h(v)-1)/v dv)`, `f = ∫₀^z f'`. A segment of
/// length `n` gives `f` of order `n + 1`.
pub fn caratheodory_to_convex<S: Scalar>(h: &CaratheodorySegment<S>) -> Result<TruncatedSeries<S>> {
    if h.is_empty() {
        return Err(Error::EmptySegment);
    }
    let integrand = TruncatedSeries::new(h.coeffs.clone());
    let f_prime = integrand.integral().exp()?;
    Ok(f_prime.integral())
}

/// `(2(1-t), 2(1-2t), …, 2(1-nt))`.
pub fn h_closed_form(t: &BigRational, n: usize) -> Result<CaratheodorySegment<GaussianRational>> {
    check_positive(t)?;
    if n == 0 {
        return Err(Error::EmptySegment);
    }
    let two = BigRational::from_integer(2.into());
    Ok(CaratheodorySegment::new(
        (1..=n)
            .map(|j| {
                let jt = BigRational::from_integer(BigInt::from(j)) * t;
                GaussianRational::real(&two * (BigRational::one() - jt))
            })
            .collect(),
    ))
}

/// Outcome of the Toeplitz sign test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    AllPositive,
    /// Minors are positive before this index and zero from it on.
    PositiveThenZero(usize),
    /// First index breaking the pattern: a negative minor, or a nonzero
    /// minor after a zero one.
    Indefinite(usize),
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::AllPositive => "all-positive",
            Classification::PositiveThenZero(_) => "positive-then-zero",
            Classification::Indefinite(_) => "indefinite",
        }
    }

    pub fn index(&self) -> Option<usize> {
        match self {
            Classification::AllPositive => None,
            Classification::PositiveThenZero(d) | Classification::Indefinite(d) => Some(*d),
        }
    }

    pub fn is_extendable(&self) -> bool {
        !matches!(self, Classification::Indefinite(_))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzMinorReport {
    /// Present when the segment came from the closed form.
    pub t: Option<BigRational>,
    /// `M_0..M_n`.
    pub minors: Vec<BigRational>,
    pub classification: Classification,
    /// A zero minor was followed by a nonzero one.
    pub zero_then_nonzero: bool,
}

/// `(k+1)×(k+1)` Hermitian Toeplitz matrix with diagonal 2 and
/// `a_ij = h_{j-i}` above the diagonal.
pub fn toeplitz_matrix(
    h: &CaratheodorySegment<GaussianRational>,
    k: usize,
) -> Vec<Vec<GaussianRational>> {
    assert!(k <= h.len(), "minor index beyond segment");
    (0..=k)
        .map(|i| {
            (0..=k)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Equal => GaussianRational::from_int(2),
                    std::cmp::Ordering::Less => h.coeffs[j - i - 1].clone(),
                    std::cmp::Ordering::Greater => h.coeffs[i - j - 1].conj(),
                })
                .collect()
        })
        .collect()
}

/// Exact minors `M_0..M_n` of the segment and their sign pattern.
pub fn toeplitz_minors(h: &CaratheodorySegment<GaussianRational>) -> Result<ToeplitzMinorReport> {
    if h.is_empty() {
        return Err(Error::EmptySegment);
    }
    Ok(minors_of(h, None))
}

fn minors_of(
    h: &CaratheodorySegment<GaussianRational>,
    t: Option<BigRational>,
) -> ToeplitzMinorReport {
    let minors: Vec<BigRational> = (0..=h.len())
        .map(|k| {
            let det = determinant(&toeplitz_matrix(h, k));
            debug_assert!(det.im.is_zero(), "Hermitian minor with imaginary part");
            det.re
        })
        .collect();
    let (classification, zero_then_nonzero) = classify(&minors);
    ToeplitzMinorReport {
        t,
        minors,
        classification,
        zero_then_nonzero,
    }
}

/// Applies the sign rule to a minor sequence.
pub fn classify(minors: &[BigRational]) -> (Classification, bool) {
    let mut first_zero = None;
    for (i, m) in minors.iter().enumerate() {
        match first_zero {
            None if m.is_negative() => return (Classification::Indefinite(i), false),
            None if m.is_zero() => first_zero = Some(i),
            Some(_) if !m.is_zero() => return (Classification::Indefinite(i), true),
            _ => {}
        }
    }
    match first_zero {
        Some(d) => (Classification::PositiveThenZero(d), false),
        None => (Classification::AllPositive, false),
    }
}

/// Minors for the degree-`n` segment of the normalized majorant: the closed
/// form `h_1..h_{n-1}`, giving `M_0..M_{n-1}`.
pub fn extension_minors(t: &BigRational, n: usize) -> Result<ToeplitzMinorReport> {
    check_positive(t)?;
    match n {
        0 => Err(Error::InvalidArgument(
            "polynomial degree must be >= 1".into(),
        )),
        1 => Ok(minors_of(
            &CaratheodorySegment::new(Vec::new()),
            Some(t.clone()),
        )),
        _ => Ok(minors_of(&h_closed_form(t, n - 1)?, Some(t.clone()))),
    }
}

/// `2^{2n}·tⁿ·(2 - n·t)`.
pub fn minor_closed_form(t: &BigRational, n: usize) -> BigRational {
    let four_t = BigRational::from_integer(4.into()) * t;
    let n_big = BigRational::from_integer(BigInt::from(n));
    num_traits::pow(four_t, n) * (BigRational::from_integer(2.into()) - n_big * t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtensionVerdict {
    pub extendable: bool,
    pub unique: bool,
}

/// Whether the degree-`n` segment of `F(·,t)` extends to a convex map.
pub fn extension_verdict(t: &BigRational, n: usize) -> Result<ExtensionVerdict> {
    check_positive(t)?;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "polynomial degree must be >= 1".into(),
        ));
    }
    let limit = BigRational::from_integer(2.into()) / t + BigRational::one();
    let extendable = BigRational::from_integer(BigInt::from(n)) <= limit;
    Ok(ExtensionVerdict {
        extendable,
        unique: is_boundary_parameter(t, n),
    })
}
