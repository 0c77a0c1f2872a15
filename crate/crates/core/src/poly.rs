//! Dense polynomials over a [`Scalar`] field.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::scalar::{GaussianRational, Scalar};
use crate::series::TruncatedSeries;

/// Coefficients in increasing degree, without trailing zeros.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| S::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul(c)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by the zero polynomial");
        let dl_inv = dl.inv().expect("leading coefficient is invertible");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![S::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].mul(&dl_inv);
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(dc));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading().and_then(S::inv) {
            Some(inv) => a.scale(&inv),
            None => a,
        }
    }

    pub fn to_series(&self, order: usize) -> TruncatedSeries<S> {
        TruncatedSeries::from_polynomial(&self.coeffs, order)
    }

    pub fn eval_f64(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| {
                acc * z + c.to_complex64()
            })
    }
}

impl<S: Scalar> std::fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        Ok(())
    }
}

/// Divides out the common factor of a fraction `num/den`.
pub fn reduce_fraction<S: Scalar>(
    num: &Polynomial<S>,
    den: &Polynomial<S>,
) -> (Polynomial<S>, Polynomial<S>) {
    let g = num.gcd(den);
    if g.degree().unwrap_or(0) == 0 {
        return (num.clone(), den.clone());
    }
    (num.div_rem(&g).0, den.div_rem(&g).0)
}

/// Fixes the free scalar of an exact fraction: all real and imaginary parts
/// become integers with no common divisor, and the leading coefficient of
/// the denominator is moved into the sector `re > 0, im >= 0` by a unit.
pub fn canonical_fraction(
    num: &Polynomial<GaussianRational>,
    den: &Polynomial<GaussianRational>,
) -> (Polynomial<GaussianRational>, Polynomial<GaussianRational>) {
    let parts = num
        .coeffs()
        .iter()
        .chain(den.coeffs())
        .flat_map(|c| [&c.re, &c.im]);
    let lcm = parts
        .clone()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let content = parts
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
    if content.is_zero() {
        return (num.clone(), den.clone());
    }
    let factor = GaussianRational::real(BigRational::new(lcm, content));
    let lead = den
        .leading()
        .cloned()
        .unwrap_or_else(GaussianRational::one)
        .mul(&factor);
    let unit = [
        GaussianRational::one(),
        GaussianRational::i().neg(),
        GaussianRational::from_int(-1),
        GaussianRational::i(),
    ]
    .into_iter()
    .find(|u| {
        let v = lead.mul(u);
        v.re.is_positive() && !v.im.is_negative()
    })
    .unwrap_or_else(GaussianRational::one);
    let scale = factor.mul(&unit);
    (num.scale(&scale), den.scale(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polynomial<GaussianRational>;

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(P::from_ints(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(P::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn division_with_remainder() {
        // (z^3 - 1) = (z - 1)(z^2 + z + 1)
        let (q, r) = P::from_ints(&[-1, 0, 0, 1]).div_rem(&P::from_ints(&[-1, 1]));
        assert_eq!(q, P::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());
        let (q, r) = P::from_ints(&[1, 0, 1]).div_rem(&P::from_ints(&[1, 1]));
        assert_eq!(q, P::from_ints(&[-1, 1]));
        assert_eq!(r, P::from_ints(&[2]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = P::from_ints(&[-2, 0, 2]); // 2(z-1)(z+1)
        let b = P::from_ints(&[-3, 3]); // 3(z-1)
        assert_eq!(a.gcd(&b), P::from_ints(&[-1, 1]));
    }

    #[test]
    fn canonical_fraction_clears_content() {
        let half = GaussianRational::ratio(1, 2);
        let num = P::from_ints(&[0, 1, 0, -1, -2]).scale(&half.neg());
        let den = P::from_ints(&[-2, -1, 0, 1]).scale(&half.neg());
        let (n, d) = canonical_fraction(&num, &den);
        assert_eq!(n, P::from_ints(&[0, 1, 0, -1, -2]));
        assert_eq!(d, P::from_ints(&[-2, -1, 0, 1]));
    }

    #[test]
    fn canonical_fraction_rotates_imaginary_leading() {
        let i = GaussianRational::i();
        let num = P::new(vec![GaussianRational::zero(), i.neg()]);
        let den = P::new(vec![i]);
        let (n, d) = canonical_fraction(&num, &den);
        assert_eq!(n, P::from_ints(&[0, -1]));
        assert_eq!(d, P::from_ints(&[1]));
    }
}
