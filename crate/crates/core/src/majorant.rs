//! Coefficients of the extremal family `F*(z,t) = exp(-t(1+z)/(1-z))`.
//!
//! `F*(z,t) = e^{-t}·U(z)` with `U(z) = exp(-2t·z/(1-z))`. The factor
//! `e^{-t}` is kept symbolic; `U` has rational coefficients whenever `t` is
//! rational, so every exact statement is made about `U` or about the
//! normalization `F = F*/{F*}_1 = -U/(2t)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::scalar::{rational_to_f64, Scalar};
use crate::series::TruncatedSeries;

pub(crate) fn check_positive(t: &BigRational) -> Result<()> {
    if t.is_positive() {
        Ok(())
    } else {
        Err(Error::NonpositiveParameter(t.to_string()))
    }
}

/// `e^{-t}·U(z)` with the prefactor left unevaluated.
#[derive(Debug, Clone, PartialEq)]
pub struct MajorantCoefficients<S> {
    pub t: BigRational,
    pub rational_part: TruncatedSeries<S>,
}

impl<S: Scalar> MajorantCoefficients<S> {
    pub fn order(&self) -> usize {
        self.rational_part.order()
    }

    /// `e^{-t}` in floating point.
    pub fn prefactor(&self) -> f64 {
        (-rational_to_f64(&self.t)).exp()
    }

    /// `{F*}_n` in floating point.
    pub fn value_f64(&self, n: usize) -> num_complex::Complex64 {
        self.rational_part.coeff(n).to_complex64() * self.prefactor()
    }
}

/// Coefficients of `H(z) = (1+z)/(1-z)`: `1, 2, 2, …`.
pub fn halfplane_coeffs<S: Scalar>(order: usize) -> TruncatedSeries<S> {
    TruncatedSeries::new(
        (0..=order)
            .map(|k| if k == 0 { S::one() } else { S::from_int(2) })
            .collect(),
    )
}

/// `F*(z,t)` through `z^order`.
pub fn fstar_coeffs<S: Scalar>(t: &BigRational, order: usize) -> Result<MajorantCoefficients<S>> {
    check_positive(t)?;
    // -t·(H(z) - 1) = -2t·(z + z² + …)
    let a = -(t + t);
    let exponent = TruncatedSeries::new(
        (0..=order)
            .map(|k| {
                if k == 0 {
                    S::zero()
                } else {
                    S::from_rational(&a)
                }
            })
            .collect(),
    );
    Ok(MajorantCoefficients {
        t: t.clone(),
        rational_part: exponent.exp()?,
    })
}

/// `F(z,t) = -U(z)/(2t)`; `{F}_1 = 1`, `{F}_0 = -1/(2t)`.
pub fn normalized_coeffs<S: Scalar>(t: &BigRational, order: usize) -> Result<TruncatedSeries<S>> {
    let fstar = fstar_coeffs::<S>(t, order)?;
    let factor = S::from_rational(&(-(t + t).recip()));
    Ok(fstar.rational_part.scale(&factor))
}

/// The range `n ≤ N(t)` where the sharp bound `2t/e^t` holds.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundHorizon {
    pub t: BigRational,
    /// `2t·e^{-t}`.
    pub bound: f64,
    /// Largest natural `n` with `n ≤ 2/t + 1`.
    pub horizon: usize,
    /// `2/t + 1` is an integer, i.e. `t = 2/(N-1)`.
    pub boundary: bool,
}

pub fn bound_horizon(t: &BigRational) -> Result<BoundHorizon> {
    check_positive(t)?;
    let limit = BigRational::from_integer(2.into()) / t + BigRational::one();
    let floor: BigInt = limit.numer().div_floor(limit.denom());
    let horizon = floor.to_usize().ok_or_else(|| {
        Error::InvalidArgument(format!(
            "t = {t} is too small: horizon does not fit in usize"
        ))
    })?;
    let tf = rational_to_f64(t);
    Ok(BoundHorizon {
        t: t.clone(),
        bound: 2.0 * tf * (-tf).exp(),
        horizon,
        boundary: limit.is_integer(),
    })
}

/// `F*(e^{iφ} z^n, t)` through `z^order`.
pub fn extremal_coeffs<S: Scalar>(
    t: &BigRational,
    n: usize,
    phi: f64,
    order: usize,
) -> Result<MajorantCoefficients<S>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "extremal rotation needs n >= 1".into(),
        ));
    }
    if order < n {
        return Err(Error::InsufficientOrder {
            needed: n,
            available: order,
        });
    }
    let lambda = S::unimodular(phi).ok_or(Error::NonrationalRotationInExactMode(phi))?;
    let base = fstar_coeffs::<S>(t, order / n)?;
    let mut coeffs = vec![S::zero(); order + 1];
    let mut rot = S::one();
    for (k, c) in base.rational_part.coeffs().iter().enumerate() {
        coeffs[k * n] = c.mul(&rot);
        rot = rot.mul(&lambda);
    }
    Ok(MajorantCoefficients {
        t: t.clone(),
        rational_part: TruncatedSeries::new(coeffs),
    })
}

/// Checks whether `t` is `2/(n-1)` exactly.
pub fn is_boundary_parameter(t: &BigRational, n: usize) -> bool {
    n >= 2 && *t == BigRational::new(2.into(), BigInt::from(n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as G;
    use num_complex::Complex64;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn halfplane_matches_division() {
        assert_eq!(halfplane_coeffs::<G>(0), TruncatedSeries::from_ints(&[1]));
        assert_eq!(
            halfplane_coeffs::<G>(3),
            TruncatedSeries::from_ints(&[1, 2, 2, 2])
        );
        let num = TruncatedSeries::<G>::from_ints(&[1, 1, 0, 0, 0, 0]);
        let den = TruncatedSeries::<G>::from_ints(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(num.checked_div(&den).unwrap(), halfplane_coeffs(5));
    }

    #[test]
    fn first_coefficients_of_u() {
        for t in [q(1, 2), q(1, 1), q(7, 3)] {
            let f = fstar_coeffs::<G>(&t, 4).unwrap();
            let two = q(2, 1);
            assert_eq!(f.rational_part.coeff(0), &G::one());
            assert_eq!(f.rational_part.coeff(1), &G::real(-(&two * &t)));
            assert_eq!(
                f.rational_part.coeff(2),
                &G::real(&two * &t * &t - &two * &t)
            );
        }
    }

    #[test]
    fn first_float_coefficient_is_minus_bound() {
        let f = fstar_coeffs::<G>(&q(1, 2), 2).unwrap();
        let expected = -2.0 * 0.5 * (-0.5f64).exp();
        assert!((f.value_f64(1).re - expected).abs() < 1e-15);
    }

    #[test]
    fn rejects_nonpositive_t() {
        assert!(matches!(
            fstar_coeffs::<G>(&q(0, 1), 3),
            Err(Error::NonpositiveParameter(_))
        ));
        assert!(matches!(
            bound_horizon(&q(-1, 2)),
            Err(Error::NonpositiveParameter(_))
        ));
        assert!(normalized_coeffs::<G>(&q(-3, 1), 3).is_err());
    }

    #[test]
    fn normalized_series_at_one_half() {
        let f = normalized_coeffs::<G>(&q(1, 2), 5).unwrap();
        let expected = [q(-1, 1), q(1, 1), q(1, 2), q(1, 6), q(-1, 24), q(-19, 120)];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(f.coeff(k), &G::real(e.clone()), "coefficient {k}");
        }
    }

    #[test]
    fn normalized_second_coefficient() {
        for t in [q(1, 10), q(2, 3), q(5, 2)] {
            let f = normalized_coeffs::<G>(&t, 2).unwrap();
            assert_eq!(f.coeff(1), &G::one());
            assert_eq!(f.coeff(2), &G::real(BigRational::one() - &t));
        }
    }

    #[test]
    fn horizons() {
        let h = bound_horizon(&q(1, 2)).unwrap();
        assert_eq!((h.horizon, h.boundary), (5, true));
        let h = bound_horizon(&q(1, 1)).unwrap();
        assert_eq!((h.horizon, h.boundary), (3, true));
        let h = bound_horizon(&q(2, 1)).unwrap();
        assert_eq!((h.horizon, h.boundary), (2, true));
        let h = bound_horizon(&q(3, 1)).unwrap();
        assert_eq!((h.horizon, h.boundary), (1, false));
        assert!((h.bound - 6.0 * (-3.0f64).exp()).abs() < 1e-15);
        let h = bound_horizon(&q(3, 2)).unwrap();
        assert_eq!((h.horizon, h.boundary), (2, false));
    }

    #[test]
    fn horizon_at_boundary_parameters() {
        for m in 2..=10usize {
            let t = q(2, m as i64 - 1);
            let h = bound_horizon(&t).unwrap();
            assert_eq!(h.horizon, m);
            assert!(h.boundary);
            assert!(is_boundary_parameter(&t, m));
        }
    }

    #[test]
    fn extremal_identity_rotation() {
        let t = q(1, 3);
        let e = extremal_coeffs::<G>(&t, 1, 0.0, 6).unwrap();
        assert_eq!(
            e.rational_part,
            fstar_coeffs::<G>(&t, 6).unwrap().rational_part
        );
    }

    #[test]
    fn extremal_support_and_first_nonzero() {
        let t = q(1, 1);
        let e = extremal_coeffs::<G>(&t, 2, 0.0, 4).unwrap();
        assert!(e.rational_part.coeff(1).is_zero());
        assert!(e.rational_part.coeff(3).is_zero());
        assert_eq!(e.rational_part.coeff(2), &G::from_int(-2));

        let e = extremal_coeffs::<G>(&t, 2, FRAC_PI_2, 4).unwrap();
        assert_eq!(e.rational_part.coeff(2), &G::i().scale_int(-2));
        // {U}_2 = 2t^2 - 2t vanishes at t = 1.
        assert!(e.rational_part.coeff(4).is_zero());
    }

    #[test]
    fn extremal_rotation_preserves_modulus_in_float() {
        let t = q(1, 2);
        for phi in [0.3, 1.0, PI, -2.2] {
            let e = extremal_coeffs::<Complex64>(&t, 3, phi, 6).unwrap();
            let c = e.value_f64(3);
            assert!((c.norm() - 2.0 * 0.5 * (-0.5f64).exp()).abs() < 1e-14);
        }
    }

    #[test]
    fn extremal_rejects_irrational_rotation_in_exact_mode() {
        assert!(matches!(
            extremal_coeffs::<G>(&q(1, 2), 2, 0.5, 4),
            Err(Error::NonrationalRotationInExactMode(_))
        ));
    }
}
