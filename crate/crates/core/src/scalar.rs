//! Coefficient fields.
//!
//! Two scalar modes share one trait: [`GaussianRational`] for exact work and
//! [`Complex64`] for float cross-checks. The float comparison tolerance is
//! module-wide and only used by equality helpers, never inside arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default relative tolerance for float equality assertions.
pub const DEFAULT_FLOAT_TOL: f64 = 1e-10;
/// Absolute floor under the relative tolerance.
pub const FLOAT_ABS_FLOOR: f64 = 1e-14;
/// Tolerance for deciding that a float Schur parameter sits on the unit circle.
pub const FLOAT_UNIMODULAR_TOL: f64 = 1e-9;
/// Float margins at or above this value count as satisfying a bound.
pub const FLOAT_MARGIN_SLACK: f64 = 1e-12;

/// Environment variable overriding [`DEFAULT_FLOAT_TOL`].
pub const FLOAT_TOL_ENV: &str = "KRZYZ_FLOAT_TOL";

/// The float comparison tolerance, read once from `KRZYZ_FLOAT_TOL`.
pub fn float_tolerance() -> f64 {
    static TOL: OnceLock<f64> = OnceLock::new();
    *TOL.get_or_init(|| {
        std::env::var(FLOAT_TOL_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|v| v.is_finite() && *v > 0.0)
            .unwrap_or(DEFAULT_FLOAT_TOL)
    })
}

/// Relative comparison with an absolute floor.
pub fn float_close(a: Complex64, b: Complex64, rel_tol: f64) -> bool {
    let scale = a.norm().max(b.norm());
    (a - b).norm() <= (rel_tol * scale).max(FLOAT_ABS_FLOOR)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Mode::Exact),
            "float" => Ok(Mode::Float),
            other => Err(format!("unknown mode `{other}` (expected exact|float)")),
        }
    }
}

/// Where a value sits relative to the unit circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiskPosition {
    Inside,
    OnCircle,
    Outside,
}

/// A squared modulus, kept exact when it came from exact data.
#[derive(Debug, Clone, PartialEq)]
pub enum SquaredModulus {
    Exact(BigRational),
    Float(f64),
}

impl SquaredModulus {
    pub fn to_f64(&self) -> f64 {
        match self {
            SquaredModulus::Exact(q) => rational_to_f64(q),
            SquaredModulus::Float(v) => *v,
        }
    }

    /// `1 - self`.
    pub fn margin_to_one(&self) -> SquaredModulus {
        match self {
            SquaredModulus::Exact(q) => SquaredModulus::Exact(BigRational::one() - q),
            SquaredModulus::Float(v) => SquaredModulus::Float(1.0 - v),
        }
    }

    /// Treating `self` as a margin: nonnegative (float: above `-1e-12`).
    pub fn is_nonnegative_margin(&self) -> bool {
        match self {
            SquaredModulus::Exact(q) => !q.is_negative(),
            SquaredModulus::Float(v) => *v >= -FLOAT_MARGIN_SLACK,
        }
    }

    /// Treating `self` as a margin: strictly positive (float: above `1e-12`).
    pub fn is_positive_margin(&self) -> bool {
        match self {
            SquaredModulus::Exact(q) => q.is_positive(),
            SquaredModulus::Float(v) => *v > FLOAT_MARGIN_SLACK,
        }
    }

    pub fn is_exactly(&self, value: i64) -> bool {
        match self {
            SquaredModulus::Exact(q) => *q == BigRational::from_integer(value.into()),
            SquaredModulus::Float(v) => (*v - value as f64).abs() <= FLOAT_MARGIN_SLACK,
        }
    }

    /// Exact equality, or closeness at the float tolerance.
    pub fn agrees_with(&self, other: &Self) -> bool {
        match (self, other) {
            (SquaredModulus::Exact(a), SquaredModulus::Exact(b)) => a == b,
            _ => float_close(
                Complex64::new(self.to_f64(), 0.0),
                Complex64::new(other.to_f64(), 0.0),
                float_tolerance(),
            ),
        }
    }
}

impl fmt::Display for SquaredModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquaredModulus::Exact(q) => write!(f, "{q}"),
            SquaredModulus::Float(v) => f.write_str(&format_f64(*v)),
        }
    }
}

/// Seventeen significant digits, round-trippable.
pub fn format_f64(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Huge numerator/denominator: scale down before dividing.
            let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(900);
            let n = (q.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (q.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// Coefficient field used by every series operation.
pub trait Scalar: Clone + fmt::Debug + fmt::Display + PartialEq + Send + Sync + 'static {
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_rational(q: &BigRational) -> Self;
    fn from_parts(re: &BigRational, im: &BigRational) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn conj(&self) -> Self;
    /// `None` when `self` cannot be inverted (zero, or negligible in float mode).
    fn inv(&self) -> Option<Self>;

    fn is_zero(&self) -> bool;
    /// Exact zero in exact mode; below the float tolerance in float mode.
    fn is_negligible(&self) -> bool;
    /// Exact equality, or relative closeness in float mode.
    fn approx_eq(&self, other: &Self) -> bool;

    fn squared_modulus(&self) -> SquaredModulus;
    fn disk_position(&self) -> DiskPosition;
    fn to_complex64(&self) -> Complex64;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    fn is_one(&self) -> bool {
        self.approx_eq(&Self::one())
    }

    fn scale_int(&self, n: i64) -> Self {
        self.mul(&Self::from_int(n))
    }

    /// `e^{i·angle}`; exact mode only admits quarter turns.
    fn unimodular(angle: f64) -> Option<Self>;

    fn i() -> Self {
        Self::from_parts(&BigRational::zero(), &BigRational::one())
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }
}

/// Quarter-turn index `k` with `angle = k·π/2`, if `angle` is one.
pub fn quarter_turn_index(angle: f64) -> Option<i64> {
    let k = (angle / std::f64::consts::FRAC_PI_2).round();
    if (angle - k * std::f64::consts::FRAC_PI_2).abs() <= 1e-12 {
        Some((k as i64).rem_euclid(4))
    } else {
        None
    }
}

/// Exact complex number with arbitrary-precision rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    /// `p/q` as a real Gaussian rational.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::real(BigRational::new(p.into(), q.into()))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `re`, `re+imi` or `imi`, each part written as `p/q` or an integer.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseScalarError {
    #[error("empty value")]
    Empty,
    #[error("`{0}` looks like a decimal; exact values must be written as p/q or an integer")]
    Decimal(String),
    #[error("`{0}` is not a rational of the form p/q")]
    Malformed(String),
    #[error("`{0}` has a zero denominator")]
    ZeroDenominator(String),
}

/// Parses `p/q` or an integer. Decimal notation is rejected.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseScalarError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    if s.contains(['.', 'e', 'E']) {
        return Err(ParseScalarError::Decimal(s.to_string()));
    }
    let parse_int = |part: &str| -> Result<BigInt, ParseScalarError> {
        let p = part.trim();
        let digits = p.strip_prefix(['+', '-']).unwrap_or(p);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseScalarError::Malformed(s.to_string()));
        }
        p.parse::<BigInt>()
            .map_err(|_| ParseScalarError::Malformed(s.to_string()))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(ParseScalarError::ZeroDenominator(s.to_string()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

impl FromStr for GaussianRational {
    type Err = ParseScalarError;

    /// Inverse of the `Display` form.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let s = text.trim();
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self::real(parse_rational(s)?));
        };
        // Split at the last sign that is not leading.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        match split {
            None => Ok(Self::new(BigRational::zero(), parse_rational(body)?)),
            Some(i) => {
                let (re, im) = body.split_at(i);
                let im = im.strip_prefix('+').unwrap_or(im);
                Ok(Self::new(parse_rational(re)?, parse_rational(im)?))
            }
        }
    }
}

impl Scalar for GaussianRational {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::real(BigRational::one())
    }

    fn from_int(n: i64) -> Self {
        Self::real(BigRational::from_integer(n.into()))
    }

    fn from_rational(q: &BigRational) -> Self {
        Self::real(q.clone())
    }

    fn from_parts(re: &BigRational, im: &BigRational) -> Self {
        Self::new(re.clone(), im.clone())
    }

    fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Self::real(&self.re * &rhs.re);
        }
        Self::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }

    fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }

    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Self::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn squared_modulus(&self) -> SquaredModulus {
        SquaredModulus::Exact(self.norm_sqr())
    }

    fn disk_position(&self) -> DiskPosition {
        match self.norm_sqr().cmp(&BigRational::one()) {
            Ordering::Less => DiskPosition::Inside,
            Ordering::Equal => DiskPosition::OnCircle,
            Ordering::Greater => DiskPosition::Outside,
        }
    }

    fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    fn unimodular(angle: f64) -> Option<Self> {
        let k = quarter_turn_index(angle)?;
        Some(match k {
            0 => Self::one(),
            1 => Self::i(),
            2 => Self::from_int(-1),
            _ => Self::i().neg(),
        })
    }
}

impl Scalar for Complex64 {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn from_rational(q: &BigRational) -> Self {
        Complex64::new(rational_to_f64(q), 0.0)
    }

    fn from_parts(re: &BigRational, im: &BigRational) -> Self {
        Complex64::new(rational_to_f64(re), rational_to_f64(im))
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn inv(&self) -> Option<Self> {
        if self.is_negligible() {
            None
        } else {
            Some(Complex64::inv(self))
        }
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn is_negligible(&self) -> bool {
        self.norm() <= float_tolerance()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        float_close(*self, *other, float_tolerance())
    }

    fn squared_modulus(&self) -> SquaredModulus {
        SquaredModulus::Float(self.norm_sqr())
    }

    fn disk_position(&self) -> DiskPosition {
        let n = self.norm_sqr();
        if (1.0 - n).abs() < FLOAT_UNIMODULAR_TOL {
            DiskPosition::OnCircle
        } else if n < 1.0 {
            DiskPosition::Inside
        } else {
            DiskPosition::Outside
        }
    }

    fn to_complex64(&self) -> Complex64 {
        *self
    }

    fn unimodular(angle: f64) -> Option<Self> {
        Some(Complex64::from_polar(1.0, angle))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("1/2").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-19/120").unwrap(), q(-19, 120));
        assert_eq!(parse_rational(" 3 ").unwrap(), q(3, 1));
        assert_eq!(parse_rational("4/-8").unwrap(), q(-1, 2));
    }

    #[test]
    fn rejects_decimals_and_garbage() {
        assert!(matches!(
            parse_rational("0.5"),
            Err(ParseScalarError::Decimal(_))
        ));
        assert!(matches!(
            parse_rational("1e3"),
            Err(ParseScalarError::Decimal(_))
        ));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseScalarError::ZeroDenominator(_))
        ));
        assert!(matches!(
            parse_rational("a/b"),
            Err(ParseScalarError::Malformed(_))
        ));
        assert!(matches!(parse_rational(""), Err(ParseScalarError::Empty)));
    }

    #[test]
    fn gaussian_display_parse_round_trip() {
        let cases = [
            GaussianRational::new(q(1, 2), q(-3, 4)),
            GaussianRational::new(q(0, 1), q(1, 1)),
            GaussianRational::new(q(-2, 1), q(0, 1)),
            GaussianRational::new(q(-1, 3), q(5, 7)),
        ];
        for c in cases {
            let text = c.to_string();
            assert_eq!(text.parse::<GaussianRational>().unwrap(), c, "{text}");
        }
    }

    #[test]
    fn exact_inverse() {
        let z = GaussianRational::new(q(3, 1), q(4, 1));
        let w = z.inv().unwrap();
        assert_eq!(z.mul(&w), GaussianRational::one());
        assert!(GaussianRational::zero().inv().is_none());
    }

    #[test]
    fn quarter_turns() {
        use std::f64::consts::{FRAC_PI_2, PI};
        assert_eq!(
            GaussianRational::unimodular(0.0),
            Some(GaussianRational::one())
        );
        assert_eq!(
            GaussianRational::unimodular(PI),
            Some(GaussianRational::from_int(-1))
        );
        assert_eq!(
            GaussianRational::unimodular(-FRAC_PI_2),
            Some(GaussianRational::i().neg())
        );
        assert_eq!(GaussianRational::unimodular(1.0), None);
        assert!(Complex64::unimodular(1.0).is_some());
    }

    #[test]
    fn disk_positions() {
        assert_eq!(
            GaussianRational::ratio(-1, 2).disk_position(),
            DiskPosition::Inside
        );
        assert_eq!(
            GaussianRational::i().disk_position(),
            DiskPosition::OnCircle
        );
        let outside = GaussianRational::new(q(3, 5), q(5, 6));
        assert_eq!(outside.disk_position(), DiskPosition::Outside);
        assert_eq!(
            Complex64::new(0.6, 0.8).disk_position(),
            DiskPosition::OnCircle
        );
    }

    #[test]
    fn float_tolerance_is_relative_with_floor() {
        let a = Complex64::new(1e6, 0.0);
        assert!(float_close(a, a + Complex64::new(1e-5, 0.0), 1e-10));
        assert!(!float_close(a, a + Complex64::new(1.0, 0.0), 1e-10));
        assert!(float_close(
            Complex64::new(0.0, 0.0),
            Complex64::new(1e-15, 0.0),
            1e-10
        ));
    }

    #[test]
    fn huge_rationals_convert() {
        let big = BigRational::new(BigInt::from(3) << 2000u32, BigInt::from(2) << 2000u32);
        assert!((rational_to_f64(&big) - 1.5).abs() < 1e-15);
    }
}
