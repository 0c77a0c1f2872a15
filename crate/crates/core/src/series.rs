//! Truncated formal power series.
//!
//! A [`TruncatedSeries`] of order `N` knows the coefficients of `z^0..=z^N`;
//! everything past `z^N` is unknown rather than zero. Binary operations
//! return the smaller operand order. Operations that change the order
//! (derivative, integral, shifts) say so in their docs.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries<S> {
    coeffs: Vec<S>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Dispatches one of the four field operations.
pub fn arith<S: Scalar>(
    a: &TruncatedSeries<S>,
    b: &TruncatedSeries<S>,
    op: ArithOp,
) -> Result<TruncatedSeries<S>> {
    match op {
        ArithOp::Add => Ok(a + b),
        ArithOp::Sub => Ok(a - b),
        ArithOp::Mul => Ok(a * b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl<S: Scalar> TruncatedSeries<S> {
    /// Panics on an empty coefficient list: a series always knows `z^0`.
    pub fn new(coeffs: Vec<S>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| S::from_int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![S::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, S::one(), order)
    }

    /// `c·z^k` truncated at `order`.
    pub fn monomial(k: usize, c: S, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `z` at the given order (`order >= 1` for it to be visible).
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, S::one(), order)
    }

    /// Coefficients of a polynomial, padded with zeros up to `order`.
    /// Terms above `order` are dropped.
    pub fn from_polynomial(coeffs: &[S], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.clone();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Panics when `n` is beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &S {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&S> {
        self.coeffs.get(n)
    }

    pub fn constant(&self) -> &S {
        &self.coeffs[0]
    }

    /// Keeps `z^0..=z^order`; never raises the order.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Self::new(self.coeffs[..=keep].to_vec())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TruncatedSeries<T> {
        TruncatedSeries::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.mul(c))
    }

    /// Coefficientwise conjugate (the series of `conj(f(conj z))`).
    pub fn conj(&self) -> Self {
        self.map(S::conj)
    }

    pub fn with_constant(&self, c: S) -> Self {
        let mut s = self.clone();
        s.coeffs[0] = c;
        s
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.order() == other.order()
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|(a, b)| a.approx_eq(b))
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        let order = self.order().min(rhs.order());
        Self::new(
            (0..=order)
                .map(|k| f(&self.coeffs[k], &rhs.coeffs[k]))
                .collect(),
        )
    }

    fn cauchy(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![S::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    /// Long division; needs an invertible constant term in `rhs`.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        let inv0 = rhs.coeffs[0].inv().ok_or(Error::DivisionByNonunit)?;
        let order = self.order().min(rhs.order());
        let mut q: Vec<S> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc = acc.sub(&rhs.coeffs[k].mul(&q[n - k]));
            }
            q.push(acc.mul(&inv0));
        }
        Ok(Self::new(q))
    }

    /// `1/self`.
    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).checked_div(self)
    }

    /// `exp(self)` for a series with zero constant term, via
    /// `n·g_n = Σ_{k=1..n} k·a_k·g_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm {
                op: "exp",
                expected: "0",
            });
        }
        let order = self.order();
        let mut g: Vec<S> = Vec::with_capacity(order + 1);
        g.push(S::one());
        for n in 1..=order {
            let mut acc = S::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[k].scale_int(k as i64).mul(&g[n - k]));
            }
            g.push(acc.mul(&S::from_int(n as i64).inv().expect("n >= 1")));
        }
        Ok(Self::new(g))
    }

    /// `log(self)` for a series with constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm {
                op: "log",
                expected: "1",
            });
        }
        let order = self.order();
        let mut l: Vec<S> = Vec::with_capacity(order + 1);
        l.push(S::zero());
        for n in 1..=order {
            // n·a_n = Σ_{k=1..n} k·l_k·a_{n-k}
            let mut acc = self.coeffs[n].scale_int(n as i64);
            for (k, lk) in l.iter().enumerate().skip(1) {
                acc = acc.sub(&lk.scale_int(k as i64).mul(&self.coeffs[n - k]));
            }
            l.push(acc.mul(&S::from_int(n as i64).inv().expect("n >= 1")));
        }
        Ok(Self::new(l))
    }

    /// Formal derivative; order drops by one (order 0 gives the zero series of order 0).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale_int(k as i64))
                .collect(),
        )
    }

    /// Antiderivative vanishing at 0; order rises by one.
    pub fn integral(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(S::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            out.push(c.mul(&S::from_int(k as i64 + 1).inv().expect("k+1 >= 1")));
        }
        Self::new(out)
    }

    /// Multiplication by `z`; order rises by one.
    pub fn shift_up(&self) -> Self {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(S::zero());
        out.extend(self.coeffs.iter().cloned());
        Self::new(out)
    }

    /// Division by `z`; needs a zero constant term and order ≥ 1, order drops by one.
    pub fn shift_down(&self) -> Result<Self> {
        if !self.coeffs[0].is_negligible() {
            return Err(Error::BadConstantTerm {
                op: "shift_down",
                expected: "0",
            });
        }
        if self.order() == 0 {
            return Err(Error::InsufficientOrder {
                needed: 1,
                available: 0,
            });
        }
        Ok(Self::new(self.coeffs[1..].to_vec()))
    }

    /// `self(inner(z))` by Horner's scheme; `inner` must vanish at 0.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionAtNonzero);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::monomial(0, self.coeffs[order].clone(), order);
        for j in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[j]);
        }
        Ok(acc)
    }

    /// Evaluates the known coefficients as a polynomial at `z` (float).
    pub fn eval_f64(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| {
                acc * z + c.to_complex64()
            })
    }
}

/// `({ω¹}_n, …, {ωⁿ}_n)`: coefficient `n` of each power of `ω`.
pub fn power_coefficients<S: Scalar>(omega: &TruncatedSeries<S>, n: usize) -> Result<Vec<S>> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "power_coefficients needs n >= 1".into(),
        ));
    }
    if !omega.constant().is_zero() {
        return Err(Error::CompositionAtNonzero);
    }
    if omega.order() < n {
        return Err(Error::InsufficientOrder {
            needed: n,
            available: omega.order(),
        });
    }
    let base = omega.truncate(n);
    let mut power = base.clone();
    let mut row = Vec::with_capacity(n);
    row.push(power.coeff(n).clone());
    for _ in 2..=n {
        power = &power * &base;
        row.push(power.coeff(n).clone());
    }
    Ok(row)
}

impl<S: Scalar> Add for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn add(self, rhs: Self) -> TruncatedSeries<S> {
        self.zip_with(rhs, S::add)
    }
}

impl<S: Scalar> Sub for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn sub(self, rhs: Self) -> TruncatedSeries<S> {
        self.zip_with(rhs, S::sub)
    }
}

impl<S: Scalar> Mul for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn mul(self, rhs: Self) -> TruncatedSeries<S> {
        self.cauchy(rhs)
    }
}

impl<S: Scalar> Neg for &TruncatedSeries<S> {
    type Output = TruncatedSeries<S>;

    fn neg(self) -> TruncatedSeries<S> {
        self.map(S::neg)
    }
}
