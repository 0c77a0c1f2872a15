//! Exact linear algebra: fraction-free determinants over the Gaussian
//! integers and nullspaces over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::GaussianRational;

/// `re + im·i` with integer parts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GaussianInteger {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        Self { re, im }
    }

    pub fn one() -> Self {
        Self::new(BigInt::one(), BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul(&self, o: &Self) -> Self {
        Self::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }

    /// Division known to be exact (Bareiss guarantees it).
    fn div_exact(&self, d: &Self) -> Self {
        let norm = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!(
            (&re % &norm).is_zero() && (&im % &norm).is_zero(),
            "inexact Bareiss step"
        );
        Self::new(re / &norm, im / norm)
    }
}

/// Determinant by Bareiss elimination with row pivoting. Every
/// intermediate entry is a minor of the input, so no fractions appear.
pub fn bareiss_determinant(mut m: Vec<Vec<GaussianInteger>>) -> GaussianInteger {
    let n = m.len();
    if n == 0 {
        return GaussianInteger::one();
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = GaussianInteger::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return GaussianInteger::default(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = GaussianInteger::default();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Exact determinant of a Gaussian-rational matrix: clear denominators,
/// run Bareiss, divide the scale back out.
pub fn determinant(m: &[Vec<GaussianRational>]) -> GaussianRational {
    let n = m.len();
    let lcm = m.iter().flatten().fold(BigInt::one(), |acc, x| {
        acc.lcm(x.re.denom()).lcm(x.im.denom())
    });
    let scaled: Vec<Vec<GaussianInteger>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let re = x.re.numer() * (&lcm / x.re.denom());
                    let im = x.im.numer() * (&lcm / x.im.denom());
                    GaussianInteger::new(re, im)
                })
                .collect()
        })
        .collect();
    let det = bareiss_determinant(scaled);
    let scale = num_traits::pow(lcm, n);
    GaussianRational::new(
        BigRational::new(det.re, scale.clone()),
        BigRational::new(det.im, scale),
    )
}

/// A basis of `{x : A·x = 0}` over the rationals, via reduced row echelon form.
pub fn nullspace(a: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = a.to_vec();
    let rows = m.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); cols];
            v[fc] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][fc].clone();
            }
            v
        })
        .collect()
}
