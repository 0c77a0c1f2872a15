//! Exact power-series machinery for sharp Taylor-coefficient bounds of
//! bounded nonvanishing functions on the unit disk.
//!
//! Functions `f` with `0 < |f| < 1` and `f(0) = e^{-t}` are exactly the
//! subordinates `f = F*(ω(z), t)` of `F*(z,t) = exp(-t(1+z)/(1-z))`, with
//! `ω` a self-map of the disk fixing 0. For `n ≤ 2/t + 1` the bound
//! `|{f}_n| ≤ 2t/e^t` is sharp; this crate computes every ingredient of
//! that statement exactly and checks it.

pub mod bounds;
pub mod caratheodory;
pub mod error;
pub mod linalg;
pub mod majorant;
pub mod poly;
pub mod scalar;
pub mod schur;
pub mod series;

pub use error::{Error, Result};
pub use scalar::{GaussianRational, Mode, Scalar};
pub use series::TruncatedSeries;
