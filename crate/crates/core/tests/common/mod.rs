#![allow(dead_code)]

pub mod checks;

use krzyz_core::schur::{BlaschkeProduct, SchurParameters};
use krzyz_core::{GaussianRational, Scalar, TruncatedSeries};
use proptest::prelude::*;

pub type G = GaussianRational;
pub type Series = TruncatedSeries<G>;

pub const CASES: u32 = 200;
pub const MIN_ORDER: usize = 8;

pub fn gaussian() -> impl Strategy<Value = G> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_map(|(a, b, c, d)| G::new(G::ratio(a, b).re, G::ratio(c, d).re))
}

/// A point of the open unit disk with small denominators.
pub fn disk_point() -> impl Strategy<Value = G> {
    (-7i64..=7, -7i64..=7, 2i64..=8)
        .prop_filter("inside the disk", |&(p, r, q)| p * p + r * r < q * q)
        .prop_map(|(p, r, q)| G::new(G::ratio(p, q).re, G::ratio(r, q).re))
}

pub fn unimodular() -> impl Strategy<Value = G> {
    prop_oneof![
        Just(G::from_int(1)),
        Just(G::from_int(-1)),
        Just(G::i()),
        Just(G::i().neg()),
        Just(G::new(G::ratio(3, 5).re, G::ratio(4, 5).re)),
        Just(G::new(G::ratio(-5, 13).re, G::ratio(12, 13).re)),
    ]
}

pub fn series(order: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(gaussian(), order + 1).prop_map(Series::new)
}

pub fn any_series() -> impl Strategy<Value = Series> {
    (MIN_ORDER..=MIN_ORDER + 2).prop_flat_map(series)
}

pub fn with_constant(order: usize, c: i64) -> impl Strategy<Value = Series> {
    series(order).prop_map(move |s| s.with_constant(G::from_int(c)))
}

pub fn schur_params(degenerate: bool) -> impl Strategy<Value = SchurParameters<G>> {
    (
        prop::collection::vec(
            disk_point(),
            if degenerate {
                1..=5
            } else {
                MIN_ORDER..=MIN_ORDER + 1
            },
        ),
        unimodular(),
    )
        .prop_map(move |(mut gammas, last)| {
            let degeneracy = degenerate.then(|| {
                gammas.push(last);
                gammas.len() - 1
            });
            SchurParameters {
                gammas,
                degeneracy,
                approximate: false,
            }
        })
}

pub fn blaschke() -> impl Strategy<Value = BlaschkeProduct> {
    (
        1usize..=2,
        prop::collection::vec(disk_point(), 0..=3),
        unimodular(),
    )
        .prop_map(|(zero_order, zeros, unimodular)| BlaschkeProduct {
            zero_order,
            zeros,
            unimodular,
        })
}
