//! Property bodies shared by the proptest suite and the acceptance gate.

use super::*;
use krzyz_core::bounds::subordination_coeffs;
use krzyz_core::caratheodory::{caratheodory_to_convex, convex_to_caratheodory};
use krzyz_core::schur::{
    blaschke_series, cayley, reconstruct_inner, schur_parameters, schur_synthesis, CayleyDirection,
};
use krzyz_core::series::power_coefficients;
use proptest::test_runner::{Config, TestError, TestRunner};

pub type Check = fn(&mut TestRunner) -> Result<(), TestError<String>>;

pub fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn debug<T: std::fmt::Debug>(e: TestError<T>) -> TestError<String> {
    match e {
        TestError::Abort(r) => TestError::Abort(r),
        TestError::Fail(r, v) => TestError::Fail(r, format!("{v:?}")),
    }
}

pub fn ring_axioms(r: &mut TestRunner) -> Result<(), TestError<String>> {
    let strat = (MIN_ORDER..=MIN_ORDER + 2).prop_flat_map(|n| (series(n), series(n), series(n)));
    r.run(&strat, |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &Series::one(a.order()), a.clone());
        prop_assert_eq!(&a + &(-&a), Series::zero(a.order()));
        Ok(())
    })
    .map_err(debug)
}

pub fn truncation_takes_min_order(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(&(series(MIN_ORDER), series(MIN_ORDER + 3)), |(a, b)| {
        prop_assert_eq!((&a * &b).order(), MIN_ORDER);
        prop_assert_eq!(&a * &b, &a * &b.truncate(MIN_ORDER));
        Ok(())
    })
    .map_err(debug)
}

pub fn division_inverts_multiplication(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(
        &(series(MIN_ORDER), with_constant(MIN_ORDER, 1)),
        |(a, b)| {
            prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
            Ok(())
        },
    )
    .map_err(debug)
}

pub fn exp_log_round_trip(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(
        &(with_constant(MIN_ORDER, 0), with_constant(MIN_ORDER, 1)),
        |(a, b)| {
            prop_assert_eq!(a.exp().unwrap().log().unwrap(), a);
            prop_assert_eq!(b.log().unwrap().exp().unwrap(), b);
            Ok(())
        },
    )
    .map_err(debug)
}

pub fn exp_is_a_homomorphism(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(
        &(with_constant(MIN_ORDER, 0), with_constant(MIN_ORDER, 0)),
        |(a, b)| {
            prop_assert_eq!(
                (&a + &b).exp().unwrap(),
                &a.exp().unwrap() * &b.exp().unwrap()
            );
            Ok(())
        },
    )
    .map_err(debug)
}

pub fn composition_is_associative(r: &mut TestRunner) -> Result<(), TestError<String>> {
    let strat = (
        series(MIN_ORDER),
        with_constant(MIN_ORDER, 0),
        with_constant(MIN_ORDER, 0),
    );
    r.run(&strat, |(f, g, h)| {
        let left = f.compose(&g).unwrap().compose(&h).unwrap();
        let right = f.compose(&g.compose(&h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        Ok(())
    })
    .map_err(debug)
}

pub fn power_assembly_matches_composition(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(
        &(series(MIN_ORDER), with_constant(MIN_ORDER, 0)),
        |(g, w)| {
            let direct = g.compose(&w).unwrap();
            let assembled = subordination_coeffs(&g, &w, MIN_ORDER).unwrap();
            prop_assert_eq!(&assembled[..], &direct.coeffs()[1..]);
            Ok(())
        },
    )
    .map_err(debug)
}

pub fn power_coefficients_match_products(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(
        &(with_constant(MIN_ORDER, 0), 1usize..=MIN_ORDER),
        |(w, n)| {
            let row = power_coefficients(&w, n).unwrap();
            let mut power = Series::one(MIN_ORDER);
            for (j, expected) in row.iter().enumerate() {
                power = &power * &w;
                prop_assert_eq!(power.coeff(n), expected, "j = {}", j + 1);
            }
            Ok(())
        },
    )
    .map_err(debug)
}

pub fn cayley_is_an_involution(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(
        &(with_constant(MIN_ORDER, 1), with_constant(MIN_ORDER, 0)),
        |(h, w)| {
            let omega = cayley(&h, CayleyDirection::CToOmega).unwrap();
            prop_assert!(omega.constant().is_zero());
            prop_assert_eq!(cayley(&omega, CayleyDirection::OmegaToC).unwrap(), h);
            let back = cayley(
                &cayley(&w, CayleyDirection::OmegaToC).unwrap(),
                CayleyDirection::CToOmega,
            )
            .unwrap();
            prop_assert_eq!(back, w);
            Ok(())
        },
    )
    .map_err(debug)
}

pub fn caratheodory_round_trip(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(&series(MIN_ORDER), |f| {
        let mut c = f.into_coeffs();
        c[0] = G::zero();
        c[1] = G::one();
        let f = Series::new(c);
        let h = convex_to_caratheodory(&f).unwrap();
        prop_assert_eq!(caratheodory_to_convex(&h).unwrap(), f);
        Ok(())
    })
    .map_err(debug)
}

pub fn schur_round_trip_nondegenerate(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(&schur_params(false), |params| {
        let omega = schur_synthesis(&params, params.gammas.len()).unwrap();
        prop_assert!(omega.order() >= MIN_ORDER);
        prop_assert_eq!(schur_parameters(&omega).unwrap(), params);
        Ok(())
    })
    .map_err(debug)
}

pub fn schur_round_trip_degenerate(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(&schur_params(true), |params| {
        let omega = schur_synthesis(&params, MIN_ORDER).unwrap();
        prop_assert_eq!(schur_parameters(&omega).unwrap(), params);
        Ok(())
    })
    .map_err(debug)
}

pub fn blaschke_synthesis_round_trip(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(&blaschke(), |b| {
        let omega = blaschke_series(&b, MIN_ORDER).unwrap();
        let params = schur_parameters(&omega).unwrap();
        prop_assert_eq!(params.degeneracy, Some(b.schur_degree()));
        prop_assert_eq!(schur_synthesis(&params, MIN_ORDER).unwrap(), omega);
        Ok(())
    })
    .map_err(debug)
}

pub fn reconstruction_reexpands(r: &mut TestRunner) -> Result<(), TestError<String>> {
    r.run(&blaschke(), |b| {
        let d = b.schur_degree() + 1;
        let omega = blaschke_series(&b, (2 * d + 2).max(MIN_ORDER)).unwrap();
        let rec = reconstruct_inner(&omega, d).unwrap();
        prop_assert_eq!(rec.inner.series(omega.order()).unwrap(), omega);
        prop_assert!(rec.lambda.squared_modulus().is_exactly(1));
        Ok(())
    })
    .map_err(debug)
}

/// The suites named by the acceptance gate, grouped by family.
pub const SUITES: &[(&str, &[(&str, Check)])] = &[
    (
        "series ring axioms",
        &[
            ("ring_axioms", ring_axioms),
            ("truncation_takes_min_order", truncation_takes_min_order),
            (
                "division_inverts_multiplication",
                division_inverts_multiplication,
            ),
        ],
    ),
    (
        "exp/log round trip",
        &[
            ("exp_log_round_trip", exp_log_round_trip),
            ("exp_is_a_homomorphism", exp_is_a_homomorphism),
        ],
    ),
    (
        "Cayley round trip",
        &[
            ("cayley_is_an_involution", cayley_is_an_involution),
            ("caratheodory_round_trip", caratheodory_round_trip),
        ],
    ),
    (
        "Schur parameters/synthesis round trip",
        &[
            (
                "schur_round_trip_nondegenerate",
                schur_round_trip_nondegenerate,
            ),
            ("schur_round_trip_degenerate", schur_round_trip_degenerate),
            (
                "blaschke_synthesis_round_trip",
                blaschke_synthesis_round_trip,
            ),
            ("reconstruction_reexpands", reconstruction_reexpands),
        ],
    ),
    (
        "power assembly vs composition",
        &[
            (
                "power_assembly_matches_composition",
                power_assembly_matches_composition,
            ),
            (
                "power_coefficients_match_products",
                power_coefficients_match_products,
            ),
            ("composition_is_associative", composition_is_associative),
        ],
    ),
];
