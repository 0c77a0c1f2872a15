//! Browser bindings. Each export takes plain strings and numbers and
//! returns a JSON document; `www/index.html` renders them.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use krzyz_core::bounds::{reproduce_worked_example, sample_sweep, SweepConfig};
use krzyz_core::caratheodory::{extension_minors, h_closed_form};
use krzyz_core::majorant::{bound_horizon, normalized_coeffs};
use krzyz_core::scalar::parse_rational;
use krzyz_core::schur::DEFAULT_DENOMINATOR_BOUND;
use krzyz_core::{GaussianRational, Mode, Scalar};

/// Largest `n` accepted by [`majorant_json`]; minors grow fast.
pub const MAX_N: usize = 24;
pub const MAX_SAMPLES: usize = 5000;

#[derive(Serialize)]
struct MajorantView {
    t: String,
    horizon: usize,
    boundary: bool,
    bound: f64,
    coefficients: Vec<String>,
    segment: Vec<String>,
    minors: Vec<String>,
    /// Minors as floats, for plotting; the exact values are in `minors`.
    minors_f64: Vec<f64>,
    classification: String,
    index: Option<usize>,
}

#[derive(Serialize)]
struct SweepView {
    t: String,
    horizon: usize,
    bound: f64,
    samples: usize,
    failures: usize,
    /// Per sample, the largest `|{f}_n|²` over `n ≤ N(t)`.
    max_sq_modulus: Vec<f64>,
    /// Per index `n`, the largest `|{f}_n|²` over all samples.
    max_by_index: Vec<f64>,
}

#[derive(Serialize)]
struct StageView {
    id: String,
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct ExampleView {
    passed: bool,
    stages: Vec<StageView>,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("views serialize")
}

pub fn majorant_json(t: &str, n: usize) -> Result<String, String> {
    let t = parse_rational(t).map_err(|e| e.to_string())?;
    if n == 0 || n > MAX_N {
        return Err(format!("n must be between 1 and {MAX_N}"));
    }
    let horizon = bound_horizon(&t).map_err(|e| e.to_string())?;
    let f = normalized_coeffs::<GaussianRational>(&t, n).map_err(|e| e.to_string())?;
    let segment = h_closed_form(&t, n - 1).map_err(|e| e.to_string())?;
    let report = extension_minors(&t, n).map_err(|e| e.to_string())?;
    let view = MajorantView {
        t: t.to_string(),
        horizon: horizon.horizon,
        boundary: horizon.boundary,
        bound: horizon.bound,
        coefficients: f.coeffs()[1..].iter().map(|c| c.to_string()).collect(),
        segment: segment.coeffs.iter().map(|c| c.to_string()).collect(),
        minors: report.minors.iter().map(|m| m.to_string()).collect(),
        minors_f64: report
            .minors
            .iter()
            .map(|m| GaussianRational::real(m.clone()).to_complex64().re)
            .collect(),
        classification: report.classification.label().into(),
        index: report.classification.index(),
    };
    Ok(to_json(&view))
}

pub fn sweep_json(t: &str, samples: usize, degree: usize, seed: u64) -> Result<String, String> {
    let t = parse_rational(t).map_err(|e| e.to_string())?;
    if samples > MAX_SAMPLES {
        return Err(format!("at most {MAX_SAMPLES} samples"));
    }
    let horizon = bound_horizon(&t).map_err(|e| e.to_string())?;
    let cfg = SweepConfig {
        t: t.clone(),
        samples,
        seed_base: seed,
        degrees: degree..=degree,
        denominator_bound: DEFAULT_DENOMINATOR_BOUND,
        mode: Mode::Exact,
    };
    let sweep = sample_sweep(&cfg).map_err(|e| e.to_string())?;
    let mut max_by_index = vec![0.0f64; horizon.horizon];
    let mut max_sq_modulus = Vec::with_capacity(sweep.len());
    for s in &sweep {
        let mut m = 0.0f64;
        for r in &s.result.rows {
            let v = r.normalized_sq_modulus.to_f64();
            m = m.max(v);
            max_by_index[r.n - 1] = max_by_index[r.n - 1].max(v);
        }
        max_sq_modulus.push(m);
    }
    let view = SweepView {
        t: t.to_string(),
        horizon: horizon.horizon,
        bound: horizon.bound,
        samples,
        failures: sweep.iter().filter(|s| !s.result.passed()).count(),
        max_sq_modulus,
        max_by_index,
    };
    Ok(to_json(&view))
}

pub fn example_json() -> Result<String, String> {
    let w = reproduce_worked_example().map_err(|e| e.to_string())?;
    let view = ExampleView {
        passed: w.passed(),
        stages: w
            .stages
            .iter()
            .map(|s| StageView {
                id: s.id.to_string(),
                name: s.name.into(),
                passed: s.passed,
                detail: s.detail.clone(),
            })
            .collect(),
    };
    Ok(to_json(&view))
}

/// Normalized coefficients, Carathéodory segment and Toeplitz minors.
#[wasm_bindgen(js_name = majorant)]
pub fn majorant(t: &str, n: u32) -> Result<String, JsError> {
    majorant_json(t, n as usize).map_err(|e| JsError::new(&e))
}

/// Exact bound check over seeded Blaschke products.
#[wasm_bindgen(js_name = boundSweep)]
pub fn bound_sweep(t: &str, samples: u32, degree: u32, seed: u32) -> Result<String, JsError> {
    sweep_json(t, samples as usize, degree as usize, seed as u64).map_err(|e| JsError::new(&e))
}

/// The degenerate extension at `t = 1/2`.
#[wasm_bindgen(js_name = workedExample)]
pub fn worked_example() -> Result<String, JsError> {
    example_json().map_err(|e| JsError::new(&e))
}
