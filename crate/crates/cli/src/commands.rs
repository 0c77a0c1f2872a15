use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI};

use clap::{Parser, Subcommand};
use num_rational::BigRational;

use krzyz_core::bounds::{
    extremal_equality, probe_beyond, reproduce_worked_example, sample_sweep, SweepConfig,
};
use krzyz_core::caratheodory::{extension_minors, extension_verdict, h_closed_form};
use krzyz_core::majorant::{bound_horizon, fstar_coeffs, normalized_coeffs};
use krzyz_core::scalar::{format_f64, parse_rational};
use krzyz_core::schur::{blaschke_series, sample_omega, DEFAULT_DENOMINATOR_BOUND};
use krzyz_core::{GaussianRational, Mode, Result, Scalar};

use crate::emit::Format;
use crate::report::*;

/// Number of zeros used for `probe --omega-seed`.
pub const PROBE_DEGREE: usize = 4;

#[derive(Debug, Parser)]
#[command(
    name = "krzyz",
    version,
    about = "Exact coefficient checks for the Krzyz majorant family"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn parse_t(s: &str) -> std::result::Result<BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_phi(s: &str) -> std::result::Result<f64, String> {
    match s {
        "0" => Ok(0.0),
        "pi" => Ok(PI),
        "pi/2" => Ok(FRAC_PI_2),
        "-pi/2" => Ok(-FRAC_PI_2),
        _ => Err(format!(
            "'{s}' is not a quarter turn; expected 0, pi, pi/2 or -pi/2"
        )),
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Taylor coefficients of F*(z, t), or of F = F*/{F*}_1 with --normalized.
    Coeffs {
        #[arg(long, value_parser = parse_t)]
        t: BigRational,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        normalized: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Toeplitz minors of the degree-n segment of F(z, t).
    Minors {
        #[arg(long, value_parser = parse_t)]
        t: BigRational,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Whether the degree-n segment extends to a convex map, and uniquely.
    Classify {
        #[arg(long, value_parser = parse_t)]
        t: BigRational,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// |{F(ω)}_n|² ≤ 1 for n ≤ N(t) over seeded Blaschke products ω.
    BoundCheck {
        #[arg(long, value_parser = parse_t)]
        t: BigRational,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Number of finite zeros of each product.
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Equality for F*(e^{iφ} z^n, t).
    Extremal {
        #[arg(long, value_parser = parse_t)]
        t: BigRational,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_phi, default_value = "0", allow_hyphen_values = true)]
        phi: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Coefficients beyond N(t) against the conjectural line; no verdict.
    Probe {
        #[arg(long, value_parser = parse_t)]
        t: BigRational,
        #[arg(long)]
        omega_seed: u64,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The degenerate extension at t = 1/2, stage by stage.
    #[command(name = "example-krzyz7")]
    ExampleKrzyz7 {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

impl Command {
    pub fn format(&self) -> Format {
        match self {
            Command::Coeffs { format, .. }
            | Command::Minors { format, .. }
            | Command::Classify { format, .. }
            | Command::BoundCheck { format, .. }
            | Command::Extremal { format, .. }
            | Command::Probe { format, .. }
            | Command::ExampleKrzyz7 { format } => *format,
        }
    }
}

fn inputs<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn report(command: &str, inputs: BTreeMap<String, String>, mode: Mode, payload: Payload) -> Report {
    Report {
        command: command.into(),
        inputs,
        mode: mode.as_str().into(),
        payload,
    }
}

fn float(z: num_complex::Complex64) -> String {
    if z.im == 0.0 {
        format_f64(z.re)
    } else {
        format!("{}{:+.16e}i", format_f64(z.re), z.im)
    }
}

pub fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Coeffs {
            t, n, normalized, ..
        } => {
            let ins = inputs([
                ("t", t.to_string()),
                ("n", n.to_string()),
                ("normalized", normalized.to_string()),
            ]);
            let table = if *normalized {
                let f = normalized_coeffs::<GaussianRational>(t, *n)?;
                CoefficientTable {
                    normalized: true,
                    prefactor: None,
                    constant: f.constant().to_string(),
                    rows: (1..=*n)
                        .map(|k| CoefficientRow {
                            n: k,
                            value: f.coeff(k).to_string(),
                            approx: None,
                        })
                        .collect(),
                }
            } else {
                let f = fstar_coeffs::<GaussianRational>(t, *n)?;
                CoefficientTable {
                    normalized: false,
                    prefactor: Some(format!("exp(-{t})")),
                    constant: f.rational_part.constant().to_string(),
                    rows: (1..=*n)
                        .map(|k| CoefficientRow {
                            n: k,
                            value: f.rational_part.coeff(k).to_string(),
                            approx: Some(float(f.value_f64(k))),
                        })
                        .collect(),
                }
            };
            Ok(report(
                "coeffs",
                ins,
                Mode::Exact,
                Payload::Coefficients(table),
            ))
        }
        Command::Minors { t, n, .. } => {
            let r = extension_minors(t, *n)?;
            let segment = h_closed_form(t, n.saturating_sub(1))?;
            let table = MinorTable {
                segment: segment.coeffs.iter().map(|h| h.to_string()).collect(),
                classification: r.classification.label().into(),
                index: r.classification.index(),
                zero_then_nonzero: r.zero_then_nonzero,
                rows: r
                    .minors
                    .iter()
                    .enumerate()
                    .map(|(k, m)| MinorRow {
                        k,
                        minor: m.to_string(),
                    })
                    .collect(),
            };
            Ok(report(
                "minors",
                inputs([("t", t.to_string()), ("n", n.to_string())]),
                Mode::Exact,
                Payload::Minors(table),
            ))
        }
        Command::Classify { t, n, .. } => {
            let verdict = extension_verdict(t, *n)?;
            let minors = extension_minors(t, *n)?;
            let payload = Payload::Classification(ClassifyVerdict {
                n: *n,
                horizon: bound_horizon(t)?.horizon,
                extendable: verdict.extendable,
                unique: verdict.unique,
                classification: minors.classification.label().into(),
                index: minors.classification.index(),
            });
            Ok(report(
                "classify",
                inputs([("t", t.to_string()), ("n", n.to_string())]),
                Mode::Exact,
                payload,
            ))
        }
        Command::BoundCheck {
            t,
            samples,
            degree,
            seed,
            mode,
            ..
        } => {
            let cfg = SweepConfig {
                t: t.clone(),
                samples: *samples,
                seed_base: *seed,
                degrees: *degree..=*degree,
                denominator_bound: DEFAULT_DENOMINATOR_BOUND,
                mode: *mode,
            };
            let horizon = bound_horizon(t)?;
            let sweep = sample_sweep(&cfg)?;
            let rows: Vec<BoundCheckRow> = sweep
                .iter()
                .flat_map(|s| {
                    s.result.rows.iter().map(|r| BoundCheckRow {
                        seed: s.seed,
                        n: r.n,
                        normalized_sq_modulus: r.normalized_sq_modulus.to_string(),
                        margin: r.margin.to_string(),
                        pass: r.pass,
                    })
                })
                .collect();
            let min_margin = sweep
                .iter()
                .flat_map(|s| s.result.rows.iter())
                .min_by(|a, b| a.margin.to_f64().total_cmp(&b.margin.to_f64()))
                .map(|r| r.margin.to_string());
            let table = BoundCheckTable {
                horizon: horizon.horizon,
                boundary: horizon.boundary,
                bound: format_f64(horizon.bound),
                failures: rows.iter().filter(|r| !r.pass).count(),
                min_margin,
                rows,
            };
            let ins = inputs([
                ("t", t.to_string()),
                ("samples", samples.to_string()),
                ("degree", degree.to_string()),
                ("seed", seed.to_string()),
            ]);
            Ok(report(
                "bound-check",
                ins,
                *mode,
                Payload::BoundCheck(table),
            ))
        }
        Command::Extremal { t, n, phi, .. } => {
            let e = extremal_equality::<GaussianRational>(t, *n, *phi)?;
            let lambda = GaussianRational::unimodular(*phi).expect("quarter turn parsed");
            let table = ExtremalTable {
                n: *n,
                lambda: lambda.to_string(),
                horizon: e.result.horizon.horizon,
                equality_at_n: e.equality_at_n,
                vanishes_off_support: e.vanishes_off_support,
                multiples_match: e.multiples_match,
                passed: e.passed(),
                rows: e
                    .result
                    .rows
                    .iter()
                    .map(|r| ExtremalRow {
                        n: r.n,
                        coefficient: r.coefficient.clone(),
                        normalized_sq_modulus: r.normalized_sq_modulus.to_string(),
                        margin: r.margin.to_string(),
                        pass: r.pass,
                    })
                    .collect(),
            };
            let ins = inputs([
                ("t", t.to_string()),
                ("n", n.to_string()),
                ("phi", format_f64(*phi)),
            ]);
            Ok(report(
                "extremal",
                ins,
                Mode::Exact,
                Payload::Extremal(table),
            ))
        }
        Command::Probe {
            t,
            omega_seed,
            from,
            to,
            ..
        } => {
            let product = sample_omega(*omega_seed, PROBE_DEGREE, DEFAULT_DENOMINATOR_BOUND);
            let omega = blaschke_series(&product, *to)?;
            let p = probe_beyond(t, &omega, *from, *to)?;
            let table = ProbeTable {
                label: krzyz_core::bounds::ProbeReport::LABEL.into(),
                horizon: p.horizon.horizon,
                zero_order: product.zero_order,
                zeros: product.zeros.iter().map(|z| z.to_string()).collect(),
                unimodular: product.unimodular.to_string(),
                conjectural_line_sq: format_f64(p.conjectural_line_sq),
                rows: p
                    .rows
                    .iter()
                    .map(|r| ProbeRow {
                        n: r.n,
                        normalized_sq_modulus: r.normalized_sq_modulus.to_string(),
                        under_conjectural_line: r.under_conjectural_line,
                    })
                    .collect(),
            };
            let ins = inputs([
                ("t", t.to_string()),
                ("omega_seed", omega_seed.to_string()),
                ("from", from.to_string()),
                ("to", to.to_string()),
            ]);
            Ok(report("probe", ins, Mode::Exact, Payload::Probe(table)))
        }
        Command::ExampleKrzyz7 { .. } => {
            let w = reproduce_worked_example()?;
            let log = StageLog {
                passed: w.passed(),
                stages: w
                    .stages
                    .iter()
                    .map(|s| StageRow {
                        id: s.id.to_string(),
                        name: s.name.into(),
                        passed: s.passed,
                        detail: s.detail.clone(),
                    })
                    .collect(),
            };
            Ok(report(
                "example-krzyz7",
                BTreeMap::new(),
                Mode::Exact,
                Payload::Example(log),
            ))
        }
    }
}
