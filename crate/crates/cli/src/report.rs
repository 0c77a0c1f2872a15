use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Everything one invocation prints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub mode: String,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Coefficients(CoefficientTable),
    Minors(MinorTable),
    Classification(ClassifyVerdict),
    BoundCheck(BoundCheckTable),
    Extremal(ExtremalTable),
    Probe(ProbeTable),
    Example(StageLog),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub n: usize,
    /// `{F}_n` when normalized, otherwise the coefficient of `e^{t}·F*`.
    pub value: String,
    pub approx: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientTable {
    pub normalized: bool,
    /// Factor multiplying every `value`; absent when normalized.
    pub prefactor: Option<String>,
    pub constant: String,
    pub rows: Vec<CoefficientRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinorRow {
    pub k: usize,
    pub minor: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinorTable {
    pub segment: Vec<String>,
    pub classification: String,
    pub index: Option<usize>,
    pub zero_then_nonzero: bool,
    pub rows: Vec<MinorRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyVerdict {
    pub n: usize,
    pub horizon: usize,
    pub extendable: bool,
    pub unique: bool,
    pub classification: String,
    pub index: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheckRow {
    pub seed: u64,
    pub n: usize,
    pub normalized_sq_modulus: String,
    pub margin: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCheckTable {
    pub horizon: usize,
    pub boundary: bool,
    /// `2t·e^{-t}`.
    pub bound: String,
    pub failures: usize,
    pub min_margin: Option<String>,
    pub rows: Vec<BoundCheckRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalRow {
    pub n: usize,
    pub coefficient: String,
    pub normalized_sq_modulus: String,
    pub margin: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalTable {
    pub n: usize,
    pub lambda: String,
    pub horizon: usize,
    pub equality_at_n: bool,
    pub vanishes_off_support: bool,
    pub multiples_match: bool,
    pub passed: bool,
    pub rows: Vec<ExtremalRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeRow {
    pub n: usize,
    pub normalized_sq_modulus: String,
    pub under_conjectural_line: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeTable {
    pub label: String,
    pub horizon: usize,
    pub zero_order: usize,
    pub zeros: Vec<String>,
    pub unimodular: String,
    pub conjectural_line_sq: String,
    pub rows: Vec<ProbeRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageRow {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageLog {
    pub passed: bool,
    pub stages: Vec<StageRow>,
}

/// A flat view for csv and table output.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

impl Payload {
    /// `Some(false)` for a failed verdict; `None` when the command has none.
    pub fn verdict(&self) -> Option<bool> {
        match self {
            Payload::BoundCheck(b) => Some(b.failures == 0),
            Payload::Extremal(e) => Some(e.passed),
            Payload::Example(s) => Some(s.passed),
            _ => None,
        }
    }

    pub fn summary(&self) -> Vec<(&'static str, String)> {
        match self {
            Payload::Coefficients(c) => vec![
                ("normalized", c.normalized.to_string()),
                ("prefactor", opt(&c.prefactor)),
                ("constant", c.constant.clone()),
            ],
            Payload::Minors(m) => vec![
                ("segment", m.segment.join(", ")),
                ("classification", m.classification.clone()),
                ("index", opt(&m.index)),
                ("zero_then_nonzero", m.zero_then_nonzero.to_string()),
            ],
            Payload::Classification(_) => Vec::new(),
            Payload::BoundCheck(b) => vec![
                ("horizon", b.horizon.to_string()),
                ("boundary", b.boundary.to_string()),
                ("bound", b.bound.clone()),
                ("failures", b.failures.to_string()),
                ("min_margin", opt(&b.min_margin)),
            ],
            Payload::Extremal(e) => vec![
                ("lambda", e.lambda.clone()),
                ("horizon", e.horizon.to_string()),
                ("equality_at_n", e.equality_at_n.to_string()),
                ("vanishes_off_support", e.vanishes_off_support.to_string()),
                ("multiples_match", e.multiples_match.to_string()),
                ("passed", e.passed.to_string()),
            ],
            Payload::Probe(p) => vec![
                ("label", p.label.clone()),
                ("horizon", p.horizon.to_string()),
                ("zero_order", p.zero_order.to_string()),
                ("zeros", p.zeros.join(", ")),
                ("unimodular", p.unimodular.clone()),
                ("conjectural_line_sq", p.conjectural_line_sq.clone()),
            ],
            Payload::Example(s) => vec![("passed", s.passed.to_string())],
        }
    }

    pub fn table(&self) -> Table {
        match self {
            Payload::Coefficients(c) => Table {
                header: vec!["n", "value", "approx"],
                rows: c
                    .rows
                    .iter()
                    .map(|r| vec![r.n.to_string(), r.value.clone(), opt(&r.approx)])
                    .collect(),
            },
            Payload::Minors(m) => Table {
                header: vec!["k", "minor"],
                rows: m
                    .rows
                    .iter()
                    .map(|r| vec![r.k.to_string(), r.minor.clone()])
                    .collect(),
            },
            Payload::Classification(c) => Table {
                header: vec![
                    "n",
                    "horizon",
                    "extendable",
                    "unique",
                    "classification",
                    "index",
                ],
                rows: vec![vec![
                    c.n.to_string(),
                    c.horizon.to_string(),
                    c.extendable.to_string(),
                    c.unique.to_string(),
                    c.classification.clone(),
                    opt(&c.index),
                ]],
            },
            Payload::BoundCheck(b) => Table {
                header: vec!["seed", "n", "normalized_sq_modulus", "margin", "pass"],
                rows: b
                    .rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.seed.to_string(),
                            r.n.to_string(),
                            r.normalized_sq_modulus.clone(),
                            r.margin.clone(),
                            r.pass.to_string(),
                        ]
                    })
                    .collect(),
            },
            Payload::Extremal(e) => Table {
                header: vec![
                    "n",
                    "coefficient",
                    "normalized_sq_modulus",
                    "margin",
                    "pass",
                ],
                rows: e
                    .rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.n.to_string(),
                            r.coefficient.clone(),
                            r.normalized_sq_modulus.clone(),
                            r.margin.clone(),
                            r.pass.to_string(),
                        ]
                    })
                    .collect(),
            },
            Payload::Probe(p) => Table {
                header: vec!["n", "normalized_sq_modulus", "under_conjectural_line"],
                rows: p
                    .rows
                    .iter()
                    .map(|r| {
                        vec![
                            r.n.to_string(),
                            r.normalized_sq_modulus.clone(),
                            r.under_conjectural_line.to_string(),
                        ]
                    })
                    .collect(),
            },
            Payload::Example(s) => Table {
                header: vec!["stage", "name", "passed", "detail"],
                rows: s
                    .stages
                    .iter()
                    .map(|r| {
                        vec![
                            r.id.clone(),
                            r.name.clone(),
                            r.passed.to_string(),
                            r.detail.clone(),
                        ]
                    })
                    .collect(),
            },
        }
    }
}
