use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a series whose constant term is not a unit")]
    DivisionByNonunit,
    #[error("{op}: constant term must be {expected}")]
    BadConstantTerm {
        op: &'static str,
        expected: &'static str,
    },
    #[error("composition requires the inner series to vanish at 0")]
    CompositionAtNonzero,
    #[error("series order {available} is too small, need at least {needed}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("parameter t must be positive, got {0}")]
    NonpositiveParameter(String),
    #[error(
        "rotation angle {0} is not a quarter turn; exact mode needs e^(i phi) in {{1, -1, i, -i}}"
    )]
    NonrationalRotationInExactMode(f64),
    #[error("series is not normalized as f(0)=0, f'(0)=1")]
    BadNormalization,
    #[error("Caratheodory segment is empty")]
    EmptySegment,
    #[error(
        "Schur parameter {index} lies outside the closed unit disk; input is not bounded by 1"
    )]
    NotInOmega { index: usize },
    #[error("invalid Schur parameters: {0}")]
    InvalidParameters(String),
    #[error("inner-function matching system has no admissible solution")]
    SingularSystem,
    #[error("inner-function matching system leaves {dimension} free directions after scaling")]
    RankDeficient { dimension: usize },
    #[error("Blaschke zero {0} is not inside the unit disk")]
    ZeroOutsideDisk(String),
    #[error("index {n} is beyond the horizon N(t) = {horizon}")]
    BeyondHorizon { n: usize, horizon: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
