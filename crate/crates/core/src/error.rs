use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("bad shape: {0}")]
    BadShape(String),

    #[error("products of radical generators span a space of dimension {rank}, but a = {declared}")]
    SpanDeficient { rank: usize, declared: usize },

    #[error("element lies outside the radical J")]
    GeneratorNotInRadical,

    #[error("relation space is not contained in J*F (presentation is not minimal)")]
    NotMinimal,

    #[error("subspace is not closed under the algebra action")]
    NotSubmodule,

    #[error("module has Loewy length greater than 2")]
    NotLoewy2,

    #[error("action matrices do not satisfy the structure constants: {0}")]
    InvalidAction(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("dim(Omega M) - omega*dim(M) = ({0}, {1}) is not of the form (w, -w) with w >= 0")]
    ShapeViolation(i64, i64),

    #[error("main-lemma defect w = {w} exceeds the number of simple summands {simple} of Omega M")]
    SummandViolation { w: u64, simple: u64 },

    #[error("alignedness conditions disagree: {0}")]
    ConditionDisagreement(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("unknown module `{module}` for preset `{preset}`")]
    UnknownModule { preset: String, module: String },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("exhaustive search needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("dimension cap {cap} reached")]
    DimensionCap { cap: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::AmbientMismatch { .. } => "ambient_mismatch",
            Error::BadShape(_) => "bad_shape",
            Error::SpanDeficient { .. } => "span_deficient",
            Error::GeneratorNotInRadical => "generator_not_in_radical",
            Error::NotMinimal => "not_minimal",
            Error::NotSubmodule => "not_submodule",
            Error::NotLoewy2 => "not_loewy2",
            Error::InvalidAction(_) => "invalid_action",
            Error::AlgebraMismatch => "algebra_mismatch",
            Error::ShapeViolation(..) => "shape_violation",
            Error::SummandViolation { .. } => "summand_violation",
            Error::ConditionDisagreement(_) => "condition_disagreement",
            Error::HypothesisViolated(_) => "hypothesis_violated",
            Error::UnknownPreset(_) => "unknown_preset",
            Error::UnknownModule { .. } => "unknown_module",
            Error::OutOfRange(_) => "out_of_range",
            Error::BudgetExceeded { .. } => "budget_exceeded",
            Error::DimensionCap { .. } => "dimension_cap",
            Error::Input(_) => "input",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}
