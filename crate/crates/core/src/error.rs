use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("elements live over different generator tables")]
    TableMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("odd generator `{0}` cannot be invertible")]
    OddInvertible(String),
    #[error("generator `{0}` is not flagged invertible")]
    NotInvertible(String),
    #[error("parity mismatch at `{0}`")]
    ParityMismatch(String),
    #[error("generator table is full")]
    TableFull,
    #[error("division by zero")]
    DivisionByZero,
    #[error("tensor slot count mismatch ({0} vs {1})")]
    SlotMismatch(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RewriteError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("step budget of {budget} rule applications exceeded while reducing `{word}`")]
    StepBudget { budget: u64, word: String },
    #[error("relation `{0}` has no reducible leading term")]
    NoLeadingTerm(String),
    #[error("rule for `{lhs}` is not parity-homogeneous")]
    RuleParity { lhs: String },
    #[error("two rules for `{0}`")]
    DuplicateRule(String),
    #[error("missing commutation rule between `{0}` and `{1}`")]
    MissingRule(String, String),
    #[error("cannot localize at `{0}`: {1}")]
    Localize(String, String),
    #[error("element is not invertible; residual `{0}`")]
    NotInvertible(String),
    #[error("rule `{lhs}` is not order-decreasing: `{term}`")]
    NotDecreasing { lhs: String, term: String },
}
