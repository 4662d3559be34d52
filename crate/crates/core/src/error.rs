use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid characteristic: {0}")]
    InvalidCharacteristic(String),

    #[error("variable index {index} out of range for a ring with {arity} variables")]
    VariableOutOfRange { index: usize, arity: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("malformed coefficient: {0}")]
    MalformedCoefficient(String),

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("characteristic 3 excluded")]
    CharacteristicThree,

    #[error("not a cubic: {0}")]
    NotCubic(String),

    #[error("not smooth: {0}")]
    NotSmooth(String),

    #[error("bad reduction at p = {0}")]
    BadReduction(u64),

    #[error("improper ideal: 1 lies in the ideal")]
    ImproperIdeal,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("claim failed: {0}")]
    ClaimFailed(String),

    #[error("malformed curve file: {0}")]
    CurveFile(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExhausted(_))
    }
}
