use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no value supplied for variable `{0}`")]
    MissingVariable(String),
    #[error("series operands have different variables or windows")]
    WindowMismatch,
    #[error("geometric factor has a constant term; its pole is on the wrong side of the contour")]
    ConstantTermInGeometric,
    #[error("window for `{0}` does not contain the exponent -1")]
    WindowExcludesResidue(String),
    #[error("{what} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("expected {expected} values, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("points {0} and {1} coincide")]
    CoincidentPoints(usize, usize),
    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),
    #[error("invalid alternating sign matrix: {0}")]
    InvalidAsm(String),
    #[error("invalid vertex configuration: {0}")]
    InvalidVertexGrid(String),
    #[error("invalid path bundle: {0}")]
    InvalidNilp(String),
    #[error("invalid TSSCPP: {0}")]
    InvalidTsscpp(String),
    #[error("polynomial is not symmetric in the integration variables")]
    NotSymmetric,
    #[error("coefficient {0} is not a nonnegative integer")]
    NotACount(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
