use thiserror::Error;

/// Errors raised by the algebra, the validators and the report pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,

    #[error("division by zero in cyclotomic field")]
    DivisionByZero,

    #[error("a group needs at least one cyclic factor")]
    EmptyGroup,

    #[error("cyclic factor {index} has order 0")]
    ZeroFactor { index: usize },

    #[error("group {0} exceeds the supported order")]
    GroupTooLarge(String),

    #[error("exponent tuple {exponents:?} does not fit the group {orders:?}")]
    BadExponents {
        exponents: Vec<usize>,
        orders: Vec<usize>,
    },

    #[error("operands live over different groups: {left:?} vs {right:?}")]
    GroupMismatch {
        left: Vec<usize>,
        right: Vec<usize>,
    },

    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("semisimple input: the augmentation of c is 1")]
    SemisimpleInput,

    #[error("invalid multiplicity: coefficient {coeff} at {exponents:?} is negative")]
    InvalidMultiplicity { exponents: Vec<usize>, coeff: String },

    #[error("missing trivial factor: the coefficient of the identity in c is 0")]
    MissingTrivialFactor,

    #[error("uq_sl2 needs n >= 2, got {0}")]
    BadRootOrder(usize),

    #[error("structure constant overflow while building the table")]
    TableOverflow,

    #[error("table not associative: (e{0}*e{1})*e{2} differs")]
    NotAssociative(usize, usize, usize),

    #[error("invalid input at {pointer}: {message}")]
    Schema { pointer: String, message: String },
}

impl Error {
    /// Short stable name of the violated invariant, used in structured error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::SemisimpleInput => "semisimple input",
            Error::InvalidMultiplicity { .. } => "invalid multiplicity",
            Error::MissingTrivialFactor => "missing trivial factor",
            Error::DivisionByZero => "division by zero",
            Error::NotAssociative(..) => "table not associative",
            Error::Schema { .. } => "schema",
            _ => "invalid argument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
