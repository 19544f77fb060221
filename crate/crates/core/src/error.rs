use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("element bound exceeded: closure passed {bound} elements")]
    BoundExceeded { bound: usize },
    #[error("lattice bound exceeded: group order {order} > max-lattice-order {bound}")]
    LatticeBoundExceeded { order: usize, bound: usize },
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("group axiom violated ({law}) at indices ({i}, {j}, {k})")]
    AxiomViolation {
        law: &'static str,
        i: usize,
        j: usize,
        k: usize,
    },
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("subgroup of size {subgroup} is not normal in group of order {order}")]
    NotNormal { subgroup: usize, order: usize },
    #[error("not a subgroup: member set of size {size} is not closed")]
    NotASubgroup { size: usize },
    #[error("unknown group family: {0}")]
    UnknownFamily(String),
    #[error("invalid parameters for family {family}: {reason}")]
    InvalidParams { family: String, reason: String },
    #[error("{p} is not a prime divisor of group order {order}")]
    NotAPrimeDivisor { p: u64, order: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(&'static str),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("duplicate catalog id: {0}")]
    DuplicateId(String),
    #[error("catalog entry {id}: constructed order {actual} does not match expected_order {expected}")]
    OrderMismatch {
        id: String,
        actual: usize,
        expected: usize,
    },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, GroupError>;

impl GroupError {
    /// Exit code the CLI maps this error to (1 = usage/parse, 3 = resource bound).
    pub fn exit_code(&self) -> i32 {
        match self {
            GroupError::BoundExceeded { .. } | GroupError::LatticeBoundExceeded { .. } => 3,
            _ => 1,
        }
    }
}
