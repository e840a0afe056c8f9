use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed group spec `{spec}`: {reason}")]
    MalformedSpec { spec: String, reason: String },

    #[error("unknown catalog group `{0}`")]
    UnknownCatalogName(String),

    #[error("{what} needs at least {needed} elements, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: usize,
    },

    #[error("not a subgroup of the ambient group")]
    NotASubgroup,

    #[error("generator images do not define a homomorphism")]
    NotAHomomorphism,

    #[error("operands live over different groups")]
    GroupMismatch,

    #[error("stabilizer class not found in the conjugacy class table")]
    ClassNotFound,

    #[error("marks vector is not the character of a virtual set (non-integral coordinate)")]
    NotInImage,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("singular linear system")]
    Singular,

    #[error("json: {0}")]
    Json(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
