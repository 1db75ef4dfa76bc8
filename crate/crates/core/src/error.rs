use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group {group} has estimated order {estimated}, above the cap of {cap} elements")]
    SizeLimit {
        group: String,
        estimated: u128,
        cap: usize,
    },

    #[error("invalid Coxeter descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{lower} is not below {upper} in Bruhat order")]
    EmptyInterval { lower: String, upper: String },

    #[error("average of the zero polynomial is undefined")]
    UndefinedAverage,

    #[error("edge height must be at least 1, got {0}")]
    InvalidHeight(u32),

    #[error("unknown specialization mode `{0}`")]
    UnknownMode(String),

    #[error("invalid reduced word: {0}")]
    InvalidWord(String),

    #[error("invalid reflection order: {0}")]
    InvalidOrder(String),

    #[error("interval length {length} exceeds the enumeration cap {cap}")]
    EnumerationCap { length: u32, cap: u32 },

    #[error("operation requires a type A group")]
    NotTypeA,

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
