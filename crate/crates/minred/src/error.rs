use thiserror::Error;

use crate::orbit::{Family, GroupType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
    #[error("padding length {len} is shorter than the {parts} parts")]
    PaddingTooShort { len: usize, parts: usize },
    #[error("sequence {0:?} is not strictly increasing")]
    NotStrictlyIncreasing(Vec<u32>),
    #[error("partitions have different sizes ({0} and {1})")]
    SizeMismatch(u32, u32),
    #[error("{group} needs a partition of {expected}, got one of {got}")]
    OrbitSize { group: GroupType, expected: u32, got: u32 },
    #[error("{partition} is not a Jordan type of {group}")]
    Parity { group: GroupType, partition: String },
    #[error("{partition} is not very even, so it takes no label")]
    UnexpectedLabel { partition: String },
    #[error("very even partition {partition} needs a label (+ or -)")]
    MissingLabel { partition: String },
    #[error("orbits live in different groups ({0} and {1})")]
    GroupMismatch(GroupType, GroupType),
    #[error("character of family {got} where {expected} was expected")]
    FamilyMismatch { expected: Family, got: Family },
    #[error("character has rank {got} where {expected} was expected")]
    RankMismatch { expected: u32, got: u32 },
    #[error("split k={k} is not valid for {family}{n}")]
    InvalidSplit { family: Family, n: u32, k: u32 },
    #[error("split k={k} is hyperspecial for {family}{n}; an interior split is required")]
    NotInterior { family: Family, n: u32, k: u32 },
    #[error("{0} is not an elliptic class")]
    InvalidClass(String),
    #[error("operation not available for family {0}")]
    UnsupportedFamily(Family),
    #[error("table {table}, line {line}: {reason}")]
    Table { table: String, line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(what: &'static str, input: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        what,
        input: input.to_string(),
        reason: reason.into(),
    }
}
