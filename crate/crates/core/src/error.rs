use thiserror::Error;

use crate::partition::{Partition, Rectangle};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition `{0}`")]
    InvalidPartition(String),

    #[error("invalid rectangle `{0}`")]
    InvalidRectangle(String),

    #[error("invalid word `{0}`")]
    InvalidWord(String),

    #[error("partition {inner} does not fit inside {outer}")]
    NotContained { inner: Partition, outer: Partition },

    #[error("{0} is not odd by odd")]
    NotOddByOdd(Rectangle),

    #[error("{partition} has more than {h} parts larger than {v}; no w-notation for this word")]
    NoWNotation { partition: Partition, h: usize, v: usize },

    #[error("w-notation entries are not realizable: first offending index {index}")]
    Unrealizable { index: usize },

    #[error("words of different lengths cannot be compared")]
    WordMismatch,

    #[error("word has {h} h's and {v} v's; {rect} needs {want_h} and {want_v}")]
    WrongSignature {
        rect: Rectangle,
        h: usize,
        v: usize,
        want_h: usize,
        want_v: usize,
    },

    #[error("{partition} is not (almost) self-complementary in {rect}")]
    NotSelfComplementary { partition: Partition, rect: Rectangle },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("witness certification failed for {lambda} * {lambda_c} in {rect}: {reason}")]
    CertificationFailed {
        rect: Rectangle,
        lambda: Partition,
        lambda_c: Partition,
        reason: String,
    },

    #[error("{0} is not a prime above 2^20")]
    BadModulus(u64),

    #[error("oracle produced a negative coefficient for {0}")]
    NegativeCoefficient(Partition),

    #[error("malformed cache record: {0}")]
    CacheRecord(String),

    #[error("cache i/o on {path}: {message}")]
    CacheIo { path: String, message: String },
}
