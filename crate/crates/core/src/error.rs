use thiserror::Error;

use crate::partition::Partition;
use crate::theory::TheoryLabel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse partition `{input}`: {reason}")]
    ParsePartition { input: String, reason: String },

    #[error("cannot parse theory label `{0}` (expected e.g. B6, C4, D5)")]
    ParseTheory(String),

    #[error("cannot parse symbol `{input}`: {reason}")]
    ParseSymbol { input: String, reason: String },

    #[error("cannot parse fingerprint `{input}`: {reason}")]
    ParseFingerprint { input: String, reason: String },

    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("{pair} is not a rigid operator of {theory}: {reason}")]
    InvalidPair {
        theory: TheoryLabel,
        pair: String,
        reason: String,
    },

    #[error("symbol construction for {partition} expected a zero at bottom entry {position}, found {found:?}")]
    MalformedSymbolInput {
        partition: Partition,
        position: usize,
        found: Option<u32>,
    },

    #[error("contribution of length {length} does not fit a frame row of width {width}")]
    FrameOverflow { length: u32, width: usize },

    #[error("symbol row {row:?} is not weakly increasing, so it is not a sum of right-aligned strings of ones")]
    NotAchievable { row: Vec<u32> },

    #[error("no rigid operator of {theory} has symbol {symbol}")]
    NoConsistentAssignment { theory: TheoryLabel, symbol: String },

    #[error("reconstruction search for {symbol} exceeded {limit} nodes")]
    SearchExhausted { symbol: String, limit: usize },

    #[error("μ = {mu} leaves an unpaired part {part} after routing τ = -1 parts to β")]
    UnpairedPart { mu: Partition, part: u32 },

    #[error("block decomposition failed: {0}")]
    BlockDecomposition(String),

    #[error("block-local μ {blocks} disagrees with the Sp map {direct}")]
    BlockCrossCheck {
        blocks: Partition,
        direct: Partition,
    },

    #[error("catalog ranks differ: {0} vs {1}")]
    RankMismatch(u32, u32),

    #[error("catalog record for {pair} in {theory}: {reason}")]
    Catalog {
        theory: TheoryLabel,
        pair: String,
        reason: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
