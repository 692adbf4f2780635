use thiserror::Error;

/// Library-wide error type.
///
/// Hypothesis violations and resource-cap errors are kept in distinct
/// variants because the CLI maps them to different exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("Segre characteristic must be nonempty")]
    EmptySegre,
    #[error("Segre characteristic entries must be positive (position {pos} is zero)")]
    ZeroExponent { pos: usize },
    #[error("block index {index} out of range ({blocks} blocks)")]
    BlockIndex { index: usize, blocks: usize },
    #[error("power f^{power} out of range for block {block} (exponent {exponent})")]
    PowerRange {
        power: usize,
        block: usize,
        exponent: usize,
    },
    #[error("tuple length {got} does not match block count {expected}")]
    TupleLength { expected: usize, got: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{what}: needs {needed} but the cap is {cap}")]
    ResourceCap {
        what: &'static str,
        needed: usize,
        cap: usize,
    },
    #[error("q must be a prime power >= 2, got {q}")]
    NotPrimePower { q: u64 },
    #[error("matrix does not commute with the shift f")]
    NotCommutant,
    #[error("image of generator {block} is not annihilated by f^{exponent}")]
    EndoImage { block: usize, exponent: usize },
    #[error("hypothesis violated: {0}")]
    Hypothesis(#[from] Hypothesis),
    #[error("no representation found within the search bounds; this indicates a bug, not a valid outcome")]
    NoRepresentation,
}

/// A named hypothesis of one of the structure theorems that an input failed
/// to satisfy. Every precondition check reports the specific hypothesis.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Hypothesis {
    #[error("index set must be nonempty")]
    EmptyIndexSet,
    #[error("index set must contain at least two indices")]
    TooFewIndices,
    #[error("index set must consist of strictly increasing valid block indices")]
    BadIndexSet,
    #[error("block {index} does not carry an unrepeated exponent")]
    NotUnrepeated { index: usize },
    #[error("gap condition t[{p}] + 1 < t[{q}] fails: {tp} + 1 >= {tq}")]
    Gap {
        p: usize,
        q: usize,
        tp: usize,
        tq: usize,
    },
    #[error("strict chain mu[{p}] < mu[{q}] fails: {vp} >= {vq}")]
    MuChain {
        p: usize,
        q: usize,
        vp: usize,
        vq: usize,
    },
    #[error("strict chain 0 < t[{p}] - mu[{p}] < t[{q}] - mu[{q}] fails")]
    CoexponentChain { p: usize, q: usize },
    #[error("weak chain mu[{p}] <= mu[{q}] fails: {vp} > {vq}")]
    WeakMuChain {
        p: usize,
        q: usize,
        vp: usize,
        vq: usize,
    },
    #[error("weak chain t[{p}] - mu[{p}] <= t[{q}] - mu[{q}] fails")]
    WeakCoexponentChain { p: usize, q: usize },
    #[error("value {value} at block {index} is out of range for block exponent {exponent}")]
    ValueRange {
        index: usize,
        value: usize,
        exponent: usize,
    },
    #[error("tuple {tuple:?} is not admissible")]
    Inadmissible { tuple: Vec<usize> },
    #[error("subspace is not characteristic")]
    NotCharacteristic,
    #[error("subspace is not contained in the required space")]
    NotContained,
    #[error("mu is not the maximal extension of its restriction")]
    NotMaxExtension,
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("vector is not a generator of exponent {expected}")]
    NotGenerator { expected: usize },
    #[error("witness powers must satisfy 0 <= s < q, got s = {s}, q = {q}")]
    WitnessPowers { s: usize, q: usize },
    #[error("witness powers must satisfy 0 < R - s < S - q, got R - s = {rs}, S - q = {sq}")]
    WitnessGap { rs: i64, sq: i64 },
    #[error("matrix is not in column-reduced echelon form")]
    NotEchelon,
    #[error("matrix shape must be {expected}x{expected}, got {rows}x{cols}")]
    EchelonShape {
        expected: usize,
        rows: usize,
        cols: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
