use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unit has no contractions")]
    UnitHasNoContractions,
    #[error("empty family: need k > n >= 1 (got k={k}, n={n})")]
    EmptyFamily { k: u32, n: u32 },
    #[error("{0} of the empty word is undefined")]
    EmptyWord(&'static str),
    #[error("delta undefined for words of length < 2")]
    DeltaUndefined,
    #[error("excluded by n < k: all letters are z1")]
    AllOnes,
    #[error("empty letter sequence")]
    EmptySequence,
    #[error("non-admissible star index: j1 must be >= 1")]
    NonAdmissibleStar,
    #[error("outside odd subalgebra: even subscript z{0}")]
    OutsideOddSubalgebra(u32),
    #[error("divergent series: index {0} is not admissible")]
    Divergent(String),
    #[error("divergent term: word {0} is not admissible")]
    DivergentTerm(String),
    #[error("truncation bound M={m} is below the minimum {min} (depth or extrapolation floor)")]
    TruncationTooSmall { m: u64, min: u64 },
    #[error("expected a t-free formal sum: {0}")]
    NotTFree(String),
    #[error("malformed certificate record: {0}")]
    Record(String),
    #[error("weight must be >= 2 (got {0})")]
    WeightTooSmall(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
