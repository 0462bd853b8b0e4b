use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("duplicate value {0}")]
    Duplicate(usize),
    #[error("value {value} is out of range for a permutation of length {len}")]
    OutOfRange { value: usize, len: usize },
    #[error("non-positive entry {0}")]
    NonPositive(i64),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("patterns must have length 1 to 9, got {0}")]
    PatternLength(usize),
    #[error("a pattern pair needs two distinct patterns, got {0} twice")]
    SamePattern(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("denominator has x-free part {0}, expected 1")]
    DenominatorNotUnit(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("{0} is a finite class with no generating function; use the class count")]
    FiniteClass(String),
    #[error("{0} is not one of the canonical pairs")]
    NotCanonical(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{perm} is not in S_n({pair}): {pattern} occurs at positions {positions:?}")]
    NotInClass {
        perm: String,
        pair: String,
        pattern: String,
        positions: Vec<usize>,
    },
    #[error("the map is undefined on the empty permutation")]
    Empty,
}
