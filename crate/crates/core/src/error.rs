use crate::perm::Root;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("size {0} is outside the supported range 1..={max}", max = crate::MAX_N)]
    UnsupportedSize(usize),
    #[error("not a permutation of 1..={n}: {values:?}")]
    NotAPermutation { n: usize, values: Vec<usize> },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("root t{i} - t{j} needs distinct indices in 1..={max}", max = crate::MAX_N)]
    InvalidRoot { i: usize, j: usize },
    #[error("k-tuple {entries:?} is not strictly increasing inside 1..={n}")]
    InvalidTuple { entries: Vec<usize>, n: usize },
    #[error("k-tuples of different lengths: {left} vs {right}")]
    TupleLengthMismatch { left: usize, right: usize },
    #[error("hessenberg function is empty")]
    EmptyHessenberg,
    #[error("hessenberg function decreases at position {index}: h({index}) = {value} > h({next}) = {next_value}", next = index + 1)]
    NonMonotone {
        index: usize,
        value: usize,
        next_value: usize,
    },
    #[error("hessenberg function has h({index}) = {value} < {index}")]
    BelowDiagonal { index: usize, value: usize },
    #[error("hessenberg function has h({index}) = {value} > n = {n}")]
    AboveRange { index: usize, value: usize, n: usize },
    #[error("root {0} is not in the hessenberg root set")]
    RootOutsidePhiH(Root),
    #[error("not of Weyl type: {0}")]
    NotWeylType(ClosureViolation),
    #[error("orientation contains a directed cycle")]
    CyclicOrientation,
    #[error("orientation has {got} edge directions, graph has {expected} edges")]
    DirectionCount { expected: usize, got: usize },
    #[error("sets of different sizes: {left} vs {right}")]
    CardinalityMismatch { left: usize, right: usize },
    #[error("{what} limit exceeded: {got} > {max}")]
    LimitExceeded { what: &'static str, got: usize, max: usize },
    #[error("unknown lemma {0:?}")]
    UnknownLemma(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// A pair of roots whose sum breaks closure of a subset or of its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureViolation {
    pub first: Root,
    pub second: Root,
    pub sum: Root,
    /// `true` if the offending pair lies in the subset, `false` if in its complement.
    pub in_subset: bool,
}

impl std::fmt::Display for ClosureViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let side = if self.in_subset { "subset" } else { "complement" };
        write!(
            f,
            "{} + {} = {} lies in the hessenberg roots but not in the {} containing both summands",
            self.first, self.second, self.sum, side
        )
    }
}
