use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a partition needs at least one part")]
    Empty,
    #[error("partition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("parts {0:?} are not weakly decreasing")]
    NotSorted(Vec<usize>),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{name} = {value} is outside {lo}..={hi}")]
    OutOfRange {
        name: &'static str,
        value: usize,
        lo: usize,
        hi: usize,
    },
    #[error("{0:?} is not a permutation of 1..={n}", n = .0.len())]
    NotPermutation(Vec<usize>),
    #[error("e{0} - e{1} is not a root of rank {2}")]
    InvalidRoot(usize, usize, usize),
    #[error("e{0} - e{1} is not a simple root")]
    NotSimple(usize, usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("expected {expected} columns, found {found}")]
    ColumnCount { expected: usize, found: usize },
    #[error("column {column} has {found} entries, expected {expected}")]
    ColumnLength {
        column: usize,
        expected: usize,
        found: usize,
    },
    #[error("column {column} entries {entries:?} are not strictly increasing")]
    NotIncreasing { column: usize, entries: Vec<usize> },
    #[error("a{0} is sent to a positive root")]
    PositiveImage(usize),
    #[error("rewrite indices violate {0}")]
    Admissibility(&'static str),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
