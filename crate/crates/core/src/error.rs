use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unsupported field size {q}: expected a prime power no larger than 16")]
    UnsupportedField { q: u64 },

    #[error("ground set of {n} elements exceeds the limit of {max}")]
    TooManyElements { n: usize, max: usize },

    #[error("basis list is empty")]
    EmptyBasisList,

    #[error("bases have mixed cardinalities ({expected} and {found})")]
    MixedBasisCardinality { expected: usize, found: usize },

    #[error("element {element} is outside the ground set 0..{n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("element {0} lies in no basis (loop)")]
    LoopDetected(usize),

    #[error("basis exchange fails: removing {removed} from basis {basis:?} admits no replacement from {other:?}")]
    ExchangeAxiomViolation {
        basis: Vec<usize>,
        other: Vec<usize>,
        removed: usize,
    },

    #[error("cannot contract by {0:?}: not a flat")]
    ContractByNonFlat(Vec<usize>),

    #[error("minor would have an empty ground set")]
    EmptyMinor,

    #[error("rank {rank} is too small, at least {required} is required")]
    RankTooSmall { rank: usize, required: usize },

    #[error("polynomial is not palindromic about degree {d}")]
    NotPalindromic { d: usize },

    #[error("moment order {k} is not valid here: {reason}")]
    InvalidMomentOrder { k: u32, reason: &'static str },

    #[error("no finite correction constant exists at order {k}")]
    NoFiniteC { k: u32 },

    #[error("CMFS order {0} is unsupported (even orders up to 12)")]
    InvalidCmfsOrder(u32),

    #[error("not a rank-preserving weak map: {0}")]
    NotAWeakMap(String),

    #[error("dimension d = {d} exceeds the cap {cap}")]
    DimensionTooLarge { d: usize, cap: usize },

    #[error("Todd component of degree {0} is unsupported (k <= 3)")]
    UnsupportedToddDegree(usize),

    #[error("Chow polynomial routes disagree: flags gave {flags}, recursion gave {recursion}")]
    ChowMismatch { flags: String, recursion: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
