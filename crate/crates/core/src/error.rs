use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size mismatch: {left} atoms vs {right} atoms")]
    SizeMismatch { left: usize, right: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),

    #[error("not a bijection: {0}")]
    NotBijection(String),

    #[error("atom {atom} leaves its class ({from_class} -> {to_class})")]
    NotInFullGroup {
        atom: usize,
        from_class: usize,
        to_class: usize,
    },

    #[error("atom {atom} out of range for {n_atoms} atoms")]
    AtomOutOfRange { atom: usize, n_atoms: usize },

    #[error("generator index {index} invalid for rank {rank}")]
    BadGenerator { index: i64, rank: usize },

    #[error("cannot parse word: {0}")]
    WordParse(String),

    #[error("cannot parse rational: {0}")]
    RationalParse(String),

    #[error("not a single cycle: {0}")]
    NotSingleCycle(String),

    #[error("equivalence relation has {0} classes; a single class is required")]
    NonTrivialRelation(usize),

    #[error("splice infeasible in classes {classes:?}")]
    SpliceInfeasible { classes: Vec<usize> },

    #[error("no feasible Rokhlin base: {0}")]
    NoRokhlinBase(String),

    #[error("missing filtration")]
    NoFiltration,

    #[error("filtration level {level} exceeds top level {top}")]
    BadLevel { level: u32, top: u32 },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("orbit of size {size} exceeds the brute-force guard {guard}")]
    OrbitTooLarge { size: usize, guard: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("json: {0}")]
    Json(String),

    #[error("io: {0}")]
    Io(String),

    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
