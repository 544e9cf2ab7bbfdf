use coxbraid_graph::GraphError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("rank {rank} is out of range for family {family} (needs {expected})")]
    Rank {
        family: String,
        rank: usize,
        expected: String,
    },

    #[error("letter {letter} is not a generator of a system with {n} generators")]
    InvalidLetter { letter: usize, n: usize },

    #[error("invalid move site: {0}")]
    InvalidSite(String),

    #[error("closure search exceeded the node budget of {budget} words")]
    Budget { budget: usize },

    #[error("word {0} is not reduced")]
    NotReduced(String),

    #[error("the empty word is not a link")]
    EmptyWord,

    #[error("words are not braid equivalent: {0}")]
    NotBraidEquivalent(String),

    #[error("shadow ordinal {ordinal} is out of range 1..={dim}")]
    Ordinal { ordinal: usize, dim: usize },

    #[error("interval [{start}, {end}] is out of bounds for a word of length {len}")]
    Interval { start: usize, end: usize, len: usize },

    #[error("signatures have different lengths {0} and {1}")]
    SignatureLength(usize, usize),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub type Result<T> = std::result::Result<T, Error>;
