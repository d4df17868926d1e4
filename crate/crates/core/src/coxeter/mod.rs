//! Coxeter systems, the word problem, and finite parabolic subgroups.

mod element;
mod finite;
mod gram;
mod parse;
mod rexgraph;
mod system;
mod word;

pub use element::{Element, Side};
pub use finite::{CayleyTable, FiniteType, GroupOrder};
pub use gram::GramMatrix;
pub use parse::{format_system, parse_system, Span};
pub use rexgraph::{ReducedExpressionGraph, RexEdge};
pub use system::{CoxeterSystem, GeneratorId, GeneratorSet, Order};
pub use word::{alternating, apply_braid_move, braid_moves, Sign, SignedWord, Word, WordDisplay, DEFAULT_CLOSURE_LIMIT};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoxeterError {
    #[error("a Coxeter system needs at least one generator")]
    EmptySystem,
    #[error("rank {0} exceeds the supported maximum of 128")]
    RankTooLarge(usize),
    #[error("expected {expected} generator names, found {found}")]
    NameCount { expected: usize, found: usize },
    #[error("row {row} has {len} entries, expected {rank}")]
    NotSquare { row: usize, len: usize, rank: usize },
    #[error("diagonal entry {index} is {value}, expected 1")]
    BadDiagonal { index: usize, value: Order },
    #[error("matrix is not symmetric at ({i},{j})")]
    Asymmetric { i: usize, j: usize },
    #[error("off-diagonal entry ({i},{j}) is {value}, must be at least 2")]
    EntryTooSmall { i: usize, j: usize, value: u32 },
    #[error("invalid generator name `{0}`")]
    BadName(String),
    #[error("generator name `{name}` used for both {first} and {second}")]
    DuplicateName { name: String, first: usize, second: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("letter {0} is not a generator of this system")]
    InvalidLetter(u8),
    #[error("braid closure exceeded the limit of {limit} words")]
    ClosureLimit { limit: usize },
    #[error("parabolic subgroup {0} is not finite")]
    NotFinitary(String),
    #[error("group order does not fit in 128 bits")]
    OrderOverflow,
    #[error("{span}: {message}")]
    Parse { span: Span, message: String },
    #[error("pair {0},{1} unspecified")]
    MissingPair(String, String),
}
