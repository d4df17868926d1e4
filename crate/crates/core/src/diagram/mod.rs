//! Strip diagrams for the oriented (braid) and unoriented (Coxeter) calculi, their
//! rewrite rules, and equality search.

mod labels;
mod moves;
pub mod random;
mod rules;
mod search;
mod term;
mod text;

pub use labels::RegionLabeling;
pub use moves::{apply_move, apply_step, canonicalize, enumerate_moves, replay, Move, Step};
pub use rules::{check_rule_soundness, install_zamolodzhikov, RewriteRule, RuleCatalog, RuleFamily};
pub use search::{normalize, search_equality, SearchOutcome};
pub use term::{Diagram, Letter, Mode, Slice, Symbol, Variant};
pub use text::{format_certificate, parse_certificate};

use crate::complexes::ComplexError;
use crate::coxeter::CoxeterError;

#[derive(Debug, thiserror::Error)]
pub enum DiagramError {
    #[error("mode mismatch: {0} vs {1}")]
    ModeMismatch(Mode, Mode),
    #[error("expected a diagram in {expected} mode")]
    WrongMode { expected: Mode },
    #[error("boundary mismatch: {0} vs {1}")]
    BoundaryMismatch(String, String),
    #[error("slice {slice}: {message}")]
    TypeCheck { slice: usize, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("rule {rule} does not match at slice {slice}, offset {offset}")]
    PatternMismatch { rule: String, slice: usize, offset: usize },
    #[error("interchange of slices {0} and {1} is not allowed")]
    BadInterchange(usize, usize),
    #[error("unknown rule {0}")]
    UnknownRule(String),
    #[error("m({0},{1}) is infinite: no vertex")]
    InfiniteVertex(String, String),
    #[error("relation failed verification")]
    UnverifiedRelation,
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
