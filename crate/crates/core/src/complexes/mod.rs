//! CW complexes over GF(2), the builders for the spaces attached to a Coxeter
//! system, and generation of Zamolodzhikov relations.

mod builders;
mod census;
mod cw;
pub mod gf2;
mod sphere;
mod zam;

pub use builders::{
    braid_relator, bw_complex, coxeter_complex, dual_coxeter_complex, presentation_complex, salvetti_complex,
    universal_cover_2skeleton, Presentation,
};
pub use census::{coxeter_3presentation_census, pruned_half_skeleton_census, CellCensus, Pruning};
pub use cw::{CWComplexMod2, Cell};
pub use sphere::{sphere_cells, FaceId, SphereCellStructure};
pub use zam::{generate_zamolodzhikov, verify_zamolodzhikov, BraidStep, ZamRelation};

use crate::coxeter::CoxeterError;

#[derive(Debug, thiserror::Error)]
pub enum ComplexError {
    #[error("parabolic subgroup {0} is infinite")]
    Infinite(String),
    #[error("{0} is not a finite parabolic subgroup of rank 3")]
    NotRank3Finitary(String),
    #[error("boundary of boundary is nonzero at {dim}-cell {cell}")]
    BoundarySquared { dim: usize, cell: usize },
    #[error("incidence of {dim}-cells is not recorded")]
    IncidenceDeferred { dim: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("relation {relation} uses unknown generator {letter}")]
    BadRelation { relation: usize, letter: u8 },
    #[error("search budget of {budget} exhausted")]
    BudgetExhausted { budget: u64 },
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// Product cell structure on `a × b`.
pub fn product_complex(a: &CWComplexMod2, b: &CWComplexMod2) -> Result<CWComplexMod2, ComplexError> {
    a.product(b)
}
