use serde::{Deserialize, Serialize};

use crate::coxeter::{CayleyTable, CoxeterSystem, GeneratorId, GeneratorSet, Word};

use super::ComplexError;

/// A 2-cell of the boundary sphere: a rank-2 parabolic `{s, t}` and the minimal
/// representative of a coset `x W_{s,t}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FaceId {
    pub pair: (GeneratorId, GeneratorId),
    pub rep: Word,
}

/// Cell structure on the boundary 2-sphere of the dual Coxeter cell of a finite
/// rank-3 parabolic `W_I`.
#[derive(Clone, Debug)]
pub struct SphereCellStructure {
    pub subset: GeneratorSet,
    pub table: CayleyTable,
    /// `(s, rep)` with `rep` the minimal element of its `W_s` coset.
    pub edges: Vec<(GeneratorId, usize)>,
    /// `(J, rep)` with `rep` the minimal element of its `W_J` coset.
    pub faces: Vec<(GeneratorSet, usize)>,
}

impl SphereCellStructure {
    pub fn vertex_count(&self) -> usize {
        self.table.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn face_id(&self, pair: GeneratorSet, rep: usize) -> FaceId {
        let mut it = pair.iter();
        let (s, t) = (it.next().expect("rank-2 pair"), it.next().expect("rank-2 pair"));
        FaceId { pair: (s, t), rep: self.table.word_of(rep).clone() }
    }

    pub fn face_ids(&self) -> Vec<FaceId> {
        self.faces.iter().map(|&(j, r)| self.face_id(j, r)).collect()
    }

    /// Indices into `edges` bounding face `f`.
    pub fn face_boundary(&self, f: usize) -> Vec<usize> {
        let (j, rep) = self.faces[f];
        let mut out: Vec<usize> = Vec::new();
        for x in self.table.coset(rep, &j) {
            for s in j.iter() {
                let key = (s, self.table.coset_rep(x, &GeneratorSet::singleton(s)));
                let e = self.edges.iter().position(|&k| k == key).expect("edge of the sphere");
                if !out.contains(&e) {
                    out.push(e);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// The face crossed by a braid move on the pair `{s, t}` applied after `prefix`.
    pub fn face_of_move(&self, prefix: &[GeneratorId], s: GeneratorId, t: GeneratorId) -> FaceId {
        let pair: GeneratorSet = [s, t].into_iter().collect();
        let x = self.table.mul_word(0, prefix);
        self.face_id(pair, self.table.coset_rep(x, &pair))
    }
}

pub fn sphere_cells(system: &CoxeterSystem, subset: &GeneratorSet, limit: usize) -> Result<SphereCellStructure, ComplexError> {
    if subset.len() != 3 || !system.is_finitary(subset) {
        return Err(ComplexError::NotRank3Finitary(system.format_set(subset)));
    }
    let table = CayleyTable::new(system, subset, limit)?;
    let mut edges = Vec::new();
    for s in subset.iter() {
        let j = GeneratorSet::singleton(s);
        edges.extend(table.coset_reps(&j).into_iter().map(|r| (s, r)));
    }
    let mut faces = Vec::new();
    for j in subset.subsets_of_size(2) {
        faces.extend(table.coset_reps(&j).into_iter().map(|r| (j, r)));
    }
    Ok(SphereCellStructure { subset: *subset, table, edges, faces })
}
