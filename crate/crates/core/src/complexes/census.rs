//! Cell bookkeeping for the universal cover of the Coxeter 3-presentation.
//!
//! The 3-cells come in four kinds: `z_s` (one per involution), rotation and flip cells
//! (one each per braid relation) and Zamolodzhikov cells (one per finite rank-3
//! parabolic), each repeated once per group element.

use serde::{Deserialize, Serialize};

use crate::coxeter::{CoxeterSystem, GroupOrder};

use super::ComplexError;

/// Counts after discarding 3-cells whose attaching maps are already nulhomotopic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pruning {
    pub kept_z: u128,
    pub kept_rotation_flip: u128,
    pub kept_zamolodzhikov: u128,
    pub removed: u128,
}

impl Pruning {
    pub fn kept(&self) -> u128 {
        self.kept_z + self.kept_rotation_flip + self.kept_zamolodzhikov
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCensus {
    pub vertices: u128,
    pub edges: u128,
    pub quadratic: u128,
    pub braid: u128,
    pub z: u128,
    pub rotation: u128,
    pub flip: u128,
    pub zamolodzhikov: u128,
    pub pruned: Option<Pruning>,
}

impl CellCensus {
    pub fn by_dimension(&self) -> [u128; 4] {
        [
            self.vertices,
            self.edges,
            self.quadratic + self.braid,
            self.z + self.rotation + self.flip + self.zamolodzhikov,
        ]
    }

    pub fn three_cells(&self) -> u128 {
        self.by_dimension()[3]
    }

    /// `key value` lines.
    pub fn report(&self) -> String {
        let mut out = format!(
            "vertices {}\nedges {}\nquadratic {}\nbraid {}\nz {}\nrotation {}\nflip {}\nzamolodzhikov {}\n",
            self.vertices, self.edges, self.quadratic, self.braid, self.z, self.rotation, self.flip, self.zamolodzhikov
        );
        if let Some(p) = &self.pruned {
            out.push_str(&format!(
                "kept_z {}\nkept_rotation_flip {}\nkept_zamolodzhikov {}\nkept {}\nremoved {}\n",
                p.kept_z,
                p.kept_rotation_flip,
                p.kept_zamolodzhikov,
                p.kept(),
                p.removed
            ));
        }
        out
    }
}

fn order_of(system: &CoxeterSystem) -> Result<u128, ComplexError> {
    match system.group_order(&system.all())? {
        GroupOrder::Finite(n) => Ok(n),
        GroupOrder::Infinite => Err(ComplexError::Infinite(system.format_set(&system.all()))),
    }
}

/// Full census of the universal cover of the Coxeter 3-presentation.
pub fn coxeter_3presentation_census(system: &CoxeterSystem) -> Result<CellCensus, ComplexError> {
    let w = order_of(system)?;
    let r = system.rank() as u128;
    let b = system.braid_pairs().len() as u128;
    let triples = system.finitary_subsets(3).len() as u128;
    Ok(CellCensus {
        vertices: w,
        edges: r * w,
        quadratic: r * w,
        braid: b * w,
        z: r * w,
        rotation: b * w,
        flip: b * w,
        zamolodzhikov: triples * w,
        pruned: None,
    })
}

/// Census with redundant 3-cells removed: per involution half the `z` cells, per braid
/// relation `2m - 1` rotation/flip cells for each coset of `W_{s,t}`, and one
/// Zamolodzhikov cell per coset of each finite rank-3 parabolic.
pub fn pruned_half_skeleton_census(system: &CoxeterSystem) -> Result<CellCensus, ComplexError> {
    let mut census = coxeter_3presentation_census(system)?;
    let w = census.vertices;
    let r = system.rank() as u128;
    let kept_z = r * w / 2;
    let kept_rotation_flip: u128 = system
        .braid_pairs()
        .iter()
        .map(|&(_, _, m)| {
            let m = m as u128;
            (2 * m - 1) * (w / (2 * m))
        })
        .sum();
    let mut kept_zamolodzhikov = 0;
    for i in system.finitary_subsets(3) {
        match system.group_order(&i)? {
            GroupOrder::Finite(n) => kept_zamolodzhikov += w / n,
            GroupOrder::Infinite => unreachable!("finitary subset"),
        }
    }
    let pruned = Pruning {
        kept_z,
        kept_rotation_flip,
        kept_zamolodzhikov,
        removed: census.three_cells() - kept_z - kept_rotation_flip - kept_zamolodzhikov,
    };
    census.pruned = Some(pruned);
    Ok(census)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pancake() {
        let i23 = CoxeterSystem::dihedral(3).unwrap();
        let c = coxeter_3presentation_census(&i23).unwrap();
        assert_eq!(c.by_dimension(), [6, 12, 18, 24]);
        assert_eq!((c.z, c.rotation, c.flip), (12, 6, 6));
        let p = pruned_half_skeleton_census(&i23).unwrap().pruned.unwrap();
        assert_eq!((p.kept_z, p.kept_rotation_flip, p.kept(), p.removed), (6, 5, 11, 13));
    }

    #[test]
    fn involution() {
        let a1 = CoxeterSystem::type_a(1).unwrap();
        assert_eq!(coxeter_3presentation_census(&a1).unwrap().z, 2);
        assert_eq!(pruned_half_skeleton_census(&a1).unwrap().pruned.unwrap().kept_z, 1);
    }

    #[test]
    fn a3() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        let c = coxeter_3presentation_census(&a3).unwrap();
        assert_eq!((c.z, c.rotation, c.flip, c.zamolodzhikov), (72, 72, 72, 24));
        let p = pruned_half_skeleton_census(&a3).unwrap().pruned.unwrap();
        assert_eq!((p.kept_z, p.kept_rotation_flip, p.kept_zamolodzhikov), (36, 58, 1));
        assert_eq!(p.removed, 240 - 95);
    }
}
