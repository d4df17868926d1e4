//! CW complexes attached to a Coxeter system.

use std::collections::HashMap;

use crate::coxeter::{alternating, CayleyTable, CoxeterSystem, GeneratorId, GeneratorSet, Order, Sign, SignedWord, Word};

use super::{CWComplexMod2, ComplexError};

pub(crate) fn word_label(system: &CoxeterSystem, w: &Word) -> String {
    if w.is_empty() {
        return "e".to_string();
    }
    w.0.iter().map(|&s| system.name(s)).collect::<Vec<_>>().join(".")
}

fn set_label(system: &CoxeterSystem, j: &GeneratorSet) -> String {
    system.format_set(j)
}

pub(crate) fn finite_table(system: &CoxeterSystem, subset: &GeneratorSet, limit: usize) -> Result<CayleyTable, ComplexError> {
    if !system.is_finitary(subset) {
        return Err(ComplexError::Infinite(system.format_set(subset)));
    }
    Ok(CayleyTable::new(system, subset, limit)?)
}

/// Dual Coxeter complex: one `k`-cell per finitary `J` of rank `k` and coset `x W_J`.
/// With `completed`, the top cell `(S, W)` is added.
pub fn dual_coxeter_complex(system: &CoxeterSystem, completed: bool, limit: usize) -> Result<CWComplexMod2, ComplexError> {
    let all = system.all();
    let table = finite_table(system, &all, limit)?;
    let r = system.rank();
    let top = if completed { r } else { r - 1 };
    let mut out = CWComplexMod2::new();
    // (J, coset rep) -> local index
    let mut index: HashMap<(GeneratorSet, usize), usize> = HashMap::new();
    for k in 0..=top {
        for j in all.subsets_of_size(k) {
            for rep in table.coset_reps(&j) {
                let faces = if k == 0 {
                    Vec::new()
                } else {
                    let members = table.coset(rep, &j);
                    let mut faces = Vec::new();
                    for s in j.iter() {
                        let sub = j.without(s);
                        let mut reps: Vec<usize> = members.iter().map(|&y| table.coset_rep(y, &sub)).collect();
                        reps.sort_unstable();
                        reps.dedup();
                        faces.extend(reps.into_iter().map(|c| index[&(sub, c)]));
                    }
                    faces
                };
                let label = format!("{}:{}", set_label(system, &j), word_label(system, table.word_of(rep)));
                let id = out.add_cell(k, label, Some(faces));
                index.insert((j, rep), id);
            }
        }
    }
    out.check_boundary_squared()?;
    Ok(out)
}

/// Coxeter complex: simplices are cosets `w W_I` for proper `I`, of dimension `r - 1 - |I|`.
pub fn coxeter_complex(system: &CoxeterSystem, limit: usize) -> Result<CWComplexMod2, ComplexError> {
    let all = system.all();
    let table = finite_table(system, &all, limit)?;
    let r = system.rank();
    let mut out = CWComplexMod2::new();
    let mut index: HashMap<(GeneratorSet, usize), usize> = HashMap::new();
    for dim in 0..r {
        let size = r - 1 - dim;
        for i in all.subsets_of_size(size) {
            for rep in table.coset_reps(&i) {
                let mut faces = Vec::new();
                if dim > 0 {
                    for s in all.iter().filter(|s| !i.contains(*s)) {
                        let mut bigger = i;
                        bigger.insert(s);
                        faces.push(index[&(bigger, table.coset_rep(rep, &bigger))]);
                    }
                }
                let label = format!("{}:{}", set_label(system, &i), word_label(system, table.word_of(rep)));
                let id = out.add_cell(dim, label, Some(faces));
                index.insert((i, rep), id);
            }
        }
    }
    out.check_boundary_squared()?;
    Ok(out)
}

/// Walks a relator from a base vertex of the Cayley graph, returning the edges
/// `(s, g)` it traverses; the edge `(s, g)` runs from `g` to `g s`.
fn relator_edges(table: &CayleyTable, base: usize, relator: &SignedWord) -> Vec<(GeneratorId, usize)> {
    let mut cur = base;
    let mut out = Vec::with_capacity(relator.len());
    for &(s, sign) in &relator.0 {
        match sign {
            Sign::Pos => {
                out.push((s, cur));
                cur = table.mul_gen(cur, s);
            }
            Sign::Neg => {
                cur = table.mul_gen(cur, s);
                out.push((s, cur));
            }
        }
    }
    debug_assert_eq!(cur, base, "relator does not close up");
    out
}

/// The braid relator `(s t s ...)(t s t ...)^{-1}` with both halves of length `m`.
pub fn braid_relator(s: GeneratorId, t: GeneratorId, m: usize) -> SignedWord {
    SignedWord::positive(&Word(alternating(s, t, m))).concat(&SignedWord::positive(&Word(alternating(t, s, m))).inverse())
}

/// Salvetti complex: one `k`-cell per finitary `I` of rank `k` and `w ∈ W`. Cells of
/// rank three and above are recorded without attaching data.
pub fn salvetti_complex(system: &CoxeterSystem, limit: usize) -> Result<CWComplexMod2, ComplexError> {
    let all = system.all();
    let table = finite_table(system, &all, limit)?;
    let n = table.len();
    let gens: Vec<_> = system.generators().collect();
    let edge_id = |s: GeneratorId, g: usize| g * gens.len() + s.index();
    let mut out = CWComplexMod2::new();
    for g in 0..n {
        out.add_cell(0, word_label(system, table.word_of(g)), None);
    }
    for g in 0..n {
        for &s in &gens {
            let id = out.add_cell(1, format!("{}:{}", system.name(s), word_label(system, table.word_of(g))), Some(vec![g, table.mul_gen(g, s)]));
            debug_assert_eq!(id, edge_id(s, g));
        }
    }
    for k in 2..=system.rank() {
        for i in system.finitary_subsets(k) {
            for g in 0..n {
                let label = format!("{}:{}", set_label(system, &i), word_label(system, table.word_of(g)));
                let boundary = (k == 2).then(|| {
                    let v: Vec<_> = i.iter().collect();
                    let m = system.m(v[0], v[1]).finite().expect("finitary pair") as usize;
                    relator_edges(&table, g, &braid_relator(v[0], v[1], m))
                        .into_iter()
                        .map(|(s, h)| edge_id(s, h))
                        .collect()
                });
                out.add_cell(k, label, boundary);
            }
        }
    }
    out.check_boundary_squared()?;
    Ok(out)
}

/// The quotient of the Salvetti complex by `W`: one `k`-cell per finitary `I` of rank `k`.
pub fn bw_complex(system: &CoxeterSystem) -> Result<CWComplexMod2, ComplexError> {
    let mut out = CWComplexMod2::new();
    out.add_cell(0, "*", None);
    for s in system.generators() {
        out.add_cell(1, system.name(s), Some(Vec::new()));
    }
    for k in 2..=system.rank() {
        for i in system.finitary_subsets(k) {
            let boundary = (k == 2).then(|| {
                let v: Vec<_> = i.iter().collect();
                match system.m(v[0], v[1]) {
                    Order::Finite(m) if m % 2 == 1 => vec![v[0].index(), v[1].index()],
                    _ => Vec::new(),
                }
            });
            out.add_cell(k, set_label(system, &i), boundary);
        }
    }
    out.check_boundary_squared()?;
    Ok(out)
}

/// A finite group presentation with relators written over generator indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<SignedWord>,
}

impl Presentation {
    /// The Coxeter presentation: quadratic relators `s s` followed by one braid relator
    /// per pair with finite `m`.
    pub fn coxeter(system: &CoxeterSystem) -> Self {
        let mut relations: Vec<SignedWord> = system.generators().map(|s| SignedWord(vec![(s, Sign::Pos), (s, Sign::Pos)])).collect();
        relations.extend(system.braid_pairs().into_iter().map(|(s, t, m)| braid_relator(s, t, m as usize)));
        Presentation { generators: system.names().to_vec(), relations }
    }
}

/// Presentation complex: one vertex, a loop per generator, a disk per relation.
pub fn presentation_complex(p: &Presentation) -> Result<CWComplexMod2, ComplexError> {
    let mut out = CWComplexMod2::new();
    out.add_cell(0, "*", None);
    for g in &p.generators {
        out.add_cell(1, g.clone(), Some(Vec::new()));
    }
    for (i, r) in p.relations.iter().enumerate() {
        if let Some(&(s, _)) = r.0.iter().find(|(s, _)| s.index() >= p.generators.len()) {
            return Err(ComplexError::BadRelation { relation: i, letter: s.0 });
        }
        let faces = r.0.iter().map(|(s, _)| s.index()).collect();
        out.add_cell(2, format!("r{i}"), Some(faces));
    }
    out.check_boundary_squared()?;
    Ok(out)
}

/// 2-skeleton of the universal cover of the Coxeter presentation complex.
pub fn universal_cover_2skeleton(system: &CoxeterSystem, limit: usize) -> Result<CWComplexMod2, ComplexError> {
    let all = system.all();
    let table = finite_table(system, &all, limit)?;
    let n = table.len();
    let gens: Vec<_> = system.generators().collect();
    let edge_id = |s: GeneratorId, g: usize| g * gens.len() + s.index();
    let mut out = CWComplexMod2::new();
    for g in 0..n {
        out.add_cell(0, word_label(system, table.word_of(g)), None);
    }
    for g in 0..n {
        for &s in &gens {
            out.add_cell(1, format!("{}:{}", system.name(s), word_label(system, table.word_of(g))), Some(vec![g, table.mul_gen(g, s)]));
        }
    }
    let presentation = Presentation::coxeter(system);
    for (ri, rel) in presentation.relations.iter().enumerate() {
        let name = relation_name(system, rel, ri);
        for g in 0..n {
            let faces = relator_edges(&table, g, rel).into_iter().map(|(s, h)| edge_id(s, h)).collect();
            out.add_cell(2, format!("{name}:{}", word_label(system, table.word_of(g))), Some(faces));
        }
    }
    out.check_boundary_squared()?;
    Ok(out)
}

fn relation_name(system: &CoxeterSystem, rel: &SignedWord, index: usize) -> String {
    let word = rel.erase_signs();
    match word.0.as_slice() {
        [a, b] if a == b => format!("q_{}", system.name(*a)),
        [a, b, ..] => format!("b_{}{}", system.name(*a), system.name(*b)),
        _ => format!("r{index}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DEFAULT_CLOSURE_LIMIT as L;

    #[test]
    fn dihedral_dual_complex_is_a_disk() {
        for m in 2..7 {
            let sys = CoxeterSystem::dihedral(m).unwrap();
            let c = dual_coxeter_complex(&sys, true, L).unwrap();
            let m = m as usize;
            assert_eq!(c.counts(), vec![2 * m, 2 * m, 1]);
            assert_eq!(c.euler_characteristic(), 1);
            assert_eq!(c.homology_mod2().unwrap(), vec![1, 0, 0]);
        }
    }

    #[test]
    fn a1_dual_complex_is_an_interval() {
        let sys = CoxeterSystem::type_a(1).unwrap();
        assert_eq!(dual_coxeter_complex(&sys, true, L).unwrap().counts(), vec![2, 1]);
    }

    #[test]
    fn a3_dual_complex() {
        let sys = CoxeterSystem::type_a(3).unwrap();
        let c = dual_coxeter_complex(&sys, true, L).unwrap();
        assert_eq!(c.counts(), vec![24, 36, 14, 1]);
        assert_eq!(c.homology_mod2().unwrap(), vec![1, 0, 0, 0]);
        let open = dual_coxeter_complex(&sys, false, L).unwrap();
        assert_eq!(open.euler_characteristic(), 2);
        assert_eq!(open.homology_mod2().unwrap(), vec![1, 0, 1]);
    }

    #[test]
    fn coxeter_complexes() {
        let cube = CoxeterSystem::from_table(&[&[1, 2, 2], &[2, 1, 2], &[2, 2, 1]]).unwrap();
        assert_eq!(coxeter_complex(&cube, L).unwrap().homology_mod2().unwrap(), vec![1, 0, 1]);
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let hex = coxeter_complex(&a2, L).unwrap();
        assert_eq!(hex.counts(), vec![6, 6]);
        assert_eq!(hex.homology_mod2().unwrap(), vec![1, 1]);
        let a1 = CoxeterSystem::type_a(1).unwrap();
        assert_eq!(coxeter_complex(&a1, L).unwrap().counts(), vec![2]);
    }

    #[test]
    fn salvetti_and_bw() {
        let a1 = CoxeterSystem::type_a(1).unwrap();
        let sal = salvetti_complex(&a1, L).unwrap();
        assert_eq!(sal.counts(), vec![2, 2]);
        assert_eq!(sal.homology_mod2().unwrap(), vec![1, 1]);
        let i23 = CoxeterSystem::dihedral(3).unwrap();
        assert_eq!(salvetti_complex(&i23, L).unwrap().counts(), vec![6, 12, 6]);
        let a3 = CoxeterSystem::type_a(3).unwrap();
        assert_eq!(salvetti_complex(&a3, L).unwrap().counts(), vec![24, 72, 72, 24]);

        assert_eq!(bw_complex(&a1).unwrap().homology_mod2().unwrap(), vec![1, 1]);
        let bw3 = bw_complex(&i23).unwrap();
        assert_eq!(bw3.counts(), vec![1, 2, 1]);
        assert_eq!(bw3.homology_mod2().unwrap(), vec![1, 1, 0]);
        let i22 = CoxeterSystem::dihedral(2).unwrap();
        assert_eq!(bw_complex(&i22).unwrap().homology_mod2().unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn presentation_complexes() {
        let s = GeneratorId(0);
        let rp2 = Presentation { generators: vec!["s".into()], relations: vec![SignedWord(vec![(s, Sign::Pos), (s, Sign::Pos)])] };
        assert_eq!(presentation_complex(&rp2).unwrap().homology_mod2().unwrap(), vec![1, 1, 1]);
        let disk = Presentation { generators: vec!["a".into()], relations: vec![SignedWord(vec![(s, Sign::Pos)])] };
        assert_eq!(presentation_complex(&disk).unwrap().homology_mod2().unwrap(), vec![1, 0, 0]);
        let sphere = Presentation { generators: vec![], relations: vec![SignedWord::default()] };
        assert_eq!(presentation_complex(&sphere).unwrap().homology_mod2().unwrap(), vec![1, 0, 1]);
        let bad = Presentation { generators: vec![], relations: vec![SignedWord(vec![(s, Sign::Pos)])] };
        assert!(presentation_complex(&bad).is_err());
    }

    #[test]
    fn universal_covers() {
        let a1 = CoxeterSystem::type_a(1).unwrap();
        let c = universal_cover_2skeleton(&a1, L).unwrap();
        assert_eq!(c.counts(), vec![2, 2, 2]);
        assert_eq!(c.homology_mod2().unwrap(), vec![1, 0, 1]);
        let i23 = CoxeterSystem::dihedral(3).unwrap();
        assert_eq!(universal_cover_2skeleton(&i23, L).unwrap().counts(), vec![6, 12, 18]);
        let i22 = CoxeterSystem::dihedral(2).unwrap();
        assert_eq!(universal_cover_2skeleton(&i22, L).unwrap().counts(), vec![4, 8, 12]);
    }

    #[test]
    fn infinite_groups_refused() {
        let free = CoxeterSystem::from_table(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(matches!(dual_coxeter_complex(&free, true, L), Err(ComplexError::Infinite(_))));
        assert_eq!(bw_complex(&free).unwrap().counts(), vec![1, 2]);
    }
}
