use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::word::{apply_braid_move, braid_moves};
use super::{CoxeterError, CoxeterSystem, Element, GeneratorId, Word};

/// One braid move between two reduced words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RexEdge {
    pub from: usize,
    pub to: usize,
    pub position: usize,
    /// First letter of the alternating subword in `from`.
    pub first: GeneratorId,
    pub second: GeneratorId,
}

/// Reduced words of an element joined by braid moves.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReducedExpressionGraph {
    pub target: Element,
    pub vertices: Vec<Word>,
    /// Each undirected move appears once, with `from < to`.
    pub edges: Vec<RexEdge>,
}

impl ReducedExpressionGraph {
    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn to_dot(&self, system: &CoxeterSystem) -> String {
        let mut out = String::from("graph rex {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", v.display(system));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -- n{} [label=\"{}{}@{}\"];",
                e.from,
                e.to,
                system.name(e.first),
                system.name(e.second),
                e.position
            );
        }
        out.push_str("}\n");
        out
    }
}

impl CoxeterSystem {
    pub fn reduced_expression_graph(&self, w: &Element, limit: usize) -> Result<ReducedExpressionGraph, CoxeterError> {
        let words: BTreeSet<Word> = self.reduced_words(w, limit)?;
        let vertices: Vec<Word> = words.into_iter().collect();
        let index: HashMap<&Word, usize> = vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            for (p, s, t, m) in braid_moves(self, &v.0) {
                let u = Word(apply_braid_move(&v.0, p, s, t, m));
                let j = index[&u];
                if i < j {
                    edges.push(RexEdge { from: i, to: j, position: p, first: s, second: t });
                }
            }
        }
        Ok(ReducedExpressionGraph { target: w.clone(), vertices, edges })
    }
}

#[cfg(test)]
mod tests {
    use super::super::DEFAULT_CLOSURE_LIMIT as L;
    use super::*;

    #[test]
    fn identity_graph() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let g = a2.reduced_expression_graph(&Element::identity(), L).unwrap();
        assert_eq!((g.vertices.len(), g.edges.len()), (1, 0));
    }

    #[test]
    fn a2_longest() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let w0 = a2.longest_element(&a2.all(), L).unwrap();
        let g = a2.reduced_expression_graph(&w0, L).unwrap();
        assert_eq!((g.vertices.len(), g.edges.len()), (2, 1));
        assert!(g.to_dot(&a2).starts_with("graph rex {"));
    }

    #[test]
    fn a3_longest_has_sixteen_words() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        let w0 = a3.longest_element(&a3.all(), L).unwrap();
        let g = a3.reduced_expression_graph(&w0, L).unwrap();
        assert_eq!(g.vertices.len(), 16);
        assert!(g.is_connected());
    }
}
