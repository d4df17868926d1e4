//! Finite-type classification and enumeration of finite parabolic subgroups.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CoxeterError, CoxeterSystem, Element, GeneratorId, GeneratorSet, Order, Side, Word};

/// Irreducible finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Rank two with `m(s,t) = m`; includes `A2`, `B2`, `G2` as `m = 3, 4, 6`.
    I2(u32),
}

impl FiniteType {
    pub fn rank(&self) -> usize {
        match *self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) | FiniteType::E(n) | FiniteType::H(n) => n,
            FiniteType::F4 => 4,
            FiniteType::I2(_) => 2,
        }
    }

    pub fn order(&self) -> Option<u128> {
        fn factorial(n: usize) -> Option<u128> {
            (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
        }
        match *self {
            FiniteType::A(n) => factorial(n + 1),
            FiniteType::B(n) => factorial(n)?.checked_mul(1u128.checked_shl(n as u32)?),
            FiniteType::D(n) => factorial(n)?.checked_mul(1u128.checked_shl(n as u32 - 1)?),
            FiniteType::E(6) => Some(51_840),
            FiniteType::E(7) => Some(2_903_040),
            FiniteType::E(8) => Some(696_729_600),
            FiniteType::E(_) => None,
            FiniteType::F4 => Some(1152),
            FiniteType::H(3) => Some(120),
            FiniteType::H(4) => Some(14_400),
            FiniteType::H(_) => None,
            FiniteType::I2(m) => Some(2 * m as u128),
        }
    }

    /// Number of reflections, which is also the length of the longest element.
    pub fn reflections(&self) -> usize {
        match *self {
            FiniteType::A(n) => n * (n + 1) / 2,
            FiniteType::B(n) => n * n,
            FiniteType::D(n) => n * (n - 1),
            FiniteType::E(6) => 36,
            FiniteType::E(7) => 63,
            FiniteType::E(_) => 120,
            FiniteType::F4 => 24,
            FiniteType::H(3) => 15,
            FiniteType::H(_) => 60,
            FiniteType::I2(m) => m as usize,
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => f.write_str("F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Order of a parabolic subgroup.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupOrder {
    Finite(u128),
    Infinite,
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => f.write_str("inf"),
        }
    }
}

/// Label of the edge between two nodes of the Coxeter diagram, if drawn.
fn edge(system: &CoxeterSystem, s: GeneratorId, t: GeneratorId) -> Option<Order> {
    match system.m(s, t) {
        Order::Finite(m) if m <= 2 => None,
        other => Some(other),
    }
}

impl CoxeterSystem {
    /// Connected components of the Coxeter diagram restricted to `subset`.
    pub fn components(&self, subset: &GeneratorSet) -> Vec<GeneratorSet> {
        let mut remaining = *subset;
        let mut out = Vec::new();
        while let Some(start) = remaining.iter().next() {
            let mut comp = GeneratorSet::singleton(start);
            let mut stack = vec![start];
            remaining.remove(start);
            while let Some(s) = stack.pop() {
                let next: Vec<_> = remaining.iter().filter(|&t| edge(self, s, t).is_some()).collect();
                for t in next {
                    remaining.remove(t);
                    comp.insert(t);
                    stack.push(t);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Classifies a connected subset; `None` when the parabolic subgroup is infinite.
    pub fn classify_component(&self, comp: &GeneratorSet) -> Option<FiniteType> {
        let nodes: Vec<_> = comp.iter().collect();
        let n = nodes.len();
        match n {
            0 => return None,
            1 => return Some(FiniteType::A(1)),
            2 => return self.m(nodes[0], nodes[1]).finite().map(FiniteType::I2),
            _ => {}
        }
        let mut edges = Vec::new();
        for (i, &s) in nodes.iter().enumerate() {
            for &t in &nodes[i + 1..] {
                if let Some(label) = edge(self, s, t) {
                    let m = label.finite()?;
                    if m >= 6 {
                        return None;
                    }
                    edges.push((s, t, m));
                }
            }
        }
        if edges.len() != n - 1 {
            return None;
        }
        let degree = |s: GeneratorId| edges.iter().filter(|e| e.0 == s || e.1 == s).count();
        let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
        let max_degree = nodes.iter().map(|&s| degree(s)).max().unwrap_or(0);
        if heavy.len() > 1 {
            return None;
        }
        if let Some(&&(a, b, m)) = heavy.first() {
            if max_degree > 2 {
                return None;
            }
            let at_end = degree(a) == 1 || degree(b) == 1;
            return match (m, at_end) {
                (4, true) => Some(FiniteType::B(n)),
                (4, false) if n == 4 => Some(FiniteType::F4),
                (5, true) if n <= 4 => Some(FiniteType::H(n)),
                _ => None,
            };
        }
        if max_degree <= 2 {
            return Some(FiniteType::A(n));
        }
        let branch: Vec<_> = nodes.iter().copied().filter(|&s| degree(s) >= 3).collect();
        if branch.len() != 1 || degree(branch[0]) != 3 {
            return None;
        }
        let centre = branch[0];
        let mut arms: Vec<usize> = edges
            .iter()
            .filter_map(|e| {
                if e.0 == centre {
                    Some(e.1)
                } else if e.1 == centre {
                    Some(e.0)
                } else {
                    None
                }
            })
            .map(|first| {
                let (mut prev, mut cur, mut len) = (centre, first, 1);
                loop {
                    let next = edges.iter().find_map(|e| {
                        if e.0 == cur && e.1 != prev {
                            Some(e.1)
                        } else if e.1 == cur && e.0 != prev {
                            Some(e.0)
                        } else {
                            None
                        }
                    });
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => return len,
                    }
                }
            })
            .collect();
        arms.sort_unstable();
        match arms.as_slice() {
            [1, 1, _] => Some(FiniteType::D(n)),
            [1, 2, 2] => Some(FiniteType::E(6)),
            [1, 2, 3] => Some(FiniteType::E(7)),
            [1, 2, 4] => Some(FiniteType::E(8)),
            _ => None,
        }
    }

    /// Finite types of the components of `subset`, or `None` if any is infinite.
    pub fn classify(&self, subset: &GeneratorSet) -> Option<Vec<FiniteType>> {
        self.components(subset).iter().map(|c| self.classify_component(c)).collect()
    }

    pub fn is_finitary(&self, subset: &GeneratorSet) -> bool {
        self.classify(subset).is_some()
    }

    /// `|W_I|` read off the classification.
    pub fn group_order(&self, subset: &GeneratorSet) -> Result<GroupOrder, CoxeterError> {
        let Some(types) = self.classify(subset) else {
            return Ok(GroupOrder::Infinite);
        };
        types
            .iter()
            .try_fold(1u128, |acc, t| t.order().and_then(|o| acc.checked_mul(o)))
            .map(GroupOrder::Finite)
            .ok_or(CoxeterError::OrderOverflow)
    }

    /// Human readable type string, e.g. `A1xI2(3)`; `None` when infinite.
    pub fn type_name(&self, subset: &GeneratorSet) -> Option<String> {
        let types = self.classify(subset)?;
        if types.is_empty() {
            return Some("trivial".to_string());
        }
        let mut types = types;
        types.sort();
        Some(types.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("x"))
    }

    /// Finitary subsets of the given size.
    pub fn finitary_subsets(&self, k: usize) -> Vec<GeneratorSet> {
        self.all().subsets_of_size(k).into_iter().filter(|j| self.is_finitary(j)).collect()
    }

    /// All elements of `W_I`, ordered by length and then lexicographically.
    pub fn enumerate(&self, subset: &GeneratorSet, limit: usize) -> Result<Vec<Element>, CoxeterError> {
        Ok(CayleyTable::new(self, subset, limit)?.elements)
    }

    /// Longest element of a finite `W_I`, found by greedy ascent.
    pub fn longest_element(&self, subset: &GeneratorSet, limit: usize) -> Result<Element, CoxeterError> {
        if !self.is_finitary(subset) {
            return Err(CoxeterError::NotFinitary(self.format_set(subset)));
        }
        let mut cur = Element::identity();
        loop {
            let d = self.descents(&cur, Side::Right, limit)?;
            match subset.iter().find(|s| !d.contains(*s)) {
                Some(s) => cur = self.multiply_generator(&cur, s, limit)?,
                None => return Ok(cur),
            }
        }
    }
}

/// Multiplication table of a finite parabolic subgroup `W_I`.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    subset: GeneratorSet,
    gens: Vec<GeneratorId>,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn new(system: &CoxeterSystem, subset: &GeneratorSet, limit: usize) -> Result<Self, CoxeterError> {
        if !system.is_finitary(subset) {
            return Err(CoxeterError::NotFinitary(system.format_set(subset)));
        }
        let gens: Vec<_> = subset.iter().collect();
        let mut elements = vec![Element::identity()];
        let mut index = HashMap::from([(Element::identity(), 0)]);
        let mut queue = VecDeque::from([0usize]);
        let mut edges: Vec<Vec<usize>> = vec![Vec::new()];
        while let Some(i) = queue.pop_front() {
            let x = elements[i].clone();
            let mut row = Vec::with_capacity(gens.len());
            for &s in &gens {
                let y = system.multiply_generator(&x, s, limit)?;
                let j = match index.get(&y) {
                    Some(&j) => j,
                    None => {
                        let j = elements.len();
                        index.insert(y.clone(), j);
                        elements.push(y);
                        edges.push(Vec::new());
                        queue.push_back(j);
                        j
                    }
                };
                row.push(j);
            }
            edges[i] = row;
        }
        // renumber by (length, word)
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by(|&a, &b| {
            (elements[a].length(), elements[a].normal()).cmp(&(elements[b].length(), elements[b].normal()))
        });
        let mut new_id = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = new;
        }
        let sorted: Vec<Element> = order.iter().map(|&o| elements[o].clone()).collect();
        let right: Vec<Vec<usize>> = order.iter().map(|&o| edges[o].iter().map(|&j| new_id[j]).collect()).collect();
        let index = sorted.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut table = CayleyTable { subset: *subset, gens, elements: sorted, index, right, left: Vec::new() };
        table.left = (0..table.len())
            .map(|i| {
                (0..table.gens.len())
                    .map(|k| {
                        // s·x = (x⁻¹·s)⁻¹
                        let inv = table.inverse(i);
                        table.inverse(table.right[inv][k])
                    })
                    .collect()
            })
            .collect();
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn subset(&self) -> GeneratorSet {
        self.subset
    }

    pub fn gens(&self) -> &[GeneratorId] {
        &self.gens
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn length(&self, i: usize) -> usize {
        self.elements[i].length()
    }

    fn local(&self, s: GeneratorId) -> usize {
        self.gens.iter().position(|&g| g == s).expect("generator outside the table's subset")
    }

    /// `x · s`.
    pub fn mul_gen(&self, i: usize, s: GeneratorId) -> usize {
        self.right[i][self.local(s)]
    }

    /// `s · x`.
    pub fn gen_mul(&self, s: GeneratorId, i: usize) -> usize {
        self.left[i][self.local(s)]
    }

    pub fn mul_word(&self, i: usize, w: &[GeneratorId]) -> usize {
        w.iter().fold(i, |acc, &s| self.mul_gen(acc, s))
    }

    pub fn inverse(&self, i: usize) -> usize {
        let rev: Vec<_> = self.elements[i].normal().0.iter().rev().copied().collect();
        self.mul_word(0, &rev)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul_word(i, &self.elements[j].normal().0)
    }

    /// Minimal length representative of `x W_J`.
    pub fn coset_rep(&self, i: usize, j: &GeneratorSet) -> usize {
        let mut cur = i;
        'outer: loop {
            for s in j.iter() {
                let y = self.mul_gen(cur, s);
                if self.length(y) < self.length(cur) {
                    cur = y;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Elements of the coset `x W_J`, sorted by index.
    pub fn coset(&self, i: usize, j: &GeneratorSet) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![i];
        seen[i] = true;
        let mut out = Vec::new();
        while let Some(x) = stack.pop() {
            out.push(x);
            for s in j.iter() {
                let y = self.mul_gen(x, s);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Minimal coset representatives of `W / W_J`, sorted by index.
    pub fn coset_reps(&self, j: &GeneratorSet) -> Vec<usize> {
        let mut reps: Vec<_> = (0..self.len()).filter(|&x| self.coset_rep(x, j) == x).collect();
        reps.sort_unstable();
        reps
    }

    /// Index of the longest element.
    pub fn longest(&self) -> usize {
        self.len() - 1
    }

    pub fn word_of(&self, i: usize) -> &Word {
        self.elements[i].normal()
    }
}

#[cfg(test)]
mod tests {
    use super::super::DEFAULT_CLOSURE_LIMIT as L;
    use super::*;

    #[test]
    fn rank_three_finite_types() {
        let h3 = CoxeterSystem::type_h3().unwrap();
        assert!(h3.is_finitary(&h3.all()));
        assert_eq!(h3.type_name(&h3.all()).unwrap(), "H3");
        let g2_tilde = CoxeterSystem::from_table(&[&[1, 3, 2], &[3, 1, 6], &[2, 6, 1]]).unwrap();
        assert!(!g2_tilde.is_finitary(&g2_tilde.all()));
        assert!(h3.is_finitary(&GeneratorSet::empty()));
        assert_eq!(h3.group_order(&GeneratorSet::empty()).unwrap(), GroupOrder::Finite(1));
    }

    #[test]
    fn orders() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        assert_eq!(a3.group_order(&a3.all()).unwrap(), GroupOrder::Finite(24));
        let h3 = CoxeterSystem::type_h3().unwrap();
        assert_eq!(h3.group_order(&h3.all()).unwrap(), GroupOrder::Finite(120));
        for m in 2..8 {
            let i2 = CoxeterSystem::dihedral(m).unwrap();
            assert_eq!(i2.group_order(&i2.all()).unwrap(), GroupOrder::Finite(2 * m as u128));
        }
        let free = CoxeterSystem::from_table(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(free.group_order(&free.all()).unwrap(), GroupOrder::Infinite);
    }

    #[test]
    fn larger_types() {
        let d4 = CoxeterSystem::from_table(&[&[1, 3, 2, 2], &[3, 1, 3, 3], &[2, 3, 1, 2], &[2, 3, 2, 1]]).unwrap();
        assert_eq!(d4.classify(&d4.all()).unwrap(), vec![FiniteType::D(4)]);
        assert_eq!(d4.group_order(&d4.all()).unwrap(), GroupOrder::Finite(192));
        let f4 = CoxeterSystem::from_table(&[&[1, 3, 2, 2], &[3, 1, 4, 2], &[2, 4, 1, 3], &[2, 2, 3, 1]]).unwrap();
        assert_eq!(f4.classify(&f4.all()).unwrap(), vec![FiniteType::F4]);
        let b4 = CoxeterSystem::type_b(4).unwrap();
        assert_eq!(b4.group_order(&b4.all()).unwrap(), GroupOrder::Finite(384));
        let a_tilde2 = CoxeterSystem::from_table(&[&[1, 3, 3], &[3, 1, 3], &[3, 3, 1]]).unwrap();
        assert!(!a_tilde2.is_finitary(&a_tilde2.all()));
        let h5ish = CoxeterSystem::from_table(&[
            &[1, 5, 2, 2, 2],
            &[5, 1, 3, 2, 2],
            &[2, 3, 1, 3, 2],
            &[2, 2, 3, 1, 3],
            &[2, 2, 2, 3, 1],
        ])
        .unwrap();
        assert!(!h5ish.is_finitary(&h5ish.all()));
    }

    #[test]
    fn enumeration_small() {
        let a1a1 = CoxeterSystem::dihedral(2).unwrap();
        let els = a1a1.enumerate(&a1a1.all(), L).unwrap();
        let words: Vec<_> = els.iter().map(|e| e.normal().clone()).collect();
        assert_eq!(words, vec![Word::from_indices(&[]), Word::from_indices(&[0]), Word::from_indices(&[1]), Word::from_indices(&[0, 1])]);
        let s = GeneratorSet::singleton(GeneratorId(0));
        assert_eq!(a1a1.enumerate(&s, L).unwrap().len(), 2);
        let free = CoxeterSystem::from_table(&[&[1, 0], &[0, 1]]).unwrap();
        assert!(matches!(free.enumerate(&free.all(), L), Err(CoxeterError::NotFinitary(_))));
    }

    #[test]
    fn longest_elements() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        assert_eq!(a3.longest_element(&a3.all(), L).unwrap().length(), 6);
        let s = GeneratorSet::singleton(GeneratorId(1));
        assert_eq!(a3.longest_element(&s, L).unwrap().normal(), &Word::from_indices(&[1]));
        for m in 2..8 {
            let i2 = CoxeterSystem::dihedral(m).unwrap();
            assert_eq!(i2.longest_element(&i2.all(), L).unwrap().length(), m as usize);
        }
    }

    #[test]
    fn table_consistency() {
        let b3 = CoxeterSystem::type_b(3).unwrap();
        let t = CayleyTable::new(&b3, &b3.all(), L).unwrap();
        assert_eq!(t.len(), 48);
        for i in 0..t.len() {
            assert_eq!(t.mul(i, t.inverse(i)), 0);
            for s in b3.generators() {
                assert_eq!(t.gen_mul(s, t.mul_gen(i, s)), t.mul_gen(t.gen_mul(s, i), s));
                assert_eq!(t.length(t.mul_gen(i, s)).abs_diff(t.length(i)), 1);
            }
        }
        assert_eq!(t.length(t.longest()), 9);
    }
}
