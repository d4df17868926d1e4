use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::CoxeterError;

/// Index of a simple reflection inside its system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorId(pub u8);

impl GeneratorId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Off-diagonal Coxeter matrix entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(m) => Some(m),
            Order::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(m) => write!(f, "{m}"),
            Order::Infinite => f.write_str("inf"),
        }
    }
}

/// A Coxeter system: named generators and the symmetric matrix of `m(s,t)`.
///
/// The diagonal carries the value 1 by convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterSystem {
    names: Vec<String>,
    matrix: Vec<Vec<Order>>,
}

impl CoxeterSystem {
    /// Validates a square table. Generators get default names `s0, s1, ...`.
    pub fn from_matrix(matrix: Vec<Vec<Order>>) -> Result<Self, CoxeterError> {
        let names = (0..matrix.len()).map(|i| format!("s{i}")).collect();
        Self::with_names(names, matrix)
    }

    /// Convenience constructor taking finite entries only; `0` stands for infinity.
    pub fn from_table(table: &[&[u32]]) -> Result<Self, CoxeterError> {
        let matrix = table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&m| if m == 0 { Order::Infinite } else { Order::Finite(m) })
                    .collect()
            })
            .collect();
        Self::from_matrix(matrix)
    }

    pub fn with_names(names: Vec<String>, matrix: Vec<Vec<Order>>) -> Result<Self, CoxeterError> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(CoxeterError::EmptySystem);
        }
        if rank > 128 {
            return Err(CoxeterError::RankTooLarge(rank));
        }
        if names.len() != rank {
            return Err(CoxeterError::NameCount { expected: rank, found: names.len() });
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != rank {
                return Err(CoxeterError::NotSquare { row: i, len: row.len(), rank });
            }
        }
        for i in 0..rank {
            if matrix[i][i] != Order::Finite(1) {
                return Err(CoxeterError::BadDiagonal { index: i, value: matrix[i][i] });
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if matrix[i][j] != matrix[j][i] {
                    return Err(CoxeterError::Asymmetric { i, j });
                }
                if let Order::Finite(m) = matrix[i][j] {
                    if m < 2 {
                        return Err(CoxeterError::EntryTooSmall { i, j, value: m });
                    }
                }
            }
        }
        let mut seen = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.chars().any(char::is_whitespace) {
                return Err(CoxeterError::BadName(n.clone()));
            }
            if let Some(j) = seen.insert(n.as_str(), i) {
                return Err(CoxeterError::DuplicateName { name: n.clone(), first: j, second: i });
            }
        }
        Ok(Self { names, matrix })
    }

    /// Rank 2 system `I2(m)`.
    pub fn dihedral(m: u32) -> Result<Self, CoxeterError> {
        Self::from_table(&[&[1, m], &[m, 1]])
    }

    /// Type `A_n` (symmetric group on n+1 letters).
    pub fn type_a(n: usize) -> Result<Self, CoxeterError> {
        Self::linear(n, None)
    }

    /// Type `B_n`, the label 4 on the last edge.
    pub fn type_b(n: usize) -> Result<Self, CoxeterError> {
        Self::linear(n, Some(4))
    }

    /// Type `H_3`.
    pub fn type_h3() -> Result<Self, CoxeterError> {
        Self::from_table(&[&[1, 3, 2], &[3, 1, 5], &[2, 5, 1]])
    }

    /// Rank 3 reducible `A1 x I2(m)`; generator 0 commutes with the other two.
    pub fn a1_times_dihedral(m: u32) -> Result<Self, CoxeterError> {
        Self::from_table(&[&[1, 2, 2], &[2, 1, m], &[2, m, 1]])
    }

    fn linear(n: usize, last: Option<u32>) -> Result<Self, CoxeterError> {
        let mut matrix = vec![vec![Order::Finite(2); n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = Order::Finite(1);
        }
        for i in 0..n.saturating_sub(1) {
            let m = if i + 2 == n { last.unwrap_or(3) } else { 3 };
            matrix[i][i + 1] = Order::Finite(m);
            matrix[i + 1][i] = Order::Finite(m);
        }
        Self::from_matrix(matrix)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        (0..self.rank()).map(|i| GeneratorId(i as u8))
    }

    pub fn name(&self, s: GeneratorId) -> &str {
        &self.names[s.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<GeneratorId> {
        self.names.iter().position(|n| n == name).map(|i| GeneratorId(i as u8))
    }

    pub fn m(&self, s: GeneratorId, t: GeneratorId) -> Order {
        self.matrix[s.index()][t.index()]
    }

    pub fn matrix(&self) -> &[Vec<Order>] {
        &self.matrix
    }

    pub fn contains(&self, s: GeneratorId) -> bool {
        s.index() < self.rank()
    }

    /// Unordered pairs `{s,t}` with finite `m(s,t)`, in lexicographic order.
    pub fn braid_pairs(&self) -> Vec<(GeneratorId, GeneratorId, u32)> {
        let mut out = Vec::new();
        for s in self.generators() {
            for t in self.generators().filter(|t| *t > s) {
                if let Order::Finite(m) = self.m(s, t) {
                    out.push((s, t, m));
                }
            }
        }
        out
    }

    /// Restriction of the matrix to a subset, keeping generator names.
    pub fn restrict(&self, subset: &GeneratorSet) -> CoxeterSystem {
        let gens: Vec<_> = subset.iter().collect();
        let names = gens.iter().map(|g| self.name(*g).to_string()).collect();
        let matrix = gens
            .iter()
            .map(|&s| gens.iter().map(|&t| self.m(s, t)).collect())
            .collect();
        CoxeterSystem { names, matrix }
    }

    pub fn all(&self) -> GeneratorSet {
        GeneratorSet::from_iter(self.generators())
    }

    /// Formats a subset as `{s,t}` using generator names.
    pub fn format_set(&self, set: &GeneratorSet) -> String {
        let inner: Vec<_> = set.iter().map(|g| self.name(g)).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// A subset of the generators, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GeneratorSet(u128);

impl GeneratorSet {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn singleton(s: GeneratorId) -> Self {
        Self(1 << s.0)
    }

    pub fn contains(&self, s: GeneratorId) -> bool {
        s.0 < 128 && self.0 & (1 << s.0) != 0
    }

    pub fn insert(&mut self, s: GeneratorId) {
        self.0 |= 1 << s.0;
    }

    pub fn remove(&mut self, s: GeneratorId) {
        self.0 &= !(1 << s.0);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(&self, other: &GeneratorSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = GeneratorId> {
        let bits = self.0;
        (0..128u8).filter(move |i| bits & (1 << i) != 0).map(GeneratorId)
    }

    pub fn without(&self, s: GeneratorId) -> Self {
        let mut out = *self;
        out.remove(s);
        out
    }

    /// All subsets of `self` with exactly `k` elements, in increasing bitmask order.
    pub fn subsets_of_size(&self, k: usize) -> Vec<GeneratorSet> {
        fn go(gens: &[GeneratorId], k: usize, acc: GeneratorSet, out: &mut Vec<GeneratorSet>) {
            if k == 0 {
                out.push(acc);
                return;
            }
            for (i, &g) in gens.iter().enumerate() {
                if gens.len() - i < k {
                    break;
                }
                let mut next = acc;
                next.insert(g);
                go(&gens[i + 1..], k - 1, next, out);
            }
        }
        let gens: Vec<_> = self.iter().collect();
        let mut out = Vec::new();
        go(&gens, k, GeneratorSet::empty(), &mut out);
        out.sort();
        out
    }
}

impl FromIterator<GeneratorId> for GeneratorSet {
    fn from_iter<T: IntoIterator<Item = GeneratorId>>(iter: T) -> Self {
        let mut set = GeneratorSet::empty();
        for s in iter {
            set.insert(s);
        }
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_is_valid() {
        let sys = CoxeterSystem::dihedral(3).unwrap();
        assert_eq!(sys.rank(), 2);
        assert_eq!(sys.m(GeneratorId(0), GeneratorId(1)), Order::Finite(3));
    }

    #[test]
    fn off_diagonal_one_rejected() {
        let err = CoxeterSystem::from_table(&[&[1, 1], &[1, 1]]).unwrap_err();
        assert!(matches!(err, CoxeterError::EntryTooSmall { .. }));
    }

    #[test]
    fn asymmetric_rejected() {
        let err = CoxeterSystem::from_table(&[&[1, 3], &[4, 1]]).unwrap_err();
        assert!(matches!(err, CoxeterError::Asymmetric { .. }));
    }

    #[test]
    fn diagonal_must_be_one() {
        let err = CoxeterSystem::from_table(&[&[2, 3], &[3, 1]]).unwrap_err();
        assert!(matches!(err, CoxeterError::BadDiagonal { .. }));
    }

    #[test]
    fn commuting_rank_three_is_valid() {
        let sys = CoxeterSystem::from_table(&[&[1, 2, 2], &[2, 1, 2], &[2, 2, 1]]).unwrap();
        assert_eq!(sys.braid_pairs().len(), 3);
    }

    #[test]
    fn subsets() {
        let all = GeneratorSet::from_iter((0..4).map(GeneratorId));
        assert_eq!(all.subsets_of_size(2).len(), 6);
        assert_eq!(all.subsets_of_size(0), vec![GeneratorSet::empty()]);
        assert_eq!(all.subsets_of_size(4), vec![all]);
        assert!(all.subsets_of_size(5).is_empty());
    }
}
