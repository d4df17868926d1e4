//! Independent models of small Coxeter groups: permutations, signed permutations and
//! symmetries of a regular polygon. Nothing here uses the word engine.

#![allow(dead_code)]

use coxdiag::coxeter::Word;

/// Signed permutation in window notation: `w[i]` is the image of `i + 1`, up to sign.
pub type Signed = Vec<i32>;

pub fn identity(n: usize) -> Signed {
    (1..=n as i32).collect()
}

/// `a ∘ b`.
pub fn compose(a: &Signed, b: &Signed) -> Signed {
    b.iter().map(|&x| x.signum() * a[x.unsigned_abs() as usize - 1]).collect()
}

pub fn transposition(n: usize, i: usize) -> Signed {
    let mut w = identity(n);
    w.swap(i, i + 1);
    w
}

pub fn negate_first(n: usize) -> Signed {
    let mut w = identity(n);
    w[0] = -1;
    w
}

pub fn inversions(w: &Signed) -> usize {
    (0..w.len()).flat_map(|i| (i + 1..w.len()).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count()
}

/// Length in the type B generators (negate first coordinate, adjacent transpositions):
/// inversions plus the negated sum of the negative entries.
pub fn type_b_length(w: &Signed) -> usize {
    inversions(w) + w.iter().filter(|&&x| x < 0).map(|&x| (-x) as usize).sum::<usize>()
}

pub fn all_permutations(n: usize) -> Vec<Signed> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as i32);
            out.push(q);
        }
    }
    out
}

pub fn all_signed_permutations(n: usize) -> Vec<Signed> {
    let mut out = Vec::new();
    for p in all_permutations(n) {
        for mask in 0..1u32 << n {
            out.push(p.iter().enumerate().map(|(i, &x)| if mask >> i & 1 == 1 { -x } else { x }).collect());
        }
    }
    out
}

/// Images of `s0, s1, s2` for A3 (adjacent transpositions of four letters).
pub fn a3_generators() -> Vec<Signed> {
    (0..3).map(|i| transposition(4, i)).collect()
}

/// Images of `s0, s1, s2` for B3, where `m(s1, s2) = 4`.
pub fn b3_generators() -> Vec<Signed> {
    vec![transposition(3, 1), transposition(3, 0), negate_first(3)]
}

pub fn image(gens: &[Signed], w: &Word) -> Signed {
    w.letters().iter().fold(identity(gens[0].len()), |acc, s| compose(&acc, &gens[s.index()]))
}

/// Symmetry `x ↦ sign·x + shift` of `Z/m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dihedral {
    pub sign: i64,
    pub shift: i64,
}

impl Dihedral {
    pub fn compose(self, other: Dihedral, m: i64) -> Dihedral {
        Dihedral { sign: self.sign * other.sign, shift: (self.sign * other.shift + self.shift).rem_euclid(m) }
    }

    pub fn all(m: i64) -> Vec<Dihedral> {
        [1, -1].iter().flat_map(|&sign| (0..m).map(move |shift| Dihedral { sign, shift })).collect()
    }

    /// The reflections `x ↦ -x` and `x ↦ 1 - x`; their product rotates by one step.
    pub fn generators() -> [Dihedral; 2] {
        [Dihedral { sign: -1, shift: 0 }, Dihedral { sign: -1, shift: 1 }]
    }

    pub fn image(w: &Word, m: i64) -> Dihedral {
        let g = Self::generators();
        w.letters().iter().fold(Dihedral { sign: 1, shift: 0 }, |acc, s| acc.compose(g[s.index()], m))
    }
}
