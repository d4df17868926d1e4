use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CoxeterError, CoxeterSystem, GeneratorId, Order};

/// Default cap on the size of a braid closure.
pub const DEFAULT_CLOSURE_LIMIT: usize = 1 << 20;

/// A positive word in the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<GeneratorId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_indices(indices: &[u8]) -> Self {
        Word(indices.iter().map(|&i| GeneratorId(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[GeneratorId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Parses space separated generator names; a lone `e` is the empty word unless
    /// some generator is called `e`.
    pub fn parse(system: &CoxeterSystem, text: &str) -> Result<Word, CoxeterError> {
        if text.trim() == "e" && system.lookup("e").is_none() {
            return Ok(Word::empty());
        }
        text.split_whitespace()
            .map(|tok| system.lookup(tok).ok_or_else(|| CoxeterError::UnknownGenerator(tok.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn display<'a>(&'a self, system: &'a CoxeterSystem) -> WordDisplay<'a> {
        WordDisplay { word: self, system }
    }

    pub fn validate(&self, system: &CoxeterSystem) -> Result<(), CoxeterError> {
        match self.0.iter().find(|s| !system.contains(**s)) {
            Some(s) => Err(CoxeterError::InvalidLetter(s.0)),
            None => Ok(()),
        }
    }
}

/// Space separated rendering of a word, `e` for the empty word.
pub struct WordDisplay<'a> {
    word: &'a Word,
    system: &'a CoxeterSystem,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        for (i, s) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.system.name(*s))?;
        }
        Ok(())
    }
}

/// Exponent of a letter in a word over `S ∪ S⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A word in the generators and their formal inverses.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedWord(pub Vec<(GeneratorId, Sign)>);

impl SignedWord {
    pub fn positive(word: &Word) -> Self {
        SignedWord(word.0.iter().map(|&s| (s, Sign::Pos)).collect())
    }

    pub fn inverse(&self) -> Self {
        SignedWord(self.0.iter().rev().map(|&(s, e)| (s, e.flip())).collect())
    }

    pub fn concat(&self, other: &SignedWord) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    /// Image in `W`, where every generator is an involution.
    pub fn erase_signs(&self) -> Word {
        Word(self.0.iter().map(|&(s, _)| s).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The alternating word `s t s ...` of length `m`.
pub fn alternating(s: GeneratorId, t: GeneratorId, m: usize) -> Vec<GeneratorId> {
    (0..m).map(|i| if i % 2 == 0 { s } else { t }).collect()
}

/// Position-wise braid moves available in `word`: `(position, s, t, m)` meaning the
/// alternating subword `s t s ...` of length `m` starts at `position`.
pub fn braid_moves(system: &CoxeterSystem, word: &[GeneratorId]) -> Vec<(usize, GeneratorId, GeneratorId, usize)> {
    let mut out = Vec::new();
    for p in 0..word.len().saturating_sub(1) {
        let (s, t) = (word[p], word[p + 1]);
        if s == t {
            continue;
        }
        let Order::Finite(m) = system.m(s, t) else { continue };
        let m = m as usize;
        if p + m > word.len() {
            continue;
        }
        let alternates = word[p..p + m]
            .iter()
            .enumerate()
            .all(|(i, &x)| x == if i % 2 == 0 { s } else { t });
        if alternates {
            out.push((p, s, t, m));
        }
    }
    out
}

/// Applies the braid move at `position` (which must be valid).
pub fn apply_braid_move(word: &[GeneratorId], position: usize, s: GeneratorId, t: GeneratorId, m: usize) -> Vec<GeneratorId> {
    let mut out = word.to_vec();
    out[position..position + m].copy_from_slice(&alternating(t, s, m));
    out
}

impl CoxeterSystem {
    /// All words reachable from `w` by braid moves, sorted lexicographically.
    pub fn braid_closure(&self, w: &Word, limit: usize) -> Result<BTreeSet<Word>, CoxeterError> {
        w.validate(self)?;
        if limit == 0 {
            return Err(CoxeterError::ClosureLimit { limit });
        }
        let mut seen: HashSet<Vec<GeneratorId>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.0.clone());
        queue.push_back(w.0.clone());
        while let Some(cur) = queue.pop_front() {
            for (p, s, t, m) in braid_moves(self, &cur) {
                let next = apply_braid_move(&cur, p, s, t, m);
                if !seen.contains(&next) {
                    if seen.len() >= limit {
                        return Err(CoxeterError::ClosureLimit { limit });
                    }
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(seen.into_iter().map(Word).collect())
    }

    /// True iff `u` and `v` are equal in the positive braid monoid.
    ///
    /// Braid relations preserve length and generate the monoid congruence, so
    /// equality reduces to membership in the braid closure.
    pub fn positive_braid_equal(&self, u: &Word, v: &Word, limit: usize) -> Result<bool, CoxeterError> {
        v.validate(self)?;
        if u.len() != v.len() {
            u.validate(self)?;
            return Ok(false);
        }
        Ok(self.braid_closure(u, limit)?.contains(v))
    }
}
