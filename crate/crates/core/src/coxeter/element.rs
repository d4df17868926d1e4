use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CoxeterError, CoxeterSystem, GeneratorId, GeneratorSet, Word};

/// A group element, stored as its lexicographically least reduced word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Element {
    normal: Word,
}

impl Element {
    pub fn identity() -> Self {
        Element { normal: Word::empty() }
    }

    pub fn normal(&self) -> &Word {
        &self.normal
    }

    pub fn length(&self) -> usize {
        self.normal.len()
    }

    pub fn is_identity(&self) -> bool {
        self.normal.is_empty()
    }

    pub fn display<'a>(&'a self, system: &'a CoxeterSystem) -> impl fmt::Display + 'a {
        self.normal.display(system)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl CoxeterSystem {
    /// Tits' criterion: a word is reduced iff nothing in its braid closure has two
    /// equal adjacent letters.
    pub fn is_reduced(&self, w: &Word, limit: usize) -> Result<bool, CoxeterError> {
        let closure = self.braid_closure(w, limit)?;
        Ok(!closure.iter().any(|u| u.0.windows(2).any(|p| p[0] == p[1])))
    }

    /// Reduced words of an element, sorted.
    pub fn reduced_words(&self, x: &Element, limit: usize) -> Result<BTreeSet<Word>, CoxeterError> {
        self.braid_closure(&x.normal, limit)
    }

    /// Builds an element from a reduced word (the caller guarantees reducedness).
    fn from_reduced(&self, w: &Word, limit: usize) -> Result<Element, CoxeterError> {
        let closure = self.braid_closure(w, limit)?;
        let normal = closure.into_iter().next().expect("closure contains its seed");
        Ok(Element { normal })
    }

    /// `x · s`, using the exchange condition: `x s < x` iff some reduced word of `x`
    /// ends in `s`.
    pub fn multiply_generator(&self, x: &Element, s: GeneratorId, limit: usize) -> Result<Element, CoxeterError> {
        if !self.contains(s) {
            return Err(CoxeterError::InvalidLetter(s.0));
        }
        let closure = self.braid_closure(&x.normal, limit)?;
        if let Some(u) = closure.iter().find(|u| u.0.last() == Some(&s)) {
            let shorter = Word(u.0[..u.len() - 1].to_vec());
            return self.from_reduced(&shorter, limit);
        }
        let mut longer = x.normal.0.clone();
        longer.push(s);
        self.from_reduced(&Word(longer), limit)
    }

    /// `s · x`.
    pub fn generator_multiply(&self, s: GeneratorId, x: &Element, limit: usize) -> Result<Element, CoxeterError> {
        if !self.contains(s) {
            return Err(CoxeterError::InvalidLetter(s.0));
        }
        let closure = self.braid_closure(&x.normal, limit)?;
        if let Some(u) = closure.iter().find(|u| u.0.first() == Some(&s)) {
            return self.from_reduced(&Word(u.0[1..].to_vec()), limit);
        }
        let mut longer = vec![s];
        longer.extend_from_slice(&x.normal.0);
        self.from_reduced(&Word(longer), limit)
    }

    /// Canonical form: the lexicographically least reduced word of the element `w` names.
    pub fn normal_form(&self, w: &Word, limit: usize) -> Result<Element, CoxeterError> {
        w.validate(self)?;
        w.0.iter().try_fold(Element::identity(), |acc, &s| self.multiply_generator(&acc, s, limit))
    }

    pub fn multiply(&self, a: &Element, b: &Element, limit: usize) -> Result<Element, CoxeterError> {
        b.normal.0.iter().try_fold(a.clone(), |acc, &s| self.multiply_generator(&acc, s, limit))
    }

    pub fn inverse(&self, a: &Element, limit: usize) -> Result<Element, CoxeterError> {
        self.from_reduced(&a.normal.reversed(), limit)
    }

    pub fn descents(&self, x: &Element, side: Side, limit: usize) -> Result<GeneratorSet, CoxeterError> {
        let closure = self.braid_closure(&x.normal, limit)?;
        Ok(closure
            .iter()
            .filter_map(|u| match side {
                Side::Right => u.0.last().copied(),
                Side::Left => u.0.first().copied(),
            })
            .collect())
    }

    /// The unique minimal length element of the coset `x W_I`.
    pub fn min_coset_representative(&self, x: &Element, subset: &GeneratorSet, limit: usize) -> Result<Element, CoxeterError> {
        let mut cur = x.clone();
        loop {
            let d = self.descents(&cur, Side::Right, limit)?;
            match d.iter().find(|s| subset.contains(*s)) {
                Some(s) => cur = self.multiply_generator(&cur, s, limit)?,
                None => return Ok(cur),
            }
        }
    }

    /// The chambers `x, x s1, x s1 s2, ...` visited by the gallery of `w` from `x`,
    /// together with whether the gallery is minimal (iff `w` is reduced).
    pub fn gallery_from_word(&self, x: &Element, w: &Word, limit: usize) -> Result<(Vec<Element>, bool), CoxeterError> {
        w.validate(self)?;
        let mut chambers = vec![x.clone()];
        let mut cur = x.clone();
        for &s in &w.0 {
            cur = self.multiply_generator(&cur, s, limit)?;
            chambers.push(cur.clone());
        }
        let minimal = self.is_reduced(w, limit)?;
        Ok((chambers, minimal))
    }
}

#[cfg(test)]
mod tests {
    use super::super::DEFAULT_CLOSURE_LIMIT as L;
    use super::*;

    fn w(ix: &[u8]) -> Word {
        Word::from_indices(ix)
    }

    #[test]
    fn reducedness() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        assert!(!a2.is_reduced(&w(&[0, 0]), L).unwrap());
        assert!(a2.is_reduced(&w(&[0, 1, 0]), L).unwrap());
        let b2 = CoxeterSystem::dihedral(4).unwrap();
        assert!(b2.is_reduced(&w(&[0, 1, 0, 1]), L).unwrap());
        assert!(!b2.is_reduced(&w(&[0, 1, 0, 1, 0]), L).unwrap());
    }

    #[test]
    fn normal_forms() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        assert!(a2.normal_form(&w(&[0, 0]), L).unwrap().is_identity());
        assert_eq!(a2.normal_form(&w(&[1, 0, 1]), L).unwrap().normal(), &w(&[0, 1, 0]));
        assert!(a2.normal_form(&w(&[0, 1, 1, 0]), L).unwrap().is_identity());
        let nf = a2.normal_form(&w(&[1, 0, 1]), L).unwrap();
        assert_eq!(a2.normal_form(nf.normal(), L).unwrap(), nf);
    }

    #[test]
    fn products() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let st = a2.normal_form(&w(&[0, 1]), L).unwrap();
        let ts = a2.normal_form(&w(&[1, 0]), L).unwrap();
        let s = a2.normal_form(&w(&[0]), L).unwrap();
        assert!(a2.multiply(&st, &ts, L).unwrap().is_identity());
        assert!(a2.multiply(&s, &s, L).unwrap().is_identity());
        assert_eq!(a2.multiply(&st, &Element::identity(), L).unwrap(), st);
        assert_eq!(a2.inverse(&st, L).unwrap(), ts);
    }

    #[test]
    fn descent_sets() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let e = Element::identity();
        assert!(a2.descents(&e, Side::Right, L).unwrap().is_empty());
        let w0 = a2.normal_form(&w(&[0, 1, 0]), L).unwrap();
        for side in [Side::Left, Side::Right] {
            assert_eq!(a2.descents(&w0, side, L).unwrap(), a2.all());
        }
        let s = a2.normal_form(&w(&[0]), L).unwrap();
        assert_eq!(a2.descents(&s, Side::Right, L).unwrap(), GeneratorSet::singleton(GeneratorId(0)));
    }

    #[test]
    fn coset_representatives() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let w0 = a2.normal_form(&w(&[0, 1, 0]), L).unwrap();
        let t = GeneratorSet::singleton(GeneratorId(1));
        // sts·W_t = {sts, ts}; `st` would still have t as a right descent
        assert_eq!(a2.min_coset_representative(&w0, &t, L).unwrap().normal(), &w(&[1, 0]));
        assert_eq!(a2.min_coset_representative(&w0, &GeneratorSet::empty(), L).unwrap(), w0);
        assert!(a2.min_coset_representative(&w0, &a2.all(), L).unwrap().is_identity());
    }

    #[test]
    fn galleries() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let e = Element::identity();
        let (ch, min) = a2.gallery_from_word(&e, &w(&[]), L).unwrap();
        assert_eq!(ch, vec![e.clone()]);
        assert!(min);
        let (ch, min) = a2.gallery_from_word(&e, &w(&[0, 1]), L).unwrap();
        assert_eq!(ch.iter().map(|x| x.normal().clone()).collect::<Vec<_>>(), vec![w(&[]), w(&[0]), w(&[0, 1])]);
        assert!(min);
        let (ch, min) = a2.gallery_from_word(&e, &w(&[0, 0]), L).unwrap();
        assert_eq!(ch[2], e);
        assert!(!min);
    }
}
