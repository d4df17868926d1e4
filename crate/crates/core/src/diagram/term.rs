use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{alternating, CoxeterSystem, Element, GeneratorId, Order, Sign, Word};

use super::DiagramError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    Oriented,
    Unoriented,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Oriented => "oriented",
            Mode::Unoriented => "unoriented",
        })
    }
}

/// Orientation pattern of an oriented cup or cap, read left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Variant {
    PlusMinus,
    MinusPlus,
}

impl Variant {
    fn signs(self) -> [Sign; 2] {
        match self {
            Variant::PlusMinus => [Sign::Pos, Sign::Neg],
            Variant::MinusPlus => [Sign::Neg, Sign::Pos],
        }
    }
}

/// A strand endpoint: a generator, signed in oriented mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: GeneratorId,
    pub sign: Option<Sign>,
}

impl Letter {
    pub fn plain(gen: GeneratorId) -> Self {
        Letter { gen, sign: None }
    }

    pub fn signed(gen: GeneratorId, sign: Sign) -> Self {
        Letter { gen, sign: Some(sign) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Symbol {
    Cup { gen: GeneratorId, variant: Option<Variant> },
    Cap { gen: GeneratorId, variant: Option<Variant> },
    /// The `2m`-valent vertex from `s t s ...` to `t s t ...`, both of length `m`.
    Vertex { s: GeneratorId, t: GeneratorId, m: u32 },
}

impl Symbol {
    pub fn arity(&self) -> (usize, usize) {
        match *self {
            Symbol::Cup { .. } => (0, 2),
            Symbol::Cap { .. } => (2, 0),
            Symbol::Vertex { m, .. } => (m as usize, m as usize),
        }
    }

    fn pair(gen: GeneratorId, variant: Option<Variant>) -> Vec<Letter> {
        match variant {
            None => vec![Letter::plain(gen); 2],
            Some(v) => v.signs().iter().map(|&sg| Letter::signed(gen, sg)).collect(),
        }
    }

    fn alternating_letters(s: GeneratorId, t: GeneratorId, m: u32, mode: Mode) -> Vec<Letter> {
        let sign = (mode == Mode::Oriented).then_some(Sign::Pos);
        alternating(s, t, m as usize).into_iter().map(|gen| Letter { gen, sign }).collect()
    }

    pub fn input(&self, mode: Mode) -> Vec<Letter> {
        match *self {
            Symbol::Cup { .. } => Vec::new(),
            Symbol::Cap { gen, variant } => Self::pair(gen, variant),
            Symbol::Vertex { s, t, m } => Self::alternating_letters(s, t, m, mode),
        }
    }

    pub fn output(&self, mode: Mode) -> Vec<Letter> {
        match *self {
            Symbol::Cup { gen, variant } => Self::pair(gen, variant),
            Symbol::Cap { .. } => Vec::new(),
            Symbol::Vertex { s, t, m } => Self::alternating_letters(t, s, m, mode),
        }
    }

    fn mode_ok(&self, mode: Mode) -> bool {
        match self {
            Symbol::Cup { variant, .. } | Symbol::Cap { variant, .. } => variant.is_some() == (mode == Mode::Oriented),
            Symbol::Vertex { s, t, m } => s != t && *m >= 2,
        }
    }

    /// The vertex `s t s ... -> t s t ...`; a backward vertex is the forward one on `(t, s)`.
    pub fn vertex(system: &CoxeterSystem, s: GeneratorId, t: GeneratorId) -> Result<Symbol, DiagramError> {
        match system.m(s, t) {
            Order::Finite(m) if s != t => Ok(Symbol::Vertex { s, t, m }),
            _ => Err(DiagramError::InfiniteVertex(system.name(s).into(), system.name(t).into())),
        }
    }

    pub fn forget_orientation(&self) -> Symbol {
        match *self {
            Symbol::Cup { gen, .. } => Symbol::Cup { gen, variant: None },
            Symbol::Cap { gen, .. } => Symbol::Cap { gen, variant: None },
            v @ Symbol::Vertex { .. } => v,
        }
    }
}

/// One horizontal layer: `offset` strands pass to the left of the symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Slice {
    pub offset: usize,
    pub symbol: Symbol,
}

impl Slice {
    pub fn new(offset: usize, symbol: Symbol) -> Self {
        Slice { offset, symbol }
    }
}

/// A strip diagram read top to bottom; the codomain is recomputed from the slices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    pub mode: Mode,
    pub domain: Vec<Letter>,
    pub slices: Vec<Slice>,
}

/// Applies one slice to a word, or explains why it does not fit.
pub(crate) fn apply_slice(word: &mut Vec<Letter>, slice: &Slice, mode: Mode) -> Result<(), String> {
    if !slice.symbol.mode_ok(mode) {
        return Err(format!("symbol not valid in {mode} mode"));
    }
    let input = slice.symbol.input(mode);
    let end = slice.offset + input.len();
    if slice.offset > word.len() || end > word.len() {
        return Err(format!("offset {} out of range for width {}", slice.offset, word.len()));
    }
    if word[slice.offset..end] != input[..] {
        return Err("input strands do not match the symbol".to_string());
    }
    word.splice(slice.offset..end, slice.symbol.output(mode));
    Ok(())
}

impl Diagram {
    /// Type-checks every slice.
    pub fn new(mode: Mode, domain: Vec<Letter>, slices: Vec<Slice>) -> Result<Self, DiagramError> {
        if let Some(l) = domain.iter().find(|l| l.sign.is_some() != (mode == Mode::Oriented)) {
            return Err(DiagramError::TypeCheck { slice: 0, message: format!("domain letter {:?} does not fit {mode} mode", l.gen) });
        }
        let d = Diagram { mode, domain, slices };
        d.levels()?;
        Ok(d)
    }

    pub fn identity(mode: Mode, domain: Vec<Letter>) -> Self {
        Diagram { mode, domain, slices: Vec::new() }
    }

    /// Words at each horizontal level, from the domain (level 0) to the codomain.
    pub fn levels(&self) -> Result<Vec<Vec<Letter>>, DiagramError> {
        let mut out = Vec::with_capacity(self.slices.len() + 1);
        let mut cur = self.domain.clone();
        out.push(cur.clone());
        for (i, s) in self.slices.iter().enumerate() {
            apply_slice(&mut cur, s, self.mode).map_err(|message| DiagramError::TypeCheck { slice: i, message })?;
            out.push(cur.clone());
        }
        Ok(out)
    }

    pub fn codomain(&self) -> Result<Vec<Letter>, DiagramError> {
        let mut cur = self.domain.clone();
        for (i, s) in self.slices.iter().enumerate() {
            apply_slice(&mut cur, s, self.mode).map_err(|message| DiagramError::TypeCheck { slice: i, message })?;
        }
        Ok(cur)
    }

    pub fn boundary(&self) -> Result<(Vec<Letter>, Vec<Letter>), DiagramError> {
        Ok((self.domain.clone(), self.codomain()?))
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        if self.mode != other.mode {
            return Err(DiagramError::ModeMismatch(self.mode, other.mode));
        }
        let cod = self.codomain()?;
        if cod != other.domain {
            return Err(DiagramError::BoundaryMismatch(format!("{cod:?}"), format!("{:?}", other.domain)));
        }
        other.codomain()?;
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&other.slices);
        Ok(Diagram { mode: self.mode, domain: self.domain.clone(), slices })
    }

    /// `self` to the left of `other`; the slices of `self` run first.
    pub fn tensor(&self, other: &Diagram) -> Result<Diagram, DiagramError> {
        if self.mode != other.mode {
            return Err(DiagramError::ModeMismatch(self.mode, other.mode));
        }
        let shift = self.codomain()?.len();
        other.codomain()?;
        let mut domain = self.domain.clone();
        domain.extend_from_slice(&other.domain);
        let mut slices = self.slices.clone();
        slices.extend(other.slices.iter().map(|s| Slice::new(s.offset + shift, s.symbol)));
        Ok(Diagram { mode: self.mode, domain, slices })
    }

    pub fn forget_orientation(&self) -> Result<Diagram, DiagramError> {
        if self.mode != Mode::Oriented {
            return Err(DiagramError::WrongMode { expected: Mode::Oriented });
        }
        Ok(Diagram {
            mode: Mode::Unoriented,
            domain: erase_signs(&self.domain),
            slices: self.slices.iter().map(|s| Slice::new(s.offset, s.symbol.forget_orientation())).collect(),
        })
    }
}

pub fn erase_signs(word: &[Letter]) -> Vec<Letter> {
    word.iter().map(|l| Letter::plain(l.gen)).collect()
}

/// Image in `W`: signs are dropped since every generator is an involution there.
pub fn group_image(system: &CoxeterSystem, word: &[Letter], limit: usize) -> Result<Element, DiagramError> {
    let w = Word(word.iter().map(|l| l.gen).collect());
    Ok(system.normal_form(&w, limit)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DEFAULT_CLOSURE_LIMIT as L;

    const S: GeneratorId = GeneratorId(0);
    const T: GeneratorId = GeneratorId(1);

    fn plain(ix: &[u8]) -> Vec<Letter> {
        ix.iter().map(|&i| Letter::plain(GeneratorId(i))).collect()
    }

    #[test]
    fn boundaries() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let id = Diagram::identity(Mode::Unoriented, plain(&[0, 1]));
        assert_eq!(id.boundary().unwrap(), (plain(&[0, 1]), plain(&[0, 1])));
        let cap = Diagram::new(
            Mode::Oriented,
            vec![Letter::signed(S, Sign::Pos), Letter::signed(S, Sign::Neg)],
            vec![Slice::new(0, Symbol::Cap { gen: S, variant: Some(Variant::PlusMinus) })],
        )
        .unwrap();
        assert!(cap.codomain().unwrap().is_empty());
        let v = Symbol::vertex(&a2, S, T).unwrap();
        let bv = Diagram::new(Mode::Unoriented, plain(&[0, 1, 0]), vec![Slice::new(0, v)]).unwrap();
        assert_eq!(bv.codomain().unwrap(), plain(&[1, 0, 1]));
        assert!(Diagram::new(Mode::Unoriented, plain(&[1, 0, 1]), vec![Slice::new(0, v)]).is_err());
    }

    #[test]
    fn composition_and_tensor() {
        let cup_s = Diagram::new(Mode::Unoriented, vec![], vec![Slice::new(0, Symbol::Cup { gen: S, variant: None })]).unwrap();
        let cap_s = Diagram::new(Mode::Unoriented, plain(&[0, 0]), vec![Slice::new(0, Symbol::Cap { gen: S, variant: None })]).unwrap();
        let circle = cup_s.compose(&cap_s).unwrap();
        assert_eq!((circle.len(), circle.codomain().unwrap()), (2, vec![]));
        assert!(cap_s.compose(&cap_s).is_err());

        let cup_t = Diagram::new(Mode::Unoriented, vec![], vec![Slice::new(0, Symbol::Cup { gen: T, variant: None })]).unwrap();
        let both = cup_s.tensor(&cup_t).unwrap();
        assert_eq!(both.codomain().unwrap(), plain(&[0, 0, 1, 1]));
        assert_eq!(both.slices[1].offset, 2);
        let empty = Diagram::identity(Mode::Unoriented, vec![]);
        assert_eq!(cup_s.tensor(&empty).unwrap(), cup_s);

        let id_s = Diagram::identity(Mode::Unoriented, plain(&[0]));
        let cap_t = Diagram::new(Mode::Unoriented, plain(&[1, 1]), vec![Slice::new(0, Symbol::Cap { gen: T, variant: None })]).unwrap();
        let x = id_s.tensor(&cap_t).unwrap();
        assert_eq!(x.boundary().unwrap(), (plain(&[0, 1, 1]), plain(&[0])));
    }

    #[test]
    fn forgetting_orientation() {
        let d = Diagram::identity(Mode::Oriented, vec![Letter::signed(S, Sign::Pos)]);
        assert_eq!(d.forget_orientation().unwrap(), Diagram::identity(Mode::Unoriented, plain(&[0])));
        assert!(d.forget_orientation().unwrap().forget_orientation().is_err());
        let cap = Symbol::Cap { gen: S, variant: Some(Variant::PlusMinus) };
        assert_eq!(cap.forget_orientation(), Symbol::Cap { gen: S, variant: None });
    }

    #[test]
    fn images() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        assert!(group_image(&a2, &[], L).unwrap().is_identity());
        let pm = [Letter::signed(S, Sign::Pos), Letter::signed(S, Sign::Neg)];
        assert!(group_image(&a2, &pm, L).unwrap().is_identity());
        assert_eq!(group_image(&a2, &plain(&[0, 1, 0]), L).unwrap(), group_image(&a2, &plain(&[1, 0, 1]), L).unwrap());
    }
}
