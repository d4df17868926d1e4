//! Rule application modulo the interchange law.
//!
//! Two adjacent slices may swap when one lies entirely to the left of the other. A rule
//! pattern is found by anchoring on one slice and dragging the remaining pattern slices
//! next to it with such swaps; every swap is recorded so the result can be replayed.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::term::apply_slice;
use super::{Diagram, DiagramError, Letter, RuleCatalog, Slice};

/// One replayable rewriting step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    /// Swap slices `index` and `index + 1`. With `left` the lower slice passes to the
    /// left of the upper one, otherwise to its right.
    Interchange { index: usize, left: bool },
    /// Replace the contiguous occurrence of one side of a rule starting at `slice`.
    Rule { rule: String, slice: usize, offset: usize, forward: bool },
}

impl Step {
    pub fn inverse(&self) -> Step {
        match self {
            Step::Interchange { index, left } => Step::Interchange { index: *index, left: !left },
            Step::Rule { rule, slice, offset, forward } => Step::Rule { rule: rule.clone(), slice: *slice, offset: *offset, forward: !forward },
        }
    }
}

/// A rule occurrence: the interchanges that make it contiguous, then the rewrite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub steps: Vec<Step>,
    pub rule: String,
    pub forward: bool,
    pub slice: usize,
    pub offset: usize,
    pub result: Diagram,
}

/// `(a, b)` → `(b', a')`, if `b` lies left (or right) of `a`.
fn swapped(a: &Slice, b: &Slice, left: bool) -> Option<(Slice, Slice)> {
    let (da, ca) = a.symbol.arity();
    let (db, cb) = b.symbol.arity();
    if left {
        (b.offset + db <= a.offset).then(|| (*b, Slice::new(a.offset - db + cb, a.symbol)))
    } else {
        (b.offset >= a.offset + ca).then(|| (Slice::new(b.offset - ca + da, b.symbol), *a))
    }
}

#[derive(Clone)]
struct State {
    seq: Vec<Slice>,
    swaps: Vec<Step>,
}

impl State {
    fn swap_side(&mut self, i: usize, left: bool) -> bool {
        match swapped(&self.seq[i], &self.seq[i + 1], left) {
            Some((b, a)) => {
                self.seq[i] = b;
                self.seq[i + 1] = a;
                self.swaps.push(Step::Interchange { index: i, left });
                true
            }
            None => false,
        }
    }

    fn try_swap(&mut self, i: usize) -> bool {
        self.swap_side(i, true) || self.swap_side(i, false)
    }

    /// Moves the slice at `p` to just below the slice at `target`, sinking blockers
    /// in between first. Returns false when some blocker depends on `target`.
    fn sink(&mut self, mut p: usize, mut target: usize) -> bool {
        while p < target {
            if self.try_swap(p) {
                if p + 1 == target {
                    target -= 1;
                }
                p += 1;
            } else if p + 1 == target || !self.sink(p + 1, target) {
                return false;
            } else {
                target -= 1;
            }
        }
        true
    }

    /// Mirror image of [`State::sink`].
    fn float(&mut self, mut p: usize, mut target: usize) -> bool {
        while p > target {
            if self.try_swap(p - 1) {
                if p - 1 == target {
                    target += 1;
                }
                p -= 1;
            } else if p - 1 == target || !self.float(p - 1, target) {
                return false;
            } else {
                target += 1;
            }
        }
        true
    }

    fn pass_down(&mut self, p: usize, len: usize) -> bool {
        (0..len).all(|i| self.try_swap(p + i))
    }

    fn pass_up(&mut self, p: usize, len: usize) -> bool {
        (0..len).all(|i| self.try_swap(p - 1 - i))
    }

    /// Makes slice `c` follow the block `[g, g + len)`; updates `g`.
    fn bring(&mut self, g: &mut usize, len: usize, c: usize) -> bool {
        let mut c = c;
        if c >= *g + len {
            while c > *g + len {
                let x = *g + len;
                let mut trial = self.clone();
                if trial.pass_up(x, len) {
                    *self = trial;
                    *g += 1;
                    continue;
                }
                let mut trial = self.clone();
                if trial.sink(x, c) {
                    *self = trial;
                    c -= 1;
                    continue;
                }
                return false;
            }
            true
        } else {
            while c + 1 < *g {
                let x = *g - 1;
                let mut trial = self.clone();
                if trial.pass_down(x, len) {
                    *self = trial;
                    *g -= 1;
                    continue;
                }
                let mut trial = self.clone();
                if trial.float(x, c) {
                    *self = trial;
                    c += 1;
                    continue;
                }
                return false;
            }
            if self.pass_down(c, len) {
                *g -= 1;
                true
            } else {
                false
            }
        }
    }
}

fn word_at(d: &Diagram, seq: &[Slice]) -> Vec<Letter> {
    let mut w = d.domain.clone();
    for s in seq {
        apply_slice(&mut w, s, d.mode).expect("diagram type-checks");
    }
    w
}

struct Found {
    swaps: Vec<Step>,
    seq: Vec<Slice>,
    slice: usize,
    offset: usize,
}

fn block_offset(seq: &[Slice], g: usize, pattern: &[Slice]) -> Option<usize> {
    let base = seq[g].offset.checked_sub(pattern[0].offset)?;
    (0..pattern.len()).all(|i| seq[g + i].offset == base + pattern[i].offset).then_some(base)
}

fn gather(d: &Diagram, st: State, g: usize, len: usize, pattern: &Diagram, out: &mut Vec<Found>) {
    let k = pattern.slices.len();
    let Some(offset) = block_offset(&st.seq, g, &pattern.slices[..len]) else {
        return;
    };
    if len == k {
        let w = word_at(d, &st.seq[..g]);
        if offset + pattern.domain.len() <= w.len() && w[offset..offset + pattern.domain.len()] == pattern.domain[..] {
            out.push(Found { swaps: st.swaps, seq: st.seq, slice: g, offset });
        }
        return;
    }
    let want = pattern.slices[len].symbol;
    // nearest candidates first
    let mut cands: Vec<usize> = (0..st.seq.len()).filter(|&c| (c < g || c >= g + len) && st.seq[c].symbol == want).collect();
    cands.sort_by_key(|&c| if c >= g + len { c - (g + len) } else { g - c });
    for c in cands {
        let mut trial = st.clone();
        let mut g2 = g;
        if trial.bring(&mut g2, len, c) && trial.seq[g2 + len].symbol == want {
            gather(d, trial, g2, len + 1, pattern, out);
        }
    }
}

/// Every way of applying a catalog rule to `d`, after interchanges, such that the result
/// has at most `max_len` slices. Sorted by slice index, offset, rule id and direction.
pub fn enumerate_moves(d: &Diagram, catalog: &RuleCatalog, max_len: Option<usize>) -> Vec<Move> {
    let n = d.slices.len();
    let levels = d.levels().expect("diagram type-checks");
    let mut moves = Vec::new();
    let mut seen: HashSet<(Vec<Slice>, usize, bool, usize, usize)> = HashSet::new();
    for (ri, rule) in catalog.rules().iter().enumerate() {
        for forward in [true, false] {
            let (pat, rep) = rule.sides(forward);
            let k = pat.slices.len();
            if max_len.is_some_and(|m| n + rep.slices.len() > m + k) || k > n {
                continue;
            }
            let mut found = Vec::new();
            if k == 0 {
                for (i, w) in levels.iter().enumerate() {
                    for o in 0..=w.len().saturating_sub(pat.domain.len()) {
                        if w.len() >= pat.domain.len() && w[o..o + pat.domain.len()] == pat.domain[..] {
                            found.push(Found { swaps: Vec::new(), seq: d.slices.clone(), slice: i, offset: o });
                        }
                    }
                }
            } else {
                for a in 0..n {
                    if d.slices[a].symbol == pat.slices[0].symbol {
                        gather(d, State { seq: d.slices.clone(), swaps: Vec::new() }, a, 1, pat, &mut found);
                    }
                }
            }
            for f in found {
                if !seen.insert((f.seq.clone(), f.slice, forward, ri, f.offset)) {
                    continue;
                }
                let mut seq = f.seq[..f.slice].to_vec();
                seq.extend(rep.slices.iter().map(|s| Slice::new(s.offset + f.offset, s.symbol)));
                seq.extend_from_slice(&f.seq[f.slice + k..]);
                let mut steps = f.swaps;
                steps.push(Step::Rule { rule: rule.id.clone(), slice: f.slice, offset: f.offset, forward });
                moves.push(Move {
                    steps,
                    rule: rule.id.clone(),
                    forward,
                    slice: f.slice,
                    offset: f.offset,
                    result: Diagram { mode: d.mode, domain: d.domain.clone(), slices: seq },
                });
            }
        }
    }
    moves.sort_by(|a, b| (a.slice, a.offset, &a.rule, !a.forward, a.steps.len()).cmp(&(b.slice, b.offset, &b.rule, !b.forward, b.steps.len())));
    moves
}

/// Rewrites the contiguous occurrence of one side of `rule` at `(slice, offset)`.
pub fn apply_move(d: &Diagram, catalog: &RuleCatalog, rule: &str, slice: usize, offset: usize, forward: bool) -> Result<Diagram, DiagramError> {
    let r = catalog.get(rule).ok_or_else(|| DiagramError::UnknownRule(rule.to_string()))?;
    let mismatch = || DiagramError::PatternMismatch { rule: rule.to_string(), slice, offset };
    let (pat, rep) = r.sides(forward);
    let k = pat.slices.len();
    if slice + k > d.slices.len() {
        return Err(mismatch());
    }
    let shifted = |s: &Slice| Slice::new(s.offset + offset, s.symbol);
    if d.slices[slice..slice + k].iter().ne(pat.slices.iter().map(shifted).collect::<Vec<_>>().iter()) {
        return Err(mismatch());
    }
    let w = d.levels()?.swap_remove(slice);
    if offset + pat.domain.len() > w.len() || w[offset..offset + pat.domain.len()] != pat.domain[..] {
        return Err(mismatch());
    }
    let mut slices = d.slices[..slice].to_vec();
    slices.extend(rep.slices.iter().map(shifted));
    slices.extend_from_slice(&d.slices[slice + k..]);
    Ok(Diagram { mode: d.mode, domain: d.domain.clone(), slices })
}

pub fn apply_step(d: &Diagram, catalog: &RuleCatalog, step: &Step) -> Result<Diagram, DiagramError> {
    match step {
        Step::Interchange { index, left } => {
            let i = *index;
            if i + 1 >= d.slices.len() {
                return Err(DiagramError::BadInterchange(i, i + 1));
            }
            let (b, a) = swapped(&d.slices[i], &d.slices[i + 1], *left).ok_or(DiagramError::BadInterchange(i, i + 1))?;
            let mut out = d.clone();
            out.slices[i] = b;
            out.slices[i + 1] = a;
            Ok(out)
        }
        Step::Rule { rule, slice, offset, forward } => apply_move(d, catalog, rule, *slice, *offset, *forward),
    }
}

pub fn replay(d: &Diagram, catalog: &RuleCatalog, steps: &[Step]) -> Result<Diagram, DiagramError> {
    steps.iter().try_fold(d.clone(), |acc, s| apply_step(&acc, catalog, s))
}

/// A cap followed by a cup at the same offset can pass either way; canonical forms
/// leave such pairs alone, otherwise stacked closed components would swap forever.
fn ambiguous(a: &Slice, b: &Slice) -> bool {
    a.symbol.arity().1 == 0 && b.symbol.arity().0 == 0 && a.offset == b.offset
}

/// Interchange normal form: a slice lying wholly left of its predecessor moves above it,
/// until no such pair remains.
pub fn canonicalize(d: &Diagram) -> (Diagram, Vec<Step>) {
    let mut st = State { seq: d.slices.clone(), swaps: Vec::new() };
    let n = st.seq.len();
    let cap = 4 * n * n + 16;
    let mut changed = true;
    while changed && st.swaps.len() < cap {
        changed = false;
        for i in 0..n.saturating_sub(1) {
            if !ambiguous(&st.seq[i], &st.seq[i + 1]) && st.swap_side(i, true) {
                changed = true;
            }
        }
    }
    (Diagram { mode: d.mode, domain: d.domain.clone(), slices: st.seq }, st.swaps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{CoxeterSystem, GeneratorId};
    use crate::diagram::{Mode, Symbol};

    fn plain(ix: &[u8]) -> Vec<Letter> {
        ix.iter().map(|&i| Letter::plain(GeneratorId(i))).collect()
    }

    fn cup(g: u8) -> Symbol {
        Symbol::Cup { gen: GeneratorId(g), variant: None }
    }

    fn cap(g: u8) -> Symbol {
        Symbol::Cap { gen: GeneratorId(g), variant: None }
    }

    #[test]
    fn interchange_preserves_boundary() {
        let d = Diagram::new(Mode::Unoriented, plain(&[0, 0, 1, 1]), vec![Slice::new(2, cap(1)), Slice::new(0, cap(0))]).unwrap();
        let (c, steps) = canonicalize(&d);
        assert_eq!(c.slices, vec![Slice::new(0, cap(0)), Slice::new(0, cap(1))]);
        assert_eq!(c.codomain().unwrap(), vec![]);
        let cat = RuleCatalog::empty(Mode::Unoriented);
        assert_eq!(replay(&d, &cat, &steps).unwrap(), c);
        let back: Vec<Step> = steps.iter().rev().map(Step::inverse).collect();
        assert_eq!(replay(&c, &cat, &back).unwrap(), d);
        // nested cups cannot swap
        let nested = Diagram::new(Mode::Unoriented, vec![], vec![Slice::new(0, cup(0)), Slice::new(1, cup(1))]).unwrap();
        assert!(apply_step(&nested, &cat, &Step::Interchange { index: 0, left: true }).is_err());
        assert!(apply_step(&nested, &cat, &Step::Interchange { index: 0, left: false }).is_err());
    }

    #[test]
    fn snake_and_circle_moves() {
        let a1 = CoxeterSystem::type_a(1).unwrap();
        let cat = RuleCatalog::standard(&a1, Mode::Unoriented);
        let snake = Diagram::new(Mode::Unoriented, plain(&[0]), vec![Slice::new(1, cup(0)), Slice::new(0, cap(0))]).unwrap();
        let moves = enumerate_moves(&snake, &cat, Some(2));
        let m = moves.iter().find(|m| m.rule == "zigzag.s0.l" && m.forward).unwrap();
        assert!(m.result.is_empty());
        assert_eq!(replay(&snake, &cat, &m.steps).unwrap(), m.result);

        // a circle drawn beside a strand, with the strand's snake in between
        let d = Diagram::new(
            Mode::Unoriented,
            plain(&[0]),
            vec![Slice::new(1, cup(0)), Slice::new(0, cap(0)), Slice::new(0, cup(0)), Slice::new(0, cap(0))],
        )
        .unwrap();
        let circle = enumerate_moves(&d, &cat, Some(4)).into_iter().find(|m| m.rule == "circle.s0" && m.forward).unwrap();
        assert_eq!(circle.result.len(), 2);
        assert_eq!(replay(&d, &cat, &circle.steps).unwrap(), circle.result);
    }

    #[test]
    fn identity_has_no_contractions() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let cat = RuleCatalog::standard(&a2, Mode::Unoriented);
        let id = Diagram::identity(Mode::Unoriented, plain(&[0, 1, 0]));
        assert!(enumerate_moves(&id, &cat, Some(0)).is_empty());
    }

    #[test]
    fn separated_pattern_is_gathered() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let cat = RuleCatalog::standard(&a2, Mode::Unoriented);
        let v = Symbol::vertex(&a2, GeneratorId(0), GeneratorId(1)).unwrap();
        let w = Symbol::vertex(&a2, GeneratorId(1), GeneratorId(0)).unwrap();
        // vertex pair on the right, with an unrelated cap on the left between them
        let d = Diagram::new(
            Mode::Unoriented,
            plain(&[1, 1, 0, 1, 0]),
            vec![Slice::new(2, v), Slice::new(0, cap(1)), Slice::new(0, w)],
        )
        .unwrap();
        let m = enumerate_moves(&d, &cat, Some(3)).into_iter().find(|m| m.rule == "cancel.s0.s1").unwrap();
        assert_eq!(m.result.slices, vec![Slice::new(0, cap(1))]);
        assert_eq!(replay(&d, &cat, &m.steps).unwrap(), m.result);
    }
}
