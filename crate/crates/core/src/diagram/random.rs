//! Seeded random diagrams and random rewriting walks, for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::coxeter::{CoxeterSystem, Sign};

use super::term::apply_slice;
use super::{enumerate_moves, Diagram, Letter, Mode, RuleCatalog, Slice, Step, Symbol, Variant};

fn random_letter(system: &CoxeterSystem, mode: Mode, rng: &mut impl Rng) -> Letter {
    let gen = *system.generators().collect::<Vec<_>>().choose(rng).expect("nonempty system");
    match mode {
        Mode::Unoriented => Letter::plain(gen),
        // vertices only accept positive strands, so bias towards them
        Mode::Oriented => Letter::signed(gen, if rng.gen_bool(0.75) { Sign::Pos } else { Sign::Neg }),
    }
}

/// Every slice that fits `word` without exceeding `max_width` strands.
fn candidates(system: &CoxeterSystem, mode: Mode, word: &[Letter], max_width: usize) -> Vec<Slice> {
    let variants: &[Option<Variant>] = match mode {
        Mode::Unoriented => &[None],
        Mode::Oriented => &[Some(Variant::PlusMinus), Some(Variant::MinusPlus)],
    };
    let mut symbols = Vec::new();
    for gen in system.generators() {
        for &variant in variants {
            symbols.push(Symbol::Cup { gen, variant });
            symbols.push(Symbol::Cap { gen, variant });
        }
    }
    for (s, t, _) in system.braid_pairs() {
        for (a, b) in [(s, t), (t, s)] {
            symbols.extend(Symbol::vertex(system, a, b).ok());
        }
    }
    let mut out = Vec::new();
    for sym in symbols {
        let (i, o) = sym.arity();
        if word.len() + o > max_width + i {
            continue;
        }
        for offset in 0..=word.len() {
            let slice = Slice::new(offset, sym);
            if apply_slice(&mut word.to_vec(), &slice, mode).is_ok() {
                out.push(slice);
            }
        }
    }
    out
}

/// A type-correct diagram with at most `max_width` strands at every level and at most
/// `max_slices` slices.
pub fn random_diagram(system: &CoxeterSystem, mode: Mode, max_width: usize, max_slices: usize, rng: &mut impl Rng) -> Diagram {
    let width = rng.gen_range(0..=max_width);
    let domain: Vec<Letter> = (0..width).map(|_| random_letter(system, mode, rng)).collect();
    random_diagram_from(system, mode, domain, max_width, max_slices, rng)
}

/// Like [`random_diagram`], with a prescribed domain.
pub fn random_diagram_from(system: &CoxeterSystem, mode: Mode, domain: Vec<Letter>, max_width: usize, max_slices: usize, rng: &mut impl Rng) -> Diagram {
    let mut word = domain.clone();
    let mut slices = Vec::new();
    let target = rng.gen_range(0..=max_slices);
    while slices.len() < target {
        let Some(&slice) = candidates(system, mode, &word, max_width).choose(rng) else {
            break;
        };
        apply_slice(&mut word, &slice, mode).expect("candidate fits");
        slices.push(slice);
    }
    Diagram { mode, domain, slices }
}

/// Applies up to `steps` uniformly chosen moves, keeping at most `max_len` slices.
/// Returns the final diagram and the full step sequence.
pub fn random_walk(d: &Diagram, catalog: &RuleCatalog, steps: usize, max_len: usize, rng: &mut impl Rng) -> (Diagram, Vec<Step>) {
    let mut cur = d.clone();
    let mut trace = Vec::new();
    for _ in 0..steps {
        let moves = enumerate_moves(&cur, catalog, Some(max_len));
        let Some(mv) = moves.choose(rng) else {
            break;
        };
        trace.extend(mv.steps.iter().cloned());
        cur = mv.result.clone();
    }
    (cur, trace)
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::diagram::replay;

    #[test]
    fn random_diagrams_type_check() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for mode in [Mode::Unoriented, Mode::Oriented] {
            for _ in 0..50 {
                let d = random_diagram(&a3, mode, 6, 8, &mut rng);
                assert!(d.slices.len() <= 8);
                let levels = Diagram::new(mode, d.domain.clone(), d.slices.clone()).unwrap().levels().unwrap();
                assert!(levels.iter().all(|w| w.len() <= 6));
            }
        }
    }

    #[test]
    fn walks_replay() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let catalog = RuleCatalog::standard(&a2, Mode::Unoriented);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let d = random_diagram(&a2, Mode::Unoriented, 4, 4, &mut rng);
            let (end, trace) = random_walk(&d, &catalog, 3, 8, &mut rng);
            assert_eq!(replay(&d, &catalog, &trace).unwrap(), end);
            assert_eq!(end.boundary().unwrap(), d.boundary().unwrap());
        }
    }
}
