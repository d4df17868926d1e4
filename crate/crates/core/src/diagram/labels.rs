use crate::coxeter::{CoxeterSystem, Element};

use super::{Diagram, DiagramError};

/// Region labels per horizontal level: entry `j` of level `i` is the region right of
/// the first `j` strands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionLabeling {
    pub levels: Vec<Vec<Element>>,
}

impl RegionLabeling {
    pub fn rightmost(&self) -> &Element {
        self.levels.last().and_then(|l| l.last()).expect("a labeling has at least one region")
    }
}

impl Diagram {
    /// Labels every region from the leftmost label `g`, crossing an `s`-strand by right
    /// multiplication with `s`. Fails if two levels disagree on a region a slice does
    /// not touch.
    pub fn label_regions(&self, system: &CoxeterSystem, g: &Element, limit: usize) -> Result<RegionLabeling, DiagramError> {
        let words = self.levels()?;
        let mut levels = Vec::with_capacity(words.len());
        for w in &words {
            let mut row = vec![g.clone()];
            for l in w {
                let next = system.multiply_generator(row.last().expect("nonempty"), l.gen, limit)?;
                row.push(next);
            }
            levels.push(row);
        }
        for (i, s) in self.slices.iter().enumerate() {
            let (k_in, k_out) = s.symbol.arity();
            let above = &levels[i][s.offset + k_in..];
            let below = &levels[i + 1][s.offset + k_out..];
            if above != below {
                return Err(DiagramError::TypeCheck { slice: i, message: "region labels disagree across the slice".into() });
            }
        }
        Ok(RegionLabeling { levels })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{GeneratorId, DEFAULT_CLOSURE_LIMIT as L};
    use crate::diagram::{Letter, Mode, Slice, Symbol};

    fn plain(ix: &[u8]) -> Vec<Letter> {
        ix.iter().map(|&i| Letter::plain(GeneratorId(i))).collect()
    }

    #[test]
    fn identity_labels() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let e = Element::identity();
        let s = a2.normal_form(&crate::coxeter::Word::from_indices(&[0]), L).unwrap();
        let lab = Diagram::identity(Mode::Unoriented, plain(&[0])).label_regions(&a2, &e, L).unwrap();
        assert_eq!(lab.levels, vec![vec![e.clone(), s.clone()]]);
        let lab = Diagram::identity(Mode::Unoriented, plain(&[0, 0])).label_regions(&a2, &e, L).unwrap();
        assert_eq!(lab.levels[0], vec![e.clone(), s, e]);
    }

    #[test]
    fn vertex_labels() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let v = Symbol::vertex(&a2, GeneratorId(0), GeneratorId(1)).unwrap();
        let d = Diagram::new(Mode::Unoriented, plain(&[0, 1, 0]), vec![Slice::new(0, v)]).unwrap();
        let lab = d.label_regions(&a2, &Element::identity(), L).unwrap();
        let names = |row: &[Element]| row.iter().map(|x| x.display(&a2).to_string()).collect::<Vec<_>>();
        assert_eq!(names(&lab.levels[0]), ["e", "s0", "s0 s1", "s0 s1 s0"]);
        assert_eq!(names(&lab.levels[1]), ["e", "s1", "s1 s0", "s0 s1 s0"]);
        assert_eq!(lab.rightmost().length(), 3);
    }
}
