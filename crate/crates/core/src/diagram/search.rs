use std::collections::HashMap;

use crate::budget::{Budget, Meter};

use super::moves::{canonicalize, enumerate_moves, Step};
use super::{Diagram, DiagramError, RuleCatalog, Slice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Steps turning the first diagram into the second.
    Proven(Vec<Step>),
    BoundaryMismatch,
    /// Nothing found within the budget; parallel diagrams are still equal, the search
    /// just did not exhibit it.
    Inconclusive { explored: u64 },
}

/// Search tree rooted at one diagram. Nodes are interchange normal forms.
struct Tree {
    nodes: Vec<Vec<Slice>>,
    index: HashMap<Vec<Slice>, usize>,
    parent: Vec<Option<(usize, Vec<Step>)>>,
    frontier: Vec<usize>,
}

impl Tree {
    fn new(root: Vec<Slice>) -> Self {
        Tree { index: HashMap::from([(root.clone(), 0)]), nodes: vec![root], parent: vec![None], frontier: vec![0] }
    }

    fn path(&self, mut id: usize) -> Vec<Step> {
        let mut chunks = Vec::new();
        while let Some((p, steps)) = &self.parent[id] {
            chunks.push(steps.clone());
            id = *p;
        }
        chunks.into_iter().rev().flatten().collect()
    }
}

fn inverse(steps: &[Step]) -> Vec<Step> {
    steps.iter().rev().map(Step::inverse).collect()
}

enum Layer {
    Met(usize, usize),
    Exhausted,
    Continue,
}

/// Expands one BFS layer of `tree`, stopping at the first node also in `other`.
fn expand(template: &Diagram, catalog: &RuleCatalog, tree: &mut Tree, other: &Tree, bound: usize, meter: &mut Meter, forward: bool) -> Layer {
    let frontier = std::mem::take(&mut tree.frontier);
    for u in frontier {
        let d = Diagram { mode: template.mode, domain: template.domain.clone(), slices: tree.nodes[u].clone() };
        for mv in enumerate_moves(&d, catalog, Some(bound)) {
            let (c, tail) = canonicalize(&mv.result);
            if tree.index.contains_key(&c.slices) {
                continue;
            }
            if !meter.tick() {
                return Layer::Exhausted;
            }
            let id = tree.nodes.len();
            let mut steps = mv.steps;
            steps.extend(tail);
            tree.index.insert(c.slices.clone(), id);
            tree.parent.push(Some((u, steps)));
            tree.frontier.push(id);
            let met = other.index.get(&c.slices).copied();
            tree.nodes.push(c.slices);
            if let Some(o) = met {
                return if forward { Layer::Met(id, o) } else { Layer::Met(o, id) };
            }
        }
    }
    Layer::Continue
}

/// Bidirectional breadth-first search over rule applications between interchange
/// normal forms. The first pass never lets a diagram grow beyond the larger input;
/// later passes allow two, four and six extra slices.
pub fn search_equality(d1: &Diagram, d2: &Diagram, catalog: &RuleCatalog, budget: Budget) -> Result<SearchOutcome, DiagramError> {
    if d1.mode != d2.mode || d1.mode != catalog.mode || d1.boundary()? != d2.boundary()? {
        return Ok(SearchOutcome::BoundaryMismatch);
    }
    let (c1, s1) = canonicalize(d1);
    let (c2, s2) = canonicalize(d2);
    let finish = |mid: Vec<Step>| {
        let mut cert = s1.clone();
        cert.extend(mid);
        cert.extend(inverse(&s2));
        SearchOutcome::Proven(cert)
    };
    if c1 == c2 {
        return Ok(finish(Vec::new()));
    }
    let mut meter = budget.meter();
    for slack in [0, 2, 4, 6] {
        let bound = c1.len().max(c2.len()) + slack;
        let mut a = Tree::new(c1.slices.clone());
        let mut b = Tree::new(c2.slices.clone());
        loop {
            if a.frontier.is_empty() && b.frontier.is_empty() {
                break;
            }
            let grow_a = !a.frontier.is_empty() && (b.frontier.is_empty() || a.frontier.len() <= b.frontier.len());
            let layer = if grow_a {
                expand(&c1, catalog, &mut a, &b, bound, &mut meter, true)
            } else {
                expand(&c2, catalog, &mut b, &a, bound, &mut meter, false)
            };
            match layer {
                Layer::Met(x, y) => {
                    let (pa, pb) = (a.path(x), b.path(y));
                    let mut mid = pa;
                    mid.extend(inverse(&pb));
                    return Ok(finish(mid));
                }
                Layer::Exhausted => return Ok(SearchOutcome::Inconclusive { explored: meter.spent() }),
                Layer::Continue => {}
            }
        }
    }
    Ok(SearchOutcome::Inconclusive { explored: meter.spent() })
}

/// Smallest diagram reachable without ever exceeding the size of `d`; ties go to the
/// least slice sequence. Returns the diagram and steps reaching it from `d`.
pub fn normalize(d: &Diagram, catalog: &RuleCatalog, budget: Budget) -> Result<(Diagram, Vec<Step>), DiagramError> {
    d.codomain()?;
    let (c, s) = canonicalize(d);
    let bound = c.len();
    let mut tree = Tree::new(c.slices.clone());
    let empty = Tree::new(Vec::new());
    let other = Tree { index: HashMap::new(), ..empty };
    let mut meter = budget.meter();
    let mut best = 0usize;
    while !tree.frontier.is_empty() {
        let before = tree.nodes.len();
        let done = matches!(expand(&c, catalog, &mut tree, &other, bound, &mut meter, true), Layer::Exhausted);
        for id in before..tree.nodes.len() {
            let (x, y) = (&tree.nodes[id], &tree.nodes[best]);
            if (x.len(), x) < (y.len(), y) {
                best = id;
            }
        }
        if done {
            break;
        }
    }
    let mut steps = s;
    steps.extend(tree.path(best));
    Ok((Diagram { mode: d.mode, domain: d.domain.clone(), slices: tree.nodes[best].clone() }, steps))
}
