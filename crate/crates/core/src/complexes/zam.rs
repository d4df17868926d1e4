//! Zamolodzhikov relations: two braid-move paths between reduced words of the longest
//! element of a finite rank-3 parabolic which together cross every face of its
//! boundary sphere exactly once.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::coxeter::{alternating, apply_braid_move, CoxeterSystem, GeneratorId, GeneratorSet, Word};

use super::sphere::{sphere_cells, FaceId, SphereCellStructure};
use super::ComplexError;

/// Replaces the alternating block `first second first ...` at `position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidStep {
    pub position: usize,
    pub first: GeneratorId,
    pub second: GeneratorId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZamRelation {
    pub subset: GeneratorSet,
    pub type_name: String,
    pub a: Word,
    pub b: Word,
    pub p1: Vec<BraidStep>,
    pub p2: Vec<BraidStep>,
    pub cells1: Vec<FaceId>,
    pub cells2: Vec<FaceId>,
}

fn block_len(system: &CoxeterSystem, step: &BraidStep) -> Option<usize> {
    if step.first == step.second {
        return None;
    }
    system.m(step.first, step.second).finite().map(|m| m as usize)
}

/// Applies a path, returning the final word and the faces crossed, or `None` if some
/// step does not match the current word.
fn walk(system: &CoxeterSystem, sphere: &SphereCellStructure, start: &Word, path: &[BraidStep]) -> Option<(Word, Vec<FaceId>)> {
    let mut cur = start.0.clone();
    let mut faces = Vec::with_capacity(path.len());
    for step in path {
        if !sphere.subset.contains(step.first) || !sphere.subset.contains(step.second) {
            return None;
        }
        let m = block_len(system, step)?;
        if step.position + m > cur.len() || cur[step.position..step.position + m] != alternating(step.first, step.second, m)[..] {
            return None;
        }
        faces.push(sphere.face_of_move(&cur[..step.position], step.first, step.second));
        cur = apply_braid_move(&cur, step.position, step.first, step.second, m);
    }
    Some((Word(cur), faces))
}

/// The word `a*` with `a*_i = w0 a_{n+1-i} w0`; it is again a reduced word of `w0` and
/// differs from `a` on every rank-2 flat.
fn opposite(sphere: &SphereCellStructure, a: &Word) -> Word {
    let t = &sphere.table;
    let w0 = t.longest();
    let conj = |s: GeneratorId| {
        let target = t.mul(t.mul(w0, t.mul_gen(0, s)), w0);
        *t.gens().iter().find(|&&g| t.mul_gen(0, g) == target).expect("w0 normalises the generators")
    };
    Word(a.0.iter().rev().map(|&s| conj(s)).collect())
}

struct Graph {
    adj: Vec<Vec<(usize, usize)>>,
    /// Per edge: the step from the lower-numbered endpoint, and its face index.
    steps: Vec<(usize, usize, usize, GeneratorId, GeneratorId)>,
    faces: Vec<usize>,
}

impl Graph {
    fn step_from(&self, e: usize, from: usize) -> BraidStep {
        let (lo, _hi, position, s, t) = self.steps[e];
        if from == lo {
            BraidStep { position, first: s, second: t }
        } else {
            BraidStep { position, first: t, second: s }
        }
    }
}

/// Shortest path by BFS with randomly ordered neighbours, using only allowed edges.
fn bfs(graph: &Graph, from: usize, to: usize, allowed: impl Fn(usize) -> bool, rng: &mut ChaCha8Rng, meter: &mut crate::budget::Meter) -> Option<Option<Vec<(usize, usize)>>> {
    let n = graph.adj.len();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if !meter.tick() {
            return None;
        }
        if v == to {
            break;
        }
        let mut nbrs = graph.adj[v].clone();
        nbrs.shuffle(rng);
        for (u, e) in nbrs {
            if !seen[u] && allowed(e) {
                seen[u] = true;
                parent[u] = Some((v, e));
                queue.push_back(u);
            }
        }
    }
    if !seen[to] {
        return Some(None);
    }
    let mut path = Vec::new();
    let mut cur = to;
    while let Some((p, e)) = parent[cur] {
        path.push((p, e));
        cur = p;
    }
    path.reverse();
    Some(Some(path))
}

/// Searches for a relation on the finite rank-3 parabolic `subset`.
///
/// `a` is the lexicographically least reduced word of `w0` and `b` its opposite word.
/// The first path is a random geodesic; the second is a geodesic avoiding the faces
/// of the first. Attempts repeat with fresh randomness until the budget runs out.
pub fn generate_zamolodzhikov(system: &CoxeterSystem, subset: &GeneratorSet, budget: Budget, seed: u64, limit: usize) -> Result<ZamRelation, ComplexError> {
    let sphere = sphere_cells(system, subset, limit)?;
    let w0 = system.longest_element(subset, limit)?;
    let rex = system.reduced_expression_graph(&w0, limit)?;
    let face_index: HashMap<FaceId, usize> = sphere.face_ids().into_iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut graph = Graph { adj: vec![Vec::new(); rex.vertices.len()], steps: Vec::new(), faces: Vec::new() };
    for (e, edge) in rex.edges.iter().enumerate() {
        let word = &rex.vertices[edge.from];
        let face = sphere.face_of_move(&word.0[..edge.position], edge.first, edge.second);
        graph.faces.push(face_index[&face]);
        graph.steps.push((edge.from, edge.to, edge.position, edge.first, edge.second));
        graph.adj[edge.from].push((edge.to, e));
        graph.adj[edge.to].push((edge.from, e));
    }
    let total = sphere.faces.len();
    let a = 0;
    let b_word = opposite(&sphere, &rex.vertices[a]);
    let b = rex.vertices.iter().position(|v| *v == b_word).expect("opposite word is reduced");

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut meter = budget.meter();
    let exhausted = |meter: &crate::budget::Meter| ComplexError::BudgetExhausted { budget: meter.limit() };
    loop {
        let p1 = bfs(&graph, a, b, |_| true, &mut rng, &mut meter).ok_or_else(|| exhausted(&meter))?.expect("graph is connected");
        let c1: HashSet<usize> = p1.iter().map(|&(_, e)| graph.faces[e]).collect();
        if c1.len() != p1.len() {
            continue;
        }
        let Some(p2) = bfs(&graph, a, b, |e| !c1.contains(&graph.faces[e]), &mut rng, &mut meter).ok_or_else(|| exhausted(&meter))? else {
            continue;
        };
        let c2: HashSet<usize> = p2.iter().map(|&(_, e)| graph.faces[e]).collect();
        if c2.len() != p2.len() || c1.len() + c2.len() != total {
            continue;
        }
        let steps = |p: &[(usize, usize)]| p.iter().map(|&(v, e)| graph.step_from(e, v)).collect::<Vec<_>>();
        let ids = sphere.face_ids();
        let faces = |p: &[(usize, usize)]| p.iter().map(|&(_, e)| ids[graph.faces[e]].clone()).collect::<Vec<_>>();
        return Ok(ZamRelation {
            subset: *subset,
            type_name: system.type_name(subset).unwrap_or_default(),
            a: rex.vertices[a].clone(),
            b: rex.vertices[b].clone(),
            p1: steps(&p1),
            p2: steps(&p2),
            cells1: faces(&p1),
            cells2: faces(&p2),
        });
    }
}

/// Checks every invariant of a relation: both endpoints are reduced words of the
/// longest element, both paths are valid move sequences from `a` to `b`, the recorded
/// faces are the faces crossed, and together they cover the sphere exactly once.
pub fn verify_zamolodzhikov(system: &CoxeterSystem, rel: &ZamRelation, limit: usize) -> bool {
    let Ok(sphere) = sphere_cells(system, &rel.subset, limit) else {
        return false;
    };
    let t = &sphere.table;
    let w0 = t.longest();
    let is_w0 = |w: &Word| {
        w.len() == t.length(w0) && w.0.iter().all(|s| rel.subset.contains(*s)) && t.mul_word(0, &w.0) == w0
    };
    if !is_w0(&rel.a) || !is_w0(&rel.b) {
        return false;
    }
    let (Some((end1, f1)), Some((end2, f2))) = (walk(system, &sphere, &rel.a, &rel.p1), walk(system, &sphere, &rel.a, &rel.p2)) else {
        return false;
    };
    if end1 != rel.b || end2 != rel.b || f1 != rel.cells1 || f2 != rel.cells2 {
        return false;
    }
    let mut all: Vec<&FaceId> = f1.iter().chain(&f2).collect();
    all.sort();
    let before = all.len();
    all.dedup();
    let mut expected = sphere.face_ids();
    expected.sort();
    before == all.len() && all.into_iter().cloned().collect::<Vec<_>>() == expected
}

impl ZamRelation {
    /// Line-oriented text form, read back by [`ZamRelation::parse`].
    pub fn to_text(&self, system: &CoxeterSystem) -> String {
        let name = |s: GeneratorId| system.name(s).to_string();
        let mut out = String::new();
        let _ = writeln!(out, "zam {}", self.type_name);
        let _ = writeln!(out, "subset {}", self.subset.iter().map(name).collect::<Vec<_>>().join(" "));
        let _ = writeln!(out, "a {}", self.a.display(system));
        let _ = writeln!(out, "b {}", self.b.display(system));
        for (tag, path, cells) in [("p1", &self.p1, &self.cells1), ("p2", &self.p2, &self.cells2)] {
            for (step, face) in path.iter().zip(cells) {
                let _ = writeln!(
                    out,
                    "{tag} {} {} {} # face {}{} {}",
                    step.position,
                    name(step.first),
                    name(step.second),
                    name(face.pair.0),
                    name(face.pair.1),
                    face.rep.display(system)
                );
            }
        }
        out
    }

    /// Parses [`ZamRelation::to_text`] output; the crossed faces are recomputed from
    /// the paths, so a relation whose paths are invalid is rejected here.
    pub fn parse(system: &CoxeterSystem, text: &str, limit: usize) -> Result<ZamRelation, ComplexError> {
        let mut type_name = String::new();
        let mut subset = None;
        let (mut a, mut b) = (None, None);
        let (mut p1, mut p2) = (Vec::new(), Vec::new());
        for (n, raw) in text.lines().enumerate() {
            let bad = |message: String| ComplexError::Parse { line: n + 1, message };
            let line = raw.split('#').next().unwrap_or("").trim();
            let Some((tag, rest)) = line.split_once(char::is_whitespace).or((!line.is_empty()).then_some((line, ""))) else {
                continue;
            };
            let gen = |tok: &str| system.lookup(tok).ok_or_else(|| bad(format!("unknown generator {tok}")));
            match tag {
                "zam" => type_name = rest.trim().to_string(),
                "subset" => subset = Some(rest.split_whitespace().map(gen).collect::<Result<GeneratorSet, _>>()?),
                "a" => a = Some(Word::parse(system, rest).map_err(|e| bad(e.to_string()))?),
                "b" => b = Some(Word::parse(system, rest).map_err(|e| bad(e.to_string()))?),
                "p1" | "p2" => {
                    let toks: Vec<&str> = rest.split_whitespace().collect();
                    let [pos, s, t] = toks[..] else {
                        return Err(bad("expected <position> <first> <second>".into()));
                    };
                    let position = pos.parse().map_err(|_| bad(format!("bad position {pos}")))?;
                    let step = BraidStep { position, first: gen(s)?, second: gen(t)? };
                    if tag == "p1" { p1.push(step) } else { p2.push(step) }
                }
                other => return Err(bad(format!("unknown record {other}"))),
            }
        }
        let missing = |what: &str| ComplexError::Parse { line: 0, message: format!("missing {what} line") };
        let subset = subset.ok_or_else(|| missing("subset"))?;
        let a = a.ok_or_else(|| missing("a"))?;
        let b = b.ok_or_else(|| missing("b"))?;
        let sphere = sphere_cells(system, &subset, limit)?;
        let faces = |p: &[BraidStep], which: &str| {
            walk(system, &sphere, &a, p)
                .map(|(_, f)| f)
                .ok_or_else(|| ComplexError::Parse { line: 0, message: format!("path {which} is not a sequence of braid moves from a") })
        };
        let cells1 = faces(&p1, "p1")?;
        let cells2 = faces(&p2, "p2")?;
        Ok(ZamRelation { subset, type_name, a, b, p1, p2, cells1, cells2 })
    }
}
