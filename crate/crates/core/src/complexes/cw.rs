use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::gf2::{rank, BitVec};
use super::ComplexError;

/// One cell; `boundary` lists faces of one dimension lower with odd incidence.
/// `None` marks a cell whose attaching data is not modelled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub label: String,
    pub boundary: Option<Vec<usize>>,
}

/// A finite CW complex with boundary incidences taken mod 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CWComplexMod2 {
    cells: Vec<Vec<Cell>>,
}

fn reduce_mod2(mut faces: Vec<usize>) -> Vec<usize> {
    faces.sort_unstable();
    let mut out: Vec<usize> = Vec::with_capacity(faces.len());
    for f in faces {
        if out.last() == Some(&f) {
            out.pop();
        } else {
            out.push(f);
        }
    }
    out
}

impl CWComplexMod2 {
    pub fn new() -> Self {
        Self::default()
    }

    /// A single point.
    pub fn point() -> Self {
        let mut c = Self::new();
        c.add_cell(0, "pt", Some(Vec::new()));
        c
    }

    /// Adds a cell and returns its index within its dimension. Repeated faces cancel in pairs.
    pub fn add_cell(&mut self, dim: usize, label: impl Into<String>, boundary: Option<Vec<usize>>) -> usize {
        if self.cells.len() <= dim {
            self.cells.resize(dim + 1, Vec::new());
        }
        let boundary = if dim == 0 { Some(Vec::new()) } else { boundary.map(reduce_mod2) };
        if let (Some(b), true) = (&boundary, dim > 0) {
            let below = self.count(dim - 1);
            assert!(b.iter().all(|&f| f < below), "face index out of range");
        }
        self.cells[dim].push(Cell { label: label.into(), boundary });
        self.cells[dim].len() - 1
    }

    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().rposition(|c| !c.is_empty())
    }

    pub fn count(&self, dim: usize) -> usize {
        self.cells.get(dim).map_or(0, Vec::len)
    }

    /// Cell counts per dimension, up to the top nonempty one.
    pub fn counts(&self) -> Vec<usize> {
        match self.dim() {
            Some(d) => (0..=d).map(|k| self.count(k)).collect(),
            None => Vec::new(),
        }
    }

    pub fn cells(&self, dim: usize) -> &[Cell] {
        self.cells.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn cell(&self, dim: usize, index: usize) -> &Cell {
        &self.cells[dim][index]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Whether every cell of dimension `dim` has modelled attaching data.
    pub fn incidence_known(&self, dim: usize) -> bool {
        self.cells(dim).iter().all(|c| c.boundary.is_some())
    }

    /// Cells up to and including dimension `k`.
    pub fn skeleton(&self, k: usize) -> Self {
        CWComplexMod2 { cells: self.cells.iter().take(k + 1).cloned().collect() }
    }

    /// Checks `∂∘∂ = 0` wherever incidences are known.
    pub fn check_boundary_squared(&self) -> Result<(), ComplexError> {
        for dim in 2..self.cells.len() {
            for (i, cell) in self.cells[dim].iter().enumerate() {
                let Some(b) = &cell.boundary else { continue };
                let mut acc = Vec::new();
                for &f in b {
                    match &self.cells[dim - 1][f].boundary {
                        Some(fb) => acc.extend_from_slice(fb),
                        None => return Err(ComplexError::IncidenceDeferred { dim: dim - 1 }),
                    }
                }
                if !reduce_mod2(acc).is_empty() {
                    return Err(ComplexError::BoundarySquared { dim, cell: i });
                }
            }
        }
        Ok(())
    }

    fn boundary_rank(&self, dim: usize) -> Result<usize, ComplexError> {
        if dim == 0 || dim >= self.cells.len() {
            return Ok(0);
        }
        let below = self.count(dim - 1);
        let vectors = self.cells[dim]
            .iter()
            .map(|c| c.boundary.as_ref().map(|b| BitVec::from_support(below, b)))
            .collect::<Option<Vec<_>>>()
            .ok_or(ComplexError::IncidenceDeferred { dim })?;
        Ok(rank(vectors))
    }

    /// Betti numbers over GF(2), one per dimension up to the top cell.
    pub fn homology_mod2(&self) -> Result<Vec<usize>, ComplexError> {
        self.check_boundary_squared()?;
        let Some(top) = self.dim() else { return Ok(Vec::new()) };
        let ranks = (0..=top + 1).map(|k| self.boundary_rank(k)).collect::<Result<Vec<_>, _>>()?;
        Ok((0..=top).map(|k| self.count(k) - ranks[k] - ranks[k + 1]).collect())
    }

    /// Cartesian product with the product cell structure; boundaries follow the
    /// Leibniz rule mod 2.
    pub fn product(&self, other: &CWComplexMod2) -> Result<CWComplexMod2, ComplexError> {
        for c in [self, other] {
            if let Some(d) = (0..c.cells.len()).find(|&d| !c.incidence_known(d)) {
                return Err(ComplexError::IncidenceDeferred { dim: d });
            }
        }
        let (Some(d1), Some(d2)) = (self.dim(), other.dim()) else {
            return Ok(CWComplexMod2::new());
        };
        // (p, i, q, j) -> index within dimension p+q
        let mut index: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
        let mut out = CWComplexMod2::new();
        for n in 0..=d1 + d2 {
            for p in 0..=n.min(d1) {
                let q = n - p;
                if q > d2 {
                    continue;
                }
                for (i, a) in self.cells(p).iter().enumerate() {
                    for (j, b) in other.cells(q).iter().enumerate() {
                        let mut faces = Vec::new();
                        if p > 0 {
                            for &f in a.boundary.as_ref().expect("checked above") {
                                faces.push(index[&(p - 1, f, q, j)]);
                            }
                        }
                        if q > 0 {
                            for &f in b.boundary.as_ref().expect("checked above") {
                                faces.push(index[&(p, i, q - 1, f)]);
                            }
                        }
                        let id = out.add_cell(n, format!("{} x {}", a.label, b.label), Some(faces));
                        index.insert((p, i, q, j), id);
                    }
                }
            }
        }
        Ok(out)
    }

    fn global_offsets(&self) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(self.cells.len());
        let mut acc = 0;
        for c in &self.cells {
            offsets.push(acc);
            acc += c.len();
        }
        offsets
    }

    /// Text dump: `cell <dim> <id> <label>` lines, then `bnd <id> <ids...>` lines.
    /// Ids are global, numbered dimension by dimension.
    pub fn dump(&self) -> String {
        let offsets = self.global_offsets();
        let mut out = String::new();
        for (d, cells) in self.cells.iter().enumerate() {
            for (i, c) in cells.iter().enumerate() {
                let _ = writeln!(out, "cell {d} {} {}", offsets[d] + i, c.label);
            }
        }
        for (d, cells) in self.cells.iter().enumerate().skip(1) {
            for (i, c) in cells.iter().enumerate() {
                if let Some(b) = &c.boundary {
                    let _ = write!(out, "bnd {}", offsets[d] + i);
                    for f in b {
                        let _ = write!(out, " {}", offsets[d - 1] + f);
                    }
                    out.push('\n');
                }
            }
        }
        out
    }

    /// Inverse of [`dump`](Self::dump). Cells without a `bnd` line get deferred incidence
    /// (dimension 0 excepted); lines starting with `#` are skipped.
    pub fn parse_dump(text: &str) -> Result<CWComplexMod2, ComplexError> {
        let mut decl: Vec<(usize, usize, String)> = Vec::new();
        let mut bnd: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (n, line) in text.lines().enumerate() {
            let bad = |msg: &str| ComplexError::Parse { line: n + 1, message: msg.to_string() };
            let line = line.trim_end();
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.splitn(4, ' ');
            match it.next() {
                Some("cell") => {
                    let dim = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad("bad dimension"))?;
                    let id = it.next().and_then(|t| t.parse().ok()).ok_or_else(|| bad("bad id"))?;
                    let label = it.next().unwrap_or("").to_string();
                    decl.push((dim, id, label));
                }
                Some("bnd") => {
                    let mut nums = line[3..].split_whitespace().map(|t| t.parse::<usize>());
                    let id = nums.next().and_then(Result::ok).ok_or_else(|| bad("bad id"))?;
                    let faces = nums.collect::<Result<Vec<_>, _>>().map_err(|_| bad("bad face id"))?;
                    if bnd.insert(id, faces).is_some() {
                        return Err(bad("duplicate bnd line"));
                    }
                }
                _ => return Err(bad("expected `cell` or `bnd`")),
            }
        }
        let mut out = CWComplexMod2::new();
        let mut local: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for (expected, (dim, id, label)) in decl.into_iter().enumerate() {
            if id != expected {
                return Err(ComplexError::Parse { line: 0, message: format!("cell ids must be consecutive, got {id}") });
            }
            let faces = match bnd.remove(&id) {
                Some(f) => Some(
                    f.iter()
                        .map(|g| match local.get(g) {
                            Some(&(d, i)) if d + 1 == dim => Ok(i),
                            _ => Err(ComplexError::Parse { line: 0, message: format!("face {g} of cell {id} has the wrong dimension") }),
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                None => None,
            };
            let i = out.add_cell(dim, label, faces);
            local.insert(id, (dim, i));
        }
        if let Some((id, _)) = bnd.into_iter().next() {
            return Err(ComplexError::Parse { line: 0, message: format!("bnd for undeclared cell {id}") });
        }
        Ok(out)
    }

    /// Graphviz rendering of the 1-skeleton.
    pub fn one_skeleton_dot(&self) -> String {
        let mut out = String::from("graph skeleton {\n");
        for (i, c) in self.cells(0).iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{}\"];", c.label.replace('"', "'"));
        }
        for c in self.cells(1) {
            match c.boundary.as_deref() {
                Some([a, b]) => {
                    let _ = writeln!(out, "  v{a} -- v{b} [label=\"{}\"];", c.label.replace('"', "'"));
                }
                Some([]) => {}
                _ => {}
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval() -> CWComplexMod2 {
        let mut c = CWComplexMod2::new();
        c.add_cell(0, "a", None);
        c.add_cell(0, "b", None);
        c.add_cell(1, "ab", Some(vec![0, 1]));
        c
    }

    #[test]
    fn point_and_interval() {
        assert_eq!(CWComplexMod2::point().euler_characteristic(), 1);
        assert_eq!(interval().homology_mod2().unwrap(), vec![1, 0]);
    }

    #[test]
    fn square_is_product_of_intervals() {
        let sq = interval().product(&interval()).unwrap();
        assert_eq!(sq.counts(), vec![4, 4, 1]);
        assert_eq!(sq.homology_mod2().unwrap(), vec![1, 0, 0]);
        let p = CWComplexMod2::point().product(&sq).unwrap();
        assert_eq!(p.counts(), sq.counts());
    }

    #[test]
    fn repeated_faces_cancel() {
        let mut c = CWComplexMod2::new();
        c.add_cell(0, "v", None);
        c.add_cell(1, "loop", Some(vec![0, 0]));
        assert_eq!(c.cell(1, 0).boundary, Some(vec![]));
        assert_eq!(c.homology_mod2().unwrap(), vec![1, 1]);
    }

    #[test]
    fn broken_boundary_detected() {
        let mut c = interval();
        c.add_cell(2, "bad", Some(vec![0]));
        assert!(matches!(c.homology_mod2(), Err(ComplexError::BoundarySquared { dim: 2, cell: 0 })));
    }

    #[test]
    fn deferred_incidence_blocks_homology() {
        let mut c = interval();
        c.add_cell(2, "opaque", None);
        assert!(matches!(c.homology_mod2(), Err(ComplexError::IncidenceDeferred { dim: 2 })));
        assert_eq!(c.skeleton(1).homology_mod2().unwrap(), vec![1, 0]);
        assert_eq!(c.euler_characteristic(), 2);
    }

    #[test]
    fn dump_round_trip() {
        let sq = interval().product(&interval()).unwrap();
        let text = sq.dump();
        assert!(text.starts_with("cell 0 0 a x a\n"));
        assert_eq!(CWComplexMod2::parse_dump(&text).unwrap(), sq);
        assert!(sq.one_skeleton_dot().contains("--"));
    }
}
