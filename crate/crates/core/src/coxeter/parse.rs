//! Line-oriented system files:
//!
//! ```text
//! # type A2
//! rank 2
//! gen 0 s
//! gen 1 t
//! m s t 3
//! ```
//!
//! Every unordered pair of distinct generators must be given exactly once.

use std::collections::HashMap;

use super::{CoxeterError, CoxeterSystem, Order};

/// Location of a problem in a system file (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out
}

pub fn parse_system(text: &str) -> Result<CoxeterSystem, CoxeterError> {
    let mut rank: Option<usize> = None;
    let mut names: Vec<Option<String>> = Vec::new();
    let mut pairs: HashMap<(usize, usize), (Order, Span)> = HashMap::new();
    let mut pending: Vec<(String, String, Order, Span)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col, head)) = toks.first() else { continue };
        let at = |c: usize| Span { line: lineno + 1, column: c + 1 };
        let bad = |c: usize, msg: String| CoxeterError::Parse { span: at(c), message: msg };
        match head {
            "rank" => {
                if toks.len() != 2 {
                    return Err(bad(col, "expected `rank <int>`".into()));
                }
                if rank.is_some() {
                    return Err(bad(col, "duplicate rank".into()));
                }
                let n: usize = toks[1].1.parse().map_err(|_| bad(toks[1].0, format!("bad integer `{}`", toks[1].1)))?;
                if n == 0 {
                    return Err(bad(toks[1].0, "rank must be positive".into()));
                }
                rank = Some(n);
                names = vec![None; n];
            }
            "gen" => {
                let n = rank.ok_or_else(|| bad(col, "`gen` before `rank`".into()))?;
                if toks.len() != 3 {
                    return Err(bad(col, "expected `gen <index> <name>`".into()));
                }
                let idx: usize = toks[1].1.parse().map_err(|_| bad(toks[1].0, format!("bad integer `{}`", toks[1].1)))?;
                if idx >= n {
                    return Err(bad(toks[1].0, format!("generator index {idx} out of range for rank {n}")));
                }
                if names[idx].is_some() {
                    return Err(bad(toks[1].0, format!("generator {idx} defined twice")));
                }
                let name = toks[2].1.to_string();
                if names.iter().flatten().any(|n| *n == name) {
                    return Err(bad(toks[2].0, format!("duplicate generator name `{name}`")));
                }
                names[idx] = Some(name);
            }
            "m" => {
                if toks.len() != 4 {
                    return Err(bad(col, "expected `m <name> <name> <int|inf>`".into()));
                }
                let value = match toks[3].1 {
                    "inf" => Order::Infinite,
                    v => Order::Finite(v.parse().map_err(|_| bad(toks[3].0, format!("bad entry `{v}`")))?),
                };
                if let Order::Finite(m) = value {
                    if m < 2 {
                        return Err(bad(toks[3].0, format!("m must be at least 2, got {m}")));
                    }
                }
                pending.push((toks[1].1.to_string(), toks[2].1.to_string(), value, at(col)));
            }
            other => return Err(bad(col, format!("unknown directive `{other}`"))),
        }
    }

    let n = rank.ok_or(CoxeterError::Parse { span: Span { line: 1, column: 1 }, message: "missing `rank`".into() })?;
    let names: Vec<String> = names
        .into_iter()
        .enumerate()
        .map(|(i, n)| n.ok_or(CoxeterError::Parse { span: Span { line: 1, column: 1 }, message: format!("generator {i} undefined") }))
        .collect::<Result<_, _>>()?;
    let lookup = |name: &str, span: &Span| {
        names.iter().position(|n| n == name).ok_or(CoxeterError::Parse { span: span.clone(), message: format!("unknown generator `{name}`") })
    };
    for (a, b, value, span) in pending {
        let i = lookup(&a, &span)?;
        let j = lookup(&b, &span)?;
        if i == j {
            return Err(CoxeterError::Parse { span, message: format!("pair {a},{b} is not a pair of distinct generators") });
        }
        let key = (i.min(j), i.max(j));
        if pairs.contains_key(&key) {
            return Err(CoxeterError::Parse { span, message: format!("pair {a},{b} specified twice") });
        }
        pairs.insert(key, (value, span));
    }
    let mut matrix = vec![vec![Order::Finite(1); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let (value, _) = pairs.get(&(i, j)).ok_or_else(|| CoxeterError::MissingPair(names[i].clone(), names[j].clone()))?;
            matrix[i][j] = *value;
            matrix[j][i] = *value;
        }
    }
    CoxeterSystem::with_names(names, matrix)
}

/// Renders a system in the file format accepted by [`parse_system`].
pub fn format_system(system: &CoxeterSystem) -> String {
    let mut out = format!("rank {}\n", system.rank());
    for s in system.generators() {
        out.push_str(&format!("gen {} {}\n", s.0, system.name(s)));
    }
    for s in system.generators() {
        for t in system.generators().filter(|t| *t > s) {
            out.push_str(&format!("m {} {} {}\n", system.name(s), system.name(t), system.m(s, t)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::GeneratorId;

    #[test]
    fn a2_file() {
        let sys = parse_system("rank 2\ngen 0 s\ngen 1 t\nm s t 3\n").unwrap();
        assert_eq!(sys.m(GeneratorId(0), GeneratorId(1)), Order::Finite(3));
        assert_eq!(parse_system(&format_system(&sys)).unwrap(), sys);
    }

    #[test]
    fn missing_pair() {
        let err = parse_system("rank 2\ngen 0 s\ngen 1 t\n").unwrap_err();
        assert_eq!(err.to_string(), "pair s,t unspecified");
    }

    #[test]
    fn infinite_entry() {
        let sys = parse_system("# free product\nrank 2\ngen 0 s\ngen 1 t\n\nm s t inf\n").unwrap();
        assert_eq!(sys.m(GeneratorId(0), GeneratorId(1)), Order::Infinite);
    }

    #[test]
    fn duplicate_pair_and_bad_token() {
        let err = parse_system("rank 2\ngen 0 s\ngen 1 t\nm s t 3\nm t s 3\n").unwrap_err();
        assert!(err.to_string().contains("line 5"), "{err}");
        let err = parse_system("rank 2\ngen 0 s\ngen 1 t\nm s t x\n").unwrap_err();
        assert!(err.to_string().contains("line 4, column 7"), "{err}");
        let err = parse_system("rank 2\nfoo\n").unwrap_err();
        assert!(err.to_string().contains("unknown directive"), "{err}");
    }
}
