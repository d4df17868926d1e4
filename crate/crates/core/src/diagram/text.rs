//! Line-oriented text forms of diagrams and certificates.

use std::fmt::Write as _;

use crate::coxeter::{CoxeterSystem, Sign};

use super::{Diagram, DiagramError, Letter, Mode, Slice, Step, Symbol, Variant};

fn letter_text(system: &CoxeterSystem, l: &Letter) -> String {
    let name = system.name(l.gen);
    match l.sign {
        None => name.to_string(),
        Some(Sign::Pos) => format!("{name}+"),
        Some(Sign::Neg) => format!("{name}-"),
    }
}

fn variant_text(v: Option<Variant>) -> &'static str {
    match v {
        None => "",
        Some(Variant::PlusMinus) => " +-",
        Some(Variant::MinusPlus) => " -+",
    }
}

impl Diagram {
    /// `mode`, `domain` and one `slice` line per slice. Backward vertices are written
    /// as forward vertices with the colours exchanged.
    pub fn to_text(&self, system: &CoxeterSystem) -> String {
        let mut out = format!("mode {}\ndomain", self.mode);
        for l in &self.domain {
            out.push(' ');
            out.push_str(&letter_text(system, l));
        }
        out.push('\n');
        for s in &self.slices {
            let _ = match s.symbol {
                Symbol::Cup { gen, variant } => writeln!(out, "slice {} cup {}{}", s.offset, system.name(gen), variant_text(variant)),
                Symbol::Cap { gen, variant } => writeln!(out, "slice {} cap {}{}", s.offset, system.name(gen), variant_text(variant)),
                Symbol::Vertex { s: a, t: b, .. } => writeln!(out, "slice {} bv {} {} fwd", s.offset, system.name(a), system.name(b)),
            };
        }
        out
    }

    /// Parses [`Diagram::to_text`] output; `#` starts a comment.
    pub fn parse(system: &CoxeterSystem, text: &str) -> Result<Diagram, DiagramError> {
        let mut mode = None;
        let mut domain = None;
        let mut slices = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let bad = |message: String| DiagramError::Parse { line: n + 1, message };
            let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
            let Some(&head) = toks.first() else {
                continue;
            };
            let gen = |tok: &str| system.lookup(tok).ok_or_else(|| bad(format!("unknown generator {tok}")));
            match head {
                "mode" => {
                    mode = Some(match toks.get(1) {
                        Some(&"oriented") if toks.len() == 2 => Mode::Oriented,
                        Some(&"unoriented") if toks.len() == 2 => Mode::Unoriented,
                        _ => return Err(bad("expected `mode oriented` or `mode unoriented`".into())),
                    });
                }
                "domain" => {
                    let m = mode.ok_or_else(|| bad("`domain` before `mode`".into()))?;
                    let mut word = Vec::new();
                    for tok in &toks[1..] {
                        let letter = match m {
                            Mode::Unoriented => Letter::plain(gen(tok)?),
                            Mode::Oriented => match tok.strip_suffix('+') {
                                Some(name) => Letter::signed(gen(name)?, Sign::Pos),
                                None => match tok.strip_suffix('-') {
                                    Some(name) => Letter::signed(gen(name)?, Sign::Neg),
                                    None => return Err(bad(format!("oriented letter {tok} needs a + or - suffix"))),
                                },
                            },
                        };
                        word.push(letter);
                    }
                    domain = Some(word);
                }
                "slice" => {
                    let m = mode.ok_or_else(|| bad("`slice` before `mode`".into()))?;
                    let offset: usize = toks.get(1).and_then(|t| t.parse().ok()).ok_or_else(|| bad("expected a slice offset".into()))?;
                    let variant = |tok: Option<&&str>| -> Result<Option<Variant>, DiagramError> {
                        match (m, tok) {
                            (Mode::Unoriented, None) => Ok(None),
                            (Mode::Oriented, Some(&"+-")) => Ok(Some(Variant::PlusMinus)),
                            (Mode::Oriented, Some(&"-+")) => Ok(Some(Variant::MinusPlus)),
                            (Mode::Oriented, _) => Err(bad("oriented cups and caps need +- or -+".into())),
                            (Mode::Unoriented, Some(t)) => Err(bad(format!("unexpected token {t}"))),
                        }
                    };
                    let symbol = match (toks.get(2).copied(), toks.len()) {
                        (Some("cup"), 4 | 5) => Symbol::Cup { gen: gen(toks[3])?, variant: variant(toks.get(4))? },
                        (Some("cap"), 4 | 5) => Symbol::Cap { gen: gen(toks[3])?, variant: variant(toks.get(4))? },
                        (Some("bv"), 6) => {
                            let (s, t) = (gen(toks[3])?, gen(toks[4])?);
                            match toks[5] {
                                "fwd" => Symbol::vertex(system, s, t),
                                "bwd" => Symbol::vertex(system, t, s),
                                other => return Err(bad(format!("expected fwd or bwd, found {other}"))),
                            }
                            .map_err(|e| bad(e.to_string()))?
                        }
                        _ => return Err(bad("expected `cup`, `cap` or `bv` with its arguments".into())),
                    };
                    slices.push(Slice::new(offset, symbol));
                }
                other => return Err(bad(format!("unknown record {other}"))),
            }
        }
        let missing = |what: &str| DiagramError::Parse { line: 0, message: format!("missing `{what}` line") };
        let mode = mode.ok_or_else(|| missing("mode"))?;
        let domain = domain.ok_or_else(|| missing("domain"))?;
        Diagram::new(mode, domain, slices)
    }
}

/// One `<rule> <slice> <offset> fwd|bwd` line per step. Interchanges use the rule name
/// `interchange`, offset 0, and `fwd` when the lower slice passes to the left.
pub fn format_certificate(steps: &[Step]) -> String {
    let mut out = String::new();
    for s in steps {
        let _ = match s {
            Step::Interchange { index, left } => writeln!(out, "interchange {index} 0 {}", if *left { "fwd" } else { "bwd" }),
            Step::Rule { rule, slice, offset, forward } => writeln!(out, "{rule} {slice} {offset} {}", if *forward { "fwd" } else { "bwd" }),
        };
    }
    out
}

pub fn parse_certificate(text: &str) -> Result<Vec<Step>, DiagramError> {
    let mut steps = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let bad = |message: &str| DiagramError::Parse { line: n + 1, message: message.to_string() };
        let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let [rule, slice, offset, dir] = toks[..] else {
            return Err(bad("expected <rule> <slice> <offset> fwd|bwd"));
        };
        let slice: usize = slice.parse().map_err(|_| bad("bad slice index"))?;
        let offset: usize = offset.parse().map_err(|_| bad("bad offset"))?;
        let forward = match dir {
            "fwd" => true,
            "bwd" => false,
            _ => return Err(bad("expected fwd or bwd")),
        };
        steps.push(if rule == "interchange" {
            Step::Interchange { index: slice, left: forward }
        } else {
            Step::Rule { rule: rule.to_string(), slice, offset, forward }
        });
    }
    Ok(steps)
}
