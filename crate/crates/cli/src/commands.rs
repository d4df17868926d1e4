use std::path::Path;

use serde_json::{json, Value};
use thiserror::Error;

use coxdiag::complexes::{
    bw_complex, coxeter_3presentation_census, coxeter_complex, dual_coxeter_complex, generate_zamolodzhikov, presentation_complex,
    pruned_half_skeleton_census, salvetti_complex, universal_cover_2skeleton, verify_zamolodzhikov, CWComplexMod2, ComplexError,
    Presentation, ZamRelation,
};
use coxdiag::coxeter::{parse_system, CoxeterError, CoxeterSystem, GeneratorSet, GroupOrder, Side, Word, DEFAULT_CLOSURE_LIMIT as LIMIT};
use coxdiag::diagram::{format_certificate, install_zamolodzhikov, normalize, search_equality, Diagram, DiagramError, Mode, RuleCatalog, SearchOutcome};
use coxdiag::Budget;

use crate::report::Report;
use crate::{Command, Common, ComplexCmd, DiagramCmd, Emit, GroupCmd, Kind, ModeArg, WordCmd, ZamCmd, BUDGET_ENV};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io { .. } => 1,
        }
    }
}

macro_rules! domain_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain(e.to_string())
            }
        }
    )*};
}

domain_from!(CoxeterError, ComplexError, DiagramError);

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

struct Ctx {
    system: CoxeterSystem,
    budget: Budget,
    seed: u64,
}

/// Validates the flags shared by every subcommand before any computation.
fn context(common: &Common) -> Result<Ctx> {
    let budget = match &common.budget {
        Some(b) => b.parse().map_err(|e: coxdiag::budget::BudgetParseError| CliError::Usage(e.to_string()))?,
        None => match std::env::var(BUDGET_ENV) {
            Ok(b) => b.parse().map_err(|e: coxdiag::budget::BudgetParseError| CliError::Usage(format!("{BUDGET_ENV}: {e}")))?,
            Err(_) => Budget::default(),
        },
    };
    let path = common.system.as_ref().ok_or_else(|| CliError::Usage("--system is required".into()))?;
    let text = read(path)?;
    let system = parse_system(&text).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
    Ok(Ctx { system, budget, seed: common.seed })
}

pub fn run(common: &Common, command: Command) -> Result<String> {
    let ctx = context(common)?;
    let report = match command {
        Command::Group(c) => group(&ctx, c)?,
        Command::Word(c) => word(&ctx, c)?,
        Command::Diagram(c) => diagram(&ctx, c)?,
        Command::Complex(c) => complex(&ctx, c)?,
        Command::Zam(c) => zam(&ctx, c)?,
    };
    Ok(match report {
        Output::Report(r) => r.render(common.format),
        Output::Raw(text) => text,
    })
}

enum Output {
    Report(Report),
    /// DOT text, printed verbatim whatever the format.
    Raw(String),
}

impl From<Report> for Output {
    fn from(r: Report) -> Self {
        Output::Report(r)
    }
}

fn parse_subset(system: &CoxeterSystem, text: &str) -> Result<GeneratorSet> {
    text.split(',')
        .map(|name| system.lookup(name.trim()).ok_or_else(|| CliError::Domain(format!("unknown generator `{}`", name.trim()))))
        .collect()
}

fn parse_triple(system: &CoxeterSystem, text: &str) -> Result<GeneratorSet> {
    if text.split(',').count() != 3 {
        return Err(CliError::Usage(format!("--triple expects three comma-separated generators, got `{text}`")));
    }
    let set = parse_subset(system, text)?;
    if set.len() != 3 {
        return Err(CliError::Usage(format!("--triple `{text}` repeats a generator")));
    }
    Ok(set)
}

fn two<T: Clone>(items: &[T], flag: &str) -> Result<(T, T)> {
    match items {
        [a, b] => Ok((a.clone(), b.clone())),
        _ => Err(CliError::Usage(format!("{flag} must be given exactly twice"))),
    }
}

fn order_value(o: GroupOrder) -> Value {
    match o {
        GroupOrder::Finite(n) => Value::String(n.to_string()),
        GroupOrder::Infinite => Value::String("infinite".into()),
    }
}

fn group(ctx: &Ctx, cmd: GroupCmd) -> Result<Output> {
    let sys = &ctx.system;
    Ok(match cmd {
        GroupCmd::Info => {
            let all = sys.all();
            let finitary: Vec<Value> = (1..=sys.rank())
                .flat_map(|k| sys.finitary_subsets(k))
                .map(|j| Value::String(format!("{} {}", sys.format_set(&j), sys.type_name(&j).expect("finitary"))))
                .collect();
            Report::new()
                .field("rank", sys.rank())
                .field("generators", sys.names().join(" "))
                .field("type", sys.type_name(&all).unwrap_or_else(|| "infinite".into()))
                .field("order", order_value(sys.group_order(&all)?))
                .field("finitary", finitary)
                .into()
        }
        GroupCmd::Enumerate { subset } => {
            let set = match subset {
                Some(s) => parse_subset(sys, &s)?,
                None => sys.all(),
            };
            if !sys.is_finitary(&set) {
                return Err(CliError::Domain(format!("parabolic subgroup {} is infinite", sys.format_set(&set))));
            }
            let elements = sys.enumerate(&set, LIMIT)?;
            let lines: Vec<Value> = elements.iter().map(|x| Value::String(format!("{} {}", x.length(), x.display(sys)))).collect();
            Report::new().field("subset", sys.format_set(&set)).field("order", elements.len()).field("element", lines).into()
        }
        GroupCmd::NormalForm { word, emit } => {
            let w = Word::parse(sys, &word)?;
            let x = sys.normal_form(&w, LIMIT)?;
            if emit == Some(Emit::Dot) {
                return Ok(Output::Raw(sys.reduced_expression_graph(&x, LIMIT)?.to_dot(sys)));
            }
            let nf = x.display(sys).to_string();
            let names = |set: GeneratorSet| set.iter().map(|s| sys.name(s).to_string()).collect::<Vec<_>>().join(" ");
            Report::new()
                .field("normal_form", nf)
                .field("length", x.length())
                .field("left_descents", names(sys.descents(&x, Side::Left, LIMIT)?))
                .field("right_descents", names(sys.descents(&x, Side::Right, LIMIT)?))
                .field("reduced_words", sys.reduced_words(&x, LIMIT)?.len())
                .into()
        }
    })
}

fn word(ctx: &Ctx, cmd: WordCmd) -> Result<Output> {
    let sys = &ctx.system;
    Ok(match cmd {
        WordCmd::Reduce { word } => {
            let w = Word::parse(sys, &word)?;
            let x = sys.normal_form(&w, LIMIT)?;
            let nf = x.display(sys).to_string();
            Report::new()
                .field("normal_form", nf)
                .field("length", x.length())
                .field("input_reduced", sys.is_reduced(&w, LIMIT)?)
                .into()
        }
        WordCmd::Equal { word } => {
            let (a, b) = two(&word, "--word")?;
            let (u, v) = (Word::parse(sys, &a)?, Word::parse(sys, &b)?);
            let (x, y) = (sys.normal_form(&u, LIMIT)?, sys.normal_form(&v, LIMIT)?);
            let forms = json!([x.display(sys).to_string(), y.display(sys).to_string()]);
            Report::new().field("equal", x == y).field("normal_forms", forms)
                .into()
        }
        WordCmd::PositiveEqual { word } => {
            let (a, b) = two(&word, "--word")?;
            let (u, v) = (Word::parse(sys, &a)?, Word::parse(sys, &b)?);
            Report::new().field("positive_equal", sys.positive_braid_equal(&u, &v, LIMIT)?).into()
        }
    })
}

fn load_diagram(sys: &CoxeterSystem, path: &Path) -> Result<Diagram> {
    Diagram::parse(sys, &read(path)?).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))
}

fn catalog(ctx: &Ctx, mode: Mode, zam: bool) -> Result<RuleCatalog> {
    let mut cat = RuleCatalog::standard(&ctx.system, mode);
    if zam {
        cat.install_all_zamolodzhikov(&ctx.system, ctx.budget, ctx.seed, LIMIT)?;
    }
    Ok(cat)
}

fn letters_text(sys: &CoxeterSystem, d: &Diagram, word: &[coxdiag::diagram::Letter]) -> String {
    Diagram::identity(d.mode, word.to_vec())
        .to_text(sys)
        .lines()
        .nth(1)
        .and_then(|l| l.strip_prefix("domain"))
        .unwrap_or("")
        .trim()
        .to_string()
}

fn diagram(ctx: &Ctx, cmd: DiagramCmd) -> Result<Output> {
    let sys = &ctx.system;
    Ok(match cmd {
        DiagramCmd::Check { diagram } => {
            let d = load_diagram(sys, &diagram)?;
            let (dom, cod) = d.boundary()?;
            let image = |w: &[coxdiag::diagram::Letter]| -> Result<String> {
                let bare: Vec<_> = w.iter().map(|l| l.gen).collect();
                Ok(sys.normal_form(&Word(bare), LIMIT)?.display(sys).to_string())
            };
            let width = d.levels()?.iter().map(Vec::len).max().unwrap_or(0);
            Report::new()
                .field("mode", d.mode.to_string())
                .field("slices", d.len())
                .field("max_width", width)
                .field("domain", letters_text(sys, &d, &dom))
                .field("codomain", letters_text(sys, &d, &cod))
                .field("domain_image", image(&dom)?)
                .field("codomain_image", image(&cod)?)
                .into()
        }
        DiagramCmd::Normalize { diagram, zam } => {
            let d = load_diagram(sys, &diagram)?;
            let cat = catalog(ctx, d.mode, zam)?;
            let (n, steps) = normalize(&d, &cat, ctx.budget)?;
            Report::new().field("slices_before", d.len()).field("slices_after", n.len()).field("steps", steps.len()).body(n.to_text(sys)).into()
        }
        DiagramCmd::Equal { diagram, zam } => {
            let (p, q) = two(&diagram, "--diagram")?;
            let (d1, d2) = (load_diagram(sys, &p)?, load_diagram(sys, &q)?);
            let cat = catalog(ctx, d1.mode, zam)?;
            match search_equality(&d1, &d2, &cat, ctx.budget)? {
                SearchOutcome::Proven(cert) => {
                    Report::new().field("outcome", "proven").field("steps", cert.len()).body(format_certificate(&cert)).into()
                }
                SearchOutcome::BoundaryMismatch => Report::new().field("outcome", "boundary-mismatch").into(),
                SearchOutcome::Inconclusive { explored } => {
                    Report::new().field("outcome", "inconclusive").field("explored", explored).field("budget", ctx.budget.to_string()).into()
                }
            }
        }
        DiagramCmd::ForgetOrientation { diagram } => {
            let d = load_diagram(sys, &diagram)?;
            Report::new().body(d.forget_orientation()?.to_text(sys)).into()
        }
    })
}

fn build(ctx: &Ctx, kind: Kind) -> Result<CWComplexMod2> {
    let sys = &ctx.system;
    Ok(match kind {
        Kind::Dual => dual_coxeter_complex(sys, false, LIMIT)?,
        Kind::DualCompleted => dual_coxeter_complex(sys, true, LIMIT)?,
        Kind::Coxeter => coxeter_complex(sys, LIMIT)?,
        Kind::Salvetti => salvetti_complex(sys, LIMIT)?,
        Kind::Bw => bw_complex(sys)?,
        Kind::Presentation => presentation_complex(&Presentation::coxeter(sys))?,
        Kind::Cover => universal_cover_2skeleton(sys, LIMIT)?,
    })
}

fn complex(ctx: &Ctx, cmd: ComplexCmd) -> Result<Output> {
    Ok(match cmd {
        ComplexCmd::Build { kind, emit } => {
            let c = build(ctx, kind)?;
            if emit == Some(Emit::Dot) {
                return Ok(Output::Raw(c.one_skeleton_dot()));
            }
            Report::new().field("counts", json!(c.counts())).body(c.dump()).into()
        }
        ComplexCmd::Homology { kind, dump } => {
            let c = match (kind, dump) {
                (_, Some(path)) => CWComplexMod2::parse_dump(&read(&path)?).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?,
                (Some(kind), None) => build(ctx, kind)?,
                (None, None) => return Err(CliError::Usage("one of --kind or --dump is required".into())),
            };
            // Betti numbers are only defined up to the last dimension with recorded incidences.
            let top = c.dim().unwrap_or(0);
            let known = (0..=top).take_while(|&d| c.incidence_known(d)).last().unwrap_or(0);
            let betti = c.skeleton(known).homology_mod2()?;
            let mut r = Report::new().field("counts", json!(c.counts())).field("euler", c.euler_characteristic());
            if known < top {
                r = r.field("incidence_known_through", known);
            }
            r.field("betti_mod2", json!(betti)).into()
        }
        ComplexCmd::Census { pruned } => {
            let census = if pruned { pruned_half_skeleton_census(&ctx.system)? } else { coxeter_3presentation_census(&ctx.system)? };
            let mut r = Report::new()
                .field("cells", json!(census.by_dimension().map(|n| n.to_string())))
                .field("vertices", census.vertices.to_string())
                .field("edges", census.edges.to_string())
                .field("quadratic", census.quadratic.to_string())
                .field("braid", census.braid.to_string())
                .field("z", census.z.to_string())
                .field("rotation", census.rotation.to_string())
                .field("flip", census.flip.to_string())
                .field("zamolodzhikov", census.zamolodzhikov.to_string());
            if let Some(p) = &census.pruned {
                r = r
                    .field("kept_z", p.kept_z.to_string())
                    .field("kept_rotation_flip", p.kept_rotation_flip.to_string())
                    .field("kept_zamolodzhikov", p.kept_zamolodzhikov.to_string())
                    .field("kept", p.kept().to_string())
                    .field("removed", p.removed.to_string());
            }
            r.into()
        }
    })
}

fn zam(ctx: &Ctx, cmd: ZamCmd) -> Result<Output> {
    let sys = &ctx.system;
    Ok(match cmd {
        ZamCmd::Generate { triple } => {
            let set = parse_triple(sys, &triple)?;
            let rel = generate_zamolodzhikov(sys, &set, ctx.budget, ctx.seed, LIMIT)?;
            Report::new()
                .field("faces", rel.cells1.len() + rel.cells2.len())
                .field("p1_moves", rel.p1.len())
                .field("p2_moves", rel.p2.len())
                .body(rel.to_text(sys))
                .into()
        }
        ZamCmd::Verify { relation } => {
            let text = read(&relation)?;
            let rel = ZamRelation::parse(sys, &text, LIMIT).map_err(|e| CliError::Domain(format!("{}: {e}", relation.display())))?;
            if !verify_zamolodzhikov(sys, &rel, LIMIT) {
                return Err(CliError::Domain(format!(
                    "{}: the two paths do not split the sphere of {} into complementary hemispheres",
                    relation.display(),
                    sys.format_set(&rel.subset)
                )));
            }
            Report::new()
                .field("verified", true)
                .field("type", rel.type_name.clone())
                .field("faces", rel.cells1.len() + rel.cells2.len())
                .into()
        }
        ZamCmd::InstallDump { triple, mode } => {
            let mode = match mode {
                ModeArg::Oriented => Mode::Oriented,
                ModeArg::Unoriented => Mode::Unoriented,
            };
            let subsets = match triple {
                Some(t) => {
                    let set = parse_triple(sys, &t)?;
                    if !sys.is_finitary(&set) {
                        return Err(CliError::Domain(format!("{} is not a finite parabolic subgroup", sys.format_set(&set))));
                    }
                    vec![set]
                }
                None => sys.finitary_subsets(3),
            };
            let mut body = String::new();
            let mut ids = Vec::new();
            for set in subsets {
                let rel = generate_zamolodzhikov(sys, &set, ctx.budget, ctx.seed, LIMIT)?;
                let rule = install_zamolodzhikov(sys, &rel, mode, LIMIT)?;
                body.push_str(&format!("rule {} {}\nlhs\n{}rhs\n{}", rule.id, rule.family, rule.lhs.to_text(sys), rule.rhs.to_text(sys)));
                ids.push(Value::String(rule.id));
            }
            let r = Report::new().field("rules", ids.len()).field("rule", ids);
            if body.is_empty() { r } else { r.body(body) }.into()
        }
    })
}
