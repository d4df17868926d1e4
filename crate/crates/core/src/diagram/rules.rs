use std::collections::HashMap;
use std::fmt;

use crate::complexes::{verify_zamolodzhikov, ZamRelation};
use crate::coxeter::{alternating, CoxeterSystem, Element, GeneratorId, GeneratorSet, Sign};

use super::term::group_image;
use super::{Diagram, DiagramError, Letter, Mode, Slice, Symbol, Variant};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RuleFamily {
    Interchange,
    ZigZag,
    Cyclicity,
    Bridge,
    CircleRemove,
    CancelVertexPair,
    UnorientedFenn,
    Zamolodzhikov(String),
}

impl fmt::Display for RuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleFamily::Interchange => f.write_str("interchange"),
            RuleFamily::ZigZag => f.write_str("zigzag"),
            RuleFamily::Cyclicity => f.write_str("cyclicity"),
            RuleFamily::Bridge => f.write_str("bridge"),
            RuleFamily::CircleRemove => f.write_str("circle-remove"),
            RuleFamily::CancelVertexPair => f.write_str("cancel-vertex-pair"),
            RuleFamily::UnorientedFenn => f.write_str("unoriented-fenn"),
            RuleFamily::Zamolodzhikov(tag) => write!(f, "zamolodzhikov({tag})"),
        }
    }
}

/// `lhs = rhs`, two parallel diagram patterns. Applied forward, an occurrence of `lhs`
/// is replaced by `rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub id: String,
    pub family: RuleFamily,
    pub lhs: Diagram,
    pub rhs: Diagram,
}

impl RewriteRule {
    /// The side matched when applying in the given direction, and its replacement.
    pub fn sides(&self, forward: bool) -> (&Diagram, &Diagram) {
        if forward {
            (&self.lhs, &self.rhs)
        } else {
            (&self.rhs, &self.lhs)
        }
    }
}

/// Equal boundaries, consistent region labels on both sides, and (since every relation
/// holds in `W`) equal group images of domain and codomain.
pub fn check_rule_soundness(system: &CoxeterSystem, rule: &RewriteRule, limit: usize) -> bool {
    let check = || -> Result<bool, DiagramError> {
        if rule.lhs.mode != rule.rhs.mode {
            return Ok(false);
        }
        let (l_dom, l_cod) = rule.lhs.boundary()?;
        let (r_dom, r_cod) = rule.rhs.boundary()?;
        if l_dom != r_dom || l_cod != r_cod {
            return Ok(false);
        }
        let e = Element::identity();
        let l = rule.lhs.label_regions(system, &e, limit)?;
        let r = rule.rhs.label_regions(system, &e, limit)?;
        Ok(l.rightmost() == r.rightmost() && group_image(system, &l_dom, limit)? == group_image(system, &l_cod, limit)?)
    };
    check().unwrap_or(false)
}

#[derive(Clone, Debug)]
pub struct RuleCatalog {
    pub mode: Mode,
    rules: Vec<RewriteRule>,
    by_id: HashMap<String, usize>,
}

fn letters(mode: Mode, gens: &[GeneratorId]) -> Vec<Letter> {
    let sign = (mode == Mode::Oriented).then_some(Sign::Pos);
    gens.iter().map(|&gen| Letter { gen, sign }).collect()
}

fn diagram(mode: Mode, domain: Vec<Letter>, slices: Vec<Slice>) -> Diagram {
    Diagram::new(mode, domain, slices).expect("catalog patterns type-check")
}

impl RuleCatalog {
    pub fn empty(mode: Mode) -> Self {
        RuleCatalog { mode, rules: Vec::new(), by_id: HashMap::new() }
    }

    /// Isotopy, Fenn-type and vertex relations for every generator and every pair with
    /// finite `m`.
    pub fn standard(system: &CoxeterSystem, mode: Mode) -> Self {
        let mut cat = Self::empty(mode);
        for s in system.generators() {
            match mode {
                Mode::Unoriented => cat.unoriented_generator_rules(system, s),
                Mode::Oriented => cat.oriented_generator_rules(system, s),
            }
        }
        for s in system.generators() {
            for t in system.generators() {
                if let Ok(Symbol::Vertex { m, .. }) = Symbol::vertex(system, s, t) {
                    cat.pair_rules(system, s, t, m as usize);
                }
            }
        }
        cat
    }

    fn unoriented_generator_rules(&mut self, system: &CoxeterSystem, s: GeneratorId) {
        let mode = Mode::Unoriented;
        let n = system.name(s);
        let cup = Symbol::Cup { gen: s, variant: None };
        let cap = Symbol::Cap { gen: s, variant: None };
        let one = letters(mode, &[s]);
        let two = letters(mode, &[s, s]);
        let id = |w: &Vec<Letter>| Diagram::identity(mode, w.clone());
        self.push(format!("zigzag.{n}.l"), RuleFamily::ZigZag, diagram(mode, one.clone(), vec![Slice::new(1, cup), Slice::new(0, cap)]), id(&one));
        self.push(format!("zigzag.{n}.r"), RuleFamily::ZigZag, diagram(mode, one.clone(), vec![Slice::new(0, cup), Slice::new(1, cap)]), id(&one));
        self.push(format!("circle.{n}"), RuleFamily::UnorientedFenn, diagram(mode, vec![], vec![Slice::new(0, cup), Slice::new(0, cap)]), id(&vec![]));
        self.push(format!("bridge.{n}"), RuleFamily::UnorientedFenn, diagram(mode, two.clone(), vec![Slice::new(0, cap), Slice::new(0, cup)]), id(&two));
    }

    fn oriented_generator_rules(&mut self, system: &CoxeterSystem, s: GeneratorId) {
        let mode = Mode::Oriented;
        let n = system.name(s);
        let cup = |v| Symbol::Cup { gen: s, variant: Some(v) };
        let cap = |v| Symbol::Cap { gen: s, variant: Some(v) };
        let (pm, mp) = (Variant::PlusMinus, Variant::MinusPlus);
        let plus = vec![Letter::signed(s, Sign::Pos)];
        let minus = vec![Letter::signed(s, Sign::Neg)];
        let id = |w: &Vec<Letter>| Diagram::identity(mode, w.clone());
        let zigzags = [
            (&plus, [Slice::new(1, cup(mp)), Slice::new(0, cap(pm))]),
            (&plus, [Slice::new(0, cup(pm)), Slice::new(1, cap(mp))]),
            (&minus, [Slice::new(1, cup(pm)), Slice::new(0, cap(mp))]),
            (&minus, [Slice::new(0, cup(mp)), Slice::new(1, cap(pm))]),
        ];
        for (i, (w, slices)) in zigzags.into_iter().enumerate() {
            self.push(format!("zigzag.{n}.{i}"), RuleFamily::ZigZag, diagram(mode, w.clone(), slices.to_vec()), id(w));
        }
        for (v, tag) in [(pm, "pm"), (mp, "mp")] {
            let circle = diagram(mode, vec![], vec![Slice::new(0, cup(v)), Slice::new(0, cap(v))]);
            self.push(format!("circle.{n}.{tag}"), RuleFamily::CircleRemove, circle, id(&vec![]));
            let w = Symbol::Cap { gen: s, variant: Some(v) }.input(mode);
            let bridge = diagram(mode, w.clone(), vec![Slice::new(0, cap(v)), Slice::new(0, cup(v))]);
            self.push(format!("bridge.{n}.{tag}"), RuleFamily::Bridge, bridge, id(&w));
        }
    }

    fn pair_rules(&mut self, system: &CoxeterSystem, s: GeneratorId, t: GeneratorId, m: usize) {
        let mode = self.mode;
        let (ns, nt) = (system.name(s), system.name(t));
        let fwd = Symbol::Vertex { s, t, m: m as u32 };
        let bwd = Symbol::Vertex { s: t, t: s, m: m as u32 };
        let x = alternating(s, t, m);
        let y = alternating(t, s, m);
        let cancel = diagram(mode, letters(mode, &x), vec![Slice::new(0, fwd), Slice::new(0, bwd)]);
        self.push(format!("cancel.{ns}.{nt}"), RuleFamily::CancelVertexPair, cancel, Diagram::identity(mode, letters(mode, &x)));
        match mode {
            Mode::Unoriented => {
                let cup = |g| Symbol::Cup { gen: g, variant: None };
                let cap = |g| Symbol::Cap { gen: g, variant: None };
                let rhs = diagram(mode, letters(mode, &y), vec![Slice::new(0, bwd)]);
                let left = vec![Slice::new(0, cup(x[0])), Slice::new(1, fwd), Slice::new(m, cap(y[m - 1]))];
                let right = vec![Slice::new(m, cup(x[m - 1])), Slice::new(1, fwd), Slice::new(0, cap(y[0]))];
                self.push(format!("cyclic.{ns}.{nt}.l"), RuleFamily::Cyclicity, diagram(mode, letters(mode, &y), left), rhs.clone());
                self.push(format!("cyclic.{ns}.{nt}.r"), RuleFamily::Cyclicity, diagram(mode, letters(mode, &y), right), rhs);
            }
            Mode::Oriented => {
                // the vertex turned half way round, once bending strands to the left
                // and once to the right
                let cup = |g, v| Symbol::Cup { gen: g, variant: Some(v) };
                let cap = |g, v| Symbol::Cap { gen: g, variant: Some(v) };
                let domain: Vec<Letter> = y.iter().rev().map(|&g| Letter::signed(g, Sign::Neg)).collect();
                let mut left: Vec<Slice> = (0..m).map(|k| Slice::new(k, cup(x[m - 1 - k], Variant::MinusPlus))).collect();
                left.push(Slice::new(m, fwd));
                left.extend((0..m).map(|k| Slice::new(2 * m - 1 - k, cap(y[m - 1 - k], Variant::PlusMinus))));
                let mut right: Vec<Slice> = (0..m).map(|k| Slice::new(m + k, cup(x[k], Variant::PlusMinus))).collect();
                right.push(Slice::new(m, fwd));
                right.extend((0..m).map(|k| Slice::new(m - 1 - k, cap(y[k], Variant::MinusPlus))));
                self.push(format!("cyclic.{ns}.{nt}"), RuleFamily::Cyclicity, diagram(mode, domain.clone(), left), diagram(mode, domain, right));
            }
        }
    }

    fn push(&mut self, id: String, family: RuleFamily, lhs: Diagram, rhs: Diagram) {
        self.install(RewriteRule { id, family, lhs, rhs });
    }

    /// Adds a rule, replacing any rule with the same id.
    pub fn install(&mut self, rule: RewriteRule) {
        match self.by_id.get(&rule.id) {
            Some(&i) => self.rules[i] = rule,
            None => {
                self.by_id.insert(rule.id.clone(), self.rules.len());
                self.rules.push(rule);
            }
        }
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn get(&self, id: &str) -> Option<&RewriteRule> {
        self.by_id.get(id).map(|&i| &self.rules[i])
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.by_id.get(id).copied()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// The same catalog without the rules whose id satisfies `drop`.
    pub fn without(&self, drop: impl Fn(&RewriteRule) -> bool) -> Self {
        let mut out = Self::empty(self.mode);
        for r in self.rules.iter().filter(|r| !drop(r)) {
            out.install(r.clone());
        }
        out
    }
}

/// Renders a verified relation as a rule between its two move paths.
pub fn install_zamolodzhikov(system: &CoxeterSystem, rel: &ZamRelation, mode: Mode, limit: usize) -> Result<RewriteRule, DiagramError> {
    if !verify_zamolodzhikov(system, rel, limit) {
        return Err(DiagramError::UnverifiedRelation);
    }
    let path = |steps: &[crate::complexes::BraidStep]| -> Result<Vec<Slice>, DiagramError> {
        steps.iter().map(|st| Ok(Slice::new(st.position, Symbol::vertex(system, st.first, st.second)?))).collect()
    };
    let domain = letters(mode, &rel.a.0);
    let lhs = Diagram::new(mode, domain.clone(), path(&rel.p1)?)?;
    let rhs = Diagram::new(mode, domain, path(&rel.p2)?)?;
    let names: Vec<&str> = rel.subset.iter().map(|s| system.name(s)).collect();
    Ok(RewriteRule {
        id: format!("zam.{}.{}", rel.type_name, names.join("-")),
        family: RuleFamily::Zamolodzhikov(rel.type_name.clone()),
        lhs,
        rhs,
    })
}

impl RuleCatalog {
    /// Generates and installs a relation for every finite rank-3 parabolic.
    pub fn install_all_zamolodzhikov(&mut self, system: &CoxeterSystem, budget: crate::Budget, seed: u64, limit: usize) -> Result<Vec<GeneratorSet>, DiagramError> {
        let triples = system.finitary_subsets(3);
        for subset in &triples {
            let rel = crate::complexes::generate_zamolodzhikov(system, subset, budget, seed, limit)?;
            self.install(install_zamolodzhikov(system, &rel, self.mode, limit)?);
        }
        Ok(triples)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::DEFAULT_CLOSURE_LIMIT as L;

    #[test]
    fn catalogs_are_sound() {
        for sys in [CoxeterSystem::dihedral(3).unwrap(), CoxeterSystem::dihedral(4).unwrap(), CoxeterSystem::type_a(3).unwrap()] {
            for mode in [Mode::Unoriented, Mode::Oriented] {
                let cat = RuleCatalog::standard(&sys, mode);
                assert!(!cat.is_empty());
                for r in cat.rules() {
                    assert!(check_rule_soundness(&sys, r, L), "{}", r.id);
                }
            }
        }
    }

    #[test]
    fn catalog_sizes() {
        let a2 = CoxeterSystem::dihedral(3).unwrap();
        // per generator: 2 zigzags, circle, bridge; per ordered pair: cancel + 2 cyclic
        assert_eq!(RuleCatalog::standard(&a2, Mode::Unoriented).len(), 2 * 4 + 2 * 3);
        // per generator: 4 zigzags, 2 circles, 2 bridges; per ordered pair: cancel + cyclic
        assert_eq!(RuleCatalog::standard(&a2, Mode::Oriented).len(), 2 * 8 + 2 * 2);
        let free = CoxeterSystem::from_table(&[&[1, 0], &[0, 1]]).unwrap();
        assert_eq!(RuleCatalog::standard(&free, Mode::Unoriented).len(), 8);
    }

    #[test]
    fn corrupted_rules_fail() {
        let a1a1 = CoxeterSystem::dihedral(2).unwrap();
        let (s, t) = (GeneratorId(0), GeneratorId(1));
        let st = letters(Mode::Unoriented, &[s, t]);
        let bad = RewriteRule {
            id: "bad".into(),
            family: RuleFamily::ZigZag,
            lhs: Diagram::identity(Mode::Unoriented, st.clone()),
            rhs: Diagram::new(Mode::Unoriented, st, vec![Slice::new(0, Symbol::vertex(&a1a1, s, t).unwrap())]).unwrap(),
        };
        assert!(!check_rule_soundness(&a1a1, &bad, L));

        let a2 = CoxeterSystem::dihedral(3).unwrap();
        let cat = RuleCatalog::standard(&a2, Mode::Unoriented);
        let mut mutated = cat.get("cyclic.s0.s1.l").unwrap().clone();
        mutated.rhs.slices[0].symbol = Symbol::vertex(&a2, s, t).unwrap();
        assert!(!check_rule_soundness(&a2, &mutated, L));
    }

    #[test]
    fn zamolodzhikov_rules() {
        let a3 = CoxeterSystem::type_a(3).unwrap();
        for mode in [Mode::Unoriented, Mode::Oriented] {
            let mut cat = RuleCatalog::standard(&a3, mode);
            cat.install_all_zamolodzhikov(&a3, crate::Budget::default(), 1, L).unwrap();
            let z = cat.rules().iter().find(|r| matches!(r.family, RuleFamily::Zamolodzhikov(_))).unwrap();
            assert_eq!(z.id, "zam.A3.s0-s1-s2");
            assert_eq!(z.lhs.len() + z.rhs.len(), 14);
            assert!(check_rule_soundness(&a3, z, L));
        }
        let rel = crate::complexes::generate_zamolodzhikov(&a3, &a3.all(), crate::Budget::default(), 1, L).unwrap();
        let mut broken = rel.clone();
        broken.p2 = rel.p1.clone();
        broken.cells2 = rel.cells1.clone();
        assert!(matches!(install_zamolodzhikov(&a3, &broken, Mode::Unoriented, L), Err(DiagramError::UnverifiedRelation)));
    }
}
