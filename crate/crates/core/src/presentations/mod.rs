//! Presented algebras and their normal forms: the quantum plane, `A_q`
//! (reduced quantum SL(2)), enveloping algebras of finite-dimensional Lie
//! algebras, and the free algebra on `e1, e2`.

mod aq;
mod config;
mod qplane;
mod structure;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactnum::{Coefficient, Rational};
use crate::freealg::{gens, Gen, NCPoly, Word};

pub use aq::{aq_word, sl2_eliminate_d, sl2_relations, AqElement, SL2_ALPHABET};
pub use config::{AlgebraTag, PresentationConfig};
pub use qplane::{qplane_decompose, qplane_recompose, QPlaneElement, QPlaneRow};
pub use structure::{lie_quotient, StructureConstants};

/// Rewrite steps allowed per call of [`Presentation::normal_form`].
pub const STEP_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("rule {lhs} -> {rhs} does not decrease the graded order")]
    NotDecreasing { lhs: String, rhs: String },
    #[error("generator `{0}` is not part of the presentation")]
    UnknownGenerator(String),
    #[error("normal form exceeded {0} rewrite steps")]
    StepBudget(usize),
    #[error("`{0}` is not in normal form")]
    NotNormal(String),
    #[error("structure constants: {0}")]
    Structure(String),
    #[error("indices {0:?} do not span an ideal")]
    NotAnIdeal(Vec<usize>),
    #[error("config: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationKind {
    QPlane,
    Aq,
    Uea,
    Free,
}

/// A rewrite rule `lhs → rhs` with rational coefficients.
#[derive(Debug, Clone)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: NCPoly<Rational>,
}

#[derive(Debug, Clone)]
struct IndexedRule {
    lhs: Vec<usize>,
    rhs: Vec<(Vec<usize>, Rational)>,
}

/// Ordered generators plus a terminating, confluent rewrite system.
///
/// Words are compared in graded-lexicographic order with letters ranked by
/// their position in the generator list; every rule rewrites a word to
/// strictly smaller ones, which is checked on construction.
#[derive(Debug, Clone)]
pub struct Presentation {
    kind: PresentationKind,
    gens: Vec<Gen>,
    q: Option<Rational>,
    rules: Vec<Rule>,
    structure: Option<StructureConstants>,
    indexed: Vec<IndexedRule>,
    by_first: Vec<Vec<usize>>,
}

type Key = (usize, Vec<usize>);

impl Presentation {
    fn build(
        kind: PresentationKind,
        gens: Vec<Gen>,
        q: Option<Rational>,
        rules: Vec<Rule>,
        structure: Option<StructureConstants>,
    ) -> Result<Self, PresentationError> {
        let index = |g: &Gen| {
            gens.iter()
                .position(|x| x == g)
                .ok_or_else(|| PresentationError::UnknownGenerator(g.to_string()))
        };
        let word_idx = |w: &Word| w.letters().iter().map(&index).collect::<Result<Vec<_>, _>>();
        let mut indexed = Vec::with_capacity(rules.len());
        let mut by_first = vec![Vec::new(); gens.len()];
        for (n, r) in rules.iter().enumerate() {
            let lhs = word_idx(&r.lhs)?;
            let mut rhs = Vec::new();
            for (w, c) in r.rhs.terms() {
                let wi = word_idx(w)?;
                if (wi.len(), &wi) >= (lhs.len(), &lhs) {
                    return Err(PresentationError::NotDecreasing {
                        lhs: r.lhs.to_string(),
                        rhs: r.rhs.render(&gens),
                    });
                }
                rhs.push((wi, c.clone()));
            }
            match lhs.first() {
                Some(&f) => by_first[f].push(n),
                None => {
                    return Err(PresentationError::NotDecreasing {
                        lhs: "1".into(),
                        rhs: r.rhs.render(&gens),
                    })
                }
            }
            indexed.push(IndexedRule { lhs, rhs });
        }
        Ok(Presentation { kind, gens, q, rules, structure, indexed, by_first })
    }

    /// The quantum plane: `xy = q·yx`, rewritten as `y·x → q⁻¹·x·y`.
    pub fn qplane(q: Rational) -> Result<Self, PresentationError> {
        let qi = q.recip().ok_or(PresentationError::ZeroQ)?;
        let g = gens(&["x", "y"]);
        let rules = vec![rule(&g, &[1, 0], &[(&[0, 1], qi)])];
        Self::build(PresentationKind::QPlane, g, Some(q), rules, None)
    }

    /// `A_q`: generators `a, ai, b, c` with `ab = qba`, `ac = qca`, `bc = cb`
    /// and `a·ai = ai·a = 1`.
    pub fn aq(q: Rational) -> Result<Self, PresentationError> {
        let qi = q.recip().ok_or(PresentationError::ZeroQ)?;
        let g = gens(&["a", "ai", "b", "c"]);
        let one = Rational::one;
        let rules = vec![
            rule(&g, &[0, 1], &[(&[], one())]),
            rule(&g, &[1, 0], &[(&[], one())]),
            rule(&g, &[2, 0], &[(&[0, 2], qi.clone())]),
            rule(&g, &[3, 0], &[(&[0, 3], qi)]),
            rule(&g, &[2, 1], &[(&[1, 2], q.clone())]),
            rule(&g, &[3, 1], &[(&[1, 3], q.clone())]),
            rule(&g, &[3, 2], &[(&[2, 3], one())]),
        ];
        Self::build(PresentationKind::Aq, g, Some(q), rules, None)
    }

    /// The enveloping algebra of the Lie algebra with basis `x1..xn` and the
    /// given structure constants: `x_j x_i → x_i x_j + Σ_k c^k_{ji} x_k`
    /// for `j > i`.
    pub fn uea(sc: &StructureConstants) -> Result<Self, PresentationError> {
        let n = sc.dim();
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let g: Vec<Gen> = names.iter().map(|s| Gen::named(s)).collect();
        let mut rules = Vec::new();
        for j in 1..=n {
            for i in 1..j {
                let mut rhs = NCPoly::word(Word::new(vec![g[i - 1].clone(), g[j - 1].clone()]));
                for k in 1..=n {
                    rhs.add_term(Word::letter(g[k - 1].clone()), sc.get(j, i, k));
                }
                rules.push(Rule { lhs: Word::new(vec![g[j - 1].clone(), g[i - 1].clone()]), rhs });
            }
        }
        Self::build(PresentationKind::Uea, g, None, rules, Some(sc.clone()))
    }

    /// The free algebra on `e1..ek` (no relations).
    pub fn free(k: usize) -> Self {
        let g = (1..=k).map(|i| Gen::named(&format!("e{i}"))).collect();
        Self::build(PresentationKind::Free, g, None, Vec::new(), None).expect("no rules")
    }

    pub fn kind(&self) -> PresentationKind {
        self.kind
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn q(&self) -> Option<&Rational> {
        self.q.as_ref()
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn structure_constants(&self) -> Option<&StructureConstants> {
        self.structure.as_ref()
    }

    fn index_word(&self, w: &Word) -> Result<Vec<usize>, PresentationError> {
        w.letters()
            .iter()
            .map(|g| {
                self.gens
                    .iter()
                    .position(|x| x == g)
                    .ok_or_else(|| PresentationError::UnknownGenerator(g.to_string()))
            })
            .collect()
    }

    fn word_of(&self, idx: &[usize]) -> Word {
        Word::new(idx.iter().map(|&i| self.gens[i].clone()).collect())
    }

    fn find_redex(&self, w: &[usize]) -> Option<(usize, &IndexedRule)> {
        for pos in 0..w.len() {
            for &r in &self.by_first[w[pos]] {
                let rule = &self.indexed[r];
                if w[pos..].starts_with(&rule.lhs) {
                    return Some((pos, rule));
                }
            }
        }
        None
    }

    /// True iff no rule applies anywhere in `w`.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        match self.index_word(w) {
            Ok(idx) => self.find_redex(&idx).is_none(),
            Err(_) => false,
        }
    }

    pub fn is_normal<S: Coefficient>(&self, a: &NCPoly<S>) -> bool {
        a.terms().all(|(w, _)| self.is_normal_word(w))
    }

    /// Rewrite `a` to its unique normal form.
    ///
    /// Terms are kept in a map ordered by the graded order and the largest
    /// pending word is always rewritten first, so equal words produced by
    /// different branches are merged before they are expanded again.
    pub fn normal_form<S: Coefficient>(&self, a: &NCPoly<S>) -> Result<NCPoly<S>, PresentationError> {
        let mut pending: BTreeMap<Key, S> = BTreeMap::new();
        for (w, c) in a.terms() {
            let idx = self.index_word(w)?;
            add_pending(&mut pending, idx, c.clone());
        }
        let mut out = NCPoly::zero();
        let mut steps = 0usize;
        while let Some(((_, w), c)) = pending.pop_last() {
            match self.find_redex(&w) {
                None => out.add_term(self.word_of(&w), c),
                Some((pos, rule)) => {
                    steps += 1;
                    if steps > STEP_BUDGET {
                        return Err(PresentationError::StepBudget(STEP_BUDGET));
                    }
                    let (prefix, rest) = w.split_at(pos);
                    let suffix = &rest[rule.lhs.len()..];
                    for (rw, rc) in &rule.rhs {
                        let mut nw = Vec::with_capacity(prefix.len() + rw.len() + suffix.len());
                        nw.extend_from_slice(prefix);
                        nw.extend_from_slice(rw);
                        nw.extend_from_slice(suffix);
                        add_pending(&mut pending, nw, c.scale(rc));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Normal form of a product of two elements.
    pub fn mul<S: Coefficient>(&self, a: &NCPoly<S>, b: &NCPoly<S>) -> Result<NCPoly<S>, PresentationError> {
        self.normal_form(&a.mul(b))
    }

    /// Overlap words of two left sides whose two one-step rewrites have
    /// different normal forms. Empty for a confluent system.
    pub fn critical_pair_failures(&self) -> Result<Vec<Word>, PresentationError> {
        let mut failures = Vec::new();
        for r1 in &self.indexed {
            for r2 in &self.indexed {
                for overlap in 1..r1.lhs.len().min(r2.lhs.len()) {
                    if r1.lhs[r1.lhs.len() - overlap..] != r2.lhs[..overlap] {
                        continue;
                    }
                    let mut w = r1.lhs.clone();
                    w.extend_from_slice(&r2.lhs[overlap..]);
                    let left = self.rewrite_at(&w, 0, r1);
                    let right = self.rewrite_at(&w, r1.lhs.len() - overlap, r2);
                    if self.normal_form(&left)? != self.normal_form(&right)? {
                        failures.push(self.word_of(&w));
                    }
                }
            }
        }
        Ok(failures)
    }

    fn rewrite_at(&self, w: &[usize], pos: usize, rule: &IndexedRule) -> NCPoly<Rational> {
        let mut out = NCPoly::zero();
        for (rw, rc) in &rule.rhs {
            let mut nw = w[..pos].to_vec();
            nw.extend_from_slice(rw);
            nw.extend_from_slice(&w[pos + rule.lhs.len()..]);
            out.add_term(self.word_of(&nw), rc.clone());
        }
        out
    }
}

fn add_pending<S: Coefficient>(pending: &mut BTreeMap<Key, S>, w: Vec<usize>, c: S) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match pending.entry((w.len(), w)) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            o.get_mut().add_assign_ref(&c);
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn rule(g: &[Gen], lhs: &[usize], rhs: &[(&[usize], Rational)]) -> Rule {
    let word = |idx: &[usize]| Word::new(idx.iter().map(|&i| g[i].clone()).collect());
    Rule {
        lhs: word(lhs),
        rhs: NCPoly::from_terms(rhs.iter().map(|(w, c)| (word(w), c.clone()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_rational;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn qplane_examples() {
        let p = Presentation::qplane(r(2, 1)).unwrap();
        let nf = |s: &str| p.normal_form(&parse_rational(s, p.gens()).unwrap()).unwrap();
        assert_eq!(nf("y*x"), parse_rational("1/2*x*y", p.gens()).unwrap());
        assert_eq!(nf("(x+y)^2"), parse_rational("x^2 + 3/2*x*y + y^2", p.gens()).unwrap());
        assert_eq!(nf("y*x").render(p.gens()), "1/2*x*y");
    }

    #[test]
    fn aq_examples() {
        let q = r(3, 1);
        let p = Presentation::aq(q.clone()).unwrap();
        let nf = |s: &str| p.normal_form(&parse_rational(s, p.gens()).unwrap()).unwrap();
        assert_eq!(nf("b*a"), parse_rational("1/3*a*b", p.gens()).unwrap());
        assert_eq!(nf("a*ai"), NCPoly::one());
        assert_eq!(nf("ai*a"), NCPoly::one());
        assert_eq!(nf("c*b*a"), parse_rational("1/9*a*b*c", p.gens()).unwrap());
    }

    #[test]
    fn uea_example() {
        let sc = StructureConstants::euclidean_e2();
        let p = Presentation::uea(&sc).unwrap();
        let a = parse_rational("x2*x1", p.gens()).unwrap();
        assert_eq!(p.normal_form(&a).unwrap(), parse_rational("x1*x2 - x3", p.gens()).unwrap());
    }

    #[test]
    fn critical_pairs_resolve() {
        for p in [
            Presentation::qplane(r(-2, 3)).unwrap(),
            Presentation::aq(r(5, 2)).unwrap(),
            Presentation::uea(&StructureConstants::euclidean_e2()).unwrap(),
        ] {
            assert!(p.critical_pair_failures().unwrap().is_empty());
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Presentation::qplane(Rational::zero()).unwrap_err(), PresentationError::ZeroQ);
        let p = Presentation::qplane(r(2, 1)).unwrap();
        let a = parse_rational("z", &gens(&["z"])).unwrap();
        assert!(matches!(p.normal_form(&a), Err(PresentationError::UnknownGenerator(_))));
        let g = gens(&["x", "y"]);
        let bad = Presentation::build(PresentationKind::Free, g.clone(), None, vec![rule(&g, &[0, 1], &[(&[1, 0], Rational::one())])], None);
        assert!(matches!(bad, Err(PresentationError::NotDecreasing { .. })));
    }

    #[test]
    fn u_is_normal() {
        let q = r(7, 3);
        let p = Presentation::qplane(q.clone()).unwrap();
        let u = parse_rational("x*y", p.gens()).unwrap();
        let x = parse_rational("x", p.gens()).unwrap();
        let y = parse_rational("y", p.gens()).unwrap();
        let ux = p.mul(&u, &x).unwrap();
        let xu = p.mul(&x, &u).unwrap().scale(&q.recip().unwrap());
        assert_eq!(ux, xu);
        let uy = p.mul(&u, &y).unwrap();
        let yu = p.mul(&y, &u).unwrap().scale(&q);
        assert_eq!(uy, yu);
        assert!(!ux.is_zero());
    }
}
