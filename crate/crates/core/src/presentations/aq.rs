use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::{Coefficient, Rational};
use crate::freealg::{gens, Gen, NCPoly, Word};

use super::{Presentation, PresentationError, PresentationKind};

/// Generators of the coordinate algebra of quantum SL(2) before `d` is
/// eliminated.
pub const SL2_ALPHABET: [&str; 5] = ["a", "ai", "b", "c", "d"];

/// An element `Σ coeff·a^i b^j c^k` of `A_q`, with `i` any integer.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AqElement {
    terms: BTreeMap<(i64, u32, u32), Rational>,
}

impl AqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = ((i64, u32, u32), Rational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (key, c) in terms {
            out.add_term(key, c);
        }
        out
    }

    pub fn add_term(&mut self, key: (i64, u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(prev) => prev + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, u32, u32), &Rational)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Keep the terms with `j + k ≤ n`.
    pub fn truncate(&self, n: u32) -> Self {
        AqElement {
            terms: self.terms.iter().filter(|((_, j, k), _)| j + k <= n).map(|(k, v)| (*k, v.clone())).collect(),
        }
    }

    /// Read a normal form of `A_q`.
    pub fn from_normal(a: &NCPoly<Rational>, p: &Presentation) -> Result<Self, PresentationError> {
        if p.kind() != PresentationKind::Aq {
            return Err(PresentationError::Config("an A_q presentation is required".into()));
        }
        let mut out = Self::zero();
        for (w, c) in a.terms() {
            if !p.is_normal_word(w) {
                return Err(PresentationError::NotNormal(w.to_string()));
            }
            let (mut i, mut j, mut k) = (0i64, 0u32, 0u32);
            for g in w.letters() {
                match g.name() {
                    "a" => i += 1,
                    "ai" => i -= 1,
                    "b" => j += 1,
                    _ => k += 1,
                }
            }
            out.add_term((i, j, k), c.clone());
        }
        Ok(out)
    }

    /// The element as a normal-form polynomial over `a, ai, b, c`.
    pub fn to_poly(&self) -> NCPoly<Rational> {
        NCPoly::from_terms(self.terms.iter().map(|(&key, c)| (aq_word(key), c.clone())))
    }

    /// One line per term: `i j k | coeff`.
    pub fn to_text(&self) -> String {
        self.terms.iter().map(|((i, j, k), c)| format!("{i} {j} {k} | {c}\n")).collect()
    }
}

impl fmt::Display for AqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The normal word `a^i b^j c^k` (`ai^{-i}` when `i < 0`).
pub fn aq_word((i, j, k): (i64, u32, u32)) -> Word {
    let mut letters = Vec::new();
    let a = if i >= 0 { "a" } else { "ai" };
    letters.extend(std::iter::repeat_n(Gen::named(a), i.unsigned_abs() as usize));
    letters.extend(std::iter::repeat_n(Gen::named("b"), j as usize));
    letters.extend(std::iter::repeat_n(Gen::named("c"), k as usize));
    Word::new(letters)
}

/// Replace `d` by `ai·(1 + q·b·c)` and normalize in `A_q`.
pub fn sl2_eliminate_d<S: Coefficient>(a: &NCPoly<S>, q: &Rational) -> Result<NCPoly<S>, PresentationError> {
    let p = Presentation::aq(q.clone())?;
    let g = gens(&SL2_ALPHABET);
    let d_image = NCPoly::gen(&g[1]).add(&NCPoly::monomial(
        Word::new(vec![g[1].clone(), g[2].clone(), g[3].clone()]),
        S::from(q.clone()),
    ));
    let images = BTreeMap::from([(g[4].clone(), d_image)]);
    p.normal_form(&a.substitute(&images))
}

/// The defining relations of quantum SL(2), each as `lhs − rhs`, over the
/// alphabet [`SL2_ALPHABET`].
pub fn sl2_relations(q: &Rational) -> Vec<(&'static str, NCPoly<Rational>)> {
    let w = |names: &[&str]| NCPoly::<Rational>::word(Word::from_names(names));
    let qi = q.recip().expect("q is nonzero");
    vec![
        ("ab = qba", w(&["a", "b"]).sub(&w(&["b", "a"]).scale(q))),
        ("ac = qca", w(&["a", "c"]).sub(&w(&["c", "a"]).scale(q))),
        ("bc = cb", w(&["b", "c"]).sub(&w(&["c", "b"]))),
        ("bd = qdb", w(&["b", "d"]).sub(&w(&["d", "b"]).scale(q))),
        ("cd = qdc", w(&["c", "d"]).sub(&w(&["d", "c"]).scale(q))),
        ("da - q^-1 bc = 1", w(&["d", "a"]).sub(&w(&["b", "c"]).scale(&qi)).sub(&NCPoly::one())),
        ("ad - q bc = 1", w(&["a", "d"]).sub(&w(&["b", "c"]).scale(q)).sub(&NCPoly::one())),
    ]
}
