use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::exactnum::{MultiPoly, Rational, Ring};
use crate::freealg::NCPoly;

use super::ggen::{e, expand_g, GGen};
use super::liepoly::{ad_e, GWord, LiePoly};
use super::FreeLieError;

/// Name of the slot variable for `λ_1`, `λ_2`, `s_p` or `t_p`.
pub fn lambda_var(i: usize) -> String {
    format!("l{i}")
}

pub fn s_var(p: usize) -> String {
    format!("s{p}")
}

pub fn t_var(p: usize) -> String {
    format!("t{p}")
}

/// Variables `l1, l2, s1, t1, …, sm, tm` of slot `m`.
pub fn slot_vars(m: usize) -> Vec<String> {
    let mut v = vec![lambda_var(1), lambda_var(2)];
    for p in 1..=m {
        v.push(s_var(p));
        v.push(t_var(p));
    }
    v
}

/// Key of a basis element `e1^a e2^b G_1⋯G_m` of `U(f_2)`.
type MixedKey = (u32, u32, GWord);

/// An element of `U(f_2)` in the basis `e1^a e2^b G_1⋯G_m` with `G_p` free
/// generators of the commutant.
#[derive(Clone, Debug, Default, PartialEq)]
pub(crate) struct Mixed {
    terms: BTreeMap<MixedKey, Rational>,
}

impl Mixed {
    fn unit() -> Self {
        Self::monomial((0, 0, Vec::new()), Rational::one())
    }

    fn monomial(key: MixedKey, c: Rational) -> Self {
        let mut m = Mixed::default();
        m.add_term(key, c);
        m
    }

    fn add_term(&mut self, key: MixedKey, c: Rational) {
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

    fn add_scaled(&mut self, other: &Mixed, c: &Rational) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    fn truncate(&mut self, max_len: Option<usize>) {
        if let Some(n) = max_len {
            self.terms.retain(|(_, _, w), _| w.len() <= n);
        }
    }
}

/// Right multiplication in the mixed basis. Commutant word length never
/// decreases, so terms beyond a truncation bound are dropped as soon as
/// they appear.
pub(crate) struct Straightener {
    max_len: Option<usize>,
    e1_cache: HashMap<(u32, u32), Mixed>,
}

impl Straightener {
    pub(crate) fn new(max_len: Option<usize>) -> Self {
        Straightener { max_len, e1_cache: HashMap::new() }
    }

    /// `e1^a e2^b · e1`.
    fn ordered_times_e1(&mut self, a: u32, b: u32) -> Mixed {
        if let Some(m) = self.e1_cache.get(&(a, b)) {
            return m.clone();
        }
        let out = if b == 0 {
            Mixed::monomial((a + 1, 0, Vec::new()), Rational::one())
        } else {
            // e2 e1 = e1 e2 + g_{(0,0)}
            let head = self.ordered_times_e1(a, b - 1);
            let mut out = self.times_e(&head, 2);
            out.add_term((a, b - 1, vec![GGen::two(0, 0)]), Rational::one());
            out.truncate(self.max_len);
            out
        };
        self.e1_cache.insert((a, b), out.clone());
        out
    }

    /// `x · e_i`.
    pub(crate) fn times_e(&mut self, x: &Mixed, i: usize) -> Mixed {
        let mut out = Mixed::default();
        for ((a, b, w), c) in &x.terms {
            let head = if i == 2 {
                Mixed::monomial((*a, b + 1, Vec::new()), Rational::one())
            } else {
                self.ordered_times_e1(*a, *b)
            };
            // G_1⋯G_n e_i = e_i G_1⋯G_n − Σ_p G_1⋯(ad e_i G_p)⋯G_n
            for ((ha, hb, hw), hc) in &head.terms {
                out.add_term((*ha, *hb, [hw.as_slice(), w].concat()), hc * c);
            }
            for p in 0..w.len() {
                let image = ad_e(i, &LiePoly::leaf(w[p].clone()), 2).expect("k = 2").linearize();
                for (v, vc) in image {
                    let nw = [&w[..p], v.as_slice(), &w[p + 1..]].concat();
                    out.add_term((*a, *b, nw), -(&vc * c));
                }
            }
        }
        out.truncate(self.max_len);
        out
    }

    /// `x · y`.
    pub(crate) fn mul(&mut self, x: &Mixed, y: &Mixed) -> Mixed {
        let mut out = Mixed::default();
        for ((a, b, w), c) in &y.terms {
            let mut acc = x.clone();
            for _ in 0..*a {
                acc = self.times_e(&acc, 1);
            }
            for _ in 0..*b {
                acc = self.times_e(&acc, 2);
            }
            for ((xa, xb, xw), xc) in &acc.terms {
                let nw = [xw.as_slice(), w].concat();
                if self.max_len.is_none_or(|n| nw.len() <= n) {
                    out.add_term((*xa, *xb, nw), xc * c);
                }
            }
        }
        out
    }

    pub(crate) fn mixed_of(&mut self, a: &NCPoly<Rational>) -> Result<Mixed, FreeLieError> {
        let mut out = Mixed::default();
        for (w, c) in a.terms() {
            let mut acc = Mixed::unit();
            for g in w.letters() {
                let i = match g.name() {
                    "e1" => 1,
                    "e2" => 2,
                    other => return Err(FreeLieError::UnknownGenerator(other.to_string())),
                };
                acc = self.times_e(&acc, i);
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }
}

/// Coordinates of an element of `U(f_2)`: slot `m` holds a polynomial
/// `h_m(l1, l2, s1, t1, …, sm, tm)` whose monomial
/// `l1^a l2^b Π s_p^{β^p_1} t_p^{β^p_2}` stands for
/// `e1^a e2^b g_{β^1}⋯g_{β^m}`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Decomposed {
    slots: BTreeMap<usize, MultiPoly>,
}

impl Decomposed {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_slots([(0, MultiPoly::one())]).expect("constant slot")
    }

    /// Build from slot polynomials, checking that slot `m` only uses its
    /// own `2 + 2m` variables.
    pub fn from_slots<I: IntoIterator<Item = (usize, MultiPoly)>>(slots: I) -> Result<Self, FreeLieError> {
        let mut out = Self::zero();
        for (m, h) in slots {
            let allowed = slot_vars(m);
            for (mono, _) in h.sparse_terms() {
                if let Some((v, _)) = mono.iter().find(|(v, _)| !allowed.contains(v)) {
                    return Err(FreeLieError::InvalidSlot { slot: m, var: v.clone() });
                }
            }
            out.add_slot(m, h);
        }
        Ok(out)
    }

    fn add_slot(&mut self, m: usize, h: MultiPoly) {
        let sum = match self.slots.remove(&m) {
            Some(prev) => prev.add_ref(&h),
            None => h,
        };
        if !sum.is_zero() {
            self.slots.insert(m, sum);
        }
    }

    pub fn slots(&self) -> impl Iterator<Item = (usize, &MultiPoly)> {
        self.slots.iter().map(|(m, h)| (*m, h))
    }

    /// `h_m`, or zero.
    pub fn slot(&self, m: usize) -> MultiPoly {
        self.slots.get(&m).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn max_slot(&self) -> Option<usize> {
        self.slots.keys().next_back().copied()
    }

    /// Keep the slots `m ≤ n`.
    pub fn truncate(&self, n: usize) -> Self {
        Decomposed { slots: self.slots.range(..=n).map(|(m, h)| (*m, h.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, h) in &other.slots {
            out.add_slot(*m, h.clone());
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (m, h) in &self.slots {
            out.add_slot(*m, h.scale(r));
        }
        out
    }

    pub(crate) fn from_mixed(x: &Mixed) -> Self {
        let mut slots: BTreeMap<usize, Vec<(Vec<u32>, Rational)>> = BTreeMap::new();
        for ((a, b, w), c) in &x.terms {
            let mut exps = vec![*a, *b];
            for g in w {
                exps.extend_from_slice(g.beta());
            }
            slots.entry(w.len()).or_default().push((exps, c.clone()));
        }
        let mut out = Self::zero();
        for (m, terms) in slots {
            out.add_slot(m, MultiPoly::from_terms(slot_vars(m), terms));
        }
        out
    }

    pub(crate) fn to_mixed(&self) -> Mixed {
        let mut out = Mixed::default();
        for (m, h) in &self.slots {
            let vars = slot_vars(*m);
            let dense = h.over_vars(&vars);
            for (e, c) in dense.terms() {
                let word = (0..*m).map(|p| GGen::two(e[2 + 2 * p], e[3 + 2 * p])).collect();
                out.add_term((e[0], e[1], word), c.clone());
            }
        }
        out
    }

    /// Product in `U(f_2)`, computed in the mixed basis.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_truncated(other, None)
    }

    /// Product with slots above `max_slot` discarded.
    pub fn mul_truncated(&self, other: &Self, max_slot: Option<usize>) -> Self {
        let mut st = Straightener::new(max_slot);
        Self::from_mixed(&st.mul(&self.to_mixed(), &other.to_mixed()))
    }

    /// One line per slot: `m | h_m`.
    pub fn to_text(&self) -> String {
        self.slots.iter().map(|(m, h)| format!("{m} | {h}\n")).collect()
    }
}

impl fmt::Display for Decomposed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Coordinates of `a ∈ U(f_2)` in the basis `e1^a e2^b g_{β^1}⋯g_{β^m}`.
pub fn straighten(a: &NCPoly<Rational>) -> Result<Decomposed, FreeLieError> {
    let mut st = Straightener::new(None);
    Ok(Decomposed::from_mixed(&st.mixed_of(a)?))
}

/// The expanded polynomial in `e1, e2` with coordinates `d`.
pub fn compose(d: &Decomposed) -> NCPoly<Rational> {
    let mut expansions: HashMap<GGen, NCPoly<Rational>> = HashMap::new();
    let mut out = NCPoly::zero();
    for ((a, b, w), c) in &d.to_mixed().terms {
        let mut term = NCPoly::word(crate::freealg::Word::new(
            std::iter::repeat_n(e(1), *a as usize).chain(std::iter::repeat_n(e(2), *b as usize)).collect(),
        ));
        for g in w {
            let x = expansions.entry(g.clone()).or_insert_with(|| expand_g(g));
            term = term.mul(x);
        }
        out = out.add(&term.scale(c));
    }
    out
}
