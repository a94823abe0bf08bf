use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::Rational;
use crate::freealg::NCPoly;

use super::ggen::{ad, e, expand_g, GGen};
use super::FreeLieError;

/// A binary bracket tree with leaves in the `g` generators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieTree {
    Leaf(GGen),
    Bracket(Box<LieTree>, Box<LieTree>),
}

impl fmt::Display for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieTree::Leaf(g) => write!(f, "{g}"),
            LieTree::Bracket(u, v) => write!(f, "[{u}, {v}]"),
        }
    }
}

impl fmt::Debug for LieTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A word in the `g` generators: an element of the tensor algebra `T(V)`.
pub type GWord = Vec<GGen>;

/// A rational combination of bracket trees. Brackets are stored with the
/// smaller tree first and self-brackets dropped.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LiePoly {
    terms: BTreeMap<LieTree, Rational>,
}

impl LiePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn leaf(g: GGen) -> Self {
        let mut p = Self::zero();
        p.add_term(LieTree::Leaf(g), Rational::one());
        p
    }

    pub fn add_term(&mut self, t: LieTree, c: Rational) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&t) {
            Some(prev) => prev + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(t, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LieTree, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), c * r);
        }
        out
    }

    /// Bilinear bracket with antisymmetry applied to each pair of trees.
    pub fn bracket(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let c = cu * cv;
                match u.cmp(v) {
                    std::cmp::Ordering::Equal => {}
                    std::cmp::Ordering::Less => {
                        out.add_term(LieTree::Bracket(Box::new(u.clone()), Box::new(v.clone())), c)
                    }
                    std::cmp::Ordering::Greater => {
                        out.add_term(LieTree::Bracket(Box::new(v.clone()), Box::new(u.clone())), -c)
                    }
                }
            }
        }
        out
    }

    /// Expansion in the free associative algebra on `e1, e2, …`.
    pub fn expand(&self) -> NCPoly<Rational> {
        let mut out = NCPoly::zero();
        for (t, c) in &self.terms {
            out = out.add(&expand_tree(t).scale(c));
        }
        out
    }

    /// Image in `T(V)` under `[u, v] ↦ uv − vu`.
    pub fn linearize(&self) -> BTreeMap<GWord, Rational> {
        let mut out = BTreeMap::new();
        for (t, c) in &self.terms {
            for (w, d) in linearize_tree(t) {
                add_word(&mut out, w, c * &d);
            }
        }
        out
    }
}

impl fmt::Display for LiePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(t, c)| if c.is_one() { t.to_string() } else { format!("{c}*{t}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for LiePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn add_word(map: &mut BTreeMap<GWord, Rational>, w: GWord, c: Rational) {
    if c.is_zero() {
        return;
    }
    let sum = match map.remove(&w) {
        Some(prev) => prev + c,
        None => c,
    };
    if !sum.is_zero() {
        map.insert(w, sum);
    }
}

fn expand_tree(t: &LieTree) -> NCPoly<Rational> {
    match t {
        LieTree::Leaf(g) => expand_g(g),
        LieTree::Bracket(u, v) => ad(&expand_tree(u), &expand_tree(v)),
    }
}

fn linearize_tree(t: &LieTree) -> BTreeMap<GWord, Rational> {
    match t {
        LieTree::Leaf(g) => BTreeMap::from([(vec![g.clone()], Rational::one())]),
        LieTree::Bracket(u, v) => {
            let (lu, lv) = (linearize_tree(u), linearize_tree(v));
            let mut out = BTreeMap::new();
            for (a, ca) in &lu {
                for (b, cb) in &lv {
                    let c = ca * cb;
                    add_word(&mut out, [a.as_slice(), b].concat(), c.clone());
                    add_word(&mut out, [b.as_slice(), a].concat(), -c);
                }
            }
            out
        }
    }
}

/// `ad e_i` on the commutant of `f_2`, written back in the `g` generators.
///
/// On generators: `ad e1(g_β) = g_{β+(1,0)}`, `ad e2(g_{(0,b)}) = g_{(0,b+1)}`
/// and, for `β1 ≥ 1`, `ad e2(g_β) = [g_{(0,0)}, g_{β−(1,0)}] + ad e1(ad e2(g_{β−(1,0)}))`.
/// On brackets `ad e_i` acts as a derivation.
pub fn ad_e(i: usize, x: &LiePoly, k: usize) -> Result<LiePoly, FreeLieError> {
    if k != 2 {
        return Err(FreeLieError::Unsupported(format!("ad_e for k = {k}")));
    }
    if !(1..=2).contains(&i) {
        return Err(FreeLieError::Unsupported(format!("generator e{i} with k = 2")));
    }
    let mut out = LiePoly::zero();
    for (t, c) in &x.terms {
        out = out.add(&ad_tree(i, t).scale(c));
    }
    Ok(out)
}

fn ad_tree(i: usize, t: &LieTree) -> LiePoly {
    match t {
        LieTree::Leaf(g) => ad_leaf(i, g),
        LieTree::Bracket(u, v) => {
            let (pu, pv) = (tree_poly(u), tree_poly(v));
            ad_tree(i, u).bracket(&pv).add(&pu.bracket(&ad_tree(i, v)))
        }
    }
}

fn tree_poly(t: &LieTree) -> LiePoly {
    let mut p = LiePoly::zero();
    p.add_term(t.clone(), Rational::one());
    p
}

fn ad_leaf(i: usize, g: &GGen) -> LiePoly {
    let (b1, b2) = (g.beta()[0], g.beta()[1]);
    match (i, b1) {
        (1, _) => LiePoly::leaf(GGen::two(b1 + 1, b2)),
        (_, 0) => LiePoly::leaf(GGen::two(0, b2 + 1)),
        _ => {
            let lower = GGen::two(b1 - 1, b2);
            let inner = ad_leaf(2, &lower);
            let mut out = LiePoly::leaf(GGen::two(0, 0)).bracket(&LiePoly::leaf(lower));
            for (t, c) in &inner.terms {
                out = out.add(&ad_tree(1, t).scale(c));
            }
            out
        }
    }
}

/// `e_i` acting by `ad` on an expanded polynomial, for checks against
/// [`ad_e`].
pub fn ad_e_expanded(i: usize, p: &NCPoly<Rational>) -> NCPoly<Rational> {
    ad(&NCPoly::gen(&e(i)), p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::enumerate_ggens;

    #[test]
    fn base_laws() {
        let g00 = LiePoly::leaf(GGen::two(0, 0));
        assert_eq!(ad_e(1, &g00, 2).unwrap(), LiePoly::leaf(GGen::two(1, 0)));
        assert_eq!(ad_e(2, &g00, 2).unwrap(), LiePoly::leaf(GGen::two(0, 1)));
        // the self-bracket [g00, g00] drops out
        assert_eq!(ad_e(2, &LiePoly::leaf(GGen::two(1, 0)), 2).unwrap(), LiePoly::leaf(GGen::two(1, 1)));
        assert!(ad_e(1, &g00, 3).is_err());
    }

    #[test]
    fn compatible_with_expansion() {
        for g in enumerate_ggens(2, 5) {
            for i in 1..=2 {
                let x = LiePoly::leaf(g.clone());
                let lhs = ad_e(i, &x, 2).unwrap().expand();
                assert_eq!(lhs, ad_e_expanded(i, &expand_g(&g)), "ad e{i} on {g}");
            }
        }
    }

    #[test]
    fn brackets_are_antisymmetric() {
        let a = LiePoly::leaf(GGen::two(0, 0));
        let b = LiePoly::leaf(GGen::two(2, 1));
        assert_eq!(a.bracket(&b), b.bracket(&a).scale(&Rational::integer(-1)));
        assert!(a.bracket(&a).is_zero());
        let lin = a.bracket(&b).linearize();
        assert_eq!(lin.len(), 2);
        assert_eq!(a.bracket(&b).expand(), ad(&a.expand(), &b.expand()));
    }
}
