use std::collections::BTreeMap;
use std::fmt;

use super::{Coefficient, Rational, Ring};

/// A monomial in sparse form: `(variable, exponent)` pairs sorted by name,
/// zero exponents omitted. This is the representation-independent key used
/// when comparing polynomials or reading off coefficient matrices.
pub type Monomial = Vec<(String, u32)>;

/// A commutative polynomial with rational coefficients over an ordered list
/// of named variables.
///
/// Terms are keyed by dense exponent vectors aligned with `vars`. Two
/// polynomials over different variable lists are aligned to the union of
/// the lists before any arithmetic.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        MultiPoly { vars: vec![name.to_string()], terms }
    }

    /// The zero polynomial over a declared variable list.
    pub fn with_vars(vars: Vec<String>) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    /// `coeff · Π name^exp`.
    pub fn monomial(coeff: Rational, powers: &[(&str, u32)]) -> Self {
        let mut p = Self::constant(coeff);
        for (name, e) in powers {
            p = p.mul_ref(&Self::var(name).pow(*e));
        }
        p
    }

    /// Build from dense exponent vectors over `vars`; repeated keys are summed.
    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut out = MultiPoly::with_vars(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), out.vars.len(), "exponent vector length");
            add_term(&mut out.terms, exps, c);
        }
        out
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.vars.iter().position(|v| v == name) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// Canonical sparse terms, independent of variable-list order.
    pub fn sparse_terms(&self) -> BTreeMap<Monomial, Rational> {
        self.terms
            .iter()
            .map(|(e, c)| (self.sparse_key(e), c.clone()))
            .collect()
    }

    fn sparse_key(&self, exps: &[u32]) -> Monomial {
        let mut key: Monomial = self
            .vars
            .iter()
            .zip(exps)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (v.clone(), e))
            .collect();
        key.sort();
        key
    }

    /// Coefficient of the monomial `Π name^exp` (exponents of unlisted
    /// variables are zero).
    pub fn coefficient(&self, powers: &[(&str, u32)]) -> Rational {
        let mut key: Monomial = powers
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| (v.to_string(), *e))
            .collect();
        key.sort();
        self.terms
            .iter()
            .find(|(e, _)| self.sparse_key(e) == key)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Re-express over `target`, which must contain every variable that
    /// actually occurs.
    pub fn over_vars(&self, target: &[String]) -> MultiPoly {
        if self.vars.as_slice() == target {
            return self.clone();
        }
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|t| t == v))
            .collect();
        let mut out = MultiPoly::with_vars(target.to_vec());
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let j = map[i].unwrap_or_else(|| panic!("variable {} missing from target", self.vars[i]));
                ne[j] = x;
            }
            add_term(&mut out.terms, ne, c.clone());
        }
        out
    }

    fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
        let mut out = a.to_vec();
        for v in b {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        out
    }

    fn aligned(&self, other: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let vars = Self::union_vars(&self.vars, &other.vars);
        (self.over_vars(&vars), other.over_vars(&vars))
    }

    pub fn scale(&self, r: &Rational) -> MultiPoly {
        if r.is_zero() {
            return MultiPoly::with_vars(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * r)).collect(),
        }
    }

    /// Polynomial composition: each bound variable is replaced by its image.
    /// Bindings for variables that do not occur are ignored.
    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> MultiPoly {
        let kept: Vec<String> = self
            .vars
            .iter()
            .filter(|v| !bindings.contains_key(*v))
            .cloned()
            .collect();
        let mut out = MultiPoly::with_vars(kept.clone());
        // cache of powers per bound variable index
        let mut powers: BTreeMap<(usize, u32), MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut term = MultiPoly::with_vars(kept.clone());
            let mut kept_exps = Vec::with_capacity(kept.len());
            for (i, v) in self.vars.iter().enumerate() {
                if !bindings.contains_key(v) {
                    kept_exps.push(e[i]);
                }
            }
            term.terms.insert(kept_exps, c.clone());
            for (i, v) in self.vars.iter().enumerate() {
                if e[i] == 0 {
                    continue;
                }
                if let Some(img) = bindings.get(v) {
                    let pw = powers.entry((i, e[i])).or_insert_with(|| img.pow(e[i]));
                    term = term.mul_ref(pw);
                }
            }
            out = out.add_ref(&term);
        }
        out
    }

    /// Evaluate at rational values for some variables.
    pub fn eval_partial(&self, values: &BTreeMap<String, Rational>) -> MultiPoly {
        let bindings = values
            .iter()
            .map(|(k, v)| (k.clone(), MultiPoly::constant(v.clone())))
            .collect();
        self.substitute(&bindings)
    }

    /// Apply the relation `a·b = 1` monomial by monomial, cancelling common
    /// powers of the two variables.
    pub fn reduce_inverse_pair(&self, a: &str, b: &str) -> MultiPoly {
        let (ia, ib) = match (
            self.vars.iter().position(|v| v == a),
            self.vars.iter().position(|v| v == b),
        ) {
            (Some(ia), Some(ib)) => (ia, ib),
            _ => return self.clone(),
        };
        let mut out = MultiPoly::with_vars(self.vars.clone());
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let m = ne[ia].min(ne[ib]);
            ne[ia] -= m;
            ne[ib] -= m;
            add_term(&mut out.terms, ne, c.clone());
        }
        out
    }

    /// Formal partial derivative.
    pub fn derivative(&self, name: &str) -> MultiPoly {
        let Some(i) = self.vars.iter().position(|v| v == name) else {
            return MultiPoly::with_vars(self.vars.clone());
        };
        let mut out = MultiPoly::with_vars(self.vars.clone());
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[i] -= 1;
            add_term(&mut out.terms, ne, c * &Rational::integer(e[i] as i64));
        }
        out
    }

    /// Terms in graded-lexicographic order, highest first.
    fn ordered_terms(&self) -> Vec<(&Vec<u32>, &Rational)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        ts
    }

    fn monomial_text(&self, e: &[u32]) -> String {
        self.vars
            .iter()
            .zip(e)
            .filter(|(_, &x)| x > 0)
            .map(|(v, &x)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

fn add_term(terms: &mut BTreeMap<Vec<u32>, Rational>, exps: Vec<u32>, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(exps) {
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

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            self.terms == other.terms
        } else {
            self.sparse_terms() == other.sparse_terms()
        }
    }
}

impl Eq for MultiPoly {}

impl From<Rational> for MultiPoly {
    fn from(r: Rational) -> Self {
        MultiPoly::constant(r)
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }

    fn one() -> Self {
        MultiPoly::one()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_ref(&self, other: &Self) -> Self {
        if other.is_zero() && other.vars.iter().all(|v| self.vars.contains(v)) {
            return self.clone();
        }
        let (mut a, b) = if self.vars == other.vars {
            (self.clone(), other.clone())
        } else {
            self.aligned(other)
        };
        for (e, c) in b.terms {
            add_term(&mut a.terms, e, c);
        }
        a
    }

    fn add_assign_ref(&mut self, other: &Self) {
        if self.vars == other.vars {
            for (e, c) in &other.terms {
                add_term(&mut self.terms, e.clone(), c.clone());
            }
        } else {
            *self = self.add_ref(other);
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let (a, b);
        let (x, y) = if self.vars == other.vars {
            (self, other)
        } else {
            (a, b) = self.aligned(other);
            (&a, &b)
        };
        let mut out = MultiPoly::with_vars(x.vars.clone());
        for (ea, ca) in &x.terms {
            for (eb, cb) in &y.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(p, q)| p + q).collect();
                add_term(&mut out.terms, e, ca * cb);
            }
        }
        out
    }

    fn neg_ref(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }
}

impl Coefficient for MultiPoly {
    fn parameter(name: &str) -> Option<Self> {
        Some(MultiPoly::var(name))
    }

    fn as_rational(&self) -> Option<Rational> {
        self.as_constant()
    }

    fn scale(&self, r: &Rational) -> Self {
        MultiPoly::scale(self, r)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.ordered_terms().into_iter().enumerate() {
            let mono = self.monomial_text(e);
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    fn c(n: i64) -> MultiPoly {
        MultiPoly::constant(Rational::integer(n))
    }

    #[test]
    fn substitute_shift_binomial() {
        let p = v("l2").pow(2);
        let mut b = BTreeMap::new();
        b.insert("l2".to_string(), v("l2").add_ref(&v("t1")));
        let expected = v("l2")
            .pow(2)
            .add_ref(&c(2).mul_ref(&v("l2")).mul_ref(&v("t1")))
            .add_ref(&v("t1").pow(2));
        assert_eq!(p.substitute(&b), expected);
    }

    #[test]
    fn substitute_nothing_is_identity() {
        let p = v("x").mul_ref(&v("y")).add_ref(&c(3));
        assert_eq!(p.substitute(&BTreeMap::new()), p);
    }

    #[test]
    fn substitute_odd_function() {
        let p = v("s").pow(3).add_ref(&v("s"));
        let mut b = BTreeMap::new();
        b.insert("s".to_string(), v("s").neg_ref());
        assert_eq!(p.substitute(&b), p.neg_ref());
    }

    #[test]
    fn equality_ignores_variable_order() {
        let a = v("x").add_ref(&v("y"));
        let b = v("y").add_ref(&v("x"));
        assert_eq!(a, b);
        assert_ne!(a, v("x"));
    }

    #[test]
    fn display_grlex() {
        let p = v("x").pow(2).add_ref(&c(-2).mul_ref(&v("x")).mul_ref(&v("y"))).add_ref(&c(3));
        assert_eq!(p.to_string(), "x^2 - 2*x*y + 3");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    #[test]
    fn inverse_pair_reduction() {
        let p = v("lam").pow(3).mul_ref(&v("lami").pow(2)).add_ref(&v("lami"));
        let r = p.reduce_inverse_pair("lam", "lami");
        assert_eq!(r, v("lam").add_ref(&v("lami")));
    }

    #[test]
    fn coefficient_lookup() {
        let p = MultiPoly::monomial(Rational::new(3, 2), &[("s1", 2), ("t1", 1)]).add_ref(&v("t1"));
        assert_eq!(p.coefficient(&[("t1", 1), ("s1", 2)]), Rational::new(3, 2));
        assert_eq!(p.coefficient(&[("s1", 1)]), Rational::zero());
        assert_eq!(p.degree(), 3);
        assert_eq!(p.degree_in("s1"), 2);
    }
}
