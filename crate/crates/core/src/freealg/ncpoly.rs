use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::exactnum::{Coefficient, Rational, Ring};

use super::FreeAlgError;

/// A generator name matching `[a-zA-Z][a-zA-Z0-9_]*`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(Arc<str>);

impl Gen {
    pub fn new(name: &str) -> Result<Self, FreeAlgError> {
        if is_identifier(name) {
            Ok(Gen(Arc::from(name)))
        } else {
            Err(FreeAlgError::InvalidGenerator(name.to_string()))
        }
    }

    /// Infallible constructor for names known to be valid.
    pub fn named(name: &str) -> Self {
        Self::new(name).expect("valid generator name")
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric() || c == '_'),
        _ => false,
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Names to generators.
pub fn gens(names: &[&str]) -> Vec<Gen> {
    names.iter().map(|n| Gen::named(n)).collect()
}

/// A word in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Gen>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Gen>) -> Self {
        Word(letters)
    }

    pub fn letter(g: Gen) -> Self {
        Word(vec![g])
    }

    /// Word from a whitespace-free list of names, e.g. `["x", "y", "x"]`.
    pub fn from_names(names: &[&str]) -> Self {
        Word(gens(names))
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Letters compressed into powers: `x*x*y` renders as `x^2*y`.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            if j - i == 1 {
                parts.push(self.0[i].to_string());
            } else {
                parts.push(format!("{}^{}", self.0[i], j - i));
            }
            i = j;
        }
        parts.join("*")
    }

    /// Graded-lexicographic sort key relative to an alphabet: length first,
    /// then letter positions. Unknown letters sort after the alphabet.
    pub fn grlex_key(&self, alphabet: &[Gen]) -> (usize, Vec<(usize, Gen)>) {
        let key = self
            .0
            .iter()
            .map(|g| (alphabet.iter().position(|a| a == g).unwrap_or(usize::MAX), g.clone()))
            .collect();
        (self.0.len(), key)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&self.render())
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// A noncommutative polynomial: a finite linear combination of words with
/// coefficients in `S`. No zero coefficient is stored.
#[derive(Clone, PartialEq)]
pub struct NCPoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Ring> Default for NCPoly<S> {
    fn default() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }
}

impl<S: Ring> NCPoly<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Word::unit(), S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(Word::unit(), c)
    }

    pub fn gen(g: &Gen) -> Self {
        Self::monomial(Word::letter(g.clone()), S::one())
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, S::one())
    }

    pub fn monomial(w: Word, c: S) -> Self {
        let mut p = Self::default();
        p.add_term(w, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, S)>>(terms: I) -> Self {
        let mut p = Self::default();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, S)> {
        self.terms.into_iter()
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

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    /// Maximal word length; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// Generators that occur in some term.
    pub fn generators(&self) -> Vec<Gen> {
        let mut out: Vec<Gen> = self.terms.keys().flat_map(|w| w.letters().iter().cloned()).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg_ref());
        }
        out
    }

    pub fn neg(&self) -> Self {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg_ref())).collect() }
    }

    /// Free product: bilinear concatenation of words.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.mul_ref(c2));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Multiply every coefficient by `s` (scalars are central).
    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::default();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), s.mul_ref(c));
        }
        out
    }

    pub fn map_coeffs<T: Ring>(&self, mut f: impl FnMut(&S) -> T) -> NCPoly<T> {
        let mut out = NCPoly::default();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Apply the algebra homomorphism of free algebras sending each listed
    /// generator to a polynomial; unlisted generators are fixed.
    pub fn substitute(&self, images: &BTreeMap<Gen, NCPoly<S>>) -> Self {
        let mut out = Self::default();
        for (w, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for g in w.letters() {
                acc = match images.get(g) {
                    Some(img) => acc.mul(img),
                    None => acc.mul(&Self::gen(g)),
                };
            }
            out = out.add(&acc);
        }
        out
    }
}

impl<S: Coefficient> NCPoly<S> {
    pub fn scale_rational(&self, r: &Rational) -> Self {
        let mut out = Self::default();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.scale(r));
        }
        out
    }

    /// Canonical rendering: terms in graded-lexicographic order relative to
    /// `alphabet`, repeated letters compressed to powers.
    pub fn render(&self, alphabet: &[Gen]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Word, &S)> = self.terms.iter().collect();
        ts.sort_by_cached_key(|(w, _)| w.grlex_key(alphabet));
        let mut out = String::new();
        for (i, (w, c)) in ts.into_iter().enumerate() {
            let t = render_term(w, c);
            if i == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }
}

fn render_term<S: Coefficient>(w: &Word, c: &S) -> String {
    let word = w.render();
    match c.as_rational() {
        Some(r) => {
            if word.is_empty() {
                r.to_string()
            } else if r.is_one() {
                word
            } else if (-&r).is_one() {
                format!("-{word}")
            } else {
                format!("{r}*{word}")
            }
        }
        None => {
            if word.is_empty() {
                format!("({c})")
            } else {
                format!("({c})*{word}")
            }
        }
    }
}

impl<S: Coefficient> fmt::Display for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = self.generators();
        f.write_str(&self.render(&alphabet))
    }
}

impl<S: Ring> fmt::Debug for NCPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<S: Ring> From<Rational> for NCPoly<S>
where
    S: From<Rational>,
{
    fn from(r: Rational) -> Self {
        NCPoly::constant(S::from(r))
    }
}

impl<S: Ring> Ring for NCPoly<S> {
    fn zero() -> Self {
        NCPoly::default()
    }
    fn one() -> Self {
        NCPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}
