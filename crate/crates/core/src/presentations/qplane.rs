use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::{MultiPoly, Rational, Ring};
use crate::freealg::{NCPoly, Word};

use super::{Presentation, PresentationError, PresentationKind};

/// One row `c_j + f_j(x) + g_j(y)` of the decomposition
/// `Σ_j (c_j + f_j(x) + g_j(y))·u^j`, `u = xy`. `f_j` is a polynomial in the
/// variable `x` and `g_j` in `y`, both without constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPlaneRow {
    pub c: Rational,
    pub f: MultiPoly,
    pub g: MultiPoly,
}

impl QPlaneRow {
    pub fn zero() -> Self {
        QPlaneRow { c: Rational::zero(), f: MultiPoly::zero(), g: MultiPoly::zero() }
    }

    pub fn constant(c: Rational) -> Self {
        QPlaneRow { c, ..Self::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero() && self.f.is_zero() && self.g.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        QPlaneRow {
            c: &self.c + &other.c,
            f: self.f.add_ref(&other.f),
            g: self.g.add_ref(&other.g),
        }
    }

    fn validate(&self) -> Result<(), PresentationError> {
        for (poly, var) in [(&self.f, "x"), (&self.g, "y")] {
            for (mono, _) in poly.sparse_terms() {
                if mono.len() != 1 || mono[0].0 != var {
                    return Err(PresentationError::NotNormal(format!(
                        "row polynomial {poly} must be in {var} alone with no constant term"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `(exponent, coefficient)` pairs of a univariate polynomial.
pub(crate) fn univariate_terms(p: &MultiPoly) -> Vec<(u32, Rational)> {
    p.sparse_terms()
        .into_iter()
        .map(|(mono, c)| (mono.first().map_or(0, |m| m.1), c))
        .collect()
}

/// An element of the quantum plane in the basis `x^i u^j, y^i u^j`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPlaneElement {
    rows: BTreeMap<u32, QPlaneRow>,
}

impl QPlaneElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_rows<I: IntoIterator<Item = (u32, QPlaneRow)>>(rows: I) -> Result<Self, PresentationError> {
        let mut out = Self::zero();
        for (j, row) in rows {
            row.validate()?;
            out.add_row(j, row);
        }
        Ok(out)
    }

    fn add_row(&mut self, j: u32, row: QPlaneRow) {
        let sum = match self.rows.get(&j) {
            Some(r) => r.add(&row),
            None => row,
        };
        if sum.is_zero() {
            self.rows.remove(&j);
        } else {
            self.rows.insert(j, sum);
        }
    }

    pub fn rows(&self) -> impl Iterator<Item = (u32, &QPlaneRow)> {
        self.rows.iter().map(|(j, r)| (*j, r))
    }

    /// Row `j`, or the zero row.
    pub fn row(&self, j: u32) -> QPlaneRow {
        self.rows.get(&j).cloned().unwrap_or_else(QPlaneRow::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn max_row(&self) -> Option<u32> {
        self.rows.keys().next_back().copied()
    }

    /// Drop the rows with `j > n`.
    pub fn truncate(&self, n: u32) -> Self {
        QPlaneElement { rows: self.rows.range(..=n).map(|(j, r)| (*j, r.clone())).collect() }
    }

    /// One line per row: `j | c | f | g`.
    pub fn to_text(&self) -> String {
        self.rows.iter().map(|(j, r)| format!("{j} | {} | {} | {}\n", r.c, r.f, r.g)).collect()
    }
}

impl fmt::Display for QPlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn expect_qplane(p: &Presentation) -> Result<(), PresentationError> {
    match p.kind() {
        PresentationKind::QPlane => Ok(()),
        _ => Err(PresentationError::Config("a quantum-plane presentation is required".into())),
    }
}

fn pow_word(letter: &str, n: usize) -> Word {
    Word::from_names(&vec![letter; n])
}

/// `κ` with `normal_form(prefix·u^m) = κ·x^i y^j`; the q-power is read off by
/// rewriting.
fn rewrite_factor(p: &Presentation, prefix: Word, m: usize) -> Result<Rational, PresentationError> {
    let u = pow_word("x", 1).concat(&pow_word("y", 1));
    let mut w = prefix;
    for _ in 0..m {
        w = w.concat(&u);
    }
    let nf = p.normal_form(&NCPoly::<Rational>::word(w))?;
    let mut terms = nf.terms();
    match (terms.next(), terms.next()) {
        (Some((_, c)), None) => Ok(c.clone()),
        _ => unreachable!("a monomial normalizes to a monomial in the quantum plane"),
    }
}

/// Sort a normal form into the basis `x^i u^j, y^i u^j`.
pub fn qplane_decompose(a: &NCPoly<Rational>, p: &Presentation) -> Result<QPlaneElement, PresentationError> {
    expect_qplane(p)?;
    let mut out = QPlaneElement::zero();
    for (w, c) in a.terms() {
        if !p.is_normal_word(w) {
            return Err(PresentationError::NotNormal(w.to_string()));
        }
        let i = w.letters().iter().filter(|g| g.name() == "x").count();
        let j = w.len() - i;
        if i >= j {
            let coeff = c / &rewrite_factor(p, pow_word("x", i - j), j)?;
            let row = if i > j {
                QPlaneRow { f: MultiPoly::monomial(coeff, &[("x", (i - j) as u32)]), ..QPlaneRow::zero() }
            } else {
                QPlaneRow::constant(coeff)
            };
            out.add_row(j as u32, row);
        } else {
            let coeff = c / &rewrite_factor(p, pow_word("y", j - i), i)?;
            let g = MultiPoly::monomial(coeff, &[("y", (j - i) as u32)]);
            out.add_row(i as u32, QPlaneRow { g, ..QPlaneRow::zero() });
        }
    }
    Ok(out)
}

/// `Σ_j (c_j + f_j(x) + g_j(y))·u^j`, in normal form.
pub fn qplane_recompose(e: &QPlaneElement, p: &Presentation) -> Result<NCPoly<Rational>, PresentationError> {
    expect_qplane(p)?;
    let mut acc = NCPoly::zero();
    for (j, row) in e.rows() {
        let mut left = NCPoly::constant(row.c.clone());
        for (poly, letter) in [(&row.f, "x"), (&row.g, "y")] {
            for (n, c) in univariate_terms(poly) {
                left.add_term(pow_word(letter, n as usize), c);
            }
        }
        let mut u = Word::unit();
        for _ in 0..j {
            u = u.concat(&Word::from_names(&["x", "y"]));
        }
        acc = acc.add(&left.mul(&NCPoly::word(u)));
    }
    p.normal_form(&acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_rational;

    fn plane() -> Presentation {
        Presentation::qplane(Rational::integer(2)).unwrap()
    }

    fn nf(p: &Presentation, s: &str) -> NCPoly<Rational> {
        p.normal_form(&parse_rational(s, p.gens()).unwrap()).unwrap()
    }

    #[test]
    fn spec_rows() {
        let p = plane();
        let e = qplane_decompose(&nf(&p, "x^3"), &p).unwrap();
        assert_eq!(e.row(0).f, MultiPoly::monomial(Rational::one(), &[("x", 3)]));
        assert_eq!(e.rows().count(), 1);
        let e = qplane_decompose(&nf(&p, "x*y"), &p).unwrap();
        assert_eq!(e.row(1), QPlaneRow::constant(Rational::one()));
        let e = qplane_decompose(&nf(&p, "5 + y^2*x*y"), &p).unwrap();
        assert_eq!(e.row(0), QPlaneRow::constant(Rational::integer(5)));
        assert_eq!(e.row(1).g, MultiPoly::monomial(Rational::one(), &[("y", 2)]));
        assert!(e.row(1).c.is_zero() && e.row(1).f.is_zero());
    }

    #[test]
    fn q_power_comes_from_rewriting() {
        // u^2 = x(yx)y = q^{-1} x^2 y^2
        let p = plane();
        let e = qplane_decompose(&nf(&p, "x^2*y^2"), &p).unwrap();
        assert_eq!(e.row(2), QPlaneRow::constant(Rational::integer(2)));
    }

    #[test]
    fn recompose_examples() {
        let p = plane();
        assert!(qplane_recompose(&QPlaneElement::zero(), &p).unwrap().is_zero());
        let x = QPlaneElement::from_rows([(0, QPlaneRow { f: MultiPoly::var("x"), ..QPlaneRow::zero() })]).unwrap();
        assert_eq!(qplane_recompose(&x, &p).unwrap(), nf(&p, "x"));
        let u = QPlaneElement::from_rows([(1, QPlaneRow::constant(Rational::one()))]).unwrap();
        assert_eq!(qplane_recompose(&u, &p).unwrap(), nf(&p, "x*y"));
    }

    #[test]
    fn round_trip() {
        let p = Presentation::qplane(Rational::new(-3, 5)).unwrap();
        let a = nf(&p, "(x + 2*y - 1)^4 + 3/7*y^3*x^2 - x*y*x");
        let e = qplane_decompose(&a, &p).unwrap();
        assert_eq!(qplane_recompose(&e, &p).unwrap(), a);
    }

    #[test]
    fn rejects_non_normal_and_bad_rows() {
        let p = plane();
        let a = parse_rational("y*x", p.gens()).unwrap();
        assert!(matches!(qplane_decompose(&a, &p), Err(PresentationError::NotNormal(_))));
        let bad = QPlaneRow { f: MultiPoly::one(), ..QPlaneRow::zero() };
        assert!(QPlaneElement::from_rows([(0, bad)]).is_err());
    }
}
