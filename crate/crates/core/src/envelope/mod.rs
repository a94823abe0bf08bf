//! Truncated envelope algebras and finite-level separation checks.
//!
//! Each envelope is modelled by its dense polynomial part modulo a power of
//! a two-sided ideal: `(u)` with `u = xy` in the quantum plane, `(b, c)` in
//! quantum SL(2), and the commutant-length filtration of `U(f_2)`.

mod separation;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactnum::{MultiPoly, Rational};
use crate::freealg::{gens, parse_rational, Gen, NCPoly, ParseError};
use crate::freelie::{e_alphabet, slot_vars, straighten, Decomposed, FreeLieError};
use crate::presentations::{
    aq_word, qplane_decompose, qplane_recompose, sl2_eliminate_d, AqElement, Presentation, PresentationError,
    QPlaneElement, QPlaneRow, SL2_ALPHABET,
};

pub use separation::{default_reps, separation_rank, RepSpec, SeparationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnvError {
    #[error("cannot combine {left} (N={left_n}) with {right} (N={right_n})")]
    Mismatch { left: String, left_n: usize, right: String, right_n: usize },
    #[error("representation {rep} does not apply to {algebra}")]
    WrongRep { rep: String, algebra: String },
    #[error("no representations given")]
    NoReps,
    #[error("malformed serialized element, line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    FreeLie(#[from] FreeLieError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Which envelope, with its deformation parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnvAlgebra {
    QPlane(Rational),
    Sl2(Rational),
    Free,
}

impl EnvAlgebra {
    /// Generators accepted by [`env_from_poly`].
    pub fn alphabet(&self) -> Vec<Gen> {
        match self {
            EnvAlgebra::QPlane(_) => gens(&["x", "y"]),
            EnvAlgebra::Sl2(_) => gens(&SL2_ALPHABET),
            EnvAlgebra::Free => e_alphabet(2),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            EnvAlgebra::QPlane(_) => "qplane",
            EnvAlgebra::Sl2(_) => "sl2",
            EnvAlgebra::Free => "free2",
        }
    }

    fn check_q(&self) -> Result<(), EnvError> {
        match self {
            EnvAlgebra::QPlane(q) | EnvAlgebra::Sl2(q) if q.is_zero() => Err(PresentationError::ZeroQ.into()),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for EnvAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnvAlgebra::QPlane(q) | EnvAlgebra::Sl2(q) => write!(f, "{} q={q}", self.tag()),
            EnvAlgebra::Free => f.write_str(self.tag()),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    QPlane(QPlaneElement),
    Sl2(AqElement),
    Free(Decomposed),
}

/// A normal-form representative modulo the `(N+1)`-st power of the
/// truncation ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedElement {
    algebra: EnvAlgebra,
    n: usize,
    payload: Payload,
}

impl TruncatedElement {
    /// Wrap a payload, dropping everything beyond level `n`.
    pub fn new(algebra: EnvAlgebra, n: usize, payload: Payload) -> Result<Self, EnvError> {
        algebra.check_q()?;
        let payload = match (&algebra, payload) {
            (EnvAlgebra::QPlane(_), Payload::QPlane(e)) => Payload::QPlane(e.truncate(n as u32)),
            (EnvAlgebra::Sl2(_), Payload::Sl2(e)) => Payload::Sl2(e.truncate(n as u32)),
            (EnvAlgebra::Free, Payload::Free(d)) => Payload::Free(d.truncate(n)),
            (alg, _) => {
                return Err(EnvError::Format { line: 0, message: format!("payload does not belong to {alg}") })
            }
        };
        Ok(TruncatedElement { algebra, n, payload })
    }

    pub fn one(algebra: EnvAlgebra, n: usize) -> Result<Self, EnvError> {
        let payload = match algebra {
            EnvAlgebra::QPlane(_) => {
                Payload::QPlane(QPlaneElement::from_rows([(0, QPlaneRow::constant(Rational::one()))])?)
            }
            EnvAlgebra::Sl2(_) => Payload::Sl2(AqElement::from_terms([((0, 0, 0), Rational::one())])),
            EnvAlgebra::Free => Payload::Free(Decomposed::one()),
        };
        Self::new(algebra, n, payload)
    }

    pub fn algebra(&self) -> &EnvAlgebra {
        &self.algebra
    }

    pub fn truncation(&self) -> usize {
        self.n
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::QPlane(e) => e.is_zero(),
            Payload::Sl2(e) => e.is_zero(),
            Payload::Free(d) => d.is_zero(),
        }
    }

    /// The same element at a lower truncation order.
    pub fn truncate(&self, n: usize) -> Self {
        let n = n.min(self.n);
        Self::new(self.algebra.clone(), n, self.payload.clone()).expect("same algebra")
    }

    /// The representative as a normal-form polynomial.
    pub fn to_poly(&self) -> Result<NCPoly<Rational>, EnvError> {
        Ok(match (&self.algebra, &self.payload) {
            (EnvAlgebra::QPlane(q), Payload::QPlane(e)) => qplane_recompose(e, &Presentation::qplane(q.clone())?)?,
            (_, Payload::Sl2(e)) => e.to_poly(),
            (_, Payload::Free(d)) => crate::freelie::compose(d),
            _ => unreachable!("payload matches algebra by construction"),
        })
    }

    /// Header lines `tag [q=..]` and `N=..`, then one payload row per line.
    pub fn to_text(&self) -> String {
        let rows = match &self.payload {
            Payload::QPlane(e) => e.to_text(),
            Payload::Sl2(e) => e.to_text(),
            Payload::Free(d) => d.to_text(),
        };
        format!("{}\nN={}\n{rows}", self.algebra, self.n)
    }

    /// Inverse of [`TruncatedElement::to_text`].
    pub fn from_text(text: &str) -> Result<Self, EnvError> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let fmt_err = |line: usize, message: &str| EnvError::Format { line: line + 1, message: message.into() };
        let (hl, header) = lines.next().ok_or_else(|| fmt_err(0, "empty input"))?;
        let mut words = header.split_whitespace();
        let tag = words.next().unwrap_or_default();
        let q = match words.next() {
            Some(w) => {
                let v = w.strip_prefix("q=").ok_or_else(|| fmt_err(hl, "expected q=<rational>"))?;
                Some(v.parse::<Rational>().map_err(|e| fmt_err(hl, &e.to_string()))?)
            }
            None => None,
        };
        let algebra = match (tag, q) {
            ("qplane", Some(q)) => EnvAlgebra::QPlane(q),
            ("sl2", Some(q)) => EnvAlgebra::Sl2(q),
            ("free2", None) => EnvAlgebra::Free,
            _ => return Err(fmt_err(hl, "expected `qplane q=..`, `sl2 q=..` or `free2`")),
        };
        let (nl, nline) = lines.next().ok_or_else(|| fmt_err(hl + 1, "missing N"))?;
        let n: usize = nline
            .trim()
            .strip_prefix("N=")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| fmt_err(nl, "expected N=<nat>"))?;

        let payload = match &algebra {
            EnvAlgebra::QPlane(_) => {
                let mut rows = Vec::new();
                for (ln, line) in lines {
                    let cols: Vec<&str> = line.split('|').map(str::trim).collect();
                    let [j, c, f, g] = cols[..] else { return Err(fmt_err(ln, "expected `j | c | f | g`")) };
                    let j: u32 = j.parse().map_err(|_| fmt_err(ln, "bad row index"))?;
                    let c: Rational = c.parse().map_err(|e: crate::exactnum::ParseRationalError| fmt_err(ln, &e.to_string()))?;
                    let f = parse_commutative(f, &["x"])?;
                    let g = parse_commutative(g, &["y"])?;
                    rows.push((j, QPlaneRow { c, f, g }));
                }
                Payload::QPlane(QPlaneElement::from_rows(rows)?)
            }
            EnvAlgebra::Sl2(_) => {
                let mut e = AqElement::zero();
                for (ln, line) in lines {
                    let (key, c) = line.split_once('|').ok_or_else(|| fmt_err(ln, "expected `i j k | coeff`"))?;
                    let idx: Vec<&str> = key.split_whitespace().collect();
                    let [i, j, k] = idx[..] else { return Err(fmt_err(ln, "expected three exponents")) };
                    let bad = |_| fmt_err(ln, "bad exponent");
                    let key = (i.parse().map_err(bad)?, j.parse().map_err(bad)?, k.parse().map_err(bad)?);
                    let c: Rational = c.trim().parse().map_err(|e: crate::exactnum::ParseRationalError| fmt_err(ln, &e.to_string()))?;
                    e.add_term(key, c);
                }
                Payload::Sl2(e)
            }
            EnvAlgebra::Free => {
                let mut slots = Vec::new();
                for (ln, line) in lines {
                    let (m, h) = line.split_once('|').ok_or_else(|| fmt_err(ln, "expected `m | h_m`"))?;
                    let m: usize = m.trim().parse().map_err(|_| fmt_err(ln, "bad slot index"))?;
                    let vars = slot_vars(m);
                    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
                    slots.push((m, parse_commutative(h.trim(), &names)?));
                }
                Payload::Free(Decomposed::from_slots(slots)?)
            }
        };
        let out = Self::new(algebra, n, payload)?;
        Ok(out)
    }
}

impl fmt::Display for TruncatedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Read a commutative polynomial written with `*`, `^` and rational
/// coefficients.
fn parse_commutative(text: &str, vars: &[&str]) -> Result<MultiPoly, EnvError> {
    let nc = parse_rational(text, &gens(vars))?;
    let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    let terms = nc.terms().map(|(w, c)| {
        let mut exps = vec![0u32; names.len()];
        for g in w.letters() {
            let i = names.iter().position(|n| n == g.name()).expect("letter from the alphabet");
            exps[i] += 1;
        }
        (exps, c.clone())
    });
    Ok(MultiPoly::from_terms(names.clone(), terms))
}

/// Normal form, decomposition and truncation of `a` at level `n`.
pub fn env_from_poly(a: &NCPoly<Rational>, algebra: &EnvAlgebra, n: usize) -> Result<TruncatedElement, EnvError> {
    algebra.check_q()?;
    let allowed = algebra.alphabet();
    if let Some(g) = a.generators().into_iter().find(|g| !allowed.contains(g)) {
        return Err(PresentationError::UnknownGenerator(g.name().to_string()).into());
    }
    let payload = match algebra {
        EnvAlgebra::QPlane(q) => {
            let p = Presentation::qplane(q.clone())?;
            Payload::QPlane(qplane_decompose(&p.normal_form(a)?, &p)?)
        }
        EnvAlgebra::Sl2(q) => {
            let p = Presentation::aq(q.clone())?;
            Payload::Sl2(AqElement::from_normal(&sl2_eliminate_d(a, q)?, &p)?)
        }
        EnvAlgebra::Free => Payload::Free(straighten(a)?),
    };
    TruncatedElement::new(algebra.clone(), n, payload)
}

/// Product in the truncated envelope.
///
/// Every truncation ideal is graded by the level, and products never lower
/// the level, so pairs of terms whose levels already add past `N` are
/// skipped before multiplying.
pub fn env_mul(x: &TruncatedElement, y: &TruncatedElement) -> Result<TruncatedElement, EnvError> {
    if x.algebra != y.algebra || x.n != y.n {
        return Err(EnvError::Mismatch {
            left: x.algebra.to_string(),
            left_n: x.n,
            right: y.algebra.to_string(),
            right_n: y.n,
        });
    }
    let n = x.n;
    let payload = match (&x.algebra, &x.payload, &y.payload) {
        (EnvAlgebra::QPlane(q), Payload::QPlane(a), Payload::QPlane(b)) => {
            let p = Presentation::qplane(q.clone())?;
            let mut acc = NCPoly::zero();
            for (j1, r1) in a.rows() {
                for (j2, r2) in b.rows() {
                    if (j1 + j2) as usize > n {
                        continue;
                    }
                    let left = qplane_recompose(&QPlaneElement::from_rows([(j1, r1.clone())])?, &p)?;
                    let right = qplane_recompose(&QPlaneElement::from_rows([(j2, r2.clone())])?, &p)?;
                    acc = acc.add(&left.mul(&right));
                }
            }
            Payload::QPlane(qplane_decompose(&p.normal_form(&acc)?, &p)?)
        }
        (EnvAlgebra::Sl2(q), Payload::Sl2(a), Payload::Sl2(b)) => {
            let p = Presentation::aq(q.clone())?;
            let mut by_level: BTreeMap<u32, NCPoly<Rational>> = BTreeMap::new();
            for (key, c) in a.terms() {
                by_level.entry(key.1 + key.2).or_insert_with(NCPoly::zero).add_term(aq_word(key), c.clone());
            }
            let mut acc = NCPoly::zero();
            for (key, c) in b.terms() {
                let level = key.1 + key.2;
                if level as usize > n {
                    continue;
                }
                let right = NCPoly::monomial(aq_word(key), c.clone());
                for left in by_level.range(..=n as u32 - level).map(|(_, l)| l) {
                    acc = acc.add(&left.mul(&right));
                }
            }
            Payload::Sl2(AqElement::from_normal(&p.normal_form(&acc)?, &p)?)
        }
        (EnvAlgebra::Free, Payload::Free(a), Payload::Free(b)) => Payload::Free(a.mul_truncated(b, Some(n))),
        _ => unreachable!("payload matches algebra by construction"),
    };
    TruncatedElement::new(x.algebra.clone(), n, payload)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling;

    fn q2() -> EnvAlgebra {
        EnvAlgebra::QPlane(Rational::integer(2))
    }

    fn from(s: &str, alg: &EnvAlgebra, n: usize) -> TruncatedElement {
        let a = parse_rational(s, &alg.alphabet()).unwrap();
        env_from_poly(&a, alg, n).unwrap()
    }

    fn rows(e: &TruncatedElement) -> &QPlaneElement {
        match e.payload() {
            Payload::QPlane(e) => e,
            _ => panic!("not a quantum-plane element"),
        }
    }

    #[test]
    fn from_poly_examples() {
        let e = from("x + x^3*y^3", &q2(), 2);
        let expected = QPlaneElement::from_rows([(
            0,
            QPlaneRow { f: MultiPoly::var("x"), ..QPlaneRow::zero() },
        )])
        .unwrap();
        assert_eq!(rows(&e), &expected);

        let s = EnvAlgebra::Sl2(Rational::integer(3));
        assert!(from("a^2*b*c", &s, 1).is_zero());
        assert!(!from("a^2*b*c", &s, 2).is_zero());

        let f = from("e2*e1", &EnvAlgebra::Free, 1);
        let Payload::Free(d) = f.payload() else { panic!() };
        assert_eq!(d.slot(0), MultiPoly::monomial(Rational::one(), &[("l1", 1), ("l2", 1)]));
        assert_eq!(d.slot(1), MultiPoly::one());
    }

    #[test]
    fn mul_examples() {
        let (x, y) = (from("x", &q2(), 2), from("y", &q2(), 2));
        let xy = env_mul(&x, &y).unwrap();
        assert_eq!(rows(&xy), &QPlaneElement::from_rows([(1, QPlaneRow::constant(Rational::one()))]).unwrap());
        let yx = env_mul(&y, &x).unwrap();
        assert_eq!(rows(&yx), &QPlaneElement::from_rows([(1, QPlaneRow::constant(Rational::new(1, 2)))]).unwrap());

        let fa = from("e2", &EnvAlgebra::Free, 2);
        let fb = from("e1", &EnvAlgebra::Free, 2);
        assert_eq!(env_mul(&fa, &fb).unwrap(), from("e2*e1", &EnvAlgebra::Free, 2));

        let other_n = from("x", &q2(), 3);
        assert!(matches!(env_mul(&x, &other_n), Err(EnvError::Mismatch { .. })));
    }

    #[test]
    fn sl2_products_respect_levels() {
        let s = EnvAlgebra::Sl2(Rational::new(-2, 3));
        let a = from("d + b*a - 2*c", &s, 3);
        let b = from("a*c + ai*b^2 - 1", &s, 3);
        let full = from("(d + b*a - 2*c)*(a*c + ai*b^2 - 1)", &s, 3);
        assert_eq!(env_mul(&a, &b).unwrap(), full);
    }

    #[test]
    fn serialization_round_trip() {
        let mut rng = sampling::rng(11);
        for alg in [q2(), EnvAlgebra::Sl2(Rational::new(3, 2)), EnvAlgebra::Free] {
            for _ in 0..5 {
                let a = sampling::ncpoly(&mut rng, &alg.alphabet(), 4, 4);
                let e = env_from_poly(&a, &alg, 3).unwrap();
                let text = e.to_text();
                assert_eq!(TruncatedElement::from_text(&text).unwrap(), e, "{text}");
            }
        }
        assert!(TruncatedElement::from_text("qplane\nN=2\n").is_err());
        assert!(TruncatedElement::from_text("free2\nN=x\n").is_err());
    }

    #[test]
    fn unit_and_truncation() {
        for alg in [q2(), EnvAlgebra::Sl2(Rational::integer(5)), EnvAlgebra::Free] {
            let one = TruncatedElement::one(alg.clone(), 4).unwrap();
            let text = match alg {
                EnvAlgebra::QPlane(_) => "y*x*y + 3",
                EnvAlgebra::Sl2(_) => "c*a*b - d",
                EnvAlgebra::Free => "e2*e1*e2 - e1",
            };
            let a = from(text, &alg, 4);
            assert_eq!(env_mul(&one, &a).unwrap(), a);
            assert_eq!(env_mul(&a, &one).unwrap(), a);
            assert_eq!(a.truncate(2).truncation(), 2);
        }
    }
}
