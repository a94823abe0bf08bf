use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::exactnum::{MultiPoly, Rational, Ring};
use crate::freealg::{Gen, Images};
use crate::freelie::{s_var, t_var, Decomposed};
use crate::presentations::QPlaneElement;

use super::{MatrixError, TriMatrix};

/// Which quantum-plane family: `x ↦ λK_p, y ↦ E_p` or
/// `x ↦ E_p, y ↦ μK_p⁻¹`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Plain,
    Primed,
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(Variant::Plain),
            "primed" => Ok(Variant::Primed),
            other => Err(format!("unknown variant `{other}` (expected plain or primed)")),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Plain => "plain",
            Variant::Primed => "primed",
        })
    }
}

pub const LAMBDA: &str = "lam";
pub const LAMBDA_INV: &str = "lami";
pub const MU: &str = "mu";
pub const NU: &str = "nu";

fn poly(r: Rational) -> MultiPoly {
    MultiPoly::constant(r)
}

/// `K_p = diag(q^{p−1}, …, q, 1)` raised to `sign = ±1`.
pub fn k_matrix(p: usize, q: &Rational, sign: i64) -> TriMatrix<MultiPoly> {
    TriMatrix::diagonal((0..p).map(|r| poly(q.powi(sign * (p - 1 - r) as i64))).collect())
}

/// `E_p`: ones on the first superdiagonal.
pub fn e_matrix<S: Ring>(p: usize) -> TriMatrix<S> {
    TriMatrix::from_upper_fn(p, |i, j| if j == i + 1 { S::one() } else { S::zero() })
}

fn check_size(p: usize) -> Result<(), MatrixError> {
    if p == 0 {
        Err(MatrixError::ZeroSize)
    } else {
        Ok(())
    }
}

fn check_q(q: &Rational) -> Result<(), MatrixError> {
    if q.is_zero() {
        Err(MatrixError::ZeroQ)
    } else {
        Ok(())
    }
}

/// Images of `x, y` in `T_p` with entries polynomial in `lam` (plain) or
/// `mu` (primed).
pub fn build_qplane_rep(p: usize, variant: Variant, q: &Rational) -> Result<Images<MultiPoly>, MatrixError> {
    check_size(p)?;
    check_q(q)?;
    let (x, y) = match variant {
        Variant::Plain => (k_matrix(p, q, 1).scale(&MultiPoly::var(LAMBDA)), e_matrix(p)),
        Variant::Primed => (e_matrix(p), k_matrix(p, q, -1).scale(&MultiPoly::var(MU))),
    };
    Ok(BTreeMap::from([(Gen::named("x"), x), (Gen::named("y"), y)]))
}

/// Images of `a, ai, b, c, d` with entries polynomial in `lam, lami, mu, nu`.
/// `lami` stands for `lam⁻¹`; apply [`simplify_inverse`] to products.
pub fn build_sl2_rep(p: usize, q: &Rational) -> Result<Images<MultiPoly>, MatrixError> {
    check_size(p)?;
    check_q(q)?;
    let a = k_matrix(p, q, 1).scale(&MultiPoly::var(LAMBDA));
    let ai = k_matrix(p, q, -1).scale(&MultiPoly::var(LAMBDA_INV));
    let b = e_matrix::<MultiPoly>(p).scale(&MultiPoly::var(MU));
    let c = e_matrix::<MultiPoly>(p).scale(&MultiPoly::var(NU));
    // d = a⁻¹(1 + q·bc)
    let qbc = b.mul(&c).scale(&poly(q.clone()));
    let d = ai.mul(&TriMatrix::identity(p).add(&qbc));
    Ok(BTreeMap::from([
        (Gen::named("a"), a),
        (Gen::named("ai"), ai),
        (Gen::named("b"), b),
        (Gen::named("c"), c),
        (Gen::named("d"), d),
    ]))
}

/// Apply `lam·lami = 1` entrywise.
pub fn simplify_inverse(m: &TriMatrix<MultiPoly>) -> TriMatrix<MultiPoly> {
    m.map(|e| e.reduce_inverse_pair(LAMBDA, LAMBDA_INV))
}

/// A point `w = ((s_1,t_1), …, (s_m,t_m))`, each coordinate a polynomial
/// (a variable for symbolic points, a constant for concrete ones).
#[derive(Debug, Clone, PartialEq)]
pub struct FreeWord {
    pairs: Vec<(MultiPoly, MultiPoly)>,
}

impl FreeWord {
    /// `((s1,t1), …, (sm,tm))` as variables.
    pub fn symbolic(m: usize) -> Self {
        FreeWord { pairs: (1..=m).map(|p| (MultiPoly::var(&s_var(p)), MultiPoly::var(&t_var(p)))).collect() }
    }

    pub fn concrete(pairs: Vec<(Rational, Rational)>) -> Self {
        FreeWord { pairs: pairs.into_iter().map(|(s, t)| (poly(s), poly(t))).collect() }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(MultiPoly, MultiPoly)] {
        &self.pairs
    }

    /// `E_w = diag(0, s'_1, …, s'_m)` with `s'_p = s_1 + ⋯ + s_p`.
    pub fn e_w(&self) -> TriMatrix<MultiPoly> {
        let mut diag = vec![MultiPoly::zero()];
        let mut acc = MultiPoly::zero();
        for (s, _) in &self.pairs {
            acc = acc.add_ref(s);
            diag.push(acc.clone());
        }
        TriMatrix::diagonal(diag)
    }

    /// `F_w = diag(t'_1, …, t'_m, 0)` with `t'_p = t_p + ⋯ + t_m`.
    pub fn f_w(&self) -> TriMatrix<MultiPoly> {
        let mut diag = vec![MultiPoly::zero()];
        let mut acc = MultiPoly::zero();
        for (_, t) in self.pairs.iter().rev() {
            acc = acc.add_ref(t);
            diag.push(acc.clone());
        }
        diag.reverse();
        TriMatrix::diagonal(diag)
    }
}

/// `θ_w`: `e1 ↦ E_w`, `e2 ↦ F_w − J` with `J` the superdiagonal of ones.
pub fn build_theta_rep(w: &FreeWord) -> Images<MultiPoly> {
    let n = w.len() + 1;
    BTreeMap::from([
        (Gen::named("e1"), w.e_w()),
        (Gen::named("e2"), w.f_w().sub(&e_matrix(n))),
    ])
}

/// `e_i ↦ λ_i + θ_w(e_i)`, with `λ_1, λ_2` the named variables in `lam`.
pub fn build_free_rep(lam: (&str, &str), w: &FreeWord) -> Images<MultiPoly> {
    let n = w.len() + 1;
    let mut images = build_theta_rep(w);
    for (name, l) in [("e1", lam.0), ("e2", lam.1)] {
        let shift = TriMatrix::scalar(n, MultiPoly::var(l));
        let m = images.get_mut(&Gen::named(name)).expect("image present");
        *m = m.add(&shift);
    }
    images
}

/// True iff the main diagonal and the first superdiagonal vanish.
pub fn in_c2<S: Ring>(m: &TriMatrix<S>) -> bool {
    m.vanishes_below_band(2)
}

/// Coefficient of `var^n` in a univariate polynomial.
fn coeff_of(p: &MultiPoly, var: &str, n: u32) -> Rational {
    if n == 0 {
        return p.coefficient(&[]);
    }
    p.coefficient(&[(var, n)])
}

/// `f(v)` for a univariate `f` in `var`.
fn eval_at(f: &MultiPoly, var: &str, v: &MultiPoly) -> MultiPoly {
    f.substitute(&BTreeMap::from([(var.to_string(), v.clone())]))
}

/// Closed form for entry `(1, p)` of the image of a quantum-plane element
/// under the plain or primed family.
pub fn upper_right_qplane(e: &QPlaneElement, p: usize, variant: Variant, q: &Rational) -> MultiPoly {
    assert!(p >= 1, "matrix size must be positive");
    let top = (p - 1) as u32;
    let row = e.row(top);
    let mut out = MultiPoly::zero();
    match variant {
        Variant::Plain => {
            let lam = MultiPoly::var(LAMBDA);
            let arg = lam.scale(&q.powi(top as i64));
            let lead = poly(row.c.clone()).add_ref(&eval_at(&row.f, "x", &arg));
            let factor = lam.pow(top).scale(&q.powi((p * (p - 1) / 2) as i64));
            out = out.add_ref(&lead.mul_ref(&factor));
            for k in 0..top {
                let c = coeff_of(&e.row(k).g, "y", top - k);
                let kk = k as i64;
                out = out.add_ref(&lam.pow(k).scale(&(c * q.powi(kk * (kk + 1) / 2))));
            }
        }
        Variant::Primed => {
            let mu = MultiPoly::var(MU);
            let arg = mu.scale(&q.powi(-(top as i64)));
            let lead = poly(row.c.clone()).add_ref(&eval_at(&row.g, "y", &arg));
            let t = top as i64;
            let factor = mu.pow(top).scale(&q.powi(-(t * (t - 1) / 2)));
            out = out.add_ref(&lead.mul_ref(&factor));
            for k in 0..top {
                let c = coeff_of(&e.row(k).f, "x", top - k);
                let kk = k as i64;
                out = out.add_ref(&mu.pow(k).scale(&(c * q.powi(-(kk * (kk - 1) / 2)))));
            }
        }
    }
    out
}

/// Predicted entry `(1, m+1)` of `θ̃_{λ,w}` applied to the element with
/// coordinates `d`, `m = |w|`:
/// `(−s_1)⋯(−s_m)·h_m(λ_1, λ_2 + t_1 + ⋯ + t_m, −s_1, t_1, …, −s_m, t_m)`.
///
/// Only slot `m` enters. Slots above `m` are annihilated by the
/// representation; slots below `m` can reach the corner too (for example
/// `e2` itself when `m = 1`), so the prediction is exact for elements
/// supported on slots `≥ m`.
pub fn free_upper_right(d: &Decomposed, lam: (&str, &str), w: &FreeWord) -> MultiPoly {
    let m = w.len();
    let h = d.slot(m);
    let mut bindings = BTreeMap::new();
    let mut shift = MultiPoly::var(lam.1);
    let mut prefactor = MultiPoly::one();
    for (p, (s, t)) in w.pairs().iter().enumerate() {
        bindings.insert(s_var(p + 1), s.scale(&Rational::integer(-1)));
        bindings.insert(t_var(p + 1), t.clone());
        shift = shift.add_ref(t);
        prefactor = prefactor.mul_ref(&s.scale(&Rational::integer(-1)));
    }
    bindings.insert("l1".to_string(), MultiPoly::var(lam.0));
    bindings.insert("l2".to_string(), shift);
    h.substitute(&bindings).mul_ref(&prefactor)
}
