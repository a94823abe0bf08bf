//! Polynomial growth of triangular matrices: `e^{isT}` in closed form, the
//! growth degree read from it, and randomized checks of the structure of
//! `T_p` (commutative modulo a nilpotent radical, one-sided inverses).

use std::fmt;

use crate::exactnum::{ExpPoly, GaussianRational, Rational, Ring};
use crate::matrep::{e_matrix, TriMatrix};
use crate::sampling;

/// `X(s) = e^{isT}` for upper-triangular rational `T`.
///
/// The diagonal is `e^{i t_rr s}`. Above it `X' = iTX`, `X(0) = I` is solved
/// from the bottom row up:
/// `X_rc(s) = e^{i t_rr s} ∫₀^s e^{−i t_rr σ}·i·Σ_{l>r} T_rl X_lc(σ) dσ`.
pub fn exp_is(t: &TriMatrix<Rational>) -> TriMatrix<ExpPoly> {
    let n = t.size();
    let i = ExpPoly::constant(GaussianRational::i());
    let mut x = TriMatrix::<ExpPoly>::zero(n);
    for c in 0..n {
        x.set(c, c, ExpPoly::exp(t.get(c, c).clone()));
        for r in (0..c).rev() {
            let mut rhs = ExpPoly::zero();
            for l in r + 1..=c {
                let trl = t.get(r, l);
                if !trl.is_zero() {
                    rhs.add_assign_ref(&x.get(l, c).mul_ref(&ExpPoly::from(trl.clone())));
                }
            }
            let d = t.get(r, r);
            let integrand = ExpPoly::exp(-d).mul_ref(&i).mul_ref(&rhs);
            x.set(r, c, ExpPoly::exp(d.clone()).mul_ref(&integrand.antiderivative()));
        }
    }
    x
}

/// Exact growth data of `T`: `‖e^{isT}‖` grows like `|s|^degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthCertificate {
    pub size: usize,
    pub degree: u32,
    pub witness: TriMatrix<ExpPoly>,
}

impl GrowthCertificate {
    pub fn new(t: &TriMatrix<Rational>) -> Self {
        let witness = exp_is(t);
        let degree = witness.entries().iter().filter_map(ExpPoly::max_power).max().unwrap_or(0);
        GrowthCertificate { size: t.size(), degree, witness }
    }
}

/// Largest power of `s` in `e^{isT}`.
pub fn growth_degree(t: &TriMatrix<Rational>) -> u32 {
    GrowthCertificate::new(t).degree
}

/// `X(s)·X(−s) = I`.
pub fn inverse_identity_holds(x: &TriMatrix<ExpPoly>) -> bool {
    x.mul(&x.map(ExpPoly::reflect)).is_identity()
}

/// `d/ds X = iT·X`.
pub fn derivative_identity_holds(t: &TriMatrix<Rational>, x: &TriMatrix<ExpPoly>) -> bool {
    let it = t.map(|v| ExpPoly::constant(GaussianRational::imag(v.clone())));
    x.map(ExpPoly::derivative) == it.mul(x)
}

/// Inverse of an upper-triangular matrix by back substitution, if the
/// diagonal has no zero.
pub fn invert_upper(m: &TriMatrix<Rational>) -> Option<TriMatrix<Rational>> {
    let n = m.size();
    let mut inv = TriMatrix::<Rational>::zero(n);
    for c in 0..n {
        inv.set(c, c, m.get(c, c).recip()?);
        for r in (0..c).rev() {
            let mut acc = Rational::zero();
            for l in r + 1..=c {
                acc = acc + m.get(r, l) * inv.get(l, c);
            }
            inv.set(r, c, -(acc * inv.get(r, r)));
        }
    }
    Some(inv)
}

/// Pass counts of the randomized radical checks in `T_p`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RadicalReport {
    pub p: usize,
    pub samples: usize,
    /// `[A, B]` strictly upper triangular.
    pub strict: usize,
    /// `[A, B]^p = 0`.
    pub nilpotent: usize,
    /// `[A, A] = 0`.
    pub self_bracket: usize,
    /// `AB = qBA` for the constructed pair and `(AB)^p = 0`.
    pub q_commuting: usize,
}

impl RadicalReport {
    pub fn passed(&self) -> bool {
        [self.strict, self.nilpotent, self.self_bracket, self.q_commuting].iter().all(|&n| n == self.samples)
    }
}

impl fmt::Display for RadicalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p = {}, samples = {}", self.p, self.samples)?;
        writeln!(f, "commutator strictly upper: {}/{}", self.strict, self.samples)?;
        writeln!(f, "commutator^p = 0: {}/{}", self.nilpotent, self.samples)?;
        writeln!(f, "[A,A] = 0: {}/{}", self.self_bracket, self.samples)?;
        write!(f, "q-commuting pair, (AB)^p = 0: {}/{}", self.q_commuting, self.samples)
    }
}

/// For `samples` random pairs in `T_p`: commutators lie in the strictly
/// upper part and are nilpotent of index at most `p`; and for pairs
/// `A = λK_p`, `B` supported on the first superdiagonal (so `AB = qBA`),
/// the product `AB` is nilpotent.
pub fn radical_report(p: usize, samples: usize, seed: u64) -> RadicalReport {
    let mut rng = sampling::rng(seed);
    let mut rep = RadicalReport { p, samples, ..Default::default() };
    for _ in 0..samples {
        let a = sampling::tri_matrix(&mut rng, p);
        let b = sampling::tri_matrix(&mut rng, p);
        let c = a.commutator(&b);
        rep.strict += usize::from(c.is_strictly_upper());
        rep.nilpotent += usize::from(c.pow(p as u32).is_zero());
        rep.self_bracket += usize::from(a.commutator(&a).is_zero());

        let q = sampling::generic_q(&mut rng);
        let lam = sampling::nonzero_rational(&mut rng, 5, 3);
        let k = TriMatrix::diagonal((0..p).map(|r| &lam * &q.powi((p - 1 - r) as i64)).collect());
        let sup = TriMatrix::from_upper_fn(p, |i, j| {
            if j == i + 1 {
                sampling::rational(&mut rng, 5, 3)
            } else {
                Rational::zero()
            }
        });
        let ab = k.mul(&sup);
        let ok = ab == sup.mul(&k).scale(&q) && ab.pow(p as u32).is_zero();
        rep.q_commuting += usize::from(ok);
    }
    rep
}

/// `NM = I ⇒ MN = I` for `samples` random invertible `M` in `T_p`,
/// `p` drawn from `1..=max_p`. Returns the number of passing samples.
pub fn one_sided_inverse_check(max_p: usize, samples: usize, seed: u64) -> usize {
    let mut rng = sampling::rng(seed);
    let mut passed = 0;
    for n in 0..samples {
        let p = 1 + n % max_p;
        let m = sampling::invertible_tri_matrix(&mut rng, p);
        let Some(inv) = invert_upper(&m) else { continue };
        if inv.mul(&m).is_identity() && m.mul(&inv).is_identity() {
            passed += 1;
        }
    }
    passed
}

/// The nilpotent Jordan block of size `p`.
pub fn jordan_block(p: usize) -> TriMatrix<Rational> {
    e_matrix(p)
}
