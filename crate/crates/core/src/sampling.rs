//! Seeded random inputs for the randomized checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{MultiPoly, Rational};
use crate::freealg::{Gen, NCPoly, Word};
use crate::freelie::{slot_vars, Decomposed};
use crate::matrep::TriMatrix;
use crate::presentations::{AqElement, QPlaneElement, QPlaneRow};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A rational `n/d` with `|n| ≤ bound` and `1 ≤ d ≤ max_den`.
pub fn rational(rng: &mut SeededRng, bound: i64, max_den: i64) -> Rational {
    Rational::new(rng.gen_range(-bound..=bound), rng.gen_range(1..=max_den))
}

pub fn nonzero_rational(rng: &mut SeededRng, bound: i64, max_den: i64) -> Rational {
    loop {
        let r = rational(rng, bound, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A nonzero `q` different from `±1`.
pub fn generic_q(rng: &mut SeededRng) -> Rational {
    loop {
        let r = nonzero_rational(rng, 5, 4);
        if !r.abs().is_one() {
            return r;
        }
    }
}

/// Upper-triangular `p×p` with entries `n/d`, `|n| ≤ 5`, `d ≤ 3`.
pub fn tri_matrix(rng: &mut SeededRng, p: usize) -> TriMatrix<Rational> {
    TriMatrix::from_upper_fn(p, |_, _| rational(rng, 5, 3))
}

/// Upper-triangular with nonzero diagonal.
pub fn invertible_tri_matrix(rng: &mut SeededRng, p: usize) -> TriMatrix<Rational> {
    TriMatrix::from_upper_fn(p, |i, j| if i == j { nonzero_rational(rng, 5, 3) } else { rational(rng, 5, 3) })
}

/// A random polynomial over `alphabet` with up to `terms` terms of length
/// at most `max_len`.
pub fn ncpoly(rng: &mut SeededRng, alphabet: &[Gen], max_len: usize, terms: usize) -> NCPoly<Rational> {
    let mut out = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let len = rng.gen_range(0..=max_len);
        let letters = (0..len).map(|_| alphabet.choose(rng).expect("nonempty alphabet").clone()).collect();
        out.add_term(Word::new(letters), nonzero_rational(rng, 4, 3));
    }
    out
}

/// A random polynomial in the listed variables with total degree at most
/// `max_deg`.
pub fn multipoly(rng: &mut SeededRng, vars: &[String], max_deg: u32, terms: usize) -> MultiPoly {
    let mut out = Vec::new();
    for _ in 0..rng.gen_range(1..=terms) {
        let mut budget = rng.gen_range(0..=max_deg);
        let mut exps = vec![0u32; vars.len()];
        while budget > 0 && !vars.is_empty() {
            exps[rng.gen_range(0..vars.len())] += 1;
            budget -= 1;
        }
        out.push((exps, nonzero_rational(rng, 4, 3)));
    }
    MultiPoly::from_terms(vars.to_vec(), out)
}

fn univariate(rng: &mut SeededRng, var: &str, max_deg: u32) -> MultiPoly {
    let mut terms = Vec::new();
    for n in 1..=max_deg {
        if rng.gen_bool(0.5) {
            terms.push((vec![n], rational(rng, 4, 3)));
        }
    }
    MultiPoly::from_terms(vec![var.to_string()], terms)
}

/// Rows `j ≤ max_row`, each `c_j + f_j(x) + g_j(y)` with `f_j, g_j` of
/// degree at most `max_deg`.
pub fn qplane_element(rng: &mut SeededRng, max_row: u32, max_deg: u32) -> QPlaneElement {
    let mut rows = Vec::new();
    for j in 0..=max_row {
        if rng.gen_bool(0.7) {
            let c = rational(rng, 4, 3);
            let f = univariate(rng, "x", max_deg);
            let g = univariate(rng, "y", max_deg);
            rows.push((j, QPlaneRow { c, f, g }));
        }
    }
    QPlaneElement::from_rows(rows).expect("rows are univariate without constant term")
}

/// Up to `terms` terms `a^i b^j c^k` with `|i| ≤ max_exp`, `j, k ≤ max_exp`.
pub fn aq_element(rng: &mut SeededRng, max_exp: u32, terms: usize) -> AqElement {
    let e = max_exp as i64;
    let mut out = AqElement::zero();
    for _ in 0..rng.gen_range(1..=terms) {
        let key = (rng.gen_range(-e..=e), rng.gen_range(0..=max_exp), rng.gen_range(0..=max_exp));
        out.add_term(key, nonzero_rational(rng, 4, 3));
    }
    out
}

/// Random `h_m` for `m` in `slots`, each of total degree at most `max_deg`.
pub fn decomposed(
    rng: &mut SeededRng,
    slots: std::ops::RangeInclusive<usize>,
    max_deg: u32,
    terms: usize,
) -> Decomposed {
    let parts: Vec<(usize, MultiPoly)> =
        slots.map(|m| (m, multipoly(rng, &slot_vars(m), max_deg, terms))).collect();
    Decomposed::from_slots(parts).expect("slot variables")
}
