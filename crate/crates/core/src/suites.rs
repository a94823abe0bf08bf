//! Named verification suites. Each suite checks one family of identities
//! exactly and reports the first failing instance.

use std::collections::BTreeSet;
use std::error::Error;
use std::fmt;

use crate::envelope::{
    default_reps, env_from_poly, env_mul, separation_rank, EnvAlgebra, Payload, TruncatedElement,
};
use crate::exactnum::{MultiPoly, Rational, Ring};
use crate::freealg::{apply_hom, gens, Gen, NCPoly, Word};
use crate::freelie::{compose, enumerate_ggens, expand_g, lambda_var, s_var, t_var};
use crate::matrep::{
    build_free_rep, build_qplane_rep, build_sl2_rep, build_theta_rep, e_matrix, free_upper_right, in_c2, k_matrix,
    simplify_inverse, upper_right_qplane, FreeWord, TriMatrix, Variant, LAMBDA, LAMBDA_INV, MU, NU,
};
use crate::pgrowth::{one_sided_inverse_check, radical_report};
use crate::presentations::{qplane_recompose, sl2_eliminate_d, sl2_relations, Presentation};
use crate::sampling::{self, SeededRng};

pub const SUITES: [&str; 12] = [
    "qplane-basis",
    "urepi",
    "sl2-relations",
    "slmat",
    "onefactre",
    "manyQk",
    "manyQwek",
    "annh",
    "radpg",
    "qudi",
    "envelope-assoc",
    "separation",
];

/// Knobs shared by all suites. `None` picks the suite's default.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteParams {
    pub seed: u64,
    pub samples: usize,
    pub q: Option<Rational>,
    /// Largest matrix size.
    pub p: Option<usize>,
    /// Largest word length.
    pub m: Option<usize>,
    /// Largest filtration degree.
    pub degree: Option<usize>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { seed: 0, samples: 100, q: None, p: None, m: None, degree: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub checks: usize,
    pub failure: Option<String>,
    pub note: String,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS ({})", self.note),
            Some(what) => write!(f, "FAIL: {what}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite `{}` (expected one of: {})", self.0, SUITES.join(", "))
    }
}

impl Error for UnknownSuite {}

/// Counts checks and keeps the first failure.
#[derive(Default)]
struct Checker {
    checks: usize,
    failure: Option<String>,
}

impl Checker {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }
}

type SuiteResult = Result<String, Box<dyn Error>>;

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteOutcome, UnknownSuite> {
    let suite = SUITES.iter().copied().find(|s| *s == name).ok_or_else(|| UnknownSuite(name.to_string()))?;
    let run: fn(&SuiteParams, &mut Checker) -> SuiteResult = match suite {
        "qplane-basis" => qplane_basis,
        "urepi" => urepi,
        "sl2-relations" => sl2_relations_suite,
        "slmat" => slmat,
        "onefactre" => onefactre,
        "manyQk" => many_qk,
        "manyQwek" => many_qwek,
        "annh" => annh,
        "radpg" => radpg,
        "qudi" => qudi,
        "envelope-assoc" => envelope_assoc,
        _ => separation,
    };
    let mut ck = Checker::default();
    let note = match run(params, &mut ck) {
        Ok(note) => note,
        Err(e) => {
            if ck.failure.is_none() {
                ck.failure = Some(format!("error: {e}"));
            }
            String::new()
        }
    };
    Ok(SuiteOutcome { suite, checks: ck.checks, failure: ck.failure, note })
}

fn q_or_random(params: &SuiteParams, rng: &mut SeededRng) -> Rational {
    params.q.clone().unwrap_or_else(|| sampling::generic_q(rng))
}

fn all_words(alphabet: &[Gen], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::unit()];
    let mut layer = vec![Word::unit()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| alphabet.iter().map(move |g| w.concat(&Word::letter(g.clone()))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn qplane_basis(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let mut rng = sampling::rng(params.seed);
    let max_p = params.p.unwrap_or(8);
    let qs: Vec<Rational> = match &params.q {
        Some(q) => vec![q.clone()],
        None => (0..10).map(|_| sampling::generic_q(&mut rng)).collect(),
    };
    for q in &qs {
        for p in 1..=max_p {
            let (k, e) = (k_matrix(p, q, 1), e_matrix::<MultiPoly>(p));
            ck.check(k.mul(&e) == e.mul(&k).scale(&MultiPoly::constant(q.clone())), || {
                format!("K_p E_p = q E_p K_p fails for p={p}, q={q}")
            });
        }
    }

    let xy = gens(&["x", "y"]);
    for q in &qs {
        let pres = Presentation::qplane(q.clone())?;
        let mut reached = BTreeSet::new();
        let words = all_words(&xy, 6);
        for w in &words {
            let nf = pres.normal_form(&NCPoly::<Rational>::word(w.clone()))?;
            let xs = w.letters().iter().filter(|g| g.name() == "x").count();
            let expected = Word::from_names(&[vec!["x"; xs], vec!["y"; w.len() - xs]].concat());
            let single = nf.terms().count() == 1 && !nf.coeff(&expected).is_zero();
            ck.check(single, || format!("normal form of {w} is {nf}, not a multiple of {expected} (q={q})"));
            reached.insert(expected);
        }
        let expected_count: usize = (0..=6).map(|n| n + 1).sum();
        ck.check(reached.len() == expected_count, || {
            format!("{} distinct basis words of length ≤ 6, expected {expected_count}", reached.len())
        });
        for w in &reached {
            ck.check(pres.is_normal_word(w), || format!("{w} is not a normal word"));
        }
    }

    for n in 0..2 * params.samples {
        let q = q_or_random(params, &mut rng);
        let pres = Presentation::qplane(q.clone())?;
        let [a, b, c] = [0; 3].map(|_| sampling::ncpoly(&mut rng, &xy, 3, 3));
        let left = pres.mul(&pres.mul(&a, &b)?, &c)?;
        let right = pres.mul(&a, &pres.mul(&b, &c)?)?;
        ck.check(left == right, || format!("associativity fails on triple #{n}: ({a})({b})({c}), q={q}"));
    }
    Ok(format!("{} checks", ck.checks))
}

fn urepi(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let mut rng = sampling::rng(params.seed);
    let max_p = params.p.unwrap_or(5);
    for n in 0..2 * params.samples {
        let q = q_or_random(params, &mut rng);
        let pres = Presentation::qplane(q.clone())?;
        let e = sampling::qplane_element(&mut rng, 4, 4);
        let a = qplane_recompose(&e, &pres)?;
        for p in 1..=max_p {
            for variant in [Variant::Plain, Variant::Primed] {
                let oracle = apply_hom(&a, &build_qplane_rep(p, variant, &q)?)?.corner().clone();
                let predicted = upper_right_qplane(&e, p, variant, &q);
                ck.check(oracle == predicted, || {
                    format!("corner of sample #{n}, p={p}, {variant}, q={q}: formula {predicted}, matrix {oracle}")
                });
            }
            if ck.failed() {
                return Ok(String::new());
            }
        }
    }
    Ok(format!("{} corners", ck.checks))
}

fn sl2_relations_suite(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let mut rng = sampling::rng(params.seed);
    let max_p = params.p.unwrap_or(4);
    let qs: Vec<Rational> = match &params.q {
        Some(q) => vec![q.clone()],
        None => (0..3).map(|_| sampling::generic_q(&mut rng)).collect(),
    };
    for q in &qs {
        let rels = sl2_relations(q);
        for (name, rel) in &rels {
            let reduced = sl2_eliminate_d(rel, q)?;
            ck.check(reduced.is_zero(), || format!("{name} reduces to {reduced} after eliminating d (q={q})"));
        }
        for p in 1..=max_p {
            let images = build_sl2_rep(p, q)?;
            for (name, rel) in &rels {
                let m = simplify_inverse(&apply_hom(rel, &images)?);
                ck.check(m.is_zero(), || format!("{name} is not killed by the size-{p} representation (q={q})"));
            }
        }
    }
    Ok(format!("{} relations, p ≤ {max_p}", sl2_relations(&Rational::one()).len()))
}

/// `(λq^e)^n` with `λ⁻¹` written as `lami`.
fn lambda_power(q: &Rational, e: i64, n: i64) -> MultiPoly {
    let var = if n >= 0 { LAMBDA } else { LAMBDA_INV };
    MultiPoly::monomial(q.powi(e * n), &[(var, n.unsigned_abs() as u32)])
}

fn slmat(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let mut rng = sampling::rng(params.seed);
    let p = params.p.unwrap_or(3);
    for n in 0..params.samples {
        let q = q_or_random(params, &mut rng);
        let x = sampling::aq_element(&mut rng, 2, 5);
        let image = simplify_inverse(&apply_hom(&x.to_poly(), &build_sl2_rep(p, &q)?)?);
        // entry (r, r+k) is Σ_{i+j=k} f_ij(λq^{p−1−r}) μ^i ν^j
        let predicted = TriMatrix::from_upper_fn(p, |r, c| {
            let mut acc = MultiPoly::zero();
            for ((deg, i, j), coeff) in x.terms() {
                if (i + j) as usize == c - r {
                    let bc = MultiPoly::monomial(coeff.clone(), &[(MU, i), (NU, j)]);
                    acc = acc.add_ref(&lambda_power(&q, (p - 1 - r) as i64, deg).mul_ref(&bc));
                }
            }
            acc
        });
        for r in 0..p {
            for c in r..p {
                ck.check(image.get(r, c) == predicted.get(r, c), || {
                    format!(
                        "sample #{n} ({}) entry ({r},{c}): matrix {}, band pattern {} (q={q})",
                        x.to_poly(),
                        image.get(r, c),
                        predicted.get(r, c)
                    )
                });
            }
        }
    }
    Ok(format!("p = {p}, {} entries", ck.checks))
}

fn superdiag_sign(beta1: u32) -> Rational {
    if beta1.is_multiple_of(2) {
        Rational::integer(-1)
    } else {
        Rational::one()
    }
}

fn onefactre(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let max_m = params.m.unwrap_or(4);
    for m in 0..=max_m {
        let theta = build_theta_rep(&FreeWord::symbolic(m));
        for g in enumerate_ggens(2, 5) {
            let (b1, b2) = (g.beta()[0], g.beta()[1]);
            let image = apply_hom(&expand_g(&g), &theta)?;
            let main = TriMatrix::from_upper_fn(m + 1, |r, c| {
                if c == r + 1 {
                    MultiPoly::monomial(superdiag_sign(b1), &[(&s_var(c), b1 + 1), (&t_var(c), b2)])
                } else {
                    MultiPoly::zero()
                }
            });
            let residual = image.sub(&main);
            ck.check(in_c2(&residual), || format!("θ_w({g}) − signed superdiagonal is not in c₂ for m={m}"));
        }
    }
    Ok("sign = (-1)^(beta1+1)".into())
}

fn many_qk(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let max_m = params.m.unwrap_or(4);
    let factors = enumerate_ggens(2, 4);
    for m in 1..=max_m {
        let theta = build_theta_rep(&FreeWord::symbolic(m));
        let images: Vec<TriMatrix<MultiPoly>> =
            factors.iter().map(|g| apply_hom(&expand_g(g), &theta)).collect::<Result<_, _>>()?;
        // depth-first over words g_{β¹}⋯g_{βᵐ}, sharing prefix products
        let mut stack: Vec<(Vec<usize>, TriMatrix<MultiPoly>, MultiPoly)> =
            vec![(Vec::new(), TriMatrix::identity(m + 1), MultiPoly::one())];
        while let Some((word, product, weight)) = stack.pop() {
            if word.len() == m {
                let expected =
                    TriMatrix::from_upper_fn(m + 1, |r, c| if r == 0 && c == m { weight.clone() } else { MultiPoly::zero() });
                ck.check(product == expected, || {
                    let gs: Vec<String> = word.iter().map(|&i| factors[i].to_string()).collect();
                    format!("θ_w({}) ≠ Q_m·{weight} for m={m}", gs.join("·"))
                });
                continue;
            }
            let p = word.len() + 1;
            for (i, g) in factors.iter().enumerate() {
                let (b1, b2) = (g.beta()[0], g.beta()[1]);
                let factor = MultiPoly::monomial(superdiag_sign(b1), &[(&s_var(p), b1 + 1), (&t_var(p), b2)]);
                let mut next = word.clone();
                next.push(i);
                stack.push((next, product.mul(&images[i]), weight.mul_ref(&factor)));
            }
        }
    }
    Ok("sign = (-1)^(beta1+1) per factor".into())
}

fn many_qwek(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let mut rng = sampling::rng(params.seed);
    let max_m = params.m.unwrap_or(3);
    let (l1, l2) = (lambda_var(1), lambda_var(2));
    for n in 0..params.samples {
        let m = n % (max_m + 1);
        let d = sampling::decomposed(&mut rng, m..=max_m, 2, 3);
        let w = FreeWord::symbolic(m);
        let oracle = apply_hom(&compose(&d), &build_free_rep((&l1, &l2), &w))?.corner().clone();
        let predicted = free_upper_right(&d, (&l1, &l2), &w);
        ck.check(oracle == predicted, || format!("corner for sample #{n}, m={m}: formula {predicted}, matrix {oracle}"));
    }
    Ok(format!("{} corners", ck.checks))
}

fn annh(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let mut rng = sampling::rng(params.seed);
    let max_m = params.m.unwrap_or(4);
    let factors = enumerate_ggens(2, 4);
    let (l1, l2) = (lambda_var(1), lambda_var(2));
    let per_pair = (params.samples / 10).max(1);
    for m in 0..max_m {
        let images = build_free_rep((&l1, &l2), &FreeWord::symbolic(m));
        let g_images: Vec<TriMatrix<MultiPoly>> =
            factors.iter().map(|g| apply_hom(&expand_g(g), &images)).collect::<Result<_, _>>()?;
        let (e1, e2) = (&images[&Gen::named("e1")], &images[&Gen::named("e2")]);
        for m2 in m + 1..=max_m {
            for _ in 0..per_pair {
                use rand::Rng;
                let (a, b) = (rng.gen_range(0..=2u32), rng.gen_range(0..=2u32));
                let word: Vec<usize> = (0..m2).map(|_| rng.gen_range(0..factors.len())).collect();
                let mut product = e1.pow(a).mul(&e2.pow(b));
                for &i in &word {
                    product = product.mul(&g_images[i]);
                }
                ck.check(product.is_zero(), || {
                    let gs: Vec<String> = word.iter().map(|&i| factors[i].to_string()).collect();
                    format!("e1^{a} e2^{b} {} survives |w| = {m}", gs.join("·"))
                });
            }
        }
    }
    Ok(format!("{} monomials", ck.checks))
}

fn radpg(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let max_p = params.p.unwrap_or(6);
    for p in 1..=max_p {
        let rep = radical_report(p, params.samples, params.seed.wrapping_add(p as u64));
        ck.check(rep.passed(), || format!("radical structure fails at p={p}:\n{rep}"));
    }
    Ok(format!("p ≤ {max_p}, {} pairs each", params.samples))
}

fn qudi(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let max_p = params.p.unwrap_or(6);
    let passed = one_sided_inverse_check(max_p, params.samples, params.seed);
    ck.check(passed == params.samples, || format!("NM = I but MN ≠ I in {} samples", params.samples - passed));
    Ok(format!("{passed}/{} inverses two-sided", params.samples))
}

/// `Σ_j (c_j + f_j(x) + g_j(y))·(xy)^j` as a commutative polynomial.
fn commutative_image(e: &TruncatedElement) -> MultiPoly {
    let Payload::QPlane(rows) = e.payload() else { unreachable!("quantum-plane element") };
    let u = MultiPoly::monomial(Rational::one(), &[("x", 1), ("y", 1)]);
    let mut out = MultiPoly::zero();
    for (j, row) in rows.rows() {
        let part = MultiPoly::constant(row.c.clone()).add_ref(&row.f).add_ref(&row.g);
        out = out.add_ref(&part.mul_ref(&u.pow(j)));
    }
    out
}

fn envelope_assoc(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let mut rng = sampling::rng(params.seed);
    let algebras = [
        EnvAlgebra::QPlane(q_or_random(params, &mut rng)),
        EnvAlgebra::Sl2(q_or_random(params, &mut rng)),
        EnvAlgebra::Free,
    ];
    for alg in &algebras {
        let alphabet = alg.alphabet();
        for (level, n) in (0..=6).flat_map(|level| (0..params.samples).map(move |n| (level, n))) {
            let [a, b, c] = [0; 3].map(|_| sampling::ncpoly(&mut rng, &alphabet, 3, 3));
            let [x, y, z] = [&a, &b, &c].map(|p| env_from_poly(p, alg, level));
            let (x, y, z) = (x?, y?, z?);
            let xy = env_mul(&x, &y)?;
            let left = env_mul(&xy, &z)?;
            let right = env_mul(&x, &env_mul(&y, &z)?)?;
            ck.check(left == right, || format!("{alg}, N={level}: associativity fails for triple #{n} ({a})({b})({c})"));
            let one = TruncatedElement::one(alg.clone(), level)?;
            ck.check(env_mul(&one, &x)? == x && env_mul(&x, &one)? == x, || {
                format!("{alg}, N={level}: unit fails for {a}")
            });
            ck.check(env_from_poly(&a.mul(&b), alg, level)? == xy, || {
                format!("{alg}, N={level}: env_from_poly not multiplicative on ({a})({b})")
            });
            if level == 6 {
                let low = env_mul(&x.truncate(3), &y.truncate(3))?;
                ck.check(xy.truncate(3) == low, || format!("{alg}: truncation 6 → 3 fails on ({a})({b})"));
            }
            if ck.failed() {
                return Ok(String::new());
            }
        }
    }

    // q = 1 with N above every degree that occurs is commutative multiplication
    let plain = EnvAlgebra::QPlane(Rational::one());
    let xy = gens(&["x", "y"]);
    for n in 0..params.samples / 4 + 1 {
        let [a, b] = [0; 2].map(|_| sampling::ncpoly(&mut rng, &xy, 4, 4));
        let (x, y) = (env_from_poly(&a, &plain, 64)?, env_from_poly(&b, &plain, 64)?);
        let product = commutative_image(&env_mul(&x, &y)?);
        let expected = commutative_image(&x).mul_ref(&commutative_image(&y));
        ck.check(product == expected, || format!("q=1 product #{n} is not commutative multiplication"));
    }
    Ok(format!("{} checks over qplane, sl2, free2", ck.checks))
}

fn separation(params: &SuiteParams, ck: &mut Checker) -> SuiteResult {
    let max_d = params.degree.unwrap_or(3);
    let q = params.q.clone().unwrap_or_else(|| Rational::integer(2));
    let mut lines = Vec::new();
    for alg in [EnvAlgebra::QPlane(q.clone()), EnvAlgebra::Sl2(q.clone()), EnvAlgebra::Free] {
        for d in 0..=max_d {
            let report = separation_rank(&alg, d, &default_reps(&alg, d))?;
            ck.check(report.injective, || format!("not injective: {report}"));
            if d == max_d {
                lines.push(format!("{}: rank {}/{}", alg.tag(), report.rank, report.dimension));
            }
        }
    }
    Ok(format!("d ≤ {max_d}; {}", lines.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteParams {
        SuiteParams { samples: 8, ..SuiteParams::default() }
    }

    #[test]
    fn every_suite_passes_at_small_size() {
        for name in SUITES {
            let out = run_suite(name, &small()).unwrap();
            assert!(out.passed(), "{name}: {out}");
            assert!(out.checks > 0, "{name} ran no checks");
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &small()).is_err());
    }

    #[test]
    fn many_qk_message() {
        let out = run_suite("manyQk", &SuiteParams { m: Some(2), ..small() }).unwrap();
        assert_eq!(out.to_string(), "PASS (sign = (-1)^(beta1+1) per factor)");
    }
}
