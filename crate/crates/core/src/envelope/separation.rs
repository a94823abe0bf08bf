use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::linalg::{Echelon, SparseRow};
use crate::exactnum::{Monomial, MultiPoly, Rational};
use crate::freealg::{apply_hom, Images, NCPoly};
use crate::freelie::{compose, lambda_var, s_var, t_var, Decomposed};
use crate::matrep::{build_free_rep, build_qplane_rep, build_sl2_rep, simplify_inverse, FreeWord, Variant};
use crate::presentations::{aq_word, qplane_recompose, Presentation, QPlaneElement, QPlaneRow};

use super::{EnvAlgebra, EnvError};

/// One member of a representation family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepSpec {
    /// `π_{p,λ}` (plain) or `π'_{p,μ}` (primed).
    QPlane { p: usize, variant: Variant },
    /// `π_{p,λ,μ,ν}`.
    Sl2 { p: usize },
    /// `θ̃_{λ,w}` with a symbolic word `w` of length `m`.
    Free { m: usize },
}

impl fmt::Display for RepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepSpec::QPlane { p, variant } => write!(f, "qplane {variant} p={p}"),
            RepSpec::Sl2 { p } => write!(f, "sl2 p={p}"),
            RepSpec::Free { m } => write!(f, "free m={m}"),
        }
    }
}

/// Matrix sizes `1..=d+1` (both variants for the quantum plane), or word
/// lengths `0..=d` for the free algebra.
pub fn default_reps(algebra: &EnvAlgebra, d: usize) -> Vec<RepSpec> {
    match algebra {
        EnvAlgebra::QPlane(_) => (1..=d + 1)
            .flat_map(|p| [Variant::Plain, Variant::Primed].map(|variant| RepSpec::QPlane { p, variant }))
            .collect(),
        EnvAlgebra::Sl2(_) => (1..=d + 1).map(|p| RepSpec::Sl2 { p }).collect(),
        EnvAlgebra::Free => (0..=d).map(|m| RepSpec::Free { m }).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub algebra: String,
    pub degree: usize,
    pub dimension: usize,
    pub rank: usize,
    pub injective: bool,
}

impl fmt::Display for SeparationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} d={}: dimension = {}, rank = {}, injective = {}",
            self.algebra, self.degree, self.dimension, self.rank, self.injective
        )
    }
}

/// Basis of the filtered piece of degree `d`, as normal-form polynomials.
///
/// Weights: `x^i u^j`, `y^i u^j` have weight `i + j`; `a^i b^j c^k` has
/// `|i| + j + k`; `e1^a e2^b g_{β^1}⋯g_{β^m}` has `a + b + Σ(1 + |β^p|)`.
/// Every slot polynomial in the piece has degree at most `d`.
pub fn filtered_basis(algebra: &EnvAlgebra, d: usize) -> Result<Vec<NCPoly<Rational>>, EnvError> {
    let mut out = Vec::new();
    match algebra {
        EnvAlgebra::QPlane(q) => {
            let p = Presentation::qplane(q.clone())?;
            for j in 0..=d as u32 {
                let mut rows = vec![QPlaneRow::constant(Rational::one())];
                for i in 1..=d as u32 - j {
                    rows.push(QPlaneRow { f: MultiPoly::monomial(Rational::one(), &[("x", i)]), ..QPlaneRow::zero() });
                    rows.push(QPlaneRow { g: MultiPoly::monomial(Rational::one(), &[("y", i)]), ..QPlaneRow::zero() });
                }
                for row in rows {
                    out.push(qplane_recompose(&QPlaneElement::from_rows([(j, row)])?, &p)?);
                }
            }
        }
        EnvAlgebra::Sl2(_) => {
            let d = d as i64;
            for i in -d..=d {
                for j in 0..=d - i.abs() {
                    for k in 0..=d - i.abs() - j {
                        out.push(NCPoly::word(aq_word((i, j as u32, k as u32))));
                    }
                }
            }
        }
        EnvAlgebra::Free => {
            for (a, b, betas) in free_keys(d) {
                let m = betas.len();
                let mut powers = vec![(lambda_var(1), a), (lambda_var(2), b)];
                for (p, (b1, b2)) in betas.iter().enumerate() {
                    powers.push((s_var(p + 1), *b1));
                    powers.push((t_var(p + 1), *b2));
                }
                let refs: Vec<(&str, u32)> = powers.iter().map(|(v, e)| (v.as_str(), *e)).collect();
                let h = MultiPoly::monomial(Rational::one(), &refs);
                out.push(compose(&Decomposed::from_slots([(m, h)])?));
            }
        }
    }
    Ok(out)
}

/// `(a, b, [β^1, …, β^m])`.
type FreeKey = (u32, u32, Vec<(u32, u32)>);

/// Keys with `a + b + Σ(1 + β^p_1 + β^p_2) ≤ d`.
fn free_keys(d: usize) -> Vec<FreeKey> {
    fn words(budget: u32) -> Vec<Vec<(u32, u32)>> {
        let mut out = vec![Vec::new()];
        for first in 1..=budget {
            for b1 in 0..first {
                let head = (b1, first - 1 - b1);
                for tail in words(budget - first) {
                    let mut w = vec![head];
                    w.extend(tail);
                    out.push(w);
                }
            }
        }
        out
    }
    let d = d as u32;
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            for w in words(d - a - b) {
                out.push((a, b, w));
            }
        }
    }
    out
}

fn rep_images(algebra: &EnvAlgebra, rep: &RepSpec) -> Result<Images<MultiPoly>, EnvError> {
    let wrong = || EnvError::WrongRep { rep: rep.to_string(), algebra: algebra.to_string() };
    let images = match (algebra, rep) {
        (EnvAlgebra::QPlane(q), RepSpec::QPlane { p, variant }) => build_qplane_rep(*p, *variant, q),
        (EnvAlgebra::Sl2(q), RepSpec::Sl2 { p }) => build_sl2_rep(*p, q),
        (EnvAlgebra::Free, RepSpec::Free { m }) => {
            let (l1, l2) = (lambda_var(1), lambda_var(2));
            return Ok(build_free_rep((&l1, &l2), &FreeWord::symbolic(*m)));
        }
        _ => return Err(wrong()),
    };
    images.map_err(|_| wrong())
}

/// Exact rank of the evaluation map from the filtered piece of degree `d`
/// into the listed representations. Each basis element becomes the row of
/// monomial coefficients of all its symbolic matrix entries.
pub fn separation_rank(algebra: &EnvAlgebra, d: usize, reps: &[RepSpec]) -> Result<SeparationReport, EnvError> {
    if reps.is_empty() {
        return Err(EnvError::NoReps);
    }
    let images: Vec<Images<MultiPoly>> = reps.iter().map(|r| rep_images(algebra, r)).collect::<Result<_, _>>()?;
    let basis = filtered_basis(algebra, d)?;
    let mut columns: BTreeMap<(usize, usize, Monomial), usize> = BTreeMap::new();
    let mut echelon = Echelon::new();
    for b in &basis {
        let mut row = SparseRow::new();
        for (idx, im) in images.iter().enumerate() {
            let mut m = apply_hom(b, im).expect("images cover the alphabet");
            if matches!(algebra, EnvAlgebra::Sl2(_)) {
                m = simplify_inverse(&m);
            }
            for (pos, entry) in m.entries().iter().enumerate() {
                for (mono, coeff) in entry.sparse_terms() {
                    let next = columns.len();
                    let col = *columns.entry((idx, pos, mono)).or_insert(next);
                    row.insert(col, coeff);
                }
            }
        }
        echelon.insert(row);
    }
    let rank = echelon.rank();
    Ok(SeparationReport {
        algebra: algebra.to_string(),
        degree: d,
        dimension: basis.len(),
        rank,
        injective: rank == basis.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let q = EnvAlgebra::QPlane(Rational::integer(2));
        let rep = separation_rank(&q, 1, &default_reps(&q, 1)).unwrap();
        assert_eq!((rep.dimension, rep.rank, rep.injective), (4, 4, true));

        let f = separation_rank(&EnvAlgebra::Free, 0, &default_reps(&EnvAlgebra::Free, 0)).unwrap();
        assert_eq!((f.dimension, f.rank), (1, 1));

        let s = EnvAlgebra::Sl2(Rational::integer(3));
        let r = separation_rank(&s, 1, &[RepSpec::Sl2 { p: 1 }, RepSpec::Sl2 { p: 2 }]).unwrap();
        assert_eq!((r.dimension, r.rank, r.injective), (5, 5, true));
    }

    #[test]
    fn errors() {
        let q = EnvAlgebra::QPlane(Rational::integer(2));
        assert_eq!(separation_rank(&q, 1, &[]), Err(EnvError::NoReps));
        assert!(matches!(separation_rank(&q, 1, &[RepSpec::Free { m: 1 }]), Err(EnvError::WrongRep { .. })));
    }

    #[test]
    fn free_basis_size() {
        // 1, e1, e2, g_(0,0)
        assert_eq!(free_keys(1).len(), 4);
        // weight 2 adds e1², e1e2, e2², e1·g, e2·g, g², g_(1,0), g_(0,1)
        assert_eq!(free_keys(2).len(), 12);
    }

    #[test]
    fn monotone_in_reps() {
        let s = EnvAlgebra::Sl2(Rational::new(1, 2));
        let reps = default_reps(&s, 2);
        let mut last = 0;
        for k in 1..=reps.len() {
            let r = separation_rank(&s, 2, &reps[..k]).unwrap().rank;
            assert!(r >= last);
            last = r;
        }
    }
}
