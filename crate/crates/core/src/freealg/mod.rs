//! Free noncommutative polynomials, their expression syntax, and evaluation
//! of algebra homomorphisms into triangular matrices.

mod ncpoly;
mod parse;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exactnum::Ring;
use crate::matrep::TriMatrix;

pub use ncpoly::{gens, Gen, NCPoly, Word};
pub use parse::{parse, parse_rational, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeAlgError {
    #[error("invalid generator name `{0}`")]
    InvalidGenerator(String),
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("generator images have different sizes ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("no generator images given")]
    NoImages,
}

/// Generator images of a homomorphism into `T_p(S)`.
pub type Images<S> = BTreeMap<Gen, TriMatrix<S>>;

/// Evaluate the homomorphism determined by `images` on `a`: each word maps
/// to the ordered product of its letters' images, the unit word to the
/// identity, and the map is extended linearly.
///
/// Terms sharing a prefix share the partial product, so the cost is one
/// matrix product per distinct prefix.
pub fn apply_hom<C, S>(a: &NCPoly<C>, images: &Images<S>) -> Result<TriMatrix<S>, FreeAlgError>
where
    C: Ring,
    S: Ring + From<C>,
{
    let mut sizes = images.values().map(TriMatrix::size);
    let size = sizes.next().ok_or(FreeAlgError::NoImages)?;
    if let Some(other) = sizes.find(|&s| s != size) {
        return Err(FreeAlgError::SizeMismatch(size, other));
    }
    for g in a.generators() {
        if !images.contains_key(&g) {
            return Err(FreeAlgError::MissingImage(g.to_string()));
        }
    }
    let terms: Vec<(&Word, &C)> = a.terms().collect();
    Ok(eval_prefix_tree(&terms, 0, images, size))
}

fn eval_prefix_tree<C, S>(terms: &[(&Word, &C)], depth: usize, images: &Images<S>, size: usize) -> TriMatrix<S>
where
    C: Ring,
    S: Ring + From<C>,
{
    let mut idx = 0;
    let mut acc = match terms.first() {
        Some((w, c)) if w.len() == depth => {
            idx = 1;
            TriMatrix::scalar(size, S::from((*c).clone()))
        }
        _ => TriMatrix::zero(size),
    };
    while idx < terms.len() {
        let letter = &terms[idx].0.letters()[depth];
        let start = idx;
        while idx < terms.len() && &terms[idx].0.letters()[depth] == letter {
            idx += 1;
        }
        let rest = eval_prefix_tree(&terms[start..idx], depth + 1, images, size);
        acc = acc.add(&images[letter].mul(&rest));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{MultiPoly, Rational};

    fn q(n: i64) -> Rational {
        Rational::integer(n)
    }

    #[test]
    fn product_of_word_images() {
        // x ↦ λ·K_2 with q = 2, y ↦ E_2
        let lam = MultiPoly::var("lam");
        let k2 = TriMatrix::diagonal(vec![MultiPoly::constant(q(2)), MultiPoly::one()]);
        let e2 = TriMatrix::from_upper_fn(2, |i, j| if j == i + 1 { MultiPoly::one() } else { MultiPoly::zero() });
        let mut images = Images::new();
        images.insert(Gen::named("x"), k2.scale(&lam));
        images.insert(Gen::named("y"), e2);
        let a = parse_rational("x*y", &gens(&["x", "y"])).unwrap();
        let m = apply_hom(&a, &images).unwrap();
        assert_eq!(m.corner(), &lam.scale(&q(2)));
        assert!(m.get(0, 0).is_zero() && m.get(1, 1).is_zero());
    }

    #[test]
    fn unit_maps_to_identity() {
        let mut images = Images::new();
        images.insert(Gen::named("x"), TriMatrix::<Rational>::zero(3));
        let m = apply_hom(&NCPoly::<Rational>::one(), &images).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn left_inverse_images() {
        // v ↦ N, u ↦ M with NM = I
        let m = TriMatrix::from_rows(vec![vec![q(2), q(1)], vec![q(0), q(1)]]).unwrap();
        let n = TriMatrix::from_rows(vec![
            vec![Rational::new(1, 2), Rational::new(-1, 2)],
            vec![q(0), q(1)],
        ])
        .unwrap();
        let mut images = Images::new();
        images.insert(Gen::named("u"), m);
        images.insert(Gen::named("v"), n);
        let a = parse_rational("v*u", &gens(&["u", "v"])).unwrap();
        assert!(apply_hom(&a, &images).unwrap().is_identity());
    }

    #[test]
    fn errors() {
        let mut images = Images::new();
        images.insert(Gen::named("x"), TriMatrix::<Rational>::zero(2));
        let a = parse_rational("x*y", &gens(&["x", "y"])).unwrap();
        assert_eq!(apply_hom(&a, &images).unwrap_err(), FreeAlgError::MissingImage("y".into()));
        images.insert(Gen::named("y"), TriMatrix::zero(3));
        assert!(matches!(apply_hom(&a, &images), Err(FreeAlgError::SizeMismatch(..))));
        assert_eq!(apply_hom(&a, &Images::<Rational>::new()).unwrap_err(), FreeAlgError::NoImages);
        assert!(Gen::new("1x").is_err());
    }

    #[test]
    fn nc_mul_examples() {
        let g = gens(&["x", "y"]);
        let x = NCPoly::<Rational>::gen(&g[0]);
        let y = NCPoly::<Rational>::gen(&g[1]);
        assert_eq!(x.mul(&y), NCPoly::word(Word::from_names(&["x", "y"])));
        assert_eq!(x.mul(&NCPoly::one()), x);
        let s = x.add(&y);
        assert_eq!(s.mul(&s), parse_rational("x*x + x*y + y*x + y*y", &g).unwrap());
    }
}
