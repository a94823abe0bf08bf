//! Exact scalar arithmetic.
//!
//! Everything in this crate is computed over the rationals: plain
//! [`Rational`]s, [`GaussianRational`]s for the imaginary frequencies of
//! `e^{isT}`, commutative [`MultiPoly`]s over named parameters and
//! [`ExpPoly`]s (finite sums `c·s^k·e^{i·d·s}`).

mod exppoly;
mod gaussian;
pub mod linalg;
mod multipoly;
mod rational;

use std::fmt;

pub use exppoly::{ExpPoly, ExpTerm};
pub use gaussian::GaussianRational;
pub use multipoly::{Monomial, MultiPoly};
pub use rational::{ParseRationalError, Rational};

/// A commutative or noncommutative ring with exact equality.
///
/// The arithmetic methods take references so generic matrix and polynomial
/// code can avoid cloning operands.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// A ring usable as the coefficient ring of noncommutative polynomials:
/// it contains the rationals and knows how to print itself as a factor.
pub trait Coefficient: Ring + From<Rational> + fmt::Display {
    /// Resolve a declared parameter name to a scalar, if the ring has one.
    fn parameter(_name: &str) -> Option<Self> {
        None
    }

    /// The value as a plain rational, when it is one.
    fn as_rational(&self) -> Option<Rational>;

    fn scale(&self, r: &Rational) -> Self {
        self.mul_ref(&Self::from(r.clone()))
    }
}
