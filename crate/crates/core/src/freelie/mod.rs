//! The free Lie algebra `f_k` on `e1..ek`: the free generators
//! `g_{δ,β}` of its commutant, Lie polynomials in them, and straightening of
//! `U(f_2)` into ordered monomials `e1^a e2^b` times words in the `g`s.

mod ggen;
mod liepoly;
mod straighten;

use thiserror::Error;

pub use ggen::{ad, e, e_alphabet, enumerate_ggens, expand_g, GGen};
pub use liepoly::{ad_e, ad_e_expanded, GWord, LiePoly, LieTree};
pub use straighten::{compose, lambda_var, s_var, slot_vars, straighten, t_var, Decomposed};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeLieError {
    #[error("invalid g generator: {0}")]
    InvalidGGen(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("generator `{0}` is not e1 or e2")]
    UnknownGenerator(String),
    #[error("slot {slot} may not use variable `{var}`")]
    InvalidSlot { slot: usize, var: String },
}
