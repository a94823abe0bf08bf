//! Exact symbolic algebra for envelopes of polynomial-growth Banach algebras.

pub mod exactnum;
pub mod freealg;
pub mod envelope;
pub mod freelie;
pub mod matrep;
pub mod presentations;
pub mod pgrowth;
pub mod sampling;
pub mod suites;
