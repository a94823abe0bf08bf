//! Triangular matrices and the representation families of the quantum
//! plane, quantum SL(2) and the free algebra on two generators.

mod reps;
mod trimatrix;

use thiserror::Error;

pub use reps::{
    build_free_rep, build_qplane_rep, build_sl2_rep, build_theta_rep, e_matrix, free_upper_right, in_c2,
    k_matrix, simplify_inverse, upper_right_qplane, FreeWord, Variant, LAMBDA, LAMBDA_INV, MU, NU,
};
pub use trimatrix::TriMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square: {rows} rows but row {row} has {len} entries")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("matrix is not upper triangular: nonzero entry at ({row}, {col})")]
    NotTriangular { row: usize, col: usize },
    #[error("matrix size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("matrix size must be at least 1")]
    ZeroSize,
    #[error("q must be nonzero")]
    ZeroQ,
}
