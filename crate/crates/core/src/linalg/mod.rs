//! Exact linear algebra over arbitrary-precision integers and rationals,
//! plus truncated power series and a tolerance-based symmetric eigensolver.

mod eigen;
mod int_matrix;
mod rat_matrix;
mod series;
mod snf;

pub use eigen::symmetric_eigenvalues;
pub use int_matrix::IntMatrix;
pub use rat_matrix::RatMatrix;
pub use series::PowerSeries;
pub use snf::{integer_invariant_factors, smith_normal_form, SmithForm};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },
    #[error("power series constant term must be zero for exp")]
    NonzeroConstantTerm,
    #[error("power series constant term must be nonzero for inverse")]
    ZeroConstantTerm,
    #[error("power series constant term must be one for log")]
    ConstantTermNotOne,
}
