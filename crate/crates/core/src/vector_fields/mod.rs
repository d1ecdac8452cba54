//! The modular vector fields `R_tau`, `R_z`, Lie brackets, and the Serre derivatives.

pub mod field;
pub mod grading;
pub mod serre;
pub mod solve;

pub use field::{apply, lie_bracket, r_tau, r_z, VectorField};
pub use grading::{weight_of, GradedPoly, QuasiModular, Weight};
pub use serre::{serre_derivative, serre_jacobi};
pub use solve::{is_admissible, solve_modular, solve_modular_with};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VfError {
    #[error("no vector field has this contraction")]
    NoSolution,
    #[error("contraction does not determine the field (rank {rank} < {unknowns})")]
    NonUnique { rank: usize, unknowns: usize },
    #[error("target matrix is not admissible")]
    Inadmissible,
    #[error("solution leaves the localized coordinate ring")]
    NotRepresentable,
    #[error("element is not weight-homogeneous")]
    NotHomogeneous,
    #[error("element is not in Q[t1, t2, t3]")]
    NotQuasiModular,
    #[error(transparent)]
    Algebra(AlgebraError),
}
