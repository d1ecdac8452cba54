//! Gauss-Manin connection of the universal enhanced elliptic curve with two marked
//! points, the intersection pairing, the frame-change group and the tau-locus.

pub mod connection;
pub mod frame;
pub mod group;
pub mod matrix;
pub mod tau_locus;

pub use connection::{
    build_a, build_b, change_basis, contract, curvature, curvature_with_sign, decompose,
    gauss_manin_a, is_flat, ConnectionMatrix, OneForm, CURVATURE_SIGN,
};
pub use frame::{infinitesimal_defect, pairing_table, phi, FrameChange, NotUnitLowerTriangular};
pub use group::{group_act, GroupElement};
pub use matrix::{rational_to_strings, Mat3, RatMat3};
pub use tau_locus::tau_locus_constants;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaussManinError {
    #[error("degenerate curve: Delta vanishes at this point")]
    DegenerateCurve,
    #[error("group element needs k != 0")]
    SingularGroupElement,
}
