//! Exact computer algebra for enhanced elliptic curves with two marked points: the
//! Gauss-Manin connection, the modular vector fields `R_tau` and `R_z`, and
//! q-expansions of the quasi Jacobi forms that solve them.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod gauss_manin;
pub mod jacobi_series;
pub mod vector_fields;
pub mod verify;
