//! Serre and Serre-Jacobi derivatives, with `d/dtau` and `d/dz` read as `R_tau` and `R_z`.

use std::sync::OnceLock;

use crate::algebra::{RingElem, Var};

use super::field::{r_tau, r_z, VectorField};
use super::grading::{GradedPoly, QuasiModular};
use super::VfError;

fn fields() -> &'static (VectorField, VectorField) {
    static F: OnceLock<(VectorField, VectorField)> = OnceLock::new();
    F.get_or_init(|| (r_tau(), r_z()))
}

/// `R_tau f - (w - s) t1 f` with `s` the `t1`-degree of `f`.
fn corrected(f: &GradedPoly) -> RingElem {
    let shift = f.weight - f.t1_depth as i64;
    let t1f = &RingElem::var(Var::T1) * &f.value;
    &fields().0.apply(&f.value) - &(&RingElem::int(shift) * &t1f)
}

/// `d^S f = R_tau f - (w_f - s_f) t1 f` on `Q[t1, t2, t3]`.
pub fn serre_derivative(f: &GradedPoly) -> Result<GradedPoly, VfError> {
    if QuasiModular::from_ring_elem(&f.value).is_none() {
        return Err(VfError::NotQuasiModular);
    }
    Ok(GradedPoly::with_weight(corrected(f), f.weight + 2))
}

/// `d^J f = R_tau f - (w_f - s_f) t1 f - c R_z f`.
pub fn serre_jacobi(f: &GradedPoly) -> GradedPoly {
    let cz = &RingElem::var(Var::C) * &fields().1.apply(&f.value);
    GradedPoly::with_weight(&corrected(f) - &cz, f.weight + 2)
}
