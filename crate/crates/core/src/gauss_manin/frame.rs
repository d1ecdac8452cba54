//! Frame changes and the intersection pairing on relative cohomology.

use crate::algebra::{rat, Factor, Rational, RingElem, Var};

use super::matrix::{Mat3, RatMat3};

/// Intersection matrix `((0,0,0),(0,0,1),(0,-1,0))`, shared by the `omega` frame and the
/// compatible `alpha` frame.
pub fn phi() -> RatMat3 {
    let z = || rat(0, 1);
    [
        [z(), z(), z()],
        [z(), z(), rat(1, 1)],
        [z(), rat(-1, 1), z()],
    ]
}

/// Relative trace pairing `<omega_i, omega_j>`: only `<omega_2, omega_3> = -<omega_3, omega_2> = 1`
/// is nonzero, and `omega_1 = d((x - a)/x)` pairs trivially with everything.
pub fn pairing_table() -> RatMat3 {
    phi()
}

/// Unit lower-triangular change of frame `alpha = S * omega`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameChange {
    s: Mat3,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("frame change must be lower triangular with unit diagonal")]
pub struct NotUnitLowerTriangular;

impl FrameChange {
    pub fn new(s: Mat3) -> Result<FrameChange, NotUnitLowerTriangular> {
        let ok = (0..3).all(|i| {
            s.0[i][i].is_one() && (i + 1..3).all(|j| s.0[i][j].is_zero())
        });
        if ok {
            Ok(FrameChange { s })
        } else {
            Err(NotUnitLowerTriangular)
        }
    }

    pub fn identity() -> FrameChange {
        FrameChange { s: Mat3::identity() }
    }

    /// The frame of the universal family: `alpha_3 = (c - b/2a) omega_1 + t1 omega_2 + omega_3`.
    pub fn universal() -> FrameChange {
        let b_over_2a = (&RingElem::var(Var::B) * &RingElem::inverse_of(Factor::A)).scale(&rat(1, 2));
        let mut s = Mat3::identity();
        s.0[2][0] = &RingElem::var(Var::C) - &b_over_2a;
        s.0[2][1] = RingElem::var(Var::T1);
        FrameChange { s }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.s
    }

    pub fn inverse(&self) -> Mat3 {
        let m = &self.s.0;
        let (p, x, y) = (&m[1][0], &m[2][0], &m[2][1]);
        let mut inv = Mat3::identity();
        inv.0[1][0] = -p;
        inv.0[2][1] = -y;
        inv.0[2][0] = &(p * y) - x;
        inv
    }

    /// `S * Phi * S^T == Phi`.
    pub fn preserves(&self, form: &RatMat3) -> bool {
        let f = Mat3::from_rational(form);
        &(&self.s * &f) * &self.s.transpose() == f
    }
}

/// `C^T Phi + Phi C` for a constant matrix.
pub fn infinitesimal_defect(c: &RatMat3, form: &RatMat3) -> RatMat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            (0..3).fold(Rational::from_integer(0.into()), |acc, k| {
                acc + &c[k][i] * &form[k][j] + &form[i][k] * &c[k][j]
            })
        })
    })
}
