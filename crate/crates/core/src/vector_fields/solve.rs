//! Recover the vector field whose contraction with the Gauss-Manin matrix is a
//! prescribed constant matrix.

use num_traits::Zero;

use crate::algebra::{solve_system, AlgebraError, Factor, RatFun, RingElem, Var};
use crate::gauss_manin::{contract, gauss_manin_a, ConnectionMatrix, Mat3, RatMat3};

use super::field::VectorField;
use super::VfError;

/// A target `C` is admissible when its first row vanishes and its lower 2x2 block
/// lies in `sp(2)` (trace zero), i.e. it preserves the flag and the pairing on
/// `H^1` of the closed curve.
pub fn is_admissible(c: &RatMat3) -> bool {
    c[0].iter().all(Zero::is_zero) && (&c[1][1] + &c[2][2]).is_zero()
}

/// `a^p b^q Delta^r` with the largest exponents among the denominators.
fn clearing_factor<'a>(xs: impl Iterator<Item = &'a RingElem>) -> RingElem {
    let (mut p, mut q, mut r) = (0, 0, 0);
    for x in xs {
        let (xp, xq, xr) = x.den_exponents();
        (p, q, r) = (p.max(xp), q.max(xq), r.max(xr));
    }
    let f = |k: Factor, n: u32| RingElem::from_poly(k.poly()).pow(n);
    &(&f(Factor::A, p) * &f(Factor::B, q)) * &f(Factor::Delta, r)
}

fn polynomial(x: &RingElem) -> RatFun {
    RatFun::from_poly(x.as_poly().expect("denominators cleared").clone())
}

/// Solve `contract(A, v) = C` for the Gauss-Manin matrix of the universal family.
pub fn solve_modular(c: &RatMat3) -> Result<VectorField, VfError> {
    solve_modular_with(gauss_manin_a(), c)
}

/// Solve against an arbitrary connection matrix. Uses all nine entries as equations
/// and confirms the result by substituting back.
pub fn solve_modular_with(a: &ConnectionMatrix, c: &RatMat3) -> Result<VectorField, VfError> {
    if !is_admissible(c) {
        return Err(VfError::Inadmissible);
    }
    let mut m = Vec::with_capacity(9);
    let mut rhs = Vec::with_capacity(9);
    for i in 0..3 {
        for j in 0..3 {
            let row: Vec<RingElem> = Var::ALL.iter().map(|&v| a.coeff(v).get(i, j).clone()).collect();
            let r = RingElem::constant(c[i][j].clone());
            let lift = clearing_factor(row.iter().chain([&r]));
            m.push(row.iter().map(|x| polynomial(&(x * &lift))).collect());
            rhs.push(polynomial(&(&r * &lift)));
        }
    }
    let u = solve_system(&m, &rhs).map_err(|e| match e {
        AlgebraError::InconsistentSystem => VfError::NoSolution,
        AlgebraError::SingularSystem { rank, unknowns } => VfError::NonUnique { rank, unknowns },
        other => VfError::Algebra(other),
    })?;
    let mut coeff: [RingElem; 5] = Default::default();
    for (slot, x) in coeff.iter_mut().zip(&u) {
        *slot = x.to_ring_elem().ok_or(VfError::NotRepresentable)?;
    }
    let field = VectorField(coeff);
    if contract(a, &field) != Mat3::from_rational(c) {
        return Err(VfError::NoSolution);
    }
    Ok(field)
}
