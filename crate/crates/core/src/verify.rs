//! The full verification suite behind `jacobi-gmd verify`.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{rat, Rational};
use crate::gauss_manin::{
    build_a, build_b, change_basis, contract, group_act, is_flat, tau_locus_constants,
    ConnectionMatrix, FrameChange, GroupElement, Mat3, RatMat3,
};
use crate::jacobi_series::{verify_all, SeriesError, SeriesReport};
use crate::vector_fields::{lie_bracket, r_tau, r_z, solve_modular_with};

/// Matrices under test; the defaults are the closed forms.
#[derive(Clone, Debug)]
pub struct VerifyInputs {
    /// Closed-form matrix in the alpha frame.
    pub a: ConnectionMatrix,
    /// Closed-form matrix in the omega frame.
    pub b: ConnectionMatrix,
}

impl Default for VerifyInputs {
    fn default() -> VerifyInputs {
        VerifyInputs { a: build_a(), b: build_b() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub order: usize,
    pub checks: Vec<CheckResult>,
    pub series: SeriesReport,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.series.all_passed()
    }

    /// Name of the first failing check, symbolic checks first.
    pub fn first_failure(&self) -> Option<String> {
        self.checks
            .iter()
            .find(|c| !c.passed)
            .map(|c| c.name.to_string())
            .or_else(|| self.series.first_failure().map(|r| r.name.clone()))
    }
}

pub const CHECK_NAMES: [&str; 6] = [
    "A=change_basis(B,S)",
    "curvature=0",
    "solve_modular round-trip",
    "bracket=0",
    "tau-locus constants",
    "group-action axioms",
];

fn check(name: &'static str, result: Result<(), String>) -> CheckResult {
    match result {
        Ok(()) => CheckResult { name, passed: true, detail: String::new() },
        Err(detail) => CheckResult { name, passed: false, detail },
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn unit_target(i: usize, j: usize) -> RatMat3 {
    std::array::from_fn(|r| std::array::from_fn(|c| if (r, c) == (i, j) { rat(-1, 1) } else { rat(0, 1) }))
}

fn gm_cross_check(inp: &VerifyInputs) -> Result<(), String> {
    let transported = change_basis(&inp.b, &FrameChange::universal());
    for v in crate::algebra::Var::ALL {
        let (x, y) = (transported.coeff(v), inp.a.coeff(v));
        for i in 0..3 {
            for j in 0..3 {
                if x.get(i, j) != y.get(i, j) {
                    return Err(format!("d{v} entry ({},{}) differs", i + 1, j + 1));
                }
            }
        }
    }
    Ok(())
}

fn flatness(inp: &VerifyInputs) -> Result<(), String> {
    ensure(is_flat(&inp.a), || "alpha-frame matrix is not flat".into())?;
    ensure(is_flat(&inp.b), || "omega-frame matrix is not flat".into())
}

fn round_trip(inp: &VerifyInputs) -> Result<(), String> {
    for (label, target, expected) in [("R_tau", unit_target(1, 2), r_tau()), ("R_z", unit_target(1, 0), r_z())] {
        let got = solve_modular_with(&inp.a, &target).map_err(|e| format!("{label}: {e}"))?;
        ensure(got == expected, || format!("{label}: solved field differs from closed form"))?;
        ensure(got.is_polynomial(), || format!("{label}: coefficients are not polynomial"))?;
    }
    Ok(())
}

fn bracket() -> Result<(), String> {
    let b = lie_bracket(&r_tau(), &r_z());
    ensure(b.is_zero(), || format!("[R_tau, R_z] = {}", b.to_text()))
}

fn tau_locus(inp: &VerifyInputs) -> Result<(), String> {
    let (ct, cz) = tau_locus_constants();
    ensure(ct == unit_target(1, 2), || "C_tau differs".into())?;
    ensure(cz == unit_target(1, 0), || "C_z differs".into())?;
    ensure(contract(&inp.a, &r_tau()) == Mat3::from_rational(&ct), || "A(R_tau) != C_tau".into())?;
    ensure(contract(&inp.a, &r_z()) == Mat3::from_rational(&cz), || "A(R_z) != C_z".into())
}

/// Deterministic sample of points with `Delta != 0` and group elements.
fn group_axioms() -> Result<(), String> {
    let vals: Vec<Rational> = [(1, 1), (-2, 3), (5, 7), (3, 1), (-1, 4)]
        .iter()
        .map(|&(n, d)| rat(n, d))
        .collect();
    let elems: Vec<GroupElement> = [(2, 1, 0, 1, 1, 3), (-3, 2, 5, 1, -1, 2), (1, 5, -2, 9, 4, 1)]
        .iter()
        .map(|&(kn, kd, pn, pd, vn, vd)| GroupElement::new(rat(kn, kd), rat(pn, pd), rat(vn, vd)).unwrap())
        .collect();
    let id = GroupElement::identity();
    let mut tested = 0;
    for i in 0..vals.len() {
        let t: [Rational; 5] = std::array::from_fn(|k| vals[(i + 2 * k) % vals.len()].clone());
        let Ok(same) = group_act(&t, &id) else { continue };
        ensure(same == t, || "identity moves a point".into())?;
        for g in &elems {
            ensure(g.preserves_phi(), || "group element does not preserve Phi".into())?;
            for h in &elems {
                let step = group_act(&group_act(&t, g).map_err(|e| e.to_string())?, h).map_err(|e| e.to_string())?;
                let once = group_act(&t, &g.compose(h)).map_err(|e| e.to_string())?;
                ensure(step == once, || "(t.g).h != t.(gh)".into())?;
            }
        }
        tested += 1;
    }
    ensure(tested > 0, || "no nondegenerate sample point".into())
}

fn symbolic_checks(inp: &VerifyInputs) -> Vec<CheckResult> {
    (0..CHECK_NAMES.len())
        .into_par_iter()
        .map(|k| {
            let r = match k {
                0 => gm_cross_check(inp),
                1 => flatness(inp),
                2 => round_trip(inp),
                3 => bracket(),
                4 => tau_locus(inp),
                _ => group_axioms(),
            };
            check(CHECK_NAMES[k], r)
        })
        .collect()
}

pub fn run_verify_with(order: usize, inputs: &VerifyInputs) -> Result<VerifyReport, SeriesError> {
    let (checks, series) = rayon::join(|| symbolic_checks(inputs), || verify_all(order));
    Ok(VerifyReport { order, checks, series: series? })
}

pub fn run_verify(order: usize) -> Result<VerifyReport, SeriesError> {
    run_verify_with(order, &VerifyInputs::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{RingElem, Var};

    #[test]
    fn passes_at_order_zero() {
        let r = run_verify(0).unwrap();
        assert!(r.passed(), "{:?}", r.first_failure());
        assert_eq!(r.checks.len(), 6);
        assert_eq!(r.series.residuals.len(), 11);
    }

    #[test]
    fn wrong_a22_is_caught_first() {
        let mut inputs = VerifyInputs::default();
        let m = inputs.a.coeff_mut(Var::T2);
        m.0[1][1] = &m.0[1][1] + &RingElem::one();
        let r = run_verify_with(0, &inputs).unwrap();
        assert!(!r.passed());
        assert_eq!(r.first_failure().as_deref(), Some("A=change_basis(B,S)"));
    }
}
