//! Gauss-Manin connection matrices of the universal family
//! `y^2 = 4x^3 - t2 x - t3` with marked points `O` and `P = (a, b)`.
//!
//! A connection matrix is stored as one 3x3 coefficient matrix per differential
//! `da, db, dc, dt1, dt2`; `dt3` never appears on its own and is always expanded as
//! `dt3 = (12a^2 - t2) da - 2b db - a dt2`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::{rat, Factor, RingElem, Var};
use crate::vector_fields::VectorField;

use super::frame::FrameChange;
use super::matrix::Mat3;

/// Sign in the flatness equation `dA = sigma * A ^ A`.
///
/// With `nabla alpha = A (x) alpha`, the connection is flat iff for every pair `u, v`
/// `d_u A_v - d_v A_u = A_u A_v - A_v A_u`; the opposite sign leaves a nonzero curvature.
pub const CURVATURE_SIGN: i64 = 1;

/// A 1-form `sum_v f_v dv`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OneForm(pub [RingElem; 5]);

impl OneForm {
    pub fn zero() -> OneForm {
        OneForm::default()
    }

    pub fn dv(v: Var) -> OneForm {
        let mut f = OneForm::zero();
        f.0[v.index()] = RingElem::one();
        f
    }

    /// Exterior derivative of a function.
    pub fn d(f: &RingElem) -> OneForm {
        OneForm(Var::ALL.map(|v| f.derive(v)))
    }

    pub fn get(&self, v: Var) -> &RingElem {
        &self.0[v.index()]
    }

    pub fn scale(&self, k: &RingElem) -> OneForm {
        OneForm(std::array::from_fn(|i| &self.0[i] * k))
    }

    pub fn add(&self, rhs: &OneForm) -> OneForm {
        OneForm(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }

    /// Sum of `coefficient * form` terms.
    pub fn combine(terms: &[(&RingElem, &OneForm)]) -> OneForm {
        terms
            .iter()
            .fold(OneForm::zero(), |acc, (k, f)| acc.add(&f.scale(k)))
    }
}

/// Connection matrix `A = sum_v coeff[v] (x) dv`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConnectionMatrix {
    coeff: [Mat3; 5],
}

impl ConnectionMatrix {
    pub fn zero() -> ConnectionMatrix {
        ConnectionMatrix::default()
    }

    pub fn from_coefficients(coeff: [Mat3; 5]) -> ConnectionMatrix {
        ConnectionMatrix { coeff }
    }

    /// Assemble from a 3x3 array of 1-forms.
    pub fn from_forms(entries: &[[OneForm; 3]; 3]) -> ConnectionMatrix {
        ConnectionMatrix {
            coeff: Var::ALL.map(|v| Mat3::from_fn(|i, j| entries[i][j].get(v).clone())),
        }
    }

    pub fn coeff(&self, v: Var) -> &Mat3 {
        &self.coeff[v.index()]
    }

    pub fn coeff_mut(&mut self, v: Var) -> &mut Mat3 {
        &mut self.coeff[v.index()]
    }

    pub fn coefficients(&self) -> &[Mat3; 5] {
        &self.coeff
    }

    /// The 1-form in entry `(i, j)` (0-based).
    pub fn entry(&self, i: usize, j: usize) -> OneForm {
        OneForm(Var::ALL.map(|v| self.coeff(v).0[i][j].clone()))
    }

    pub fn first_row_is_zero(&self) -> bool {
        self.coeff.iter().all(|m| m.row_is_zero(0))
    }
}

impl Serialize for ConnectionMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(5))?;
        for v in Var::ALL {
            map.serialize_entry(v.name(), self.coeff(v))?;
        }
        map.end()
    }
}

/// Building blocks shared by both frames.
struct Ingredients {
    a: RingElem,
    b: RingElem,
    t1: RingElem,
    t2: RingElem,
    delta: RingElem,
    inv_delta: RingElem,
    /// `c - b/(2a)`
    shift: RingElem,
    da: OneForm,
    dc: OneForm,
    dt1: OneForm,
    dt2: OneForm,
    dt3: OneForm,
    d_delta: OneForm,
    /// `alpha = 3 t3 dt2 - 2 t2 dt3`
    alpha: OneForm,
    g1: RingElem,
    g2: RingElem,
    g3: RingElem,
}

impl Ingredients {
    fn new() -> Ingredients {
        let a = RingElem::var(Var::A);
        let b = RingElem::var(Var::B);
        let c = RingElem::var(Var::C);
        let t1 = RingElem::var(Var::T1);
        let t2 = RingElem::var(Var::T2);
        let t3 = RingElem::t3();
        let delta = RingElem::delta();
        let inv_a = RingElem::inverse_of(Factor::A);
        let inv_b = RingElem::inverse_of(Factor::B);
        let inv_ab = &inv_a * &inv_b;
        let k = |n: i64| RingElem::int(n);

        let dt2 = OneForm::dv(Var::T2);
        let dt3 = OneForm::d(&t3);
        let alpha = OneForm::combine(&[(&(&k(3) * &t3), &dt2), (&(&k(-2) * &t2), &dt3)]);

        let a2 = &a * &a;
        let t2_2 = &t2 * &t2;
        let t3_2 = &t3 * &t3;
        // g1 = (-2a^2 t2^2 + 3a t2 t3 + 9 t3^2) / 4ab
        let g1 = &(&(&(&k(-2) * &a2) * &t2_2) + &(&(&k(3) * &a) * &(&t2 * &t3))) + &(&k(9) * &t3_2);
        let g1 = (&g1 * &inv_ab).scale(&rat(1, 4));
        // g2 = (18a^2 t3 - a t2^2 - 3 t2 t3) / 2ab
        let g2 = &(&(&k(18) * &a2) * &t3) - &(&(&a * &t2_2) + &(&k(3) * &(&t2 * &t3)));
        let g2 = (&g2 * &inv_ab).scale(&rat(1, 2));
        // g3 = (6a^2 t2 t3 + (18 t3^2 - t2^3) a - t2^2 t3) / 8ab
        let g3 = &(&(&(&k(6) * &a2) * &(&t2 * &t3)) + &(&(&(&k(18) * &t3_2) - &(&t2_2 * &t2)) * &a))
            - &(&t2_2 * &t3);
        let g3 = (&g3 * &inv_ab).scale(&rat(1, 8));

        let shift = &c - &(&b * &inv_a).scale(&rat(1, 2));
        Ingredients {
            d_delta: OneForm::d(&delta),
            inv_delta: RingElem::inverse_of(Factor::Delta),
            da: OneForm::dv(Var::A),
            dc: OneForm::dv(Var::C),
            dt1: OneForm::dv(Var::T1),
            a,
            b,
            t1,
            t2,
            delta,
            shift,
            dt2,
            dt3,
            alpha,
            g1,
            g2,
            g3,
        }
    }

    fn over_delta(&self, entries: [[OneForm; 3]; 3]) -> ConnectionMatrix {
        let scaled = entries.map(|row| row.map(|f| f.scale(&self.inv_delta)));
        ConnectionMatrix::from_forms(&scaled)
    }
}

fn ingredients() -> &'static Ingredients {
    static ING: OnceLock<Ingredients> = OnceLock::new();
    ING.get_or_init(Ingredients::new)
}

/// Gauss-Manin matrix in the frame `omega_1 = d((x-a)/x)`, `omega_2 = dx/y`,
/// `omega_3 = x dx/y - d(y/2x)`.
pub fn build_b() -> ConnectionMatrix {
    let g = ingredients();
    let q = |n: i64, d: i64| RingElem::constant(rat(n, d));
    let inv_b = RingElem::inverse_of(Factor::B);
    let delta_over_b = &g.delta * &inv_b;
    let b_over_2a = (&g.b * &RingElem::inverse_of(Factor::A)).scale(&rat(1, 2));

    let b21 = OneForm::combine(&[(&g.g1, &g.dt2), (&g.g2, &g.dt3), (&-&delta_over_b, &g.da)]);
    let b22 = g.d_delta.scale(&q(-1, 12));
    let b23 = g.alpha.scale(&q(3, 2));
    let b31 = OneForm::combine(&[
        (&g.g3, &g.dt2),
        (&g.g1, &g.dt3),
        (&-&(&g.a * &delta_over_b), &g.da),
        (&g.delta, &OneForm::d(&b_over_2a)),
    ]);
    let b32 = g.alpha.scale(&(&g.t2 * &q(-1, 8)));
    let b33 = g.d_delta.scale(&q(1, 12));
    let z = OneForm::zero;
    g.over_delta([[z(), z(), z()], [b21, b22, b23], [b31, b32, b33]])
}

/// Gauss-Manin matrix in the frame `alpha = S omega` of the universal family, typed
/// from its closed form (independently of [`change_basis`]).
pub fn build_a() -> ConnectionMatrix {
    let g = ingredients();
    let q = |n: i64, d: i64| RingElem::constant(rat(n, d));
    let inv_b = RingElem::inverse_of(Factor::B);
    let delta_over_b = &g.delta * &inv_b;
    let s = &g.shift;
    let t1 = &g.t1;
    let three_t1_alpha_half = g.alpha.scale(&(t1 * &q(3, 2)));
    let d_delta_12 = g.d_delta.scale(&q(1, 12));

    // A21 = g1 dt2 + g2 dt3 - (c - b/2a)(3 alpha/2) - Delta da / b
    let a21 = OneForm::combine(&[
        (&g.g1, &g.dt2),
        (&g.g2, &g.dt3),
        (&-&(s * &q(3, 2)), &g.alpha),
        (&-&delta_over_b, &g.da),
    ]);
    // A22 = -3 t1 alpha/2 - dDelta/12
    let a22 = OneForm::combine(&[(&q(-1, 1), &three_t1_alpha_half), (&q(-1, 1), &d_delta_12)]);
    // A23 = 3 alpha / 2
    let a23 = g.alpha.scale(&q(3, 2));
    // A31 = (t1 g1 + g3) dt2 + (t1 g2 + g1) dt3 - (a + t1) Delta da / b
    //       - (c - b/2a)(3 t1 alpha/2 + dDelta/12) + Delta dc
    let a31 = OneForm::combine(&[
        (&(&(t1 * &g.g1) + &g.g3), &g.dt2),
        (&(&(t1 * &g.g2) + &g.g1), &g.dt3),
        (&-&(&(&g.a + t1) * &delta_over_b), &g.da),
        (&-s, &three_t1_alpha_half.add(&d_delta_12)),
        (&g.delta, &g.dc),
    ]);
    // A32 = Delta dt1 - t1 dDelta/6 - (3 t1^2/2 + t2/8) alpha
    let a32 = OneForm::combine(&[
        (&g.delta, &g.dt1),
        (&(t1 * &q(-1, 6)), &g.d_delta),
        (&-&(&(&(t1 * t1) * &q(3, 2)) + &(&g.t2 * &q(1, 8))), &g.alpha),
    ]);
    // A33 = 3 t1 alpha/2 + dDelta/12
    let a33 = three_t1_alpha_half.add(&d_delta_12);
    let z = OneForm::zero;
    g.over_delta([[z(), z(), z()], [a21, a22, a23], [a31, a32, a33]])
}

/// Cached [`build_a`]; the matrix is immutable and shared across threads.
pub fn gauss_manin_a() -> &'static ConnectionMatrix {
    static A: OnceLock<ConnectionMatrix> = OnceLock::new();
    A.get_or_init(build_a)
}

/// Transport a connection matrix to the frame `alpha = S omega`:
/// `A = dS S^-1 + S B S^-1`.
pub fn change_basis(b: &ConnectionMatrix, s: &FrameChange) -> ConnectionMatrix {
    let inv = s.inverse();
    let sm = s.matrix();
    ConnectionMatrix {
        coeff: Var::ALL.map(|v| {
            let gauge = &sm.derive(v) * &inv;
            let conj = &(sm * b.coeff(v)) * &inv;
            &gauge + &conj
        }),
    }
}

/// Factor out `1/Delta`: returns `Delta * coeff[v]` for each variable, so that
/// `A = (1/Delta) sum_v M_v (x) dv`.
pub fn decompose(a: &ConnectionMatrix) -> [Mat3; 5] {
    let delta = &ingredients().delta;
    Var::ALL.map(|v| a.coeff(v).scale(delta))
}

/// `A(v) = sum_var coeff[var] * v[var]`.
pub fn contract(a: &ConnectionMatrix, field: &VectorField) -> Mat3 {
    Var::ALL.iter().fold(Mat3::zero(), |acc, &var| {
        let k = field.get(var);
        if k.is_zero() {
            acc
        } else {
            &acc + &a.coeff(var).scale(k)
        }
    })
}

/// Curvature components `d_u A_v - d_v A_u - sigma [A_u, A_v]` for `u < v`.
pub fn curvature_with_sign(a: &ConnectionMatrix, sigma: i64) -> BTreeMap<(Var, Var), Mat3> {
    let mut out = BTreeMap::new();
    let k = RingElem::int(sigma);
    for (i, &u) in Var::ALL.iter().enumerate() {
        for &v in &Var::ALL[i + 1..] {
            let (au, av) = (a.coeff(u), a.coeff(v));
            let d = &av.derive(u) - &au.derive(v);
            let comm = au.commutator(av).scale(&k);
            out.insert((u, v), &d - &comm);
        }
    }
    out
}

pub fn curvature(a: &ConnectionMatrix) -> BTreeMap<(Var, Var), Mat3> {
    curvature_with_sign(a, CURVATURE_SIGN)
}

pub fn is_flat(a: &ConnectionMatrix) -> bool {
    curvature(a).values().all(Mat3::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_frame_has_no_dc_or_dt1() {
        let b = build_b();
        assert!(b.coeff(Var::C).is_zero());
        assert!(b.coeff(Var::T1).is_zero());
        assert!(b.first_row_is_zero());
    }

    #[test]
    fn b23_dt2_coefficient() {
        // alpha = 3 t3 dt2 - 2 t2 dt3 and dt3 = ... - a dt2, so the dt2 part of
        // 3 alpha / 2 Delta is (3/2)(3 t3 + 2 a t2) / Delta.
        let b = build_b();
        let a = RingElem::var(Var::A);
        let t2 = RingElem::var(Var::T2);
        let expected = &(&(&RingElem::int(3) * &RingElem::t3()) + &(&RingElem::int(2) * &(&a * &t2)))
            * &RingElem::inverse_of(Factor::Delta);
        assert_eq!(b.coeff(Var::T2).0[1][2], expected.scale(&rat(3, 2)));
    }

    #[test]
    fn alpha_frame_dc_block() {
        let a = build_a();
        let mut expected = Mat3::zero();
        expected.0[2][0] = RingElem::one();
        assert_eq!(*a.coeff(Var::C), expected);
        assert!(a.first_row_is_zero());
    }

    #[test]
    fn identity_frame_change_is_noop() {
        let b = build_b();
        assert_eq!(change_basis(&b, &FrameChange::identity()), b);
    }

    #[test]
    fn curvature_of_trivial_connections() {
        assert!(curvature(&ConnectionMatrix::zero()).values().all(Mat3::is_zero));
        let mut n = ConnectionMatrix::zero();
        n.coeff_mut(Var::A).0[1][0] = RingElem::int(5);
        assert!(curvature(&n).values().all(Mat3::is_zero));
    }

    #[test]
    fn closed_forms_agree_with_frame_change() {
        assert_eq!(change_basis(&build_b(), &FrameChange::universal()), build_a());
    }

    #[test]
    fn flat_only_with_pinned_sign() {
        assert!(is_flat(&build_a()));
        assert!(is_flat(&build_b()));
        assert!(!curvature_with_sign(&build_a(), -CURVATURE_SIGN).values().all(Mat3::is_zero));
    }

    #[test]
    fn decomposition_blocks() {
        let m = decompose(&build_a());
        let delta = RingElem::delta();
        assert_eq!(m[Var::C.index()].0[2][0], delta);
        assert_eq!(m[Var::T1.index()].0[2][1], delta);
        let nonzero = |x: &Mat3| x.0.iter().flatten().filter(|e| !e.is_zero()).count();
        assert_eq!(nonzero(&m[Var::C.index()]), 1);
        assert_eq!(nonzero(&m[Var::T1.index()]), 1);
        assert!(m.iter().flat_map(|x| x.0.iter().flatten()).all(|e| e.den_exponents().2 == 0));
    }

    #[test]
    fn contract_with_zero_field() {
        assert!(contract(gauss_manin_a(), &VectorField::zero()).is_zero());
    }
}
