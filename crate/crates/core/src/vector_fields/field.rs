use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::{rat, RingElem, Var};

/// Derivation `sum_v coeff[v] d/dv` of the localized coordinate ring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VectorField(pub [RingElem; 5]);

impl VectorField {
    pub fn zero() -> VectorField {
        VectorField::default()
    }

    pub fn new(coeff: [RingElem; 5]) -> VectorField {
        VectorField(coeff)
    }

    /// The coordinate field `d/dv`.
    pub fn partial(v: Var) -> VectorField {
        let mut f = VectorField::zero();
        f.0[v.index()] = RingElem::one();
        f
    }

    pub fn get(&self, v: Var) -> &RingElem {
        &self.0[v.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(RingElem::is_zero)
    }

    /// Every coefficient lies in `Q[a, b, c, t1, t2]`.
    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(RingElem::is_polynomial)
    }

    pub fn apply(&self, f: &RingElem) -> RingElem {
        Var::ALL.iter().fold(RingElem::zero(), |acc, &v| {
            let k = self.get(v);
            if k.is_zero() {
                return acc;
            }
            let d = f.derive(v);
            if d.is_zero() {
                acc
            } else {
                &acc + &(k * &d)
            }
        })
    }

    pub fn scale(&self, k: &RingElem) -> VectorField {
        VectorField(std::array::from_fn(|i| &self.0[i] * k))
    }

    pub fn add(&self, rhs: &VectorField) -> VectorField {
        VectorField(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }

    pub fn sub(&self, rhs: &VectorField) -> VectorField {
        VectorField(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }

    /// Text form `coeff * d/dv + ...` over the nonzero coefficients.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = Var::ALL
            .iter()
            .filter(|&&v| !self.get(v).is_zero())
            .map(|&v| format!("({}) d/d{}", self.get(v), v))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

pub fn apply(v: &VectorField, f: &RingElem) -> RingElem {
    v.apply(f)
}

/// `[v, w]` with coefficients `v(w[x]) - w(v[x])`.
pub fn lie_bracket(v: &VectorField, w: &VectorField) -> VectorField {
    VectorField(Var::ALL.map(|x| &v.apply(w.get(x)) - &w.apply(v.get(x))))
}

impl Serialize for VectorField {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(5))?;
        for v in Var::ALL {
            map.serialize_entry(v.name(), self.get(v))?;
        }
        map.end()
    }
}

fn x(v: Var) -> RingElem {
    RingElem::var(v)
}

fn q(n: i64, d: i64) -> RingElem {
    RingElem::constant(rat(n, d))
}

/// `R_tau`, typed from its closed form.
pub fn r_tau() -> VectorField {
    let (a, b, c, t1, t2) = (x(Var::A), x(Var::B), x(Var::C), x(Var::T1), x(Var::T2));
    let t3 = RingElem::t3();
    // -2a^2 + 2a t1 + b c + t2/3
    let ca = &(&(&q(-2, 1) * &(&a * &a)) + &(&q(2, 1) * &(&a * &t1))) + &(&(&b * &c) + &(&t2 * &q(1, 3)));
    // 6a^2 c - c t2/2 - 3ab + 3b t1
    let cb = &(&(&q(6, 1) * &(&(&a * &a) * &c)) - &(&(&c * &t2) * &q(1, 2)))
        + &(&(&q(-3, 1) * &(&a * &b)) + &(&q(3, 1) * &(&b * &t1)));
    // ac + c t1 - b/2
    let cc = &(&(&a * &c) + &(&c * &t1)) - &(&b * &q(1, 2));
    // t1^2 - t2/12
    let ct1 = &(&t1 * &t1) - &(&t2 * &q(1, 12));
    // 4 t1 t2 - 6 t3
    let ct2 = &(&q(4, 1) * &(&t1 * &t2)) - &(&q(6, 1) * &t3);
    VectorField([ca, cb, cc, ct1, ct2])
}

/// `R_z = b d/da + (6a^2 - t2/2) d/db + (a + t1) d/dc`.
pub fn r_z() -> VectorField {
    let (a, b, t1, t2) = (x(Var::A), x(Var::B), x(Var::T1), x(Var::T2));
    let cb = &(&q(6, 1) * &(&a * &a)) - &(&t2 * &q(1, 2));
    VectorField([b, cb, &a + &t1, RingElem::zero(), RingElem::zero()])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_values() {
        assert_eq!(r_z().apply(&x(Var::A)), x(Var::B));
        let t1 = x(Var::T1);
        let expect = &(&t1 * &t1) - &(&x(Var::T2) * &q(1, 12));
        assert_eq!(r_tau().apply(&t1), expect);
    }

    #[test]
    fn r_tau_on_t3() {
        // 6 t1 t3 - t2^2 / 3
        let t2 = x(Var::T2);
        let expect = &(&q(6, 1) * &(&x(Var::T1) * &RingElem::t3())) - &(&(&t2 * &t2) * &q(1, 3));
        assert_eq!(r_tau().apply(&RingElem::t3()), expect);
        assert!(r_z().apply(&RingElem::t3()).is_zero());
    }

    #[test]
    fn brackets() {
        assert!(lie_bracket(&r_tau(), &r_z()).is_zero());
        assert!(lie_bracket(&r_tau(), &r_tau()).is_zero());
        // [R_tau, R_z](c) = R_tau(a + t1) - R_z(ac + c t1 - b/2)
        let c = x(Var::C);
        let lhs = &r_tau().apply(&r_z().apply(&c)) - &r_z().apply(&r_tau().apply(&c));
        assert!(lhs.is_zero());
    }

    #[test]
    fn polynomial_coefficients() {
        assert!(r_tau().is_polynomial());
        assert!(r_z().is_polynomial());
        assert!(!VectorField::partial(Var::A)
            .scale(&RingElem::inverse_of(crate::algebra::Factor::B))
            .is_polynomial());
    }

    #[test]
    fn text_form() {
        assert_eq!(VectorField::zero().to_text(), "0");
        assert_eq!(VectorField::partial(Var::T2).to_text(), "(1) d/dt2");
    }
}
