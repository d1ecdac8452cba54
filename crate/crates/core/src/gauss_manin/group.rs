//! The algebraic group `G` of frame changes compatible with the Hodge filtration and the
//! intersection form, and its right action on the moduli coordinates.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{delta_poly, Rational};

use super::frame::phi;
use super::matrix::RatMat3;
use super::GaussManinError;

/// `g = ((1, 0, v), (0, k, k'), (0, 0, 1/k))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupElement {
    #[serde(serialize_with = "ser_rat")]
    k: Rational,
    #[serde(serialize_with = "ser_rat")]
    k_prime: Rational,
    #[serde(serialize_with = "ser_rat")]
    v: Rational,
}

fn ser_rat<S: serde::Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl GroupElement {
    pub fn new(k: Rational, k_prime: Rational, v: Rational) -> Result<GroupElement, GaussManinError> {
        if k.is_zero() {
            return Err(GaussManinError::SingularGroupElement);
        }
        Ok(GroupElement { k, k_prime, v })
    }

    pub fn identity() -> GroupElement {
        GroupElement { k: Rational::one(), k_prime: Rational::zero(), v: Rational::zero() }
    }

    /// Diagonal element `k' = v = 0`.
    pub fn diagonal(k: Rational) -> Result<GroupElement, GaussManinError> {
        GroupElement::new(k, Rational::zero(), Rational::zero())
    }

    pub fn k(&self) -> &Rational {
        &self.k
    }

    pub fn k_prime(&self) -> &Rational {
        &self.k_prime
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    /// Matrix product `self * rhs`, which stays in the same shape.
    pub fn compose(&self, rhs: &GroupElement) -> GroupElement {
        GroupElement {
            k: &self.k * &rhs.k,
            k_prime: &self.k * &rhs.k_prime + &self.k_prime / &rhs.k,
            v: &rhs.v + &self.v / &rhs.k,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            k: self.k.recip(),
            k_prime: -&self.k_prime,
            v: -(&self.v * &self.k),
        }
    }

    pub fn to_matrix(&self) -> RatMat3 {
        let z = Rational::zero;
        [
            [Rational::one(), z(), self.v.clone()],
            [z(), self.k.clone(), self.k_prime.clone()],
            [z(), z(), self.k.recip()],
        ]
    }

    /// `g^T Phi g == Phi`.
    pub fn preserves_phi(&self) -> bool {
        let g = self.to_matrix();
        let f = phi();
        let gt_f_g: RatMat3 = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut acc = Rational::zero();
                for k in 0..3 {
                    for l in 0..3 {
                        acc += &g[k][i] * &f[k][l] * &g[l][j];
                    }
                }
                acc
            })
        });
        gt_f_g == f
    }
}

/// `t . g = (a/k^2, b/k^3, v + c/k, k'/k + t1/k^2, t2/k^4)`.
pub fn group_act(t: &[Rational; 5], g: &GroupElement) -> Result<[Rational; 5], GaussManinError> {
    if delta_poly().eval(t).is_zero() {
        return Err(GaussManinError::DegenerateCurve);
    }
    let ki = g.k.recip();
    let ki2 = &ki * &ki;
    let [a, b, c, t1, t2] = t;
    Ok([
        &ki2 * a,
        &ki2 * &ki * b,
        &g.v + &ki * c,
        &ki * &g.k_prime + &ki2 * t1,
        &ki2 * &ki2 * t2,
    ])
}
