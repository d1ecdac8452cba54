//! Weight grading `wt(a, b, c, t1, t2) = (2, 3, 1, 2, 4)`, so `wt(t3) = 6` and `wt(Delta) = 12`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{t3_poly, Monomial, Poly, Rational, RingElem, Var};

use super::VfError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Weight {
    Homogeneous(i64),
    /// The zero element is homogeneous of every weight.
    Zero,
    NotHomogeneous,
}

/// Common weight of all monomials; a denominator `a^p b^q Delta^r` contributes
/// `-(2p + 3q + 12r)`.
pub fn weight_of(f: &RingElem) -> Weight {
    if f.is_zero() {
        return Weight::Zero;
    }
    let (p, q, r) = f.den_exponents();
    match f.numerator().homogeneous_weight() {
        Some(w) => Weight::Homogeneous(w - (2 * p + 3 * q + 12 * r) as i64),
        None => Weight::NotHomogeneous,
    }
}

/// Weight-homogeneous element with its depth data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedPoly {
    pub value: RingElem,
    pub weight: i64,
    /// Degree in `t1`.
    pub t1_depth: u32,
    /// Degree in `c`.
    pub c_depth: u32,
}

impl GradedPoly {
    pub fn new(value: RingElem) -> Result<GradedPoly, VfError> {
        match weight_of(&value) {
            Weight::Homogeneous(w) => Ok(GradedPoly::with_weight(value, w)),
            Weight::Zero => Ok(GradedPoly::with_weight(value, 0)),
            Weight::NotHomogeneous => Err(VfError::NotHomogeneous),
        }
    }

    /// Attach a weight explicitly; needed for zero, which has every weight.
    pub fn with_weight(value: RingElem, weight: i64) -> GradedPoly {
        GradedPoly {
            t1_depth: value.degree_in(Var::T1),
            c_depth: value.degree_in(Var::C),
            value,
            weight,
        }
    }
}

/// Polynomial in `t1, t2, t3`, the quasi-modular subring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuasiModular {
    /// Keys are exponents of `(t1, t2, t3)`.
    terms: BTreeMap<[u32; 3], Rational>,
}

impl QuasiModular {
    /// Write `f` in `Q[t1, t2, t3]` if possible.
    ///
    /// Setting `a = 0` turns `t3` into `-b^2`, which is injective on `Q[t1, t2, t3]`;
    /// the candidate is then re-expanded and compared with `f`.
    pub fn from_ring_elem(f: &RingElem) -> Option<QuasiModular> {
        let p = f.as_poly()?;
        if p.mentions(Var::C) {
            return None;
        }
        let mut terms = BTreeMap::new();
        for (m, coef) in p.at_zero(Var::A).terms() {
            let e = m.exp(Var::B);
            if e % 2 == 1 {
                return None;
            }
            let k = e / 2;
            let c = if k % 2 == 1 { -coef.clone() } else { coef.clone() };
            terms.insert([m.exp(Var::T1), m.exp(Var::T2), k], c);
        }
        let q = QuasiModular { terms };
        (q.expand() == *p).then_some(q)
    }

    pub fn expand(&self) -> Poly {
        self.terms.iter().fold(Poly::zero(), |acc, (e, c)| {
            let m = Monomial([0, 0, 0, e[0], e[1]]);
            &acc + &(&Poly::monomial(c.clone(), m) * &t3_poly().pow(e[2]))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for QuasiModular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // descending weight, then t1, t2, t3 lexicographic
        let mut keys: Vec<_> = self.terms.keys().collect();
        keys.sort_by_key(|e| std::cmp::Reverse((2 * e[0] + 4 * e[1] + 6 * e[2], **e)));
        for (i, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let m: Vec<String> = ["t1", "t2", "t3"]
                .iter()
                .zip(e)
                .filter(|(_, &k)| k > 0)
                .map(|(n, &k)| if k == 1 { n.to_string() } else { format!("{n}^{k}") })
                .collect();
            let neg = c < &Rational::from_integer(0.into());
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let one = abs == Rational::from_integer(1.into());
            match (m.is_empty(), one) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", m.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", m.join("*"))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_ring_elem, Factor};

    fn w(s: &str) -> Weight {
        weight_of(&parse_ring_elem(s).unwrap())
    }

    #[test]
    fn weights() {
        assert_eq!(w("Delta"), Weight::Homogeneous(12));
        assert_eq!(w("a + t1"), Weight::Homogeneous(2));
        assert_eq!(w("a + b"), Weight::NotHomogeneous);
        assert_eq!(w("0"), Weight::Zero);
        assert_eq!(w("b/a/Delta"), Weight::Homogeneous(3 - 2 - 12));
        assert_eq!(weight_of(&RingElem::inverse_of(Factor::B)), Weight::Homogeneous(-3));
    }

    #[test]
    fn quasi_modular_membership() {
        let f = parse_ring_elem("t1*t3 - t2^3 + 5").unwrap();
        let q = QuasiModular::from_ring_elem(&f).unwrap();
        assert_eq!(q.to_string(), "-t2^3 + t1*t3 + 5");
        assert!(QuasiModular::from_ring_elem(&parse_ring_elem("a").unwrap()).is_none());
        assert!(QuasiModular::from_ring_elem(&parse_ring_elem("b^2").unwrap()).is_none());
        assert!(QuasiModular::from_ring_elem(&parse_ring_elem("c*t1").unwrap()).is_none());
    }
}
