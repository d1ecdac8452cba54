//! Dense univariate polynomials in `zeta` over the rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::Rational;

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn new(mut c: Vec<Rational>) -> UPoly {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn zero() -> UPoly {
        UPoly(Vec::new())
    }

    pub fn one() -> UPoly {
        UPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> UPoly {
        UPoly::new(vec![c])
    }

    /// `c * zeta^k`.
    pub fn monomial(c: Rational, k: usize) -> UPoly {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        UPoly::new(v)
    }

    pub fn from_ints(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; zero has degree 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.0.last()
    }

    /// Multiplicity of `zeta` as a factor.
    pub fn low_order(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divide by `zeta^k`; the low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> UPoly {
        debug_assert!(self.0.iter().take(k).all(Zero::is_zero));
        UPoly(self.0.iter().skip(k).cloned().collect())
    }

    pub fn shift_up(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Rational::zero(); k];
        v.extend(self.0.iter().cloned());
        UPoly(v)
    }

    pub fn scale(&self, c: &Rational) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|x| x * c).collect())
    }

    pub fn derive(&self) -> UPoly {
        UPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    /// `zeta^deg * p(1/zeta)`.
    pub fn reversed(&self) -> UPoly {
        UPoly::new(self.0.iter().rev().cloned().collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.0.len() < d.0.len() {
            return (UPoly::zero(), self.clone());
        }
        let mut r = self.0.clone();
        let dl = d.0.len();
        let lc_inv = d.leading().expect("nonzero").recip();
        let mut q = vec![Rational::zero(); r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dl - 1] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.0.iter().enumerate() {
                r[k + j] -= &c * dj;
            }
            q[k] = c;
        }
        (UPoly::new(q), UPoly::new(r))
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => UPoly::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut x, mut y) = (self.clone(), other.clone());
        while !y.is_zero() {
            let r = x.div_rem(&y).1;
            x = y;
            y = r.monic();
        }
        x.monic()
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.0.len().max(rhs.0.len());
        UPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.0.len().max(rhs.0.len());
        UPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        UPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        // (z - 1)^2 (z + 2) and (z - 1)(z + 3)
        let p = UPoly::from_ints(&[2, -3, 0, 1]);
        let q = UPoly::from_ints(&[-3, 2, 1]);
        assert_eq!(p.gcd(&q), UPoly::from_ints(&[-1, 1]));
        let (quot, rem) = p.div_rem(&UPoly::from_ints(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(quot, UPoly::from_ints(&[-2, 1, 1]));
        assert_eq!(p.div_exact(&q), None);
    }

    #[test]
    fn derivative_and_reverse() {
        let p = UPoly::from_ints(&[1, 2, 3]);
        assert_eq!(p.derive(), UPoly::from_ints(&[2, 6]));
        assert_eq!(p.reversed(), UPoly::from_ints(&[3, 2, 1]));
        assert_eq!(p.eval(&Rational::from_integer(2.into())), Rational::from_integer(17.into()));
    }
}
