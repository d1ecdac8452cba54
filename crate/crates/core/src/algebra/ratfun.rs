//! Rational functions used as intermediates by the linear solver.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::poly::{forward_owned_binop, Poly, Var};
use super::ring::{delta_poly, RingElem};
use super::{AlgebraError, Rational};

/// Quotient of two polynomials. The denominator is never zero; no gcd is
/// maintained, so equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Result<RatFun, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        Ok(RatFun { num, den }.tidy())
    }

    pub fn zero() -> RatFun {
        RatFun::from_poly(Poly::zero())
    }

    pub fn one() -> RatFun {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun { num: p, den: Poly::one() }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cheap normalizations: exact division when possible, common `a`/`b` powers,
    /// and a monic leading denominator coefficient.
    fn tidy(mut self) -> RatFun {
        if self.num.is_zero() {
            self.den = Poly::one();
            return self;
        }
        if let Some(q) = self.num.div_exact(&self.den) {
            return RatFun { num: q, den: Poly::one() };
        }
        for v in [Var::A, Var::B, Var::C, Var::T1, Var::T2] {
            let k = self.num.min_degree_in(v).min(self.den.min_degree_in(v));
            if k > 0 {
                self.num = self.num.shift_down(v, k);
                self.den = self.den.shift_down(v, k);
            }
        }
        let lc = self.den.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::one);
        if !lc.is_one() {
            let inv = lc.recip();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        self
    }

    pub fn checked_div(&self, rhs: &RatFun) -> Result<RatFun, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Reduce to the localized ring when the denominator divides the numerator up to
    /// a power product of `a`, `b` and `Delta`.
    pub fn to_ring_elem(&self) -> Option<RingElem> {
        if let Some(q) = self.num.div_exact(&self.den) {
            return Some(RingElem::from_poly(q));
        }
        let p = self.den.min_degree_in(Var::A);
        let q = self.den.min_degree_in(Var::B);
        let mut rest = self.den.shift_down(Var::A, p).shift_down(Var::B, q);
        let mut r = 0;
        while rest.as_constant().is_none() {
            match rest.div_exact(delta_poly()) {
                Some(x) => {
                    rest = x;
                    r += 1;
                }
                None => break,
            }
        }
        let top = match rest.as_constant() {
            Some(c) => self.num.scale(&c.recip()),
            None => self.num.div_exact(&rest)?,
        };
        Some(RingElem::new(top, p, q, r))
    }
}

impl From<&RingElem> for RatFun {
    fn from(x: &RingElem) -> RatFun {
        RatFun { num: x.numerator().clone(), den: x.denominator_poly() }
    }
}

impl From<Poly> for RatFun {
    fn from(p: Poly) -> RatFun {
        RatFun::from_poly(p)
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &RatFun) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFun {}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add<&RatFun> for &RatFun {
    type Output = RatFun;

    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun { num: &self.num + &rhs.num, den: self.den.clone() }.tidy();
        }
        RatFun {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .tidy()
    }
}

impl Sub<&RatFun> for &RatFun {
    type Output = RatFun;

    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul<&RatFun> for &RatFun {
    type Output = RatFun;

    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun { num: &self.num * &rhs.num, den: &self.den * &rhs.den }.tidy()
    }
}

impl Neg for &RatFun {
    type Output = RatFun;

    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

forward_owned_binop!(RatFun, Add, add);
forward_owned_binop!(RatFun, Sub, sub);
forward_owned_binop!(RatFun, Mul, mul);
