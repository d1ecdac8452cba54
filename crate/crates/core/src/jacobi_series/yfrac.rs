//! Rational functions of `zeta`, the coefficients of the two-variable expansions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::Rational;

use super::upoly::UPoly;

/// `zeta^shift * num / den` with `num(0) != 0`, `den(0) = 1` and `gcd(num, den) = 1`.
/// Zero is `0 / 1` with shift 0, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YFrac {
    shift: i64,
    num: UPoly,
    den: UPoly,
}

impl Default for YFrac {
    fn default() -> YFrac {
        YFrac::zero()
    }
}

impl YFrac {
    pub fn zero() -> YFrac {
        YFrac { shift: 0, num: UPoly::zero(), den: UPoly::one() }
    }

    pub fn one() -> YFrac {
        YFrac::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> YFrac {
        YFrac::new(0, UPoly::constant(c), UPoly::one())
    }

    pub fn int(n: i64) -> YFrac {
        YFrac::constant(Rational::from_integer(n.into()))
    }

    /// `c * zeta^k`.
    pub fn monomial(c: Rational, k: i64) -> YFrac {
        YFrac::new(k, UPoly::constant(c), UPoly::one())
    }

    /// Laurent polynomial `sum_k c_k zeta^(low + k)`.
    pub fn laurent(low: i64, coeffs: Vec<Rational>) -> YFrac {
        YFrac::new(low, UPoly::new(coeffs), UPoly::one())
    }

    /// Canonicalize `zeta^shift * num / den`.
    pub fn new(shift: i64, num: UPoly, den: UPoly) -> YFrac {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return YFrac::zero();
        }
        let (ln, ld) = (num.low_order(), den.low_order());
        let shift = shift + ln as i64 - ld as i64;
        let (mut num, mut den) = (num.shift_down(ln), den.shift_down(ld));
        if den.degree() > 0 {
            let g = num.gcd(&den);
            if g.degree() > 0 {
                num = num.div_exact(&g).expect("gcd divides");
                den = den.div_exact(&g).expect("gcd divides");
            }
        }
        let c0 = den.coeff(0).recip();
        YFrac { shift, num: num.scale(&c0), den: den.scale(&c0) }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// No `zeta` dependence.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.shift == 0 && self.num.degree() == 0 && self.den.is_one())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn numerator(&self) -> &UPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly {
        &self.den
    }

    /// Lowest and highest `zeta` exponents of a Laurent polynomial.
    pub fn laurent_range(&self) -> Option<(i64, i64)> {
        if !self.is_laurent_polynomial() || self.is_zero() {
            return None;
        }
        Some((self.shift, self.shift + self.num.degree() as i64))
    }

    pub fn scale(&self, c: &Rational) -> YFrac {
        if c.is_zero() {
            return YFrac::zero();
        }
        YFrac { shift: self.shift, num: self.num.scale(c), den: self.den.clone() }
    }

    /// `theta = zeta d/dzeta`.
    pub fn theta(&self) -> YFrac {
        if self.is_zero() {
            return YFrac::zero();
        }
        // zeta^s (s N D + zeta (N' D - N D')) / D^2
        let s = Rational::from_integer(self.shift.into());
        let sn = &self.num.scale(&s) * &self.den;
        let cross = &(&self.num.derive() * &self.den) - &(&self.num * &self.den.derive());
        let top = &sn + &cross.shift_up(1);
        YFrac::new(self.shift, top, &self.den * &self.den)
    }

    /// `zeta -> 1/zeta`.
    pub fn invert_zeta(&self) -> YFrac {
        if self.is_zero() {
            return YFrac::zero();
        }
        let (dn, dd) = (self.num.degree() as i64, self.den.degree() as i64);
        YFrac::new(-self.shift - dn + dd, self.num.reversed(), self.den.reversed())
    }

    /// Value at a rational `zeta`; `None` at a pole.
    pub fn eval(&self, z: &Rational) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        let d = self.den.eval(z);
        if d.is_zero() || (z.is_zero() && self.shift < 0) {
            return None;
        }
        let zs = if self.shift >= 0 {
            num_traits::pow(z.clone(), self.shift as usize)
        } else {
            num_traits::pow(z.recip(), (-self.shift) as usize)
        };
        Some(zs * self.num.eval(z) / d)
    }

    fn combine(&self, rhs: &YFrac, sign: bool) -> YFrac {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign { rhs.clone() } else { -rhs };
        }
        let s = self.shift.min(rhs.shift);
        let x = self.num.shift_up((self.shift - s) as usize);
        let y = rhs.num.shift_up((rhs.shift - s) as usize);
        let y = if sign { y } else { -&y };
        if self.den == rhs.den {
            return YFrac::new(s, &x + &y, self.den.clone());
        }
        YFrac::new(s, &(&x * &rhs.den) + &(&y * &self.den), &self.den * &rhs.den)
    }

    fn fmt_laurent(f: &mut fmt::Formatter<'_>, shift: i64, p: &UPoly) -> fmt::Result {
        let mut first = true;
        for (k, c) in p.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = shift + k as i64;
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let var = match e {
                0 => None,
                1 => Some("zeta".to_string()),
                _ => Some(format!("zeta^{e}")),
            };
            match var {
                None => write!(f, "{abs}")?,
                Some(v) if abs.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{abs}*{v}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Display for YFrac {
    /// Laurent polynomials print bare; proper fractions as `(num)/(den)`, both in
    /// descending powers of `zeta`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return YFrac::fmt_laurent(f, self.shift, &self.num);
        }
        f.write_str("(")?;
        YFrac::fmt_laurent(f, self.shift, &self.num)?;
        f.write_str(")/(")?;
        YFrac::fmt_laurent(f, 0, &self.den)?;
        f.write_str(")")
    }
}

impl Serialize for YFrac {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Add for &YFrac {
    type Output = YFrac;
    fn add(self, rhs: &YFrac) -> YFrac {
        self.combine(rhs, true)
    }
}

impl Sub for &YFrac {
    type Output = YFrac;
    fn sub(self, rhs: &YFrac) -> YFrac {
        self.combine(rhs, false)
    }
}

impl Neg for &YFrac {
    type Output = YFrac;
    fn neg(self) -> YFrac {
        YFrac { shift: self.shift, num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &YFrac {
    type Output = YFrac;
    fn mul(self, rhs: &YFrac) -> YFrac {
        if self.is_zero() || rhs.is_zero() {
            return YFrac::zero();
        }
        let shift = self.shift + rhs.shift;
        if self.den.is_one() && rhs.den.is_one() {
            return YFrac { shift, num: &self.num * &rhs.num, den: UPoly::one() };
        }
        YFrac::new(shift, &self.num * &rhs.num, &self.den * &rhs.den)
    }
}
