//! The coordinate ring `Q[a, b, c, t1, t2]` localized at `a`, `b` and the discriminant.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::poly::{forward_owned_binop, Poly, Var};
use super::{AlgebraError, Factor, Rational};

/// `t3 = 4a^3 - t2*a - b^2`.
pub fn t3_poly() -> &'static Poly {
    static T3: OnceLock<Poly> = OnceLock::new();
    T3.get_or_init(|| {
        let a = Poly::var(Var::A);
        let b = Poly::var(Var::B);
        let t2 = Poly::var(Var::T2);
        &(&a.pow(3) * &Poly::int(4)) - &(&(&t2 * &a) + &b.pow(2))
    })
}

/// `Delta = 27*t3^2 - t2^3`.
pub fn delta_poly() -> &'static Poly {
    static DELTA: OnceLock<Poly> = OnceLock::new();
    DELTA.get_or_init(|| {
        let t2 = Poly::var(Var::T2);
        &(&t3_poly().pow(2) * &Poly::int(27)) - &t2.pow(3)
    })
}

fn delta_pow(k: u32) -> Poly {
    const CACHED: usize = 8;
    static POWERS: OnceLock<Vec<Poly>> = OnceLock::new();
    let powers = POWERS.get_or_init(|| {
        let mut v = vec![Poly::one()];
        for i in 1..CACHED {
            v.push(&v[i - 1] * delta_poly());
        }
        v
    });
    match powers.get(k as usize) {
        Some(p) => p.clone(),
        None => &powers[CACHED - 1] * &delta_poly().pow(k - (CACHED as u32 - 1)),
    }
}

/// Element `numerator / (a^p * b^q * Delta^r)` of the localized ring.
///
/// Canonical form: the numerator is not divisible by `a` when `p > 0`, by `b` when
/// `q > 0`, nor by `Delta` when `r > 0`; zero is stored as `0 / 1`. Equality of
/// canonical forms is equality of ring elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RingElem {
    num: Poly,
    den: [u32; 3],
}

impl RingElem {
    pub fn new(num: Poly, p: u32, q: u32, r: u32) -> RingElem {
        let mut x = RingElem { num, den: [p, q, r] };
        x.canonicalize();
        x
    }

    pub fn zero() -> RingElem {
        RingElem::default()
    }

    pub fn one() -> RingElem {
        RingElem::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RingElem {
        RingElem { num: p, den: [0; 3] }
    }

    pub fn constant(c: Rational) -> RingElem {
        RingElem::from_poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> RingElem {
        RingElem::from_poly(Poly::int(n))
    }

    pub fn var(v: Var) -> RingElem {
        RingElem::from_poly(Poly::var(v))
    }

    pub fn t3() -> RingElem {
        RingElem::from_poly(t3_poly().clone())
    }

    pub fn delta() -> RingElem {
        RingElem::from_poly(delta_poly().clone())
    }

    /// `1 / f` for a localized factor `f`.
    pub fn inverse_of(f: Factor) -> RingElem {
        let mut den = [0; 3];
        den[f as usize] = 1;
        RingElem { num: Poly::one(), den }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    /// Exponents `(p, q, r)` of `a`, `b`, `Delta` in the denominator.
    pub fn den_exponents(&self) -> (u32, u32, u32) {
        (self.den[0], self.den[1], self.den[2])
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_polynomial() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == [0; 3]
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// `a^p * b^q * Delta^r` as a polynomial.
    pub fn denominator_poly(&self) -> Poly {
        let [p, q, r] = self.den;
        let mono = super::poly::Monomial([p, q, 0, 0, 0]);
        delta_pow(r).mul_monomial(mono)
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = [0; 3];
            return;
        }
        for (slot, v) in [(0, Var::A), (1, Var::B)] {
            let k = self.den[slot].min(self.num.min_degree_in(v));
            if k > 0 {
                self.num = self.num.shift_down(v, k);
                self.den[slot] -= k;
            }
        }
        while self.den[2] > 0 {
            match self.num.div_exact(delta_poly()) {
                Some(q) => {
                    self.num = q;
                    self.den[2] -= 1;
                }
                None => break,
            }
        }
    }

    /// Numerator scaled to the denominator `a^p b^q Delta^r` (which must dominate ours).
    fn numerator_over(&self, target: [u32; 3]) -> Poly {
        let lift = super::poly::Monomial([target[0] - self.den[0], target[1] - self.den[1], 0, 0, 0]);
        let mut n = self.num.mul_monomial(lift);
        let dr = target[2] - self.den[2];
        if dr > 0 {
            n = &n * &delta_pow(dr);
        }
        n
    }

    fn combine(&self, rhs: &RingElem, subtract: bool) -> RingElem {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if subtract { -rhs } else { rhs.clone() };
        }
        let target = [
            self.den[0].max(rhs.den[0]),
            self.den[1].max(rhs.den[1]),
            self.den[2].max(rhs.den[2]),
        ];
        let mut n = self.numerator_over(target);
        let m = rhs.numerator_over(target);
        if subtract {
            n -= &m;
        } else {
            n += &m;
        }
        RingElem::new(n, target[0], target[1], target[2])
    }

    pub fn scale(&self, c: &Rational) -> RingElem {
        if c.is_zero() {
            return RingElem::zero();
        }
        RingElem { num: self.num.scale(c), den: self.den }
    }

    pub fn pow(&self, n: u32) -> RingElem {
        let mut acc = RingElem::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative; the quotient rule is applied to the localized denominator.
    pub fn derive(&self, v: Var) -> RingElem {
        if self.is_zero() {
            return RingElem::zero();
        }
        let [p, q, r] = self.den;
        let dn = self.num.derive(v);
        if self.is_polynomial() {
            return RingElem::from_poly(dn);
        }
        // d(N / D) = (N' * abDelta - N * (p a' bDelta + q b' aDelta + r Delta' ab)) / (D * abDelta),
        // restricted to the factors actually present.
        let present = [p > 0, q > 0, r > 0];
        let bases = [Poly::var(Var::A), Poly::var(Var::B), delta_poly().clone()];
        let mut all = Poly::one();
        for i in 0..3 {
            if present[i] {
                all = &all * &bases[i];
            }
        }
        let mut n = &dn * &all;
        for i in 0..3 {
            if !present[i] {
                continue;
            }
            let db = bases[i].derive(v);
            if db.is_zero() {
                continue;
            }
            let mut others = Poly::one();
            for j in 0..3 {
                if j != i && present[j] {
                    others = &others * &bases[j];
                }
            }
            let k = Rational::from_integer(self.den[i].into());
            n -= &(&(&self.num * &db) * &others).scale(&k);
        }
        let bump = |e: u32, on: bool| if on { e + 1 } else { e };
        RingElem::new(n, bump(p, present[0]), bump(q, present[1]), bump(r, present[2]))
    }

    /// Exact value at a rational point `(a, b, c, t1, t2)`.
    pub fn eval(&self, point: &[Rational; 5]) -> Result<Rational, AlgebraError> {
        let [p, q, r] = self.den;
        let mut den = Rational::one();
        if p > 0 {
            let x = &point[Var::A.index()];
            if x.is_zero() {
                return Err(AlgebraError::DivisionByZero(Factor::A));
            }
            den *= num_traits::pow(x.clone(), p as usize);
        }
        if q > 0 {
            let x = &point[Var::B.index()];
            if x.is_zero() {
                return Err(AlgebraError::DivisionByZero(Factor::B));
            }
            den *= num_traits::pow(x.clone(), q as usize);
        }
        if r > 0 {
            let x = delta_poly().eval(point);
            if x.is_zero() {
                return Err(AlgebraError::DivisionByZero(Factor::Delta));
            }
            den *= num_traits::pow(x, r as usize);
        }
        Ok(self.num.eval(point) / den)
    }

    /// Multiplicative inverse, when `self` is a unit of the localized ring
    /// (a nonzero constant times a power product of `a`, `b`, `Delta`).
    pub fn checked_inv(&self) -> Option<RingElem> {
        if self.is_zero() {
            return None;
        }
        let mut n = self.num.clone();
        let mut r = 0;
        while n.len() > 1 {
            n = n.div_exact(delta_poly())?;
            r += 1;
        }
        let (m, c) = n.leading().map(|(m, c)| (*m, c.clone()))?;
        if m.exp(Var::C) + m.exp(Var::T1) + m.exp(Var::T2) > 0 {
            return None;
        }
        let [p, q, rr] = self.den;
        let top = delta_pow(rr)
            .mul_monomial(super::poly::Monomial([p, q, 0, 0, 0]))
            .scale(&c.recip());
        Some(RingElem::new(top, m.exp(Var::A), m.exp(Var::B), r))
    }

    pub fn checked_div(&self, rhs: &RingElem) -> Option<RingElem> {
        rhs.checked_inv().map(|inv| self * &inv)
    }

    /// Largest exponent of `v` in the numerator; denominators never involve `c, t1, t2`.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.num.degree_in(v)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})", self.num)?;
        for (name, e) in ["a", "b", "Delta"].into_iter().zip(self.den) {
            match e {
                0 => {}
                1 => write!(f, "/{name}")?,
                _ => write!(f, "/{name}^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for RingElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<Poly> for RingElem {
    fn from(p: Poly) -> Self {
        RingElem::from_poly(p)
    }
}

impl From<Var> for RingElem {
    fn from(v: Var) -> Self {
        RingElem::var(v)
    }
}

impl From<i64> for RingElem {
    fn from(n: i64) -> Self {
        RingElem::int(n)
    }
}

impl From<Rational> for RingElem {
    fn from(c: Rational) -> Self {
        RingElem::constant(c)
    }
}

impl Add<&RingElem> for &RingElem {
    type Output = RingElem;

    fn add(self, rhs: &RingElem) -> RingElem {
        self.combine(rhs, false)
    }
}

impl Sub<&RingElem> for &RingElem {
    type Output = RingElem;

    fn sub(self, rhs: &RingElem) -> RingElem {
        self.combine(rhs, true)
    }
}

impl Mul<&RingElem> for &RingElem {
    type Output = RingElem;

    fn mul(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() || rhs.is_zero() {
            return RingElem::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        RingElem::new(
            &self.num * &rhs.num,
            self.den[0] + rhs.den[0],
            self.den[1] + rhs.den[1],
            self.den[2] + rhs.den[2],
        )
    }
}

impl Neg for &RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        RingElem { num: -&self.num, den: self.den }
    }
}

impl Neg for RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        -&self
    }
}

forward_owned_binop!(RingElem, Add, add);
forward_owned_binop!(RingElem, Sub, sub);
forward_owned_binop!(RingElem, Mul, mul);

impl Zero for RingElem {
    fn zero() -> Self {
        RingElem::zero()
    }

    fn is_zero(&self) -> bool {
        RingElem::is_zero(self)
    }
}

impl One for RingElem {
    fn one() -> Self {
        RingElem::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn v(x: Var) -> RingElem {
        RingElem::var(x)
    }

    fn pt(xs: [i64; 5]) -> [Rational; 5] {
        xs.map(|x| rat(x, 1))
    }

    #[test]
    fn cancellation_to_unit() {
        let d = RingElem::delta();
        let x = &v(Var::A) * &RingElem::inverse_of(Factor::Delta);
        let y = &(&d - &v(Var::A)) * &RingElem::inverse_of(Factor::Delta);
        assert_eq!(&x + &y, RingElem::one());
        assert_eq!(&RingElem::zero() + &x, x);
    }

    #[test]
    fn products_with_inverses() {
        let inv_a = RingElem::inverse_of(Factor::A);
        assert_eq!(&inv_a * &v(Var::A), RingElem::one());
        assert_eq!(&RingElem::delta() * &RingElem::inverse_of(Factor::Delta), RingElem::one());
        let bb = &v(Var::B) * &v(Var::B);
        assert_eq!(bb.to_string(), "b^2");
    }

    #[test]
    fn g1_plus_g2_has_denominator_4ab() {
        let a = v(Var::A);
        let t2 = v(Var::T2);
        let t3 = RingElem::t3();
        let inv_ab = &RingElem::inverse_of(Factor::A) * &RingElem::inverse_of(Factor::B);
        let g1_num = &(&(&(&a * &a) * &(&t2 * &t2)).scale(&rat(-2, 1))
            + &(&(&a * &t2) * &t3).scale(&rat(3, 1)))
            + &(&t3 * &t3).scale(&rat(9, 1));
        let g2_num = &(&(&(&a * &a) * &t3).scale(&rat(18, 1)) - &(&a * &(&t2 * &t2)))
            - &(&t2 * &t3).scale(&rat(3, 1));
        let g1 = (&g1_num * &inv_ab).scale(&rat(1, 4));
        let g2 = (&g2_num * &inv_ab).scale(&rat(1, 2));
        let sum = &g1 + &g2;
        assert_eq!(sum.den_exponents(), (1, 1, 0));
        // Hand cross-multiplication: (g1_num + 2*g2_num) / (4ab).
        let expected = (&(&g1_num + &g2_num.scale(&rat(2, 1))) * &inv_ab).scale(&rat(1, 4));
        assert_eq!(sum, expected);
    }

    #[test]
    fn derivative_of_delta_by_t2_matches_chain_rule() {
        // Oracle: d/dt2 [27 t3^2 - t2^3] = 54 t3 * (dt3/dt2) - 3 t2^2, with dt3/dt2 = -a.
        let a = v(Var::A);
        let t2 = v(Var::T2);
        let oracle = &(&RingElem::t3() * &a).scale(&rat(-54, 1)) - &(&t2 * &t2).scale(&rat(3, 1));
        assert_eq!(RingElem::delta().derive(Var::T2), oracle);
    }

    #[test]
    fn power_rule_on_inverse() {
        let inv_a = RingElem::inverse_of(Factor::A);
        let expected = -&(&inv_a * &inv_a);
        assert_eq!(inv_a.derive(Var::A), expected);
        assert!(RingElem::int(7).derive(Var::A).is_zero());
    }

    #[test]
    fn evaluation_examples() {
        let p = pt([1, 1, 0, 0, 0]);
        assert_eq!(RingElem::delta().eval(&p).unwrap(), rat(243, 1));
        assert_eq!(RingElem::t3().eval(&p).unwrap(), rat(3, 1));
        let degenerate = pt([1, 0, 0, 0, 3]);
        assert_eq!(RingElem::t3().eval(&degenerate).unwrap(), rat(1, 1));
        assert_eq!(
            RingElem::inverse_of(Factor::Delta).eval(&degenerate),
            Err(AlgebraError::DivisionByZero(Factor::Delta))
        );
        assert_eq!(
            RingElem::inverse_of(Factor::B).eval(&degenerate),
            Err(AlgebraError::DivisionByZero(Factor::B))
        );
    }

    #[test]
    fn display_suffix() {
        let x = &(&v(Var::C) + &RingElem::one()) * &(&RingElem::inverse_of(Factor::A) * &RingElem::inverse_of(Factor::Delta));
        assert_eq!(x.to_string(), "(c + 1)/a/Delta");
    }

    #[test]
    fn unit_inverse() {
        let u = &(&RingElem::delta() * &v(Var::A)).scale(&rat(3, 1)) * &RingElem::inverse_of(Factor::B);
        let inv = u.checked_inv().unwrap();
        assert_eq!(&u * &inv, RingElem::one());
        assert!(v(Var::C).checked_inv().is_none());
        assert!((&v(Var::A) + &RingElem::one()).checked_inv().is_none());
    }
}
