//! Sparse polynomials in the five coordinates `a, b, c, t1, t2` of the moduli space.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::Rational;

/// A coordinate of the moduli space.
///
/// The declaration order is the variable order used by the monomial ordering:
/// `a > b > c > t1 > t2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "t1")]
    T1,
    #[serde(rename = "t2")]
    T2,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::A, Var::B, Var::C, Var::T1, Var::T2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::T1 => "t1",
            Var::T2 => "t2",
        }
    }

    /// Weight under the multiplicative group: `(a, b, c, t1, t2) -> (2, 3, 1, 2, 4)`.
    pub fn weight(self) -> i64 {
        match self {
            Var::A => 2,
            Var::B => 3,
            Var::C => 1,
            Var::T1 => 2,
            Var::T2 => 4,
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector `(e_a, e_b, e_c, e_t1, e_t2)`.
///
/// Ordered graded-lexicographically: total degree first, ties broken
/// lexicographically with `a > b > c > t1 > t2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn var(v: Var) -> Monomial {
        let mut e = [0; 5];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weight(&self) -> i64 {
        Var::ALL
            .iter()
            .map(|v| v.weight() * self.exp(*v) as i64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 5]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(x, y)| x <= y)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut e = other.0;
        for (x, y) in e.iter_mut().zip(self.0.iter()) {
            *x -= y;
        }
        Some(Monomial(e))
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    // exponents add
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut e = self.0;
        for (x, y) in e.iter_mut().zip(rhs.0.iter()) {
            *x += y;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial over the rationals in `a, b, c, t1, t2`. No zero coefficient is ever stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::monomial(c, Monomial::ONE)
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Poly {
        Poly::monomial(Rational::one(), Monomial::var(v))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Poly {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no non-constant term.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// Leading term under the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, x)| (*k * m, x.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derive(&self, v: Var) -> Poly {
        let i = v.index();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut d = *m;
            d.0[i] -= 1;
            out.add_term(d, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn eval(&self, point: &[Rational; 5]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    t *= num_traits::pow(point[v.index()].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Largest exponent of `v` among all terms (0 for the zero polynomial).
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Smallest exponent of `v` among all terms (0 for the zero polynomial).
    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).min().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn mentions(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// Divide every term by `v^k`; the caller guarantees `k <= min_degree_in(v)`.
    pub fn shift_down(&self, v: Var, k: u32) -> Poly {
        let i = v.index();
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = *m;
                    m.0[i] -= k;
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// Drop every term containing `v`, i.e. substitute `v = 0`.
    pub fn at_zero(&self, v: Var) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// With a single divisor, the leading term of any multiple of `d` is divisible
    /// by the leading term of `d`, so a non-divisible leading remainder term proves
    /// non-divisibility.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading().map(|(m, c)| (*m, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((lm, lc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let qm = dm.quotient_of(&lm)?;
            let qc = lc / &dc;
            for (m, c) in &d.terms {
                rem.add_term(*m * qm, -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Replace each term `c * m` by `f(m) * c`, summing the results.
    pub fn map_monomials<F: FnMut(&Monomial) -> Poly>(&self, mut f: F) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out += &f(m).scale(c);
        }
        out
    }

    /// Weight of every monomial, or `None` if the terms disagree (or there are none).
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(|m| m.weight());
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    /// Least common multiple of the coefficient denominators; multiplying by it
    /// gives integer coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        self.terms.values().fold(BigInt::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        })
    }
}

fn fmt_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text form: terms in descending graded-lex order, e.g. `4*a^3 - a*t2 - b^2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                f.write_str(&fmt_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_coeff(&abs))?;
            }
        }
        Ok(())
    }
}

impl From<Var> for Poly {
    fn from(v: Var) -> Poly {
        Poly::var(v)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Poly {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Poly {
        Poly::int(n)
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        out += small;
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(*m1 * *m2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
        impl $tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                self.$method(&rhs)
            }
        }
    };
}
pub(crate) use forward_owned_binop;

forward_owned_binop!(Poly, Add, add);
forward_owned_binop!(Poly, Sub, sub);
forward_owned_binop!(Poly, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn t3() -> Poly {
        let a = Poly::var(Var::A);
        let b = Poly::var(Var::B);
        let t2 = Poly::var(Var::T2);
        &(&a.pow(3) * &Poly::int(4)) - &(&(&t2 * &a) + &b.pow(2))
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::var(Var::A);
        let b = Monomial::var(Var::B);
        let t2 = Monomial::var(Var::T2);
        assert!(a > b);
        assert!(b > t2);
        assert!(t2 * t2 > a);
        assert!(a * t2 > b * b);
    }

    #[test]
    fn display_is_descending_grlex() {
        assert_eq!(t3().to_string(), "4*a^3 - a*t2 - b^2");
        assert_eq!(Poly::zero().to_string(), "0");
        let p = &Poly::var(Var::T1) - &Poly::constant(rat(1, 12));
        assert_eq!(p.to_string(), "t1 - 1/12");
    }

    #[test]
    fn exact_division() {
        let t = t3();
        let q = &t * &(&Poly::var(Var::C) + &Poly::int(3));
        assert_eq!(q.div_exact(&t), Some(&Poly::var(Var::C) + &Poly::int(3)));
        assert_eq!((&q + &Poly::one()).div_exact(&t), None);
        assert_eq!(Poly::zero().div_exact(&t), Some(Poly::zero()));
    }

    #[test]
    fn derivative_and_eval() {
        let t = t3();
        assert_eq!(t.derive(Var::T2), -Poly::var(Var::A));
        let pt = [rat(1, 1), rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        assert_eq!(t.eval(&pt), rat(3, 1));
    }

    #[test]
    fn homogeneous_weight_of_t3() {
        assert_eq!(t3().homogeneous_weight(), Some(6));
        assert_eq!((&Poly::var(Var::A) + &Poly::var(Var::B)).homogeneous_weight(), None);
    }
}
