//! Constant connection matrices along the tau-locus, computed in `Z[tau, z]`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::Rational;

use super::matrix::RatMat3;

/// Polynomial in `tau, z` with integer coefficients; keys are `(deg_tau, deg_z)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TzPoly(BTreeMap<(u32, u32), BigInt>);

impl TzPoly {
    pub fn zero() -> TzPoly {
        TzPoly::default()
    }

    pub fn int(n: i64) -> TzPoly {
        TzPoly::term(n, 0, 0)
    }

    pub fn tau() -> TzPoly {
        TzPoly::term(1, 1, 0)
    }

    pub fn z() -> TzPoly {
        TzPoly::term(1, 0, 1)
    }

    fn term(c: i64, i: u32, j: u32) -> TzPoly {
        let mut p = TzPoly::zero();
        p.push((i, j), BigInt::from(c));
        p
    }

    fn push(&mut self, m: (u32, u32), c: BigInt) {
        let e = self.0.entry(m).or_default();
        *e += c;
        if e.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.0.len() {
            0 => Some(BigInt::zero()),
            1 => self.0.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn d_tau(&self) -> TzPoly {
        self.derive(true)
    }

    pub fn d_z(&self) -> TzPoly {
        self.derive(false)
    }

    fn derive(&self, tau: bool) -> TzPoly {
        let mut out = TzPoly::zero();
        for (&(i, j), c) in &self.0 {
            let e = if tau { i } else { j };
            if e > 0 {
                let m = if tau { (i - 1, j) } else { (i, j - 1) };
                out.push(m, c * BigInt::from(e));
            }
        }
        out
    }
}

impl Add for &TzPoly {
    type Output = TzPoly;
    fn add(self, rhs: &TzPoly) -> TzPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.0 {
            out.push(*m, c.clone());
        }
        out
    }
}

impl Neg for &TzPoly {
    type Output = TzPoly;
    fn neg(self) -> TzPoly {
        TzPoly(self.0.iter().map(|(m, c)| (*m, -c)).collect())
    }
}

impl Sub for &TzPoly {
    type Output = TzPoly;
    fn sub(self, rhs: &TzPoly) -> TzPoly {
        self + &-rhs
    }
}

impl Mul for &TzPoly {
    type Output = TzPoly;
    fn mul(self, rhs: &TzPoly) -> TzPoly {
        let mut out = TzPoly::zero();
        for (&(i, j), c) in &self.0 {
            for (&(k, l), d) in &rhs.0 {
                out.push((i + k, j + l), c * d);
            }
        }
        out
    }
}

pub type TzMat = [[TzPoly; 3]; 3];

fn mat_mul(x: &TzMat, y: &TzMat) -> TzMat {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| (0..3).fold(TzPoly::zero(), |acc, k| &acc + &(&x[i][k] * &y[k][j])))
    })
}

fn transpose(x: &TzMat) -> TzMat {
    std::array::from_fn(|i| std::array::from_fn(|j| x[j][i].clone()))
}

fn identity() -> TzMat {
    std::array::from_fn(|i| std::array::from_fn(|j| TzPoly::int((i == j) as i64)))
}

/// Period matrix on the tau-locus: `((-1, z, 0), (0, tau, -1), (0, 1, 0))`.
pub fn period_matrix() -> TzMat {
    let n = TzPoly::int;
    [
        [n(-1), TzPoly::z(), n(0)],
        [n(0), TzPoly::tau(), n(-1)],
        [n(0), n(1), n(0)],
    ]
}

fn det(p: &TzMat) -> TzPoly {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&p[r1][c1] * &p[r2][c2]) - &(&p[r1][c2] * &p[r2][c1])
    };
    let t0 = &p[0][0] * &minor(1, 2, 1, 2);
    let t1 = &p[0][1] * &minor(1, 2, 0, 2);
    let t2 = &p[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

/// Inverse of a matrix with determinant `+-1` via the adjugate.
fn unimodular_inverse(p: &TzMat) -> TzMat {
    let d = det(p).as_constant().expect("constant determinant");
    assert!(d == BigInt::one() || d == -BigInt::one(), "determinant is not a unit");
    let sign = TzPoly::term(if d.is_one() { 1 } else { -1 }, 0, 0);
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            // cofactor C_ji
            let rows: Vec<usize> = (0..3).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..3).filter(|&c| c != i).collect();
            let m = &(&p[rows[0]][cols[0]] * &p[rows[1]][cols[1]])
                - &(&p[rows[0]][cols[1]] * &p[rows[1]][cols[0]]);
            let m = if (i + j) % 2 == 1 { -&m } else { m };
            &m * &sign
        })
    })
}

fn to_rational(m: &TzMat) -> RatMat3 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let c = m[i][j].as_constant().expect("tau-locus entry depends on tau or z");
            Rational::from_integer(c)
        })
    })
}

/// `A(d/dx) = (P^-1 dP/dx)^T` along the tau-locus for `x = tau, z`, as raw `Z[tau, z]` matrices.
pub fn tau_locus_matrices() -> (TzMat, TzMat) {
    let p = period_matrix();
    let inv = unimodular_inverse(&p);
    debug_assert_eq!(mat_mul(&p, &inv), identity());
    let along = |d: fn(&TzPoly) -> TzPoly| {
        let dp: TzMat = std::array::from_fn(|i| std::array::from_fn(|j| d(&p[i][j])));
        transpose(&mat_mul(&inv, &dp))
    };
    (along(TzPoly::d_tau), along(TzPoly::d_z))
}

/// `(C_tau, C_z)`; panics if an entry is not constant.
pub fn tau_locus_constants() -> (RatMat3, RatMat3) {
    let (t, z) = tau_locus_matrices();
    (to_rational(&t), to_rational(&z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn inverse_is_polynomial() {
        let p = period_matrix();
        assert_eq!(det(&p), TzPoly::int(-1));
        let inv = unimodular_inverse(&p);
        assert_eq!(mat_mul(&inv, &p), identity());
        assert_eq!(inv[0][2], TzPoly::z());
        assert_eq!(inv[2][2], TzPoly::tau());
    }

    #[test]
    fn constants() {
        let (ct, cz) = tau_locus_constants();
        for i in 0..3 {
            for j in 0..3 {
                let et = if (i, j) == (1, 2) { rat(-1, 1) } else { rat(0, 1) };
                let ez = if (i, j) == (1, 0) { rat(-1, 1) } else { rat(0, 1) };
                assert_eq!(ct[i][j], et);
                assert_eq!(cz[i][j], ez);
            }
        }
    }

    #[test]
    fn tz_arithmetic() {
        let x = &TzPoly::tau() * &TzPoly::z();
        assert_eq!(x.d_tau(), TzPoly::z());
        assert!((&x - &x).is_zero());
        assert_eq!(x.as_constant(), None);
    }
}
