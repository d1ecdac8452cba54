use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::algebra::{Rational, RingElem, Var};

/// 3x3 matrix over the localized coordinate ring.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Mat3(pub [[RingElem; 3]; 3]);

/// 3x3 matrix of rational constants.
pub type RatMat3 = [[Rational; 3]; 3];

impl Mat3 {
    pub fn zero() -> Mat3 {
        Mat3::default()
    }

    pub fn identity() -> Mat3 {
        let mut m = Mat3::zero();
        for i in 0..3 {
            m.0[i][i] = RingElem::one();
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> RingElem>(mut f: F) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn from_rational(m: &RatMat3) -> Mat3 {
        Mat3::from_fn(|i, j| RingElem::constant(m[i][j].clone()))
    }

    /// The constant entries, if every entry is a rational constant.
    pub fn as_rational(&self) -> Option<RatMat3> {
        let mut out: RatMat3 = Default::default();
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = self.0[i][j].as_constant()?;
            }
        }
        Some(out)
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElem {
        &self.0[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(RingElem::is_zero)
    }

    pub fn transpose(&self) -> Mat3 {
        Mat3::from_fn(|i, j| self.0[j][i].clone())
    }

    pub fn map<F: FnMut(&RingElem) -> RingElem>(&self, mut f: F) -> Mat3 {
        Mat3::from_fn(|i, j| f(&self.0[i][j]))
    }

    pub fn scale(&self, k: &RingElem) -> Mat3 {
        self.map(|x| x * k)
    }

    pub fn derive(&self, v: Var) -> Mat3 {
        self.map(|x| x.derive(v))
    }

    pub fn commutator(&self, rhs: &Mat3) -> Mat3 {
        &(self * rhs) - &(rhs * self)
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.0[i].iter().all(RingElem::is_zero)
    }

    pub fn to_strings(&self) -> [[String; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].to_string()))
    }
}

pub fn rational_to_strings(m: &RatMat3) -> [[String; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[i][j].to_string()))
}

impl Add<&Mat3> for &Mat3 {
    type Output = Mat3;

    fn add(self, rhs: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| &self.0[i][j] + &rhs.0[i][j])
    }
}

impl Sub<&Mat3> for &Mat3 {
    type Output = Mat3;

    fn sub(self, rhs: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| &self.0[i][j] - &rhs.0[i][j])
    }
}

impl Mul<&Mat3> for &Mat3 {
    type Output = Mat3;

    fn mul(self, rhs: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| {
            (0..3).fold(RingElem::zero(), |acc, k| {
                let (x, y) = (&self.0[i][k], &rhs.0[k][j]);
                if x.is_zero() || y.is_zero() {
                    acc
                } else {
                    &acc + &(x * y)
                }
            })
        })
    }
}

impl Neg for &Mat3 {
    type Output = Mat3;

    fn neg(self) -> Mat3 {
        self.map(|x| -x)
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.0.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                writeln!(f, "  ({},{}) {}", i + 1, j + 1, x)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Mat3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}
