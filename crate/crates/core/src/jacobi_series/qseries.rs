use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Rational;

use super::yfrac::YFrac;
use super::SeriesError;

/// Truncated series `sum_{n <= N} c_n(zeta) q^n` with a weight tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QSeries {
    weight: i64,
    order: usize,
    coeffs: Vec<YFrac>,
}

impl QSeries {
    /// `coeffs` must hold `order + 1` entries.
    pub fn new(coeffs: Vec<YFrac>, weight: i64) -> QSeries {
        assert!(!coeffs.is_empty(), "a series has at least the q^0 coefficient");
        QSeries { weight, order: coeffs.len() - 1, coeffs }
    }

    pub fn zero(order: usize, weight: i64) -> QSeries {
        QSeries::new(vec![YFrac::zero(); order + 1], weight)
    }

    pub fn constant(c: YFrac, order: usize, weight: i64) -> QSeries {
        let mut s = QSeries::zero(order, weight);
        s.coeffs[0] = c;
        s
    }

    /// Build coefficient by coefficient; indices are computed in parallel.
    pub fn from_fn<F>(order: usize, weight: i64, f: F) -> QSeries
    where
        F: Fn(usize) -> YFrac + Sync + Send,
    {
        QSeries::new((0..=order).into_par_iter().map(f).collect(), weight)
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[YFrac] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &YFrac {
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, c: YFrac) {
        self.coeffs[n] = c;
    }

    pub fn with_weight(mut self, weight: i64) -> QSeries {
        self.weight = weight;
        self
    }

    pub fn truncate(&self, order: usize) -> QSeries {
        let n = order.min(self.order);
        QSeries::new(self.coeffs[..=n].to_vec(), self.weight)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(YFrac::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zeta_free(&self) -> bool {
        self.coeffs.iter().all(YFrac::is_constant)
    }

    fn check(&self, rhs: &QSeries) -> Result<usize, SeriesError> {
        if self.weight != rhs.weight {
            return Err(SeriesError::WeightMismatch { left: self.weight, right: rhs.weight });
        }
        Ok(self.order.min(rhs.order))
    }

    pub fn add(&self, rhs: &QSeries) -> Result<QSeries, SeriesError> {
        let n = self.check(rhs)?;
        Ok(QSeries::new((0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(), self.weight))
    }

    pub fn sub(&self, rhs: &QSeries) -> Result<QSeries, SeriesError> {
        let n = self.check(rhs)?;
        Ok(QSeries::new((0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect(), self.weight))
    }

    pub fn neg(&self) -> QSeries {
        QSeries::new(self.coeffs.iter().map(|c| -c).collect(), self.weight)
    }

    pub fn scale(&self, c: &Rational) -> QSeries {
        QSeries::new(self.coeffs.iter().map(|x| x.scale(c)).collect(), self.weight)
    }

    /// Cauchy product; weights add.
    pub fn mul(&self, rhs: &QSeries) -> QSeries {
        let n = self.order.min(rhs.order);
        QSeries::from_fn(n, self.weight + rhs.weight, |k| {
            (0..=k).fold(YFrac::zero(), |acc, i| {
                let (x, y) = (&self.coeffs[i], &rhs.coeffs[k - i]);
                if x.is_zero() || y.is_zero() {
                    acc
                } else {
                    &acc + &(x * y)
                }
            })
        })
    }

    pub fn pow(&self, e: u32) -> QSeries {
        let mut acc = QSeries::constant(YFrac::one(), self.order, 0);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `q d/dq`; weight + 2.
    pub fn q_derive(&self) -> QSeries {
        QSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.scale(&Rational::from_integer(n.into())))
                .collect(),
            self.weight + 2,
        )
    }

    /// `zeta d/dzeta` on every coefficient; weight + 1.
    pub fn z_derive(&self) -> QSeries {
        QSeries::from_fn(self.order, self.weight + 1, |n| self.coeffs[n].theta())
    }

    /// `zeta -> 1/zeta` on every coefficient.
    pub fn invert_zeta(&self) -> QSeries {
        QSeries::new(self.coeffs.iter().map(YFrac::invert_zeta).collect(), self.weight)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "weight {} order {}", self.weight, self.order)?;
        for (n, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "q^{n}: {c}")?;
        }
        Ok(())
    }
}
