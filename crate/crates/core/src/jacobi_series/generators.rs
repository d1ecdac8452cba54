//! Eisenstein series and the logarithmic derivative `J1` of the theta-type product.

use num_bigint::BigInt;

use crate::algebra::{rat, Rational};

use super::qseries::QSeries;
use super::upoly::UPoly;
use super::yfrac::YFrac;
use super::SeriesError;

/// `sigma_k(n)`.
pub fn divisor_sum(k: u32, n: u64) -> BigInt {
    (1..=n).filter(|d| n.is_multiple_of(*d)).map(|d| BigInt::from(d).pow(k)).sum()
}

/// `E_k = 1 + b_k sum sigma_{k-1}(n) q^n` with `(b_2, b_4, b_6) = (-24, 240, -504)`.
pub fn eisenstein(k: u32, order: usize) -> Result<QSeries, SeriesError> {
    let b = match k {
        2 => -24,
        4 => 240,
        6 => -504,
        _ => return Err(SeriesError::UnsupportedWeight(k)),
    };
    Ok(QSeries::from_fn(order, k as i64, |n| {
        if n == 0 {
            YFrac::one()
        } else {
            YFrac::constant(Rational::from_integer(divisor_sum(k - 1, n as u64) * b))
        }
    }))
}

/// `J1 = (1/2)(zeta + 1)/(zeta - 1) + sum_{n>=1} sum_{d | n} (zeta^-d - zeta^d) q^n`,
/// the expansion for `|zeta| < 1`; weight 1.
pub fn j1_series(order: usize) -> QSeries {
    QSeries::from_fn(order, 1, |n| {
        if n == 0 {
            return YFrac::new(0, UPoly::new(vec![rat(1, 2), rat(1, 2)]), UPoly::from_ints(&[-1, 1]));
        }
        // coefficients of zeta^-n .. zeta^n
        let mut c = vec![rat(0, 1); 2 * n + 1];
        for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
            c[n - d] += rat(1, 1);
            c[n + d] -= rat(1, 1);
        }
        YFrac::laurent(-(n as i64), c)
    })
}
