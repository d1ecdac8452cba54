//! Exact arithmetic: rationals, polynomials in the moduli coordinates, the
//! localized coordinate ring and its fraction field.
//!
//! `t3 = 4a^3 - t2*a - b^2` and `Delta = 27*t3^2 - t2^3` are abbreviations, never
//! variables: the ring stays free on `a, b, c, t1, t2` and equality is decidable.

pub mod linsolve;
pub mod parse;
pub mod poly;
pub mod ratfun;
pub mod ring;

use num_bigint::BigInt;
use serde::Serialize;

pub use linsolve::{linsolve, solve_system};
pub use parse::{parse_poly, parse_ring_elem, ParseError};
pub use poly::{Monomial, Poly, Var};
pub use ratfun::RatFun;
pub use ring::{delta_poly, t3_poly, RingElem};

/// Arbitrary-precision fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The factors inverted in the coordinate ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Factor {
    A = 0,
    B = 1,
    Delta = 2,
}

impl Factor {
    pub fn poly(self) -> Poly {
        match self {
            Factor::A => Poly::var(Var::A),
            Factor::B => Poly::var(Var::B),
            Factor::Delta => delta_poly().clone(),
        }
    }
}

impl std::fmt::Display for Factor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Factor::A => "a",
            Factor::B => "b",
            Factor::Delta => "Delta",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    /// A localized factor vanishes at the evaluation point: `Delta = 0` is a singular
    /// curve, `a = 0` degenerates the chosen frame, `b = 0` is a 2-torsion point.
    #[error("division by zero: {0} vanishes at this point")]
    DivisionByZero(Factor),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("linear system is rank deficient (rank {rank} < {unknowns} unknowns)")]
    SingularSystem { rank: usize, unknowns: usize },
    #[error("linear system has no solution")]
    InconsistentSystem,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix and right-hand side dimensions disagree")]
    DimensionMismatch,
}
