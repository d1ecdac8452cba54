//! Two-variable expansions in `q = e^(2 pi i tau)` and `zeta = e^(2 pi i z)` of the
//! classical generators, and their verification against the modular vector fields.
//!
//! All powers of `2 pi i` are divided out: a generator of weight `w` carries
//! `(2 pi i)^(w/2)` and every residual is weight-homogeneous, so the factors cancel.

pub mod generators;
pub mod qseries;
pub mod tuple;
pub mod upoly;
pub mod yfrac;

pub use generators::{divisor_sum, eisenstein, j1_series};
pub use qseries::QSeries;
pub use tuple::{
    cubic_residual, eval_poly_on_tuple, normalized_tuple, normalized_tuple_with, ode_residuals,
    pin_signs, pinned_signs, verify_all, verify_tuple, NormalizedTuple, ResidualStatus, SeriesReport,
    SignPin, Signs,
};
pub use upoly::UPoly;
pub use yfrac::YFrac;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: i64, right: i64 },
    #[error("no Eisenstein series of weight {0} here (use 2, 4 or 6)")]
    UnsupportedWeight(u32),
    #[error("no sign choice makes every residual vanish")]
    NoSignSolution,
    #[error("vector-field coefficient is not a polynomial")]
    NotPolynomial,
    #[error("unknown series {0:?}")]
    UnknownSeries(String),
}

/// Series exposed by name on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesName {
    E2,
    E4,
    E6,
    J1,
    Wp,
    WpPrime,
    Tuple,
}

impl std::str::FromStr for SeriesName {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<SeriesName, SeriesError> {
        Ok(match s {
            "E2" => SeriesName::E2,
            "E4" => SeriesName::E4,
            "E6" => SeriesName::E6,
            "J1" => SeriesName::J1,
            "wp" => SeriesName::Wp,
            "wp_prime" => SeriesName::WpPrime,
            "tuple" => SeriesName::Tuple,
            _ => return Err(SeriesError::UnknownSeries(s.to_string())),
        })
    }
}

impl SeriesName {
    pub const ALL: [&'static str; 7] = ["E2", "E4", "E6", "J1", "wp", "wp_prime", "tuple"];
}
