//! Exact rational and polynomial arithmetic.
//!
//! Everything in the crate is computed over ℚ without rounding. Univariate
//! polynomials carry a variable tag (`t` or `u`); bivariate polynomials are
//! stored as polynomials in `t` whose coefficients are polynomials in `u`.

mod bipoly;
mod json;
mod rat;
mod unipoly;

pub use bipoly::BiPoly;
pub use json::{rat_from_json, rat_to_json};
pub use rat::{int, is_integer, rat, rat_to_i64, Rat};
pub use unipoly::{gauss_poly, UniPoly, Var};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("reversal degree {d} is smaller than deg_t = {deg}")]
    ReverseDegree { d: usize, deg: isize },
    #[error("coefficient {value} is not an integer")]
    NonIntegral { value: String },
    #[error("integer {value} does not fit in 64 bits")]
    Overflow { value: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("malformed polynomial JSON: {0}")]
    Json(String),
}
