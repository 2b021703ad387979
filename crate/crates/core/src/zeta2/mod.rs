//! The two-variable zeta function `Z(t,u) = P(t,u) / ((1 − t)(1 − ut))`.
//!
//! Builds divisor-class censuses for genus ≤ 2, sums the series in closed form
//! to extract `P(t,u)`, converts between `b_{nk}` and the coefficients
//! `α_{ik}` of `P`, and checks the structural properties of `P`.

mod alpha;
mod btable;
mod ppoly;
mod report;
mod verify;

pub use alpha::{alpha_matrix, b_from_alpha, cumulative_identity_check, AlphaMatrix};
pub use btable::{btable_structural, BTable, BTableJson, CurveParams};
pub use ppoly::{p_explicit, p_from_btable, PContext, PPoly};
pub use report::{Check, CheckReport};
pub use verify::{clifford_validate, verify_theorem1};

use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZetaError {
    #[error("genus {0} is not supported here (structural tables exist for g <= 2)")]
    UnsupportedGenus(usize),
    #[error("parameters are not realizable by a smooth curve: {0} (pass the synthetic flag to allow)")]
    Unrealizable(String),
    #[error("invalid b-table: {0}")]
    InvalidTable(String),
    #[error("tail numerator is not divisible by (u - 1); inconsistent b-table")]
    InexactDivision,
    #[error("P(t,u) violates an invariant: {0}")]
    Invariant(String),
    #[error("coefficient degree bound violated at alpha[{i}][{k}]")]
    DegreeBound { i: usize, k: usize },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("b-table JSON: {0}")]
    Json(String),
}
