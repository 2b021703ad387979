//! Irreducibility of `P(t,u)` in ℂ(u)[t].
//!
//! The certificate checks a three-condition criterion on the reversal
//! `F = t^{2g}P(1/t,u)`: monic in `t`, top `u`-coefficient of degree 1 in `t`,
//! and `F(u,1)` a nonzero constant. The factorization oracle is independent of
//! it: it specializes `u`, factors over ℚ exactly and interpolates candidate
//! factors back, which settles irreducibility over ℚ(u) for `deg_t ≤ 4`.

mod certificate;
mod oracle;
mod univariate;

pub use certificate::{
    certify_p, g2_reducibility_condition, irrcrit_certificate, Certificate, Conclusion, Reason,
    EXTENSION_EXPLANATION,
};
pub use oracle::{factor_oracle, Factorization, Normalization, OracleOutcome, MAX_ORACLE_DEGREE};
pub use univariate::factor_univariate;

use thiserror::Error;

use crate::arith::ArithError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IrrError {
    #[error("genus 0: P = 1 carries no irreducibility content")]
    GenusZero,
    #[error("degree {0} in t exceeds the oracle limit of 4")]
    DegreeTooLarge(isize),
    #[error("input is neither monic in t nor has constant term 1")]
    NotNormalized,
    #[error("cannot factor the zero polynomial")]
    Zero,
    #[error("coefficient too large for divisor enumeration: {0}")]
    CoefficientTooLarge(String),
    #[error("certificate assertion failed: {0}")]
    Assertion(String),
    #[error("oracle internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
