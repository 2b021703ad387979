//! Finite fields, explicit curve models, point counting, and recovery of the
//! L-polynomial and class number.

mod field;
mod lpoly;
mod model;

pub use field::{
    default_modulus, is_irreducible_fp, is_prime, make_field, Elem, Embedding, Field, FieldSpec,
    MAX_FIELD_ORDER,
};
pub use lpoly::{class_number, l_polynomial, LPoly, PointCounts};
pub use model::{CurveJson, CurveKind, CurveModel, ElemJson, Equation};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("modulus {0:?} is reducible")]
    ReducibleModulus(Vec<u32>),
    #[error("bad field element: {0}")]
    BadElement(String),
    #[error("singular curve: {0}")]
    Singular(String),
    #[error("genus-2 models y^2 = f(x) need odd characteristic")]
    CharacteristicTwo,
    #[error("f must be monic of degree 5, got degree {0}")]
    NotMonicQuintic(usize),
    #[error("N_{m} = {count} lies outside the Hasse-Weil window")]
    HasseViolation { m: usize, count: u64 },
    #[error("expected {expected} point counts, got {got}")]
    MissingCounts { expected: usize, got: usize },
    #[error("L-polynomial coefficient c_{index} = {value} is not an integer")]
    NonIntegral { index: usize, value: String },
    #[error("class number L(1) = {0} is not positive")]
    NonPositiveClassNumber(i64),
    #[error("invalid L-polynomial: {0}")]
    InvalidLPoly(String),
    #[error("curve JSON: {0}")]
    Json(String),
}
