use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::ArithError;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn int(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Checked conversion of an integral rational to `i64`.
pub fn rat_to_i64(r: &Rat) -> Result<i64, ArithError> {
    if !is_integer(r) {
        return Err(ArithError::NonIntegral {
            value: r.to_string(),
        });
    }
    r.numer().to_i64().ok_or_else(|| ArithError::Overflow {
        value: r.to_string(),
    })
}
