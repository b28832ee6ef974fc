use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Field, FieldCtx};
use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Context of the field of rationals. There is only one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RationalField;

impl Field for Rational {
    type Ctx = RationalField;

    const MONIC_EUCLID: bool = true;

    fn ctx(&self) -> RationalField {
        RationalField
    }

    fn zero(_: &RationalField) -> Self {
        Zero::zero()
    }

    fn one(_: &RationalField) -> Self {
        One::one()
    }

    fn from_i64(_: &RationalField, value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn parse(_: &RationalField, text: &str) -> Result<Self> {
        let bad = || Error::InvalidScalar(text.to_string());
        let int = |s: &str| -> Result<BigInt> {
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            s.parse::<BigInt>().map_err(|_| bad())
        };
        match text.split_once('/') {
            None => Ok(BigRational::from_integer(int(text)?)),
            Some((num, den)) => {
                if den.starts_with('-') {
                    return Err(bad());
                }
                let den = int(den)?;
                if Zero::is_zero(&den) {
                    return Err(Error::DivisionByZero);
                }
                Ok(BigRational::new(int(num)?, den))
            }
        }
    }

    fn describe(_: &RationalField) -> FieldCtx {
        FieldCtx::Rational
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_ref(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(rhs) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
}
