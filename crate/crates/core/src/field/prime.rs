use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Field, FieldCtx};
use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 32;

/// The prime field GF(p) for a prime `p < 2^32`, checked by trial division.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField(u64);

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < MAX_MODULUS && is_prime(modulus) {
            Ok(PrimeField(modulus))
        } else {
            Err(Error::InvalidModulus(modulus))
        }
    }

    pub fn modulus(self) -> u64 {
        self.0
    }

    /// The canonical representative of `value` mod p.
    pub fn element(self, value: i64) -> Fp {
        Fp { value: value.rem_euclid(self.0 as i64) as u64, field: self }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue class modulo a prime, stored as its least non-negative representative.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    field: PrimeField,
}

impl Fp {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn field(self) -> PrimeField {
        self.field
    }

    fn with(self, value: u64) -> Fp {
        Fp { value, field: self.field }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.field.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.field, rhs.field);
        let s = self.value + rhs.value;
        let p = self.field.0;
        self.with(if s >= p { s - p } else { s })
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.field, rhs.field);
        let p = self.field.0;
        self.with(if self.value >= rhs.value { self.value - rhs.value } else { self.value + p - rhs.value })
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.field, rhs.field);
        // both operands are below 2^32, so the product fits in u64
        self.with(self.value * rhs.value % self.field.0)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        self.with(if self.value == 0 { 0 } else { self.field.0 - self.value })
    }
}

impl Field for Fp {
    type Ctx = PrimeField;

    fn ctx(&self) -> PrimeField {
        self.field
    }

    fn zero(ctx: &PrimeField) -> Self {
        Fp { value: 0, field: *ctx }
    }

    fn one(ctx: &PrimeField) -> Self {
        Fp { value: 1 % ctx.0, field: *ctx }
    }

    fn from_i64(ctx: &PrimeField, value: i64) -> Self {
        ctx.element(value)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.field.0 as i64, self.value as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.field.element(t0))
    }

    fn parse(ctx: &PrimeField, text: &str) -> Result<Self> {
        let digits = text.strip_prefix('-').unwrap_or(text);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidScalar(text.to_string()));
        }
        let n: BigInt = text.parse().map_err(|_| Error::InvalidScalar(text.to_string()))?;
        let r = n.mod_floor(&BigInt::from(ctx.0)).to_u64().expect("residue fits in u64");
        Ok(Fp { value: r, field: *ctx })
    }

    fn describe(ctx: &PrimeField) -> FieldCtx {
        FieldCtx::Prime(*ctx)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        *self + *rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        *self - *rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        *self * *rhs
    }
}
