//! Exact scalar fields.
//!
//! Every algorithm in this crate is generic over [`Field`]. Two concrete
//! fields are provided: arbitrary-precision rationals ([`Rational`]) and prime
//! fields with a runtime modulus ([`Fp`]). [`Counted`] wraps either one and
//! tallies field operations.

mod counted;
mod prime;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

pub use counted::{op_count, reset_op_count, Counted};
pub use prime::{Fp, PrimeField};
pub use rational::{Rational, RationalField};

use crate::error::{Error, Result};

/// An element of an exact field.
///
/// Elements carry enough information to recover their field context, so two
/// elements of GF(p) and GF(q) can be told apart at runtime. Values are kept
/// canonical after every operation, which makes `==` field equality.
pub trait Field:
    Clone
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Runtime description of the field an element lives in.
    type Ctx: Clone + Eq + Debug + Send + Sync;

    /// Run Euclid's algorithm on monic remainders. Damps fraction growth over Q.
    const MONIC_EUCLID: bool = false;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, value: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Result<Self>;

    /// Parses the text scalar syntax of this field.
    fn parse(ctx: &Self::Ctx, text: &str) -> Result<Self>;

    /// The runtime field descriptor for `ctx`.
    fn describe(ctx: &Self::Ctx) -> FieldCtx;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn div_ref(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul_ref(&rhs.inv()?))
    }

    fn checked_add(&self, rhs: &Self) -> Result<Self> {
        same_field(self, rhs)?;
        Ok(self.add_ref(rhs))
    }

    fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        same_field(self, rhs)?;
        Ok(self.sub_ref(rhs))
    }

    fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        same_field(self, rhs)?;
        Ok(self.mul_ref(rhs))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        same_field(self, rhs)?;
        self.div_ref(rhs)
    }
}

fn same_field<F: Field>(a: &F, b: &F) -> Result<()> {
    if a.ctx() == b.ctx() {
        Ok(())
    } else {
        Err(Error::MixedField)
    }
}

/// Runtime field selector, as named in matrix file headers and on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldCtx {
    Rational,
    Prime(PrimeField),
}

impl FieldCtx {
    /// Builds GF(p), rejecting composite or out-of-range moduli.
    pub fn prime(modulus: u64) -> Result<Self> {
        PrimeField::new(modulus).map(FieldCtx::Prime)
    }
}

impl Display for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldCtx::Rational => write!(f, "rational"),
            FieldCtx::Prime(p) => write!(f, "gf {}", p.modulus()),
        }
    }
}
