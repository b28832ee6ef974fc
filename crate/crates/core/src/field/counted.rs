use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Field, FieldCtx};
use crate::error::Result;

thread_local! {
    static OPS: Cell<u64> = const { Cell::new(0) };
}

fn tick() {
    OPS.with(|c| c.set(c.get() + 1));
}

/// Field operations (add, sub, mul, neg, inv) performed on [`Counted`] values
/// by the current thread since the last reset.
pub fn op_count() -> u64 {
    OPS.with(Cell::get)
}

pub fn reset_op_count() {
    OPS.with(|c| c.set(0));
}

/// A field element that counts every arithmetic operation applied to it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Counted<F>(pub F);

impl<F: fmt::Debug> fmt::Debug for Counted<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<F: fmt::Display> fmt::Display for Counted<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<F: Field> Add for Counted<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        tick();
        Counted(self.0 + rhs.0)
    }
}

impl<F: Field> Sub for Counted<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        tick();
        Counted(self.0 - rhs.0)
    }
}

impl<F: Field> Mul for Counted<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        tick();
        Counted(self.0 * rhs.0)
    }
}

impl<F: Field> Neg for Counted<F> {
    type Output = Self;
    fn neg(self) -> Self {
        tick();
        Counted(-self.0)
    }
}

impl<F: Field> Field for Counted<F> {
    type Ctx = F::Ctx;

    const MONIC_EUCLID: bool = F::MONIC_EUCLID;

    fn ctx(&self) -> F::Ctx {
        self.0.ctx()
    }

    fn zero(ctx: &F::Ctx) -> Self {
        Counted(F::zero(ctx))
    }

    fn one(ctx: &F::Ctx) -> Self {
        Counted(F::one(ctx))
    }

    fn from_i64(ctx: &F::Ctx, value: i64) -> Self {
        Counted(F::from_i64(ctx, value))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn inv(&self) -> Result<Self> {
        tick();
        self.0.inv().map(Counted)
    }

    fn parse(ctx: &F::Ctx, text: &str) -> Result<Self> {
        F::parse(ctx, text).map(Counted)
    }

    fn describe(ctx: &F::Ctx) -> FieldCtx {
        F::describe(ctx)
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        tick();
        Counted(self.0.add_ref(&rhs.0))
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        tick();
        Counted(self.0.sub_ref(&rhs.0))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        tick();
        Counted(self.0.mul_ref(&rhs.0))
    }

    fn div_ref(&self, rhs: &Self) -> Result<Self> {
        tick();
        self.0.div_ref(&rhs.0).map(Counted)
    }
}
