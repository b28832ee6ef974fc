//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;

/// A polynomial stored by ascending coefficients with no trailing zeros.
///
/// The zero polynomial has an empty coefficient list and degree `None`.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(ctx: &F::Ctx, coeffs: Vec<F>) -> Self {
        let mut p = Poly { ctx: ctx.clone(), coeffs };
        p.trim();
        p
    }

    /// Builds a polynomial from small integer coefficients, ascending.
    pub fn from_ints(ctx: &F::Ctx, coeffs: &[i64]) -> Self {
        Self::new(ctx, coeffs.iter().map(|&c| F::from_i64(ctx, c)).collect())
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Poly { ctx: ctx.clone(), coeffs: Vec::new() }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(F::one(ctx))
    }

    pub fn constant(c: F) -> Self {
        let ctx = c.ctx();
        Self::new(&ctx, vec![c])
    }

    /// `c * X^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![F::zero(&ctx); k];
        coeffs.push(c);
        Self::new(&ctx, coeffs)
    }

    /// The polynomial `X`.
    pub fn x(ctx: &F::Ctx) -> Self {
        Self::monomial(F::one(ctx), 1)
    }

    /// `X - c`.
    pub fn linear(c: F) -> Self {
        let ctx = c.ctx();
        Self::new(&ctx, vec![-c, F::one(&ctx)])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Field::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    /// Ascending coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `X^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(|| F::zero(&self.ctx))
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// Leading coefficient equal to one.
    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Field::is_one)
    }

    /// Divides by the leading coefficient. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.inv().expect("leading coefficient is non-zero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(&self.ctx, self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Euclidean division: `self = divisor * quotient + remainder` with
    /// `deg remainder < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let (db, lead) = match (divisor.degree(), divisor.leading()) {
            (Some(d), Some(lc)) => (d, lc.inv()?),
            _ => return Err(Error::DivisionByZero),
        };
        let mut rem = self.coeffs.clone();
        let Some(da) = self.degree().filter(|&da| da >= db) else {
            return Ok((Self::zero(&self.ctx), self.clone()));
        };
        let mut quot = vec![F::zero(&self.ctx); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = rem[k + db].mul_ref(&lead);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub_ref(&c.mul_ref(b));
            }
            quot[k] = c;
        }
        rem.truncate(db);
        Ok((Self::new(&self.ctx, quot), Self::new(&self.ctx, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Exact quotient, or `None` if `divisor` leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Result<Option<Self>> {
        let (q, r) = self.div_rem(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Whether `self` divides `other`. Only zero is divisible by zero.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// `self^exponent mod modulus` by square-and-multiply, reducing at every step.
    pub fn pow_mod(&self, exponent: u64, modulus: &Self) -> Result<Self> {
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut result = Self::one(&self.ctx).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus)?;
            }
        }
        Ok(result)
    }

    pub fn pow(&self, exponent: u32) -> Self {
        (0..exponent).fold(Self::one(&self.ctx), |acc, _| &acc * self)
    }

    /// Evaluates the polynomial at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, a: &Mat<F>) -> Result<Mat<F>> {
        let n = a.square_dim()?;
        let mut acc = Mat::zero(&self.ctx, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a)?;
            for i in 0..n {
                acc[(i, i)] = acc[(i, i)].add_ref(c);
            }
        }
        Ok(acc)
    }

    /// Computes `self(A) v` by Horner's rule on vectors, without forming `self(A)`.
    pub fn apply(&self, a: &Mat<F>, v: &[F]) -> Result<Vec<F>> {
        let n = a.square_dim()?;
        if v.len() != n {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {n}x{n} matrix", v.len())));
        }
        let mut acc = vec![F::zero(&self.ctx); n];
        for c in self.coeffs.iter().rev() {
            acc = a.mul_vec(&acc)?;
            for (x, vi) in acc.iter_mut().zip(v) {
                *x = x.add_ref(&c.mul_ref(vi));
            }
        }
        Ok(acc)
    }

    /// Evaluates at a scalar.
    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(&self.ctx), |acc, c| acc.mul_ref(x).add_ref(c))
    }
}

/// Monic greatest common divisor. `gcd(p, 0) = monic(p)`.
pub fn gcd<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Result<Poly<F>> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    if F::MONIC_EUCLID {
        a = a.monic();
        b = b.monic();
    }
    while !b.is_zero() {
        let mut r = a.rem(&b)?;
        if F::MONIC_EUCLID {
            r = r.monic();
        }
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Monic least common multiple of two non-zero polynomials.
pub fn lcm<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Result<Poly<F>> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let g = gcd(p, q)?;
    let (quot, _) = p.div_rem(&g)?;
    Ok((&quot * q).monic())
}

/// Factorisation `G = H K` of `G = gcd(P, Q)` in which every prime factor of
/// `H` divides `Q / G` and `K` is coprime to `Q / G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdSplit<F: Field> {
    pub gcd: Poly<F>,
    pub h: Poly<F>,
    pub k: Poly<F>,
    /// `P / G`.
    pub p_red: Poly<F>,
    /// `Q / G`.
    pub q_red: Poly<F>,
}

/// Splits the gcd of two monic, non-constant polynomials whose gcd is a proper
/// divisor of both.
///
/// `H = gcd(G, (Q/G)^g mod G)` with `g = deg G`, `K = G / H`. Then `H (Q/G)` and
/// `K (P/G)` are coprime with product `lcm(P, Q)`.
pub fn split_gcd<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Result<GcdSplit<F>> {
    for (name, f) in [("P", p), ("Q", q)] {
        if !f.is_monic() || f.degree() == Some(0) {
            return Err(Error::PreconditionViolated(format!("{name} must be monic and non-constant")));
        }
    }
    let g = gcd(p, q)?;
    if &g == p || &g == q {
        return Err(Error::PreconditionViolated("gcd equals one of the inputs".into()));
    }
    let exact = |a: &Poly<F>| -> Result<Poly<F>> {
        a.exact_div(&g)?.ok_or_else(|| Error::InternalInvariant("gcd does not divide its argument".into()))
    };
    let p_red = exact(p)?;
    let q_red = exact(q)?;
    let deg_g = g.degree().unwrap_or(0) as u64;
    let h = gcd(&g, &q_red.pow_mod(deg_g, &g)?)?;
    let k = g
        .exact_div(&h)?
        .ok_or_else(|| Error::InternalInvariant("gcd factor does not divide G".into()))?;
    Ok(GcdSplit { gcd: g, h, k, p_red, q_red })
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(&self.ctx, coeffs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::new(&self.ctx, self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut out = vec![F::zero(&self.ctx); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(&self.ctx, out)
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Descending powers, e.g. `X^3 - 2*X + 1/2`; the zero polynomial prints `0`.
impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(m) => (true, m),
                None => (false, text.as_str()),
            };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let monomial = match k {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{k}"),
            };
            match (k, magnitude) {
                (0, m) => write!(f, "{m}")?,
                (_, "1") => write!(f, "{monomial}")?,
                (_, m) => write!(f, "{m}*{monomial}")?,
            }
        }
        Ok(())
    }
}
