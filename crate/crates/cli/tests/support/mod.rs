//! Random matrix generators shared by the integration and acceptance tests.
#![allow(dead_code)]

use frobenius::{block_diag, companion, Field, Fp, Mat, Poly, PrimeField, Rational, RationalField};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn dense_fp(rng: &mut impl Rng, p: PrimeField, n: usize) -> Mat<Fp> {
    let mut m = Mat::zero(&p, n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = p.element(rng.gen_range(0..p.modulus() as i64));
        }
    }
    m
}

/// Entries uniform in `-3..=3`; when `sparse`, most entries are zero.
pub fn small_rational(rng: &mut impl Rng, n: usize, sparse: bool) -> Mat<Rational> {
    let mut m = Mat::zero(&RationalField, n, n);
    for i in 0..n {
        for j in 0..n {
            if !sparse || rng.gen_bool(0.3) {
                m[(i, j)] = Rational::from_i64(&RationalField, rng.gen_range(-3..=3));
            }
        }
    }
    m
}

pub fn invertible_fp(rng: &mut impl Rng, p: PrimeField, n: usize) -> (Mat<Fp>, Mat<Fp>) {
    loop {
        let s = dense_fp(rng, p, n);
        if let Ok(inv) = s.inverse() {
            return (s, inv);
        }
    }
}

pub fn invertible_rational(rng: &mut impl Rng, n: usize) -> (Mat<Rational>, Mat<Rational>) {
    loop {
        let s = small_rational(rng, n, false);
        if let Ok(inv) = s.inverse() {
            return (s, inv);
        }
    }
}

/// `S^-1 A S`.
pub fn conjugate<F: Field>(a: &Mat<F>, s: &Mat<F>, s_inv: &Mat<F>) -> Mat<F> {
    s_inv.mul(&a.mul(s).unwrap()).unwrap()
}

/// A block-diagonal matrix of companion blocks of powers of a few small
/// polynomials (shared among blocks) conjugated by a random invertible matrix.
/// These have long invariant-factor lists and non-trivial gcd structure.
pub fn structured_fp(rng: &mut impl Rng, p: PrimeField, n: usize) -> Mat<Fp> {
    let bases: Vec<Poly<Fp>> = vec![
        Poly::linear(p.element(0)),
        Poly::linear(p.element(1)),
        Poly::linear(p.element(rng.gen_range(0..p.modulus() as i64))),
        // X^2 + 1 is irreducible mod 7
        Poly::from_ints(&p, &[1, 0, 1]),
    ];
    let mut blocks = Vec::new();
    let mut left = n;
    while left > 0 {
        let base = bases.choose(rng).unwrap();
        let d = base.degree().unwrap();
        if d > left {
            continue;
        }
        let max_k = left / d;
        let k = rng.gen_range(1..=max_k.min(3));
        let mut block = base.pow(k as u32);
        // occasionally multiply in a second base to create mixed factors
        if rng.gen_bool(0.3) {
            let other = bases.choose(rng).unwrap();
            if block.degree().unwrap() + other.degree().unwrap() <= left {
                block = &block * other;
            }
        }
        left -= block.degree().unwrap();
        blocks.push(companion(&block).unwrap());
    }
    let m = block_diag(&p, &blocks).unwrap();
    let (s, s_inv) = invertible_fp(rng, p, n);
    conjugate(&m, &s, &s_inv)
}

/// A random GF(p) matrix: dense or structured with equal probability.
pub fn sample_fp(rng: &mut impl Rng, p: PrimeField, n: usize) -> Mat<Fp> {
    if rng.gen_bool(0.5) {
        dense_fp(rng, p, n)
    } else {
        structured_fp(rng, p, n)
    }
}

/// Strictly upper triangular with random sparsity, conjugated by a random invertible matrix.
pub fn nilpotent_fp(rng: &mut impl Rng, p: PrimeField, n: usize) -> Mat<Fp> {
    let density = rng.gen_range(0.0..1.0);
    let mut m = Mat::zero(&p, n, n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                m[(i, j)] = p.element(rng.gen_range(1..p.modulus() as i64));
            }
        }
    }
    let (s, s_inv) = invertible_fp(rng, p, n);
    conjugate(&m, &s, &s_inv)
}

/// The nilpotent Jordan matrix with the given block sizes.
pub fn jordan_nilpotent<F: Field>(ctx: &F::Ctx, sizes: &[usize]) -> Mat<F> {
    let blocks: Vec<Mat<F>> = sizes.iter().map(|&s| companion(&Poly::x(ctx).pow(s as u32)).unwrap()).collect();
    block_diag(ctx, &blocks).unwrap()
}

/// All partitions of `n` in descending order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn random_vector_fp(rng: &mut impl Rng, p: PrimeField, n: usize) -> Vec<Fp> {
    loop {
        let v: Vec<Fp> = (0..n).map(|_| p.element(rng.gen_range(0..p.modulus() as i64))).collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// A random monic polynomial of the given degree.
pub fn random_monic<F: Field>(rng: &mut impl Rng, ctx: &F::Ctx, degree: usize, coeff: impl Fn(&mut dyn rand::RngCore) -> F) -> Poly<F> {
    let mut c: Vec<F> = (0..degree).map(|_| coeff(rng)).collect();
    c.push(F::one(ctx));
    Poly::new(ctx, c)
}
