//! Rational normal form, similarity and the nilpotent Jordan form.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{block_diag, companion, complete_to_basis, unit_vector, EchelonBasis, Mat};
use crate::minpoly::min_poly_vector;
use crate::poly::Poly;

/// A rational normal form `R = T^-1 A T`.
///
/// `R` is block diagonal with the companion matrices of `factors` on the
/// diagonal, and each factor divides its predecessor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RnfResult<F: Field> {
    pub factors: Vec<Poly<F>>,
    pub rnf: Mat<F>,
    pub transform: Mat<F>,
}

impl<F: Field> RnfResult<F> {
    pub fn block_count(&self) -> usize {
        self.factors.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|p| p.degree().unwrap_or(0)).collect()
    }
}

struct Peel<F: Field> {
    t1: Mat<F>,
    a1: Mat<F>,
    factor: Poly<F>,
}

/// Computes the rational normal form of `a` with a transformation matrix,
/// using field operations only.
///
/// Each pass takes a vector `x` whose local minimal polynomial is the minimal
/// polynomial `P` of the current matrix, moves to a basis starting with
/// `x, Ax, ..., A^(p-1) x`, and continues on the trailing diagonal block. On
/// the way back up, the coupling blocks in the first block row are cleared by
/// replacing each leading basis vector `v_i` of a later block with
/// `v_i - S_i(A) v_1`.
pub fn rnf<F: Field>(a: &Mat<F>) -> Result<RnfResult<F>> {
    let n = a.square_dim()?;
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let ctx = a.ctx();

    let mut peels = Vec::new();
    let mut current = a.clone();
    loop {
        let m = current.rows();
        let cyclic = min_poly_vector(&current)?;
        let p = cyclic.degree();
        let t1 = complete_to_basis(ctx, &cyclic.krylov, m)?;
        let a1 = current.conjugate(&t1)?;
        if a1.submatrix(0, p, 0, p) != companion(&cyclic.mu)? || !a1.submatrix(p, m, 0, p).is_zero() {
            return Err(Error::InternalInvariant("cyclic basis does not produce a companion block".into()));
        }
        let trailing = a1.submatrix(p, m, p, m);
        peels.push(Peel { t1, a1, factor: cyclic.mu });
        if p == m {
            break;
        }
        current = trailing;
    }

    // (transform, factors) of the trailing block handled so far
    let mut tail: Option<(Mat<F>, Vec<Poly<F>>)> = None;
    for Peel { t1, a1, factor } in peels.into_iter().rev() {
        let m = a1.rows();
        let p = factor.degree().unwrap_or(0);
        let (t2, a2, mut factors) = match tail {
            None => (Mat::identity(ctx, m), a1, vec![factor]),
            Some((inner, inner_factors)) => {
                if !inner_factors[0].divides(&factor) {
                    return Err(Error::InternalInvariant("trailing minimal polynomial does not divide".into()));
                }
                let t2 = block_diag(ctx, &[Mat::identity(ctx, p), inner.clone()])?;
                let t2_inv = block_diag(ctx, &[Mat::identity(ctx, p), inner.inverse()?])?;
                let a2 = t2_inv.mul(&a1.mul(&t2)?)?;
                let mut fs = vec![factor];
                fs.extend(inner_factors);
                (t2, a2, fs)
            }
        };
        let t3 = decouple_blocks(&a2, &factors)?;
        let transform = t1.mul(&t2)?.mul(&t3)?;
        factors.shrink_to_fit();
        tail = Some((transform, factors));
    }
    let (transform, factors) = tail.expect("at least one block");

    for pair in factors.windows(2) {
        if !pair[1].divides(&pair[0]) {
            return Err(Error::InternalInvariant(format!("{} does not divide {}", pair[1], pair[0])));
        }
    }
    let blocks = factors.iter().map(companion).collect::<Result<Vec<_>>>()?;
    let r = block_diag(ctx, &blocks)?;
    if a.mul(&transform)? != transform.mul(&r)? {
        return Err(Error::InternalInvariant("A T != T R".into()));
    }
    Ok(RnfResult { factors, rnf: r, transform })
}

/// Given `A2` whose first block row is `[B(P_1) C_2 ... C_r]` and whose other
/// diagonal blocks are `B(P_2), ..., B(P_r)` with zeros elsewhere, builds the
/// unit upper-triangular `T3` with `T3^-1 A2 T3` block diagonal.
fn decouple_blocks<F: Field>(a2: &Mat<F>, factors: &[Poly<F>]) -> Result<Mat<F>> {
    let ctx = a2.ctx();
    let n = a2.rows();
    let leading = factors[0].degree().unwrap_or(0);
    let v1 = unit_vector(ctx, n, 0);

    let mut columns = Vec::with_capacity(n);
    push_cyclic(a2, &mut columns, v1.clone(), leading)?;

    // 0-based start of block i, i.e. the 1-based index p_1 + ... + p_{i-1} + 1 shifted down
    let mut offset = leading;
    for factor in &factors[1..] {
        let vi = unit_vector(ctx, n, offset);
        let image = factor.apply(a2, &vi)?;
        if image[leading..].iter().any(|x| !x.is_zero()) {
            return Err(Error::InternalInvariant("P_i(A2) v_i leaves the first block".into()));
        }
        // A2^j v_1 = e_{j+1}, so the leading entries are the coefficients of H_i
        let h = Poly::new(ctx, image[..leading].to_vec());
        if h.apply(a2, &v1)? != image {
            return Err(Error::InternalInvariant("P_i(A2) v_i != H_i(A2) v_1".into()));
        }
        let s = h
            .exact_div(factor)?
            .ok_or_else(|| Error::InternalInvariant(format!("{factor} does not divide {h}")))?;
        let correction = s.apply(a2, &v1)?;
        let wi: Vec<F> = vi.iter().zip(&correction).map(|(a, b)| a.sub_ref(b)).collect();
        let p = factor.degree().unwrap_or(0);
        push_cyclic(a2, &mut columns, wi, p)?;
        offset += p;
    }

    let t3 = Mat::from_columns(ctx, n, &columns)?;
    if !t3.is_upper_unitriangular() {
        return Err(Error::InternalInvariant("T3 is not unit upper triangular".into()));
    }
    Ok(t3)
}

fn push_cyclic<F: Field>(a: &Mat<F>, columns: &mut Vec<Vec<F>>, start: Vec<F>, count: usize) -> Result<()> {
    let mut v = start;
    for j in 0..count {
        if j > 0 {
            v = a.mul_vec(&v)?;
        }
        columns.push(v.clone());
    }
    Ok(())
}

/// The invariant factors `P_1, ..., P_r`: a complete similarity invariant.
pub fn invariant_factors<F: Field>(a: &Mat<F>) -> Result<Vec<Poly<F>>> {
    rnf(a).map(|r| r.factors)
}

/// The characteristic polynomial as the product of the invariant factors.
pub fn char_poly<F: Field>(a: &Mat<F>) -> Result<Poly<F>> {
    let factors = invariant_factors(a)?;
    Ok(factors.iter().fold(Poly::one(a.ctx()), |acc, p| &acc * p))
}

/// Outcome of a similarity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Similarity<F: Field> {
    pub similar: bool,
    /// `S` with `S^-1 A S = B`, when requested and the matrices are similar.
    pub witness: Option<Mat<F>>,
}

/// Decides whether `a` and `b` are similar by comparing invariant factors.
///
/// With `want_witness`, also returns `S = T_a T_b^-1`, checked to satisfy `A S = S B`.
pub fn is_similar<F: Field>(a: &Mat<F>, b: &Mat<F>, want_witness: bool) -> Result<Similarity<F>> {
    let n = a.square_dim()?;
    let m = b.square_dim()?;
    if n != m {
        return Err(Error::DimensionMismatch(format!("{n}x{n} and {m}x{m}")));
    }
    if a.ctx() != b.ctx() {
        return Err(Error::MixedField);
    }
    let ra = rnf(a)?;
    let rb = rnf(b)?;
    if ra.factors != rb.factors {
        return Ok(Similarity { similar: false, witness: None });
    }
    let witness = if want_witness {
        let s = ra.transform.mul(&rb.transform.inverse()?)?;
        if a.mul(&s)? != s.mul(b)? {
            return Err(Error::InternalInvariant("similarity witness fails A S = S B".into()));
        }
        Some(s)
    } else {
        None
    };
    Ok(Similarity { similar: true, witness })
}

/// The Jordan form of a nilpotent matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JnfResult<F: Field> {
    /// Jordan block sizes, descending.
    pub partition: Vec<usize>,
    /// Block diagonal with nilpotent Jordan blocks (ones on the subdiagonal).
    pub jnf: Mat<F>,
    pub transform: Mat<F>,
    /// `chain_counts[i]` is the number of chains of length `i + 1`.
    pub chain_counts: Vec<usize>,
}

/// Jordan normal form of a nilpotent matrix from a staircase basis.
///
/// With `A^(r+1) = 0 != A^r` and `K = ker A`, a basis of `K` adapted to the
/// flag `K ∩ A^r V ⊆ ... ⊆ K ∩ A V ⊆ K` is built from the top down. Every
/// vector `x` first appearing in `K ∩ A^i V` has a preimage `y` with
/// `A^i y = x`, contributing basis columns `y, Ay, ..., A^i y`.
pub fn nilpotent_jnf<F: Field>(a: &Mat<F>) -> Result<JnfResult<F>> {
    let n = a.square_dim()?;
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let ctx = a.ctx();
    let mut powers = vec![Mat::identity(ctx, n)];
    while !powers.last().expect("non-empty").is_zero() {
        if powers.len() > n {
            return Err(Error::NotNilpotent);
        }
        let next = powers.last().expect("non-empty").mul(a)?;
        powers.push(next);
    }
    // powers[r + 1] = 0 != powers[r]
    let r = powers.len() - 2;
    let kernel = a.kernel_basis();

    let mut adapted = EchelonBasis::new(ctx, n);
    let mut tops: Vec<(usize, Vec<F>)> = Vec::new();
    for i in (0..=r).rev() {
        let level = if i == 0 { kernel.clone() } else { intersect(ctx, n, &kernel, &powers[i].column_basis()) };
        for x in level {
            if adapted.insert(&x).is_independent() {
                tops.push((i, x));
            }
        }
    }
    if adapted.len() != kernel.len() {
        return Err(Error::InternalInvariant("flag basis does not span the kernel".into()));
    }

    let mut chain_counts = vec![0; r + 1];
    let mut partition = Vec::with_capacity(tops.len());
    let mut columns = Vec::with_capacity(n);
    let mut blocks = Vec::with_capacity(tops.len());
    for (i, x) in &tops {
        let y = powers[*i]
            .solve(x)?
            .ok_or_else(|| Error::InternalInvariant("flag vector has no preimage".into()))?;
        push_cyclic(a, &mut columns, y, i + 1)?;
        chain_counts[*i] += 1;
        partition.push(i + 1);
        blocks.push(companion(&Poly::x(ctx).pow(*i as u32 + 1))?);
    }

    let transform = Mat::from_columns(ctx, n, &columns)?;
    let jnf = block_diag(ctx, &blocks)?;
    if transform.rank() != n || a.mul(&transform)? != transform.mul(&jnf)? {
        return Err(Error::InternalInvariant("staircase basis does not conjugate A to its Jordan form".into()));
    }
    Ok(JnfResult { partition, jnf, transform, chain_counts })
}

// A basis of span(u) ∩ span(w) for independent families u and w.
fn intersect<F: Field>(ctx: &F::Ctx, n: usize, u: &[Vec<F>], w: &[Vec<F>]) -> Vec<Vec<F>> {
    if u.is_empty() || w.is_empty() {
        return Vec::new();
    }
    let all: Vec<Vec<F>> = u.iter().chain(w).cloned().collect();
    let stacked = Mat::from_columns(ctx, n, &all).expect("columns of length n");
    stacked
        .kernel_basis()
        .into_iter()
        .map(|c| {
            let mut v = vec![F::zero(ctx); n];
            for (coef, col) in c.iter().zip(u) {
                if coef.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(col) {
                    *x = x.add_ref(&coef.mul_ref(y));
                }
            }
            v
        })
        .collect()
}
