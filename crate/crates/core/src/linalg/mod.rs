//! Dense exact matrices and Gaussian elimination.
//!
//! Vectors are columns: `(A v)_i = sum_j A_ij v_j`.

mod echelon;
pub mod oracle;
pub mod text;

use std::fmt;
use std::ops::{Index, IndexMut};

pub use echelon::{EchelonBasis, Reduction};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// A dense row-major matrix over a field.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<F: Field> {
    rows: usize,
    cols: usize,
    ctx: F::Ctx,
    data: Vec<F>,
}

/// Reduced row echelon form with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref<F: Field> {
    pub reduced: Mat<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> Mat<F> {
    pub fn zero(ctx: &F::Ctx, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, ctx: ctx.clone(), data: vec![F::zero(ctx); rows * cols] }
    }

    pub fn identity(ctx: &F::Ctx, n: usize) -> Self {
        let mut m = Self::zero(ctx, n, n);
        for i in 0..n {
            m[(i, i)] = F::one(ctx);
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged input and entries from other fields.
    pub fn from_rows(ctx: &F::Ctx, rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::DimensionMismatch(format!("row {i} has {} entries, expected {c}", row.len())));
            }
            for x in row {
                if x.ctx() != *ctx {
                    return Err(Error::MixedField);
                }
                data.push(x);
            }
        }
        Ok(Mat { rows: r, cols: c, ctx: ctx.clone(), data })
    }

    /// Builds a matrix from small integer rows. Panics on ragged input.
    pub fn from_ints(ctx: &F::Ctx, rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&v| F::from_i64(ctx, v)).collect()).collect();
        Self::from_rows(ctx, rows).expect("rectangular integer matrix")
    }

    /// Builds an `n x cols.len()` matrix whose columns are the given vectors.
    pub fn from_columns(ctx: &F::Ctx, n: usize, cols: &[Vec<F>]) -> Result<Self> {
        let mut m = Self::zero(ctx, n, cols.len());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != n {
                return Err(Error::DimensionMismatch(format!("column {j} has length {}, expected {n}", col.len())));
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn diagonal(ctx: &F::Ctx, entries: Vec<F>) -> Self {
        let n = entries.len();
        let mut m = Self::zero(ctx, n, n);
        for (i, x) in entries.into_iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// The side length of a square matrix.
    pub fn square_dim(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn map<G: Field>(&self, ctx: &G::Ctx, f: impl Fn(&F) -> G) -> Mat<G> {
        Mat { rows: self.rows, cols: self.cols, ctx: ctx.clone(), data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// The block with rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut m = Self::zero(&self.ctx, r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                m[(i - r0, j - c0)] = self[(i, j)].clone();
            }
        }
        m
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::MixedField)
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_field(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zero(&self.ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add_ref(&a.mul_ref(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!("{}x{} times vector of length {}", self.rows, self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(F::zero(&self.ctx), |acc, (a, x)| {
                    if a.is_zero() || x.is_zero() {
                        acc
                    } else {
                        acc.add_ref(&a.mul_ref(x))
                    }
                })
            })
            .collect())
    }

    fn zip_with(&self, rhs: &Self, op: impl Fn(&F, &F) -> F) -> Result<Self> {
        self.check_field(rhs)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| op(a, b)).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, ctx: self.ctx.clone(), data })
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, F::add_ref)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, F::sub_ref)
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        let n = self.square_dim()?;
        let mut acc = Self::identity(&self.ctx, n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Gauss-Jordan elimination, pivoting on the first non-zero entry of each column.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].inv().expect("pivot is non-zero");
            for j in col..m.cols {
                m[(row, j)] = m[(row, j)].mul_ref(&inv);
            }
            for i in 0..m.rows {
                if i == row || m[(i, col)].is_zero() {
                    continue;
                }
                let factor = m[(i, col)].clone();
                for j in col..m.cols {
                    let delta = factor.mul_ref(&m[(row, j)]);
                    m[(i, j)] = m[(i, j)].sub_ref(&delta);
                }
            }
            pivots.push(col);
            row += 1;
        }
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.square_dim()?;
        let mut aug = Self::zero(&self.ctx, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one(&self.ctx);
        }
        let r = aug.rref();
        if r.pivots.iter().take_while(|&&p| p < n).count() < n {
            return Err(Error::Singular);
        }
        Ok(r.reduced.submatrix(0, n, n, 2 * n))
    }

    /// A basis of `{ v : A v = 0 }`, one vector per free column of the echelon form.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let r = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &r.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![F::zero(&self.ctx); self.cols];
                v[f] = F::one(&self.ctx);
                for (row, &p) in r.pivots.iter().enumerate() {
                    v[p] = -r.reduced[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Linearly independent columns of `A` spanning its column space.
    pub fn column_basis(&self) -> Vec<Vec<F>> {
        self.rref().pivots.iter().map(|&j| self.column(j)).collect()
    }

    /// A particular solution of `A x = b` with every free variable set to zero,
    /// or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("right-hand side of length {} for {} rows", b.len(), self.rows)));
        }
        let mut aug = Self::zero(&self.ctx, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let r = aug.rref();
        if r.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(&self.ctx); self.cols];
        for (row, &p) in r.pivots.iter().enumerate() {
            x[p] = r.reduced[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                self[(i, i)].is_one() && (0..i).all(|j| self[(i, j)].is_zero())
            })
    }

    /// `T^-1 A T`.
    pub fn conjugate(&self, t: &Self) -> Result<Self> {
        t.inverse()?.mul(&self.mul(t)?)
    }
}

/// The companion matrix of a monic polynomial `X^d + a_{d-1} X^{d-1} + ... + a_0`:
/// ones on the subdiagonal (so `B e_j = e_{j+1}`) and last column `(-a_0, ..., -a_{d-1})`.
pub fn companion<F: Field>(p: &Poly<F>) -> Result<Mat<F>> {
    let d = match p.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let ctx = p.ctx();
    let mut b = Mat::zero(ctx, d, d);
    for j in 0..d - 1 {
        b[(j + 1, j)] = F::one(ctx);
    }
    for i in 0..d {
        b[(i, d - 1)] = -p.coeff(i);
    }
    Ok(b)
}

/// Block-diagonal assembly of square blocks.
pub fn block_diag<F: Field>(ctx: &F::Ctx, blocks: &[Mat<F>]) -> Result<Mat<F>> {
    let mut n = 0;
    for (i, b) in blocks.iter().enumerate() {
        if !b.is_square() {
            return Err(Error::NonSquareBlock(i));
        }
        if b.ctx() != ctx {
            return Err(Error::MixedField);
        }
        n += b.rows();
    }
    let mut m = Mat::zero(ctx, n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m[(off + i, off + j)] = b[(i, j)].clone();
            }
        }
        off += b.rows();
    }
    Ok(m)
}

/// Extends independent columns to a basis of `k^n` with canonical vectors,
/// appending `e_1, e_2, ...` in index order whenever one enlarges the span.
pub fn complete_to_basis<F: Field>(ctx: &F::Ctx, cols: &[Vec<F>], n: usize) -> Result<Mat<F>> {
    if cols.len() > n {
        return Err(Error::DependentInput);
    }
    let mut span = EchelonBasis::new(ctx, n);
    let mut out = Vec::with_capacity(n);
    for c in cols {
        if c.len() != n {
            return Err(Error::DimensionMismatch(format!("vector of length {} in dimension {n}", c.len())));
        }
        if !span.insert(c).is_independent() {
            return Err(Error::DependentInput);
        }
        out.push(c.clone());
    }
    for i in 0..n {
        if out.len() == n {
            break;
        }
        let e = unit_vector(ctx, n, i);
        if span.insert(&e).is_independent() {
            out.push(e);
        }
    }
    Mat::from_columns(ctx, n, &out)
}

/// The canonical basis vector `e_{i+1}` of length `n` (0-based index `i`).
pub fn unit_vector<F: Field>(ctx: &F::Ctx, n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(ctx); n];
    v[i] = F::one(ctx);
    v
}

impl<F: Field> Index<(usize, usize)> for Mat<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F: Field> IndexMut<(usize, usize)> for Mat<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// One row per line, entries separated by single spaces.
impl<F: Field> fmt::Display for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "[{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
