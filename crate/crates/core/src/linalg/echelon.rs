use crate::field::Field;

/// Outcome of inserting a vector into an [`EchelonBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction<F> {
    /// The vector enlarged the span and was accepted.
    Independent,
    /// The vector lies in the span. With coordinate tracking, holds its
    /// coefficients over the accepted vectors in insertion order.
    Dependent(Vec<F>),
}

impl<F> Reduction<F> {
    pub fn is_independent(&self) -> bool {
        matches!(self, Reduction::Independent)
    }
}

#[derive(Debug, Clone)]
struct Row<F> {
    pivot: usize,
    // vector[pivot] = 1 and vector is zero at the pivots of all earlier rows
    vector: Vec<F>,
    // vector = sum_k coords[k] * accepted[k]
    coords: Vec<F>,
}

/// An incrementally echelonized set of vectors. Each insertion costs
/// `O(len * dim)` field operations.
#[derive(Debug, Clone)]
pub struct EchelonBasis<F: Field> {
    ctx: F::Ctx,
    dim: usize,
    rows: Vec<Row<F>>,
    track: bool,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(ctx: &F::Ctx, dim: usize) -> Self {
        EchelonBasis { ctx: ctx.clone(), dim, rows: Vec::new(), track: false }
    }

    /// Also records how each accepted vector combines the inserted ones, so
    /// that dependent insertions report their coefficients.
    pub fn with_coordinates(ctx: &F::Ctx, dim: usize) -> Self {
        EchelonBasis { track: true, ..Self::new(ctx, dim) }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        assert_eq!(v.len(), self.dim, "vector length must match the ambient dimension");
        let mut r = v.to_vec();
        let mut c = if self.track { vec![F::zero(&self.ctx); self.rows.len()] } else { Vec::new() };
        for row in &self.rows {
            let lambda = r[row.pivot].clone();
            if lambda.is_zero() {
                continue;
            }
            for (x, b) in r.iter_mut().zip(&row.vector).skip(row.pivot) {
                if !b.is_zero() {
                    *x = x.sub_ref(&lambda.mul_ref(b));
                }
            }
            for (x, b) in c.iter_mut().zip(&row.coords) {
                *x = x.add_ref(&lambda.mul_ref(b));
            }
        }
        (r, c)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).0.iter().all(Field::is_zero)
    }

    pub fn insert(&mut self, v: &[F]) -> Reduction<F> {
        let (r, mut c) = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return Reduction::Dependent(c);
        };
        let inv = r[pivot].inv().expect("pivot is non-zero");
        let vector = r.iter().map(|x| x.mul_ref(&inv)).collect();
        let coords = if self.track {
            for x in c.iter_mut() {
                *x = (-x.clone()).mul_ref(&inv);
            }
            c.push(inv);
            c
        } else {
            Vec::new()
        };
        self.rows.push(Row { pivot, vector, coords });
        Reduction::Independent
    }
}
