//! Reference computations kept independent of the canonical-form pipeline,
//! used to cross-check it in tests.

use std::collections::HashMap;

use super::Mat;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// Largest matrix accepted by [`char_poly_cofactor`].
pub const COFACTOR_LIMIT: usize = 8;

/// `det(X I - A)` by Laplace expansion over the polynomial ring.
///
/// Exponential cost; refuses matrices larger than [`COFACTOR_LIMIT`].
pub fn char_poly_cofactor<F: Field>(a: &Mat<F>) -> Result<Poly<F>> {
    let n = a.square_dim()?;
    if n > COFACTOR_LIMIT {
        return Err(Error::TooLarge(n));
    }
    let ctx = a.ctx();
    let entry = |i: usize, j: usize| -> Poly<F> {
        let c = Poly::constant(-a[(i, j)].clone());
        if i == j {
            &c + &Poly::x(ctx)
        } else {
            c
        }
    };
    // minor over rows (n - |cols|).. and the column subset `cols`
    fn expand<F: Field>(
        cols: u32,
        n: usize,
        entry: &dyn Fn(usize, usize) -> Poly<F>,
        memo: &mut HashMap<u32, Poly<F>>,
        ctx: &F::Ctx,
    ) -> Poly<F> {
        if cols == 0 {
            return Poly::one(ctx);
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let row = n - cols.count_ones() as usize;
        let mut acc = Poly::zero(ctx);
        let mut sign_positive = true;
        for j in 0..n {
            if cols & (1 << j) == 0 {
                continue;
            }
            let e = entry(row, j);
            if !e.is_zero() {
                let term = &e * &expand(cols & !(1 << j), n, entry, memo, ctx);
                acc = if sign_positive { &acc + &term } else { &acc - &term };
            }
            sign_positive = !sign_positive;
        }
        memo.insert(cols, acc.clone());
        acc
    }
    let mut memo = HashMap::new();
    Ok(expand(((1u64 << n) - 1) as u32, n, &entry, &mut memo, ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Rational, RationalField};
    use crate::linalg::companion;

    const Q: RationalField = RationalField;

    #[test]
    fn small_examples() {
        let i2 = Mat::<Rational>::identity(&Q, 2);
        assert_eq!(char_poly_cofactor(&i2).unwrap(), Poly::from_ints(&Q, &[1, -2, 1]));
        let p = Poly::<Rational>::from_ints(&Q, &[2, -3, 1]);
        assert_eq!(char_poly_cofactor(&companion(&p).unwrap()).unwrap(), p);
        assert_eq!(char_poly_cofactor(&Mat::<Rational>::zero(&Q, 2, 2)).unwrap(), Poly::from_ints(&Q, &[0, 0, 1]));
        assert_eq!(char_poly_cofactor(&Mat::<Rational>::zero(&Q, 0, 0)).unwrap(), Poly::one(&Q));
    }

    #[test]
    fn hand_expanded_three_by_three() {
        // det(XI - A) for A = [[1,2,0],[0,1,3],[4,0,1]] = (X-1)^3 - 24
        let a = Mat::<Rational>::from_ints(&Q, &[&[1, 2, 0], &[0, 1, 3], &[4, 0, 1]]);
        assert_eq!(char_poly_cofactor(&a).unwrap(), Poly::from_ints(&Q, &[-25, 3, -3, 1]));
    }

    #[test]
    fn refuses_large_input() {
        let a = Mat::<Rational>::identity(&Q, 9);
        assert_eq!(char_poly_cofactor(&a), Err(Error::TooLarge(9)));
    }
}
