//! Local minimal polynomials and a vector realising the minimal polynomial.
//!
//! The local minimal polynomial `mu_{A,x}` of a non-zero vector `x` is the
//! monic generator of `{ L : L(A) x = 0 }`. Its degree is the length of the
//! longest independent Krylov sequence `x, Ax, A^2 x, ...`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{unit_vector, EchelonBasis, Mat, Reduction};
use crate::poly::{gcd, lcm, split_gcd, Poly};

/// A vector with its local minimal polynomial and Krylov basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalAnnihilator<F: Field> {
    pub vector: Vec<F>,
    pub mu: Poly<F>,
    /// `x, Ax, ..., A^(m-1) x` with `m = deg mu`.
    pub krylov: Vec<Vec<F>>,
}

impl<F: Field> LocalAnnihilator<F> {
    pub fn degree(&self) -> usize {
        self.krylov.len()
    }
}

/// Grows the Krylov sequence of `x` until the first linear dependence
/// `A^m x = c_0 x + ... + c_{m-1} A^(m-1) x` and returns
/// `mu = X^m - c_{m-1} X^(m-1) - ... - c_0`.
pub fn local_min_poly<F: Field>(a: &Mat<F>, x: &[F]) -> Result<LocalAnnihilator<F>> {
    let n = a.square_dim()?;
    if x.len() != n {
        return Err(Error::DimensionMismatch(format!("vector of length {} for {n}x{n} matrix", x.len())));
    }
    if x.iter().all(Field::is_zero) {
        return Err(Error::ZeroVector);
    }
    let ctx = a.ctx();
    let mut basis = EchelonBasis::with_coordinates(ctx, n);
    let mut krylov = Vec::new();
    let mut current = x.to_vec();
    loop {
        match basis.insert(&current) {
            Reduction::Independent => {
                let next = a.mul_vec(&current)?;
                krylov.push(current);
                current = next;
            }
            Reduction::Dependent(coeffs) => {
                let mut mu: Vec<F> = coeffs.into_iter().map(|c| -c).collect();
                mu.push(F::one(ctx));
                return Ok(LocalAnnihilator { vector: x.to_vec(), mu: Poly::new(ctx, mu), krylov });
            }
        }
    }
}

/// Builds a vector whose local minimal polynomial is `lcm(mu_x, mu_y)`,
/// without factoring.
///
/// When one local polynomial divides the other the dominating input is
/// returned. Coprime polynomials combine as `x + y`; otherwise the gcd is split
/// as `H K` and `z = H(A) x + K(A) y`.
pub fn combine_lcm_vector<F: Field>(
    a: &Mat<F>,
    lx: &LocalAnnihilator<F>,
    ly: &LocalAnnihilator<F>,
) -> Result<LocalAnnihilator<F>> {
    let (p, q) = (&lx.mu, &ly.mu);
    if p.divides(q) {
        return Ok(ly.clone());
    }
    if q.divides(p) {
        return Ok(lx.clone());
    }
    let g = gcd(p, q)?;
    let z: Vec<F> = if g.is_one() {
        lx.vector.iter().zip(&ly.vector).map(|(u, v)| u.add_ref(v)).collect()
    } else {
        let split = split_gcd(p, q)?;
        let hx = split.h.apply(a, &lx.vector)?;
        let ky = split.k.apply(a, &ly.vector)?;
        hx.iter().zip(&ky).map(|(u, v)| u.add_ref(v)).collect()
    };
    let lz = local_min_poly(a, &z)?;
    let expected = lcm(p, q)?;
    if lz.mu != expected {
        return Err(Error::InternalInvariant(format!(
            "combined vector has local minimal polynomial {} instead of {}",
            lz.mu, expected
        )));
    }
    Ok(lz)
}

/// Builds a vector `x` with `mu_{A,x} = mu_A`.
///
/// Starts from `e_1`; while `P = mu_{A,x}` does not annihilate `A`, takes the
/// smallest-index `e_i` with `P(A) e_i != 0` and replaces `x` by the
/// lcm-combination of `x` and `e_i`.
pub fn min_poly_vector<F: Field>(a: &Mat<F>) -> Result<LocalAnnihilator<F>> {
    let n = a.square_dim()?;
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let ctx = a.ctx();
    let mut current = local_min_poly(a, &unit_vector(ctx, n, 0))?;

    // An A-invariant subspace known to be annihilated by the current P. It only
    // grows: each new P is a multiple of the previous one.
    let mut killed = EchelonBasis::new(ctx, n);
    absorb_krylov(a, &mut killed, current.vector.clone())?;

    for i in 1..n {
        if killed.is_full() {
            break;
        }
        let e = unit_vector(ctx, n, i);
        if killed.contains(&e) {
            continue;
        }
        if current.mu.apply(a, &e)?.iter().all(Field::is_zero) {
            absorb_krylov(a, &mut killed, e)?;
            continue;
        }
        let le = local_min_poly(a, &e)?;
        let previous = current.degree();
        current = combine_lcm_vector(a, &current, &le)?;
        if current.degree() <= previous {
            return Err(Error::InternalInvariant("minimal polynomial degree did not increase".into()));
        }
        absorb_krylov(a, &mut killed, current.vector.clone())?;
        absorb_krylov(a, &mut killed, e)?;
    }
    Ok(current)
}

// Adds the cyclic subspace spanned by v, Av, A^2 v, ... to an A-invariant span.
fn absorb_krylov<F: Field>(a: &Mat<F>, span: &mut EchelonBasis<F>, mut v: Vec<F>) -> Result<()> {
    while span.insert(&v).is_independent() {
        v = a.mul_vec(&v)?;
    }
    Ok(())
}

/// The minimal polynomial of a square matrix.
pub fn min_poly<F: Field>(a: &Mat<F>) -> Result<Poly<F>> {
    min_poly_vector(a).map(|l| l.mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField, Rational, RationalField};
    use crate::linalg::{block_diag, companion, oracle::char_poly_cofactor};
    use proptest::prelude::*;

    const Q: RationalField = RationalField;

    fn m(rows: &[&[i64]]) -> Mat<Rational> {
        Mat::from_ints(&Q, rows)
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_i64(&Q, x)).collect()
    }

    fn p(c: &[i64]) -> Poly<Rational> {
        Poly::from_ints(&Q, c)
    }

    #[test]
    fn local_examples() {
        let l = local_min_poly(&Mat::identity(&Q, 2), &v(&[1, 0])).unwrap();
        assert_eq!(l.mu, p(&[-1, 1]));
        let l = local_min_poly(&m(&[&[0, 1], &[0, 0]]), &v(&[0, 1])).unwrap();
        assert_eq!(l.mu, p(&[0, 0, 1]));
        assert_eq!(l.krylov, vec![v(&[0, 1]), v(&[1, 0])]);
        let l = local_min_poly(&m(&[&[1, 0], &[0, 2]]), &v(&[1, 1])).unwrap();
        assert_eq!(l.mu, p(&[2, -3, 1]));
        assert_eq!(local_min_poly(&m(&[&[1]]), &v(&[0])), Err(Error::ZeroVector));
    }

    #[test]
    fn combine_coprime() {
        let a = m(&[&[1, 0], &[0, 2]]);
        let lx = local_min_poly(&a, &v(&[1, 0])).unwrap();
        let ly = local_min_poly(&a, &v(&[0, 1])).unwrap();
        let lz = combine_lcm_vector(&a, &lx, &ly).unwrap();
        assert_eq!(lz.vector, v(&[1, 1]));
        assert_eq!(lz.mu, p(&[2, -3, 1]));
    }

    #[test]
    fn combine_divisible_returns_input() {
        let a = Mat::identity(&Q, 2);
        let lx = local_min_poly(&a, &v(&[1, 0])).unwrap();
        let ly = local_min_poly(&a, &v(&[0, 1])).unwrap();
        let lz = combine_lcm_vector(&a, &lx, &ly).unwrap();
        assert_eq!(lz.mu, p(&[-1, 1]));
        assert!(lz == lx || lz == ly);
    }

    #[test]
    fn combine_with_split_gcd() {
        let a = block_diag(&Q, &[m(&[&[0, 0], &[1, 0]]), m(&[&[1]])]).unwrap();
        let lx = local_min_poly(&a, &v(&[1, 0, 0])).unwrap();
        let ly = local_min_poly(&a, &v(&[0, 1, 1])).unwrap();
        assert_eq!(lx.mu, p(&[0, 0, 1]));
        assert_eq!(ly.mu, p(&[0, -1, 1]));
        let lz = combine_lcm_vector(&a, &lx, &ly).unwrap();
        assert_eq!(lz.vector, v(&[1, 0, 1]));
        assert_eq!(lz.mu, p(&[0, 0, -1, 1]));
        assert_eq!(lz.krylov, vec![v(&[1, 0, 1]), v(&[0, 1, 1]), v(&[0, 0, 1])]);
    }

    #[test]
    fn min_poly_vector_examples() {
        let l = min_poly_vector(&Mat::identity(&Q, 3)).unwrap();
        assert_eq!((l.vector, l.mu), (v(&[1, 0, 0]), p(&[-1, 1])));
        let l = min_poly_vector(&Mat::zero(&Q, 2, 2)).unwrap();
        assert_eq!((l.vector, l.mu), (v(&[1, 0]), p(&[0, 1])));
        let l = min_poly_vector(&m(&[&[1, 0], &[0, 2]])).unwrap();
        assert_eq!((l.vector, l.mu), (v(&[1, 1]), p(&[2, -3, 1])));
        assert_eq!(min_poly_vector(&Mat::<Rational>::zero(&Q, 0, 0)), Err(Error::EmptyMatrix));
    }

    #[test]
    fn min_poly_examples() {
        let c = p(&[1, 1, 0, 1]);
        assert_eq!(min_poly(&companion(&c).unwrap()).unwrap(), c);
        assert_eq!(min_poly(&Mat::identity(&Q, 4)).unwrap(), p(&[-1, 1]));
        assert_eq!(min_poly(&m(&[&[0, 1], &[0, 0]])).unwrap(), p(&[0, 0, 1]));
    }

    fn gf7() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    fn gf7_square(max_n: usize) -> impl Strategy<Value = Mat<Fp>> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0i64..7, n * n).prop_map(move |e| {
                let rows = e.chunks(n).map(|r| r.iter().map(|&x| gf7().element(x)).collect()).collect();
                Mat::from_rows(&gf7(), rows).unwrap()
            })
        })
    }

    // Low-rank-ish matrices with repeated structure exercise the non-trivial branches.
    fn structured(max_n: usize) -> impl Strategy<Value = Mat<Fp>> {
        (gf7_square(max_n), proptest::collection::vec(0i64..3, 8)).prop_map(|(a, d)| {
            let n = a.rows();
            let diag = Mat::diagonal(&gf7(), (0..n).map(|i| gf7().element(d[i % d.len()])).collect());
            let s = crate::linalg::complete_to_basis(&gf7(), &a.column_basis(), n).unwrap();
            diag.conjugate(&s).unwrap()
        })
    }

    fn vector(n: usize, seed: &[i64]) -> Vec<Fp> {
        (0..n).map(|i| gf7().element(seed[i % seed.len()])).collect()
    }

    proptest! {
        #[test]
        fn local_annihilator_is_minimal(a in prop_oneof![gf7_square(8), structured(8)], seed in proptest::collection::vec(0i64..7, 1..9)) {
            let x = vector(a.rows(), &seed);
            prop_assume!(x.iter().any(|c| !c.is_zero()));
            let l = local_min_poly(&a, &x).unwrap();
            prop_assert!(l.mu.is_monic());
            prop_assert_eq!(l.mu.degree(), Some(l.krylov.len()));
            prop_assert!(l.mu.apply(&a, &x).unwrap().iter().all(Field::is_zero));
            prop_assert_eq!(Mat::from_columns(&gf7(), a.rows(), &l.krylov).unwrap().rank(), l.krylov.len());
        }

        #[test]
        fn annihilators_are_multiples(a in structured(6), seed in proptest::collection::vec(0i64..7, 1..7), c in proptest::collection::vec(0i64..7, 0..8)) {
            let x = vector(a.rows(), &seed);
            prop_assume!(x.iter().any(|c| !c.is_zero()));
            let l = local_min_poly(&a, &x).unwrap();
            prop_assume!(c.len() <= a.rows() + 1);
            let candidates = [Poly::from_ints(&gf7(), &c), &Poly::from_ints(&gf7(), &c) * &l.mu];
            for cand in candidates {
                let kills = cand.apply(&a, &x).unwrap().iter().all(Field::is_zero);
                prop_assert_eq!(kills, l.mu.divides(&cand));
            }
        }

        #[test]
        fn min_poly_is_refined_cayley_hamilton(a in prop_oneof![gf7_square(6), structured(6)]) {
            let mu = min_poly(&a).unwrap();
            prop_assert!(mu.eval_matrix(&a).unwrap().is_zero());
            let chi = char_poly_cofactor(&a).unwrap();
            prop_assert!(mu.divides(&chi));
            prop_assert!(chi.divides(&mu.pow(a.rows() as u32)));
        }

        #[test]
        fn min_poly_is_similarity_invariant((a, b) in structured(6).prop_flat_map(|a| {
            let n = a.rows();
            (Just(a), proptest::collection::vec(0i64..7, n * n).prop_map(move |e| {
                Mat::from_rows(&gf7(), e.chunks(n).map(|r| r.iter().map(|&x| gf7().element(x)).collect()).collect()).unwrap()
            }))
        })) {
            let n = a.rows();
            let s = crate::linalg::complete_to_basis(&gf7(), &b.column_basis(), n).unwrap();
            prop_assert_eq!(min_poly(&a).unwrap(), min_poly(&a.conjugate(&s).unwrap()).unwrap());
        }
    }
}
