//! Exact rational normal forms.
//!
//! Computes the rational normal form (Frobenius form) `R` of a square matrix
//! `A` over an exact field together with an invertible `T` such that
//! `T^-1 A T = R`, using field operations only: matrix and polynomial
//! multiplication, Gaussian elimination and Euclid's algorithm. Built on top
//! of it are minimal and characteristic polynomials, a similarity decision
//! and the Jordan form of nilpotent matrices.
//!
//! All algorithms are generic over [`Field`]; [`Rational`] and [`Fp`] are the
//! concrete fields.
//!
//! ```
//! use frobenius::{rnf, QMat, RationalField};
//!
//! let a = QMat::from_ints(&RationalField, &[&[1, 0], &[0, 2]]);
//! let r = rnf(&a).unwrap();
//! assert_eq!(r.factors[0].to_string(), "X^2 - 3*X + 2");
//! assert_eq!(a.conjugate(&r.transform).unwrap(), r.rnf);
//! ```

pub mod canonical;
pub mod error;
pub mod field;
pub mod linalg;
pub mod minpoly;
pub mod poly;

pub use canonical::{char_poly, invariant_factors, is_similar, nilpotent_jnf, rnf, JnfResult, RnfResult, Similarity};
pub use error::{Error, Result};
pub use field::{Counted, Field, FieldCtx, Fp, PrimeField, Rational, RationalField};
pub use linalg::{block_diag, companion, complete_to_basis, Mat};
pub use minpoly::{combine_lcm_vector, local_min_poly, min_poly, min_poly_vector, LocalAnnihilator};
pub use poly::{gcd, lcm, split_gcd, GcdSplit, Poly};

/// Matrices over the rationals.
pub type QMat = Mat<Rational>;
/// Polynomials over the rationals.
pub type QPoly = Poly<Rational>;
/// Matrices over a prime field.
pub type FpMat = Mat<Fp>;
/// Polynomials over a prime field.
pub type FpPoly = Poly<Fp>;
