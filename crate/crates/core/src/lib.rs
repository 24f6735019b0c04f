//! Exact computations on loopless matroids: lattices of flats, flag counts,
//! Chow polynomials, moment statistics of their coefficients, matroidal Chern
//! numbers, and cone certificates for flag-count inequalities.
//!
//! All arithmetic is exact. Counts are [`Integer`]s and every derived quantity
//! is a [`Rational`]; nothing in the mathematical core touches floating point.
//!
//! ```
//! use chowlab::{chow, Matroid};
//!
//! let fano = Matroid::projective_geometry(2, 2).unwrap();
//! let h = chow::chow_via_flags(&fano);
//! assert_eq!(h.to_string(), "1 + 8x + x^2");
//! ```

pub mod bitset;
pub mod chern;
pub mod chow;
pub mod cmfs;
pub mod combinat;
pub mod cone;
pub mod corpus;
mod error;
pub mod finite_field;
pub mod flags;
pub mod io;
pub mod json;
pub mod lattice;
pub mod matroid;
pub mod moments;
pub mod poly;
pub mod series;
pub mod simplex;
pub mod verify;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use flags::{BlockSizes, FlagTable, RankIndexSet};
pub use lattice::FlatLattice;
pub use matroid::{Matroid, Minor};
pub use poly::UniPoly;

/// Arbitrary-precision integer used for counts and Chern numbers.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational used for every derived quantity.
pub type Rational = num_rational::BigRational;
