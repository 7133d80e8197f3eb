//! Exact realizability of sign patterns by hyperbolic polynomials, and the
//! orderings of root moduli those realizations can exhibit.
//!
//! Everything here is exact rational arithmetic; there is no floating point
//! in any decision path. The crate is `no_std` and only needs `alloc`.

#![no_std]
extern crate alloc;

pub mod algebra;
pub mod classify;
pub mod construct;
pub mod descartes;
pub mod error;
pub mod ordering;

pub use algebra::{
    elementary_symmetric, expand_from_roots, MonicPolynomial, Polynomial, Rational,
    SignedRootMultiset,
};
pub use error::{Error, Result};
