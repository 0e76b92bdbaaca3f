//! Exact invariants of finitely determined map germs (C^2,0) -> (C^3,0).
//!
//! The crate is layered bottom-up: [`arith`] supplies exact cyclotomic
//! coefficients, [`poly`] sparse polynomials, [`local`] standard bases in the
//! local ring, [`puiseux`] branch expansions of plane curves, [`germ`] the
//! invariant pipeline and the built-in catalog, and [`linking`] the integer
//! framing calculus.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod error;
pub mod germ;
pub mod linking;
pub mod local;
pub mod poly;
pub mod puiseux;
pub mod series;

pub use arith::{CyclotomicNumber, Rational};
pub use poly::{LocalPolynomial, Monomial, Poly};
pub use error::{Error, Result};
