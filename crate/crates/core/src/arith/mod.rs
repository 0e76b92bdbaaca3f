//! Exact coefficient arithmetic: rationals and cyclotomic numbers.

mod cyclotomic;
mod radical;
mod univariate;

pub use cyclotomic::{
    cyclotomic_polynomial, euler_phi, field_arith, CyclotomicNumber, FieldOp, Rational,
    DEFAULT_CONDUCTOR, DEFAULT_MAX_CONDUCTOR,
};
pub use radical::{
    all_nth_roots, is_root_of_unity, nth_root, rational_nth_root, split_root_of_unity,
    sqrt_rational,
};
pub use univariate::{roots_with_multiplicity, UniPoly};

/// `true` iff `a` represents zero.
pub fn is_zero(a: &CyclotomicNumber) -> bool {
    a.is_zero()
}
