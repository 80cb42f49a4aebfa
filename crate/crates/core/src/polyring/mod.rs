//! Exact arithmetic: integer and cyclotomic coefficients, sparse multivariate
//! polynomials, univariate `q`-polynomials and their values at roots of unity.

mod arith;
mod coefficient;
mod cyclotomic;
mod det;
mod qpoly;
mod sparse;

pub use arith::{divisors, is_prime, mobius};
pub use coefficient::{bigint_from_json, bigint_to_json, Coefficient};
pub(crate) use coefficient::{serialize_bigint, serialize_display, serialize_opt_bigint};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicInteger, CyclotomicRing};
pub use det::determinant;
pub use qpoly::{evaluate_at_root, QPolynomial, RootValue};
pub use sparse::{named_variables, specialize, xy_variables, Monomial, SparsePolynomial, Variables};
