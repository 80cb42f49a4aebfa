//! Exact computation of skew Schur and skew hook Schur polynomials, their
//! specializations at roots of unity, t-core / t-quotient decompositions,
//! ribbon (super)tableaux and the quotient bijections between them.
//!
//! Everything is exact: integer coefficients are arbitrary precision and
//! roots of unity live in cyclotomic integer rings. The [`verify`] module
//! turns the factorization and cyclic sieving statements into checkable
//! procedures over small instances.

pub mod error;
pub mod partitions;
pub mod polyring;
pub mod schur;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partitions::{Cell, Partition, SkewShape};
