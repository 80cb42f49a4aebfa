//! Supertableaux, ribbon supertableaux and the quotient bijections.
//!
//! The alphabet is `1 < … < n < 1' < … < m'`. Unprimed letters may repeat
//! along a row and primed letters down a column.

mod bijection;
mod entry;
mod ribbon;
mod supertableau;

pub use bijection::{
    quotient_bijection_forward, quotient_bijection_inverse, quotient_cells, semistandard_quotient_inverse,
    semistandard_quotient_map, QuotientPair,
};
pub use entry::SuperEntry;
pub use ribbon::{
    count_ribbon_chains, enumerate_ribbon_chains, enumerate_standard_ribbon_chains, ribbon_position, standardize,
    RibbonChain,
};
pub use supertableau::{
    count_supertableaux, enumerate_standard_supertableaux, enumerate_supertableaux, for_each_supertableau, SuperTableau,
};
