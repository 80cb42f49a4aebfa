//! Partitions, skew shapes, beta-sets, border strips, t-cores, t-quotients
//! and the sign of the residue-sorting permutation.

mod beta;
mod shape;
mod strip;

pub use beta::{
    beta_set, permutation_sign, residue_counts, sigma_permutation, sigma_sign, t_core, t_quotient, BetaSet,
    QuotientDecomposition,
};
pub use shape::{parse_shape_pair, partitions_of, partitions_up_to, subpartitions, Cell, Partition, SkewShape};
pub use strip::{
    addable_strips, enumerate_border_strips, height_parity, removable_strips, removal_height_parities, BorderStrip,
};
