//! Checks of the factorization, counting and sieving identities, one
//! instance at a time or as parallel sweeps.

mod counts;
mod csp;
mod factorization;
mod sweep;

pub use counts::{count_ribbon_identity, divisibility_check, DivisibilityReport, RibbonCountReport};
pub use csp::{
    csp_analyze, root_value_by_quotients, verify_csp_skew, verify_csp_super, CspReport, CspVerdict, OrbitCount,
};
pub use factorization::{
    check_h_specialization, verify_factorization_schur, verify_factorization_super, Branch, FactorizationContext,
    FactorizationVerdict, HSpecialization,
};
pub use sweep::{run_sweep, shape_pairs, Selector, SweepConfig, SweepRecord, SweepReport};
