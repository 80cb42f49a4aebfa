//! Beta-sets and the core / quotient decomposition read off from them.
//!
//! A partition `λ` with at most `ℓ` parts is encoded by the strictly
//! decreasing sequence `β_i = λ_i + ℓ - i`. Sorting its entries into residue
//! classes mod `t` yields the `t`-core, the `t`-quotient and the sorting
//! permutation `σ_λ` whose sign appears in the root-of-unity factorization.

use serde::Serialize;

use super::shape::Partition;
use crate::error::{Error, Result};

/// Strictly decreasing first-column hook data of a partition at a declared
/// length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BetaSet {
    entries: Vec<usize>,
}

impl BetaSet {
    /// Accepts any set of distinct entries; they are sorted decreasingly.
    pub fn from_entries(mut entries: Vec<usize>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Domain(format!("beta-set entries must be distinct: {entries:?}")));
        }
        Ok(BetaSet { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn declared_length(&self) -> usize {
        self.entries.len()
    }

    pub fn contains(&self, value: usize) -> bool {
        self.entries.binary_search_by(|e| value.cmp(e)).is_ok()
    }

    /// Recovers `λ_i = β_i - ℓ + i`.
    pub fn to_partition(&self) -> Partition {
        let ell = self.entries.len();
        let parts = self.entries.iter().enumerate().map(|(i, &b)| b + i + 1 - ell).collect();
        Partition::from_sorted(parts)
    }

    pub fn residue_counts(&self, t: usize) -> Vec<usize> {
        residue_counts(self, t)
    }
}

pub fn beta_set(lam: &Partition, ell: usize) -> Result<BetaSet> {
    let parts = lam.padded(ell)?;
    let entries = parts.iter().enumerate().map(|(i, &p)| p + ell - i - 1).collect();
    Ok(BetaSet { entries })
}

/// `counts[i]` is the number of beta-set entries congruent to `i` mod `t`.
pub fn residue_counts(beta: &BetaSet, t: usize) -> Vec<usize> {
    assert!(t >= 1, "modulus must be positive");
    let mut counts = vec![0; t];
    for &b in &beta.entries {
        counts[b % t] += 1;
    }
    counts
}

fn check_modulus(t: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::InvalidModulus { t, min: 1 });
    }
    Ok(())
}

/// Beta-set of the core: the entries `tj + i` for `j < n_i`.
fn core_beta(counts: &[usize]) -> BetaSet {
    let t = counts.len();
    let mut entries: Vec<usize> =
        counts.iter().enumerate().flat_map(|(i, &n)| (0..n).map(move |j| t * j + i)).collect();
    entries.sort_unstable_by(|a, b| b.cmp(a));
    BetaSet { entries }
}

/// The `t`-core, read off from the residue counts of the beta-set. It does
/// not depend on the declared length, so the partition's own length is used.
pub fn t_core(lam: &Partition, t: usize) -> Partition {
    assert!(t >= 1, "modulus must be positive");
    let beta = beta_set(lam, lam.length()).expect("own length always fits");
    core_beta(&residue_counts(&beta, t)).to_partition()
}

/// Parts of the beta-set congruent to `i` mod `t`, written as `t·b + i`,
/// returned as the decreasing list of `b`.
fn runner(beta: &BetaSet, t: usize, i: usize) -> Vec<usize> {
    beta.entries.iter().filter(|&&b| b % t == i).map(|&b| b / t).collect()
}

/// The ordered tuple `(λ^(0), …, λ^(t-1))` at declared length `ell`.
pub fn t_quotient(lam: &Partition, t: usize, ell: usize) -> Result<Vec<Partition>> {
    check_modulus(t)?;
    let beta = beta_set(lam, ell)?;
    Ok((0..t).map(|i| BetaSet { entries: runner(&beta, t, i) }.to_partition()).collect())
}

/// `σ_λ` in one-line notation (1-indexed): position `j` of the residue-sorted
/// arrangement holds the index of the beta-set entry placed there. Blocks are
/// residues `0, 1, …, t-1`, each in decreasing order.
pub fn sigma_permutation(lam: &Partition, t: usize, ell: usize) -> Result<Vec<usize>> {
    check_modulus(t)?;
    let beta = beta_set(lam, ell)?;
    let mut perm = Vec::with_capacity(ell);
    for q in 0..t {
        // beta entries are already decreasing, so indices come out in order
        perm.extend(beta.entries.iter().enumerate().filter(|(_, &b)| b % t == q).map(|(k, _)| k + 1));
    }
    Ok(perm)
}

/// Sign of a permutation given in one-line notation, by inversion count.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn sigma_sign(lam: &Partition, t: usize, ell: usize) -> Result<i8> {
    Ok(permutation_sign(&sigma_permutation(lam, t, ell)?))
}

/// Everything the beta-set says about `λ` at modulus `t` and length `ell`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientDecomposition {
    pub partition: Partition,
    pub t: usize,
    pub ell: usize,
    pub beta: BetaSet,
    pub residue_counts: Vec<usize>,
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub sigma_sign: i8,
}

impl QuotientDecomposition {
    pub fn new(lam: &Partition, t: usize, ell: usize) -> Result<Self> {
        check_modulus(t)?;
        let beta = beta_set(lam, ell)?;
        let residue_counts = residue_counts(&beta, t);
        let core = core_beta(&residue_counts).to_partition();
        let quotient = (0..t).map(|i| BetaSet { entries: runner(&beta, t, i) }.to_partition()).collect();
        let sigma_sign = sigma_sign(lam, t, ell)?;
        Ok(QuotientDecomposition { partition: lam.clone(), t, ell, beta, residue_counts, core, quotient, sigma_sign })
    }

    /// Inverse of the decomposition: rebuilds the partition whose beta-set
    /// at length `Σ counts` has runner `i` encoding `quotient[i]`.
    pub fn reconstruct(counts: &[usize], quotient: &[Partition]) -> Result<Partition> {
        let t = counts.len();
        check_modulus(t)?;
        if quotient.len() != t {
            return Err(Error::Domain(format!("expected {t} quotient partitions, got {}", quotient.len())));
        }
        let mut entries = Vec::with_capacity(counts.iter().sum());
        for (i, (q, &n_i)) in quotient.iter().zip(counts).enumerate() {
            let runner_beta = beta_set(q, n_i)?;
            entries.extend(runner_beta.entries.iter().map(|&b| t * b + i));
        }
        Ok(BetaSet::from_entries(entries)?.to_partition())
    }
}
