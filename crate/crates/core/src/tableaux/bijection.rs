//! The quotient correspondence between `t`-ribbon supertableaux of `λ/μ`
//! and `t`-tuples of supertableaux of the quotient shapes `λ^(i)/μ^(i)`.
//!
//! Adding a strip to `ν` moves one bead of the beta-set (at length `tn`) up
//! by `t` on runner `i`, which adds one cell `x` to `ν^(i)`. The strip and the
//! cell are related by `pos(ξ) = t(c(x) + n_i - n) + i`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::entry::SuperEntry;
use super::ribbon::RibbonChain;
use super::supertableau::SuperTableau;
use crate::error::{Error, Result};
use crate::partitions::{t_quotient, Cell, Partition, QuotientDecomposition, SkewShape};

/// Decompositions of `λ` and `μ` at the common length `ell = tn`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientPair {
    pub t: usize,
    pub n: usize,
    pub outer: QuotientDecomposition,
    pub inner: QuotientDecomposition,
}

impl QuotientPair {
    /// Requires `μ ⊆ λ`, both of length at most `tn`, with equal `t`-cores.
    pub fn new(lam: &Partition, mu: &Partition, t: usize, n: usize) -> Result<Self> {
        if !lam.contains(mu) {
            return Err(Error::NotContained { outer: lam.to_string(), inner: mu.to_string() });
        }
        let outer = QuotientDecomposition::new(lam, t, t * n)?;
        let inner = QuotientDecomposition::new(mu, t, t * n)?;
        if outer.residue_counts != inner.residue_counts {
            return Err(Error::CoreMismatch { outer: lam.to_string(), inner: mu.to_string(), t });
        }
        Ok(QuotientPair { t, n, outer, inner })
    }

    /// The smallest `n` with `ℓ(λ) ≤ tn`.
    pub fn minimal(lam: &Partition, mu: &Partition, t: usize) -> Result<Self> {
        let n = lam.length().div_ceil(t.max(1));
        QuotientPair::new(lam, mu, t, n)
    }

    pub fn residue_counts(&self) -> &[usize] {
        &self.outer.residue_counts
    }

    /// `λ^(i)/μ^(i)` for each runner; an error when some pair is not nested,
    /// in which case no ribbon tableau exists.
    pub fn shapes(&self) -> Result<Vec<SkewShape>> {
        self.outer
            .quotient
            .iter()
            .zip(&self.inner.quotient)
            .map(|(o, i)| SkewShape::new(o.clone(), i.clone()))
            .collect()
    }

    /// `t(c(x) + n_i - n) + i`.
    pub fn transport_position(&self, i: usize, cell: Cell) -> i64 {
        let t = self.t as i64;
        t * (cell.content() + self.residue_counts()[i] as i64 - self.n as i64) + i as i64
    }

    fn check_chain(&self, chain: &RibbonChain) -> Result<()> {
        if chain.t() != self.t
            || chain.shape().outer() != &self.outer.partition
            || chain.shape().inner() != &self.inner.partition
        {
            return Err(Error::Domain(format!(
                "chain of shape {} with t = {} does not match the pair {}/{} with t = {}",
                chain.shape(),
                chain.t(),
                self.outer.partition,
                self.inner.partition,
                self.t
            )));
        }
        Ok(())
    }
}

/// For each strip of the chain, the runner `i` and the cell it adds to the
/// `i`-th quotient.
pub fn quotient_cells(chain: &RibbonChain, pair: &QuotientPair) -> Result<Vec<(usize, Cell)>> {
    pair.check_chain(chain)?;
    let ell = pair.t * pair.n;
    let mut prev = pair.inner.quotient.clone();
    let mut out = Vec::with_capacity(chain.len());
    for nu in &chain.partitions()[1..] {
        let next = t_quotient(nu, pair.t, ell)?;
        let changed: Vec<usize> = (0..pair.t).filter(|&i| prev[i] != next[i]).collect();
        let [i] = changed[..] else {
            return Err(Error::Domain("a strip step must change exactly one quotient".into()));
        };
        let row = (1..=next[i].length())
            .find(|&r| next[i].part(r) != prev[i].part(r))
            .expect("changed quotients differ in some row");
        out.push((i, Cell::new(row, next[i].part(row))));
        prev = next;
    }
    Ok(out)
}

/// Splits a semistandard ribbon supertableau into its quotient tableaux.
/// Weights multiply: `Π wt(T_i) = wt(T)`.
pub fn semistandard_quotient_map(chain: &RibbonChain, pair: &QuotientPair) -> Result<Vec<SuperTableau>> {
    let shapes = pair.shapes()?;
    let cells = quotient_cells(chain, pair)?;
    let mut fillings: Vec<BTreeMap<Cell, SuperEntry>> = vec![BTreeMap::new(); pair.t];
    for ((i, cell), &label) in cells.into_iter().zip(chain.labels()) {
        fillings[i].insert(cell, label);
    }
    shapes.into_iter().zip(&fillings).map(|(s, f)| SuperTableau::from_cells(s, f)).collect()
}

/// The standard case of [`semistandard_quotient_map`].
pub fn quotient_bijection_forward(chain: &RibbonChain, pair: &QuotientPair) -> Result<Vec<SuperTableau>> {
    if !chain.is_standard() {
        return Err(Error::Domain("the chain is not standard".into()));
    }
    semistandard_quotient_map(chain, pair)
}

/// Rebuilds the ribbon supertableau from its quotient tableaux. Cells are
/// added in label order; equal unprimed labels by increasing transported
/// position and equal primed labels by decreasing transported position.
pub fn semistandard_quotient_inverse(tableaux: &[SuperTableau], pair: &QuotientPair) -> Result<RibbonChain> {
    let shapes = pair.shapes()?;
    if tableaux.len() != pair.t {
        return Err(Error::Domain(format!("expected {} tableaux, got {}", pair.t, tableaux.len())));
    }
    for (i, (tab, shape)) in tableaux.iter().zip(&shapes).enumerate() {
        if tab.shape() != shape {
            return Err(Error::Domain(format!("tableau {i} has shape {}, expected {shape}", tab.shape())));
        }
    }
    let mut cells: Vec<(SuperEntry, i64, usize, Cell)> = Vec::new();
    for (i, tab) in tableaux.iter().enumerate() {
        for (cell, label) in tab.iter() {
            let key = pair.transport_position(i, cell);
            cells.push((label, if label.primed { -key } else { key }, i, cell));
        }
    }
    cells.sort();
    let mut quotient = pair.inner.quotient.clone();
    let mut partitions = vec![pair.inner.partition.clone()];
    let mut labels = Vec::with_capacity(cells.len());
    for (label, _, i, cell) in cells {
        let mut parts = quotient[i].parts().to_vec();
        if cell.row > parts.len() + 1 || parts.get(cell.row - 1).copied().unwrap_or(0) + 1 != cell.col {
            return Err(Error::Domain(format!("cell {cell} of tableau {i} is not addable in label order")));
        }
        if cell.row > parts.len() {
            parts.push(0);
        }
        parts[cell.row - 1] += 1;
        quotient[i] = Partition::new(parts)
            .map_err(|_| Error::Domain(format!("cell {cell} of tableau {i} is not addable in label order")))?;
        partitions.push(QuotientDecomposition::reconstruct(pair.residue_counts(), &quotient)?);
        labels.push(label);
    }
    RibbonChain::new(pair.t, partitions, labels)
}

/// The inverse of [`quotient_bijection_forward`]; entries must be distinct
/// across the whole tuple.
pub fn quotient_bijection_inverse(tableaux: &[SuperTableau], pair: &QuotientPair) -> Result<RibbonChain> {
    let mut seen = std::collections::BTreeSet::new();
    for tab in tableaux {
        for &e in tab.entries() {
            if !seen.insert(e) {
                return Err(Error::Domain(format!("entry {e} appears more than once")));
            }
        }
    }
    semistandard_quotient_inverse(tableaux, pair)
}
