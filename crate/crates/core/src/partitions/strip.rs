//! Border strips (ribbons): connected skew shapes without a 2×2 block.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::beta::{beta_set, t_core, BetaSet};
use super::shape::{Cell, Partition, SkewShape};
use crate::error::{Error, Result};

/// A border strip stored by its cells, sorted row-major.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BorderStrip {
    cells: Vec<Cell>,
}

impl BorderStrip {
    /// Validates that `cells` are nonempty, edge-connected and contain no
    /// 2×2 block.
    pub fn new(mut cells: Vec<Cell>) -> Result<Self> {
        cells.sort();
        cells.dedup();
        if cells.is_empty() {
            return Err(Error::InvalidStrip("no cells".into()));
        }
        let set: BTreeSet<Cell> = cells.iter().copied().collect();
        for c in &cells {
            let block = [Cell::new(c.row, c.col + 1), Cell::new(c.row + 1, c.col), Cell::new(c.row + 1, c.col + 1)];
            if block.iter().all(|b| set.contains(b)) {
                return Err(Error::InvalidStrip(format!("2x2 block at {c}")));
            }
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![cells[0]];
        while let Some(c) = stack.pop() {
            if !seen.insert(c) {
                continue;
            }
            let mut neighbours = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
            if c.row > 1 {
                neighbours.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                neighbours.push(Cell::new(c.row, c.col - 1));
            }
            stack.extend(neighbours.into_iter().filter(|n| set.contains(n) && !seen.contains(n)));
        }
        if seen.len() != cells.len() {
            return Err(Error::InvalidStrip("cells are not connected".into()));
        }
        Ok(BorderStrip { cells })
    }

    /// The strip `outer / inner`, validated.
    pub fn between(outer: &Partition, inner: &Partition) -> Result<Self> {
        let shape = SkewShape::new(outer.clone(), inner.clone())?;
        BorderStrip::new(shape.cells())
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Number of rows occupied, minus one.
    pub fn height(&self) -> usize {
        let rows: BTreeSet<usize> = self.cells.iter().map(|c| c.row).collect();
        rows.len() - 1
    }

    /// Largest content `col - row` over the cells, i.e. the content of the
    /// top-right cell.
    pub fn position(&self) -> i64 {
        self.cells.iter().map(Cell::content).max().expect("strips are nonempty")
    }
}

/// Strip removals found by moving one bead of the beta-set down by `t`.
fn bead_moves_down(lam: &Partition, t: usize) -> Vec<(BorderStrip, Partition)> {
    let beta = beta_set(lam, lam.length()).expect("own length always fits");
    let mut out = Vec::new();
    for &b in beta.entries() {
        if b >= t && !beta.contains(b - t) {
            let mut entries = beta.entries().to_vec();
            entries.retain(|&e| e != b);
            entries.push(b - t);
            let nu = BetaSet::from_entries(entries).expect("distinct by construction").to_partition();
            let strip = BorderStrip::between(lam, &nu).expect("a bead move removes a border strip");
            out.push((strip, nu));
        }
    }
    out.sort();
    out
}

/// All border strips of size `t` whose removal from `λ` leaves a partition,
/// in lexicographic order of their cell lists.
pub fn enumerate_border_strips(lam: &Partition, t: usize) -> Vec<BorderStrip> {
    if t == 0 {
        return Vec::new();
    }
    bead_moves_down(lam, t).into_iter().map(|(s, _)| s).collect()
}

/// Removable size-`t` strips together with the partition left behind.
pub fn removable_strips(lam: &Partition, t: usize) -> Vec<(BorderStrip, Partition)> {
    if t == 0 {
        return Vec::new();
    }
    bead_moves_down(lam, t)
}

/// Size-`t` strips that can be added to `nu`, with the enlarged partition.
pub fn addable_strips(nu: &Partition, t: usize) -> Vec<(BorderStrip, Partition)> {
    if t == 0 {
        return Vec::new();
    }
    let ell = nu.length() + t;
    let beta = beta_set(nu, ell).expect("padding never shortens");
    let mut out = Vec::new();
    for &b in beta.entries() {
        if !beta.contains(b + t) {
            let mut entries = beta.entries().to_vec();
            entries.retain(|&e| e != b);
            entries.push(b + t);
            let lam = BetaSet::from_entries(entries).expect("distinct by construction").to_partition();
            let strip = BorderStrip::between(&lam, nu).expect("a bead move adds a border strip");
            out.push((strip, lam));
        }
    }
    out.sort();
    out
}

/// Parities of the total height over every maximal sequence of size-`t`
/// strip removals leading from `λ` down to `μ`. Empty when no such sequence
/// exists.
pub fn removal_height_parities(lam: &Partition, mu: &Partition, t: usize) -> BTreeSet<u8> {
    fn rec(nu: &Partition, mu: &Partition, t: usize, memo: &mut BTreeMap<Partition, BTreeSet<u8>>) -> BTreeSet<u8> {
        if nu == mu {
            return BTreeSet::from([0]);
        }
        if let Some(hit) = memo.get(nu) {
            return hit.clone();
        }
        let mut out = BTreeSet::new();
        if nu.size() >= mu.size() + t {
            for (strip, rest) in removable_strips(nu, t) {
                if rest.contains(mu) {
                    for parity in rec(&rest, mu, t, memo) {
                        out.insert(((strip.height() % 2) as u8) ^ parity);
                    }
                }
            }
        }
        memo.insert(nu.clone(), out.clone());
        out
    }
    if t == 0 || !lam.contains(mu) {
        return BTreeSet::new();
    }
    rec(lam, mu, t, &mut BTreeMap::new())
}

/// Parity of the summed strip heights along a removal path from `λ` to `μ`.
/// Errors when the `t`-cores differ or no removal path exists.
pub fn height_parity(lam: &Partition, mu: &Partition, t: usize) -> Result<u8> {
    if t == 0 {
        return Err(Error::InvalidModulus { t, min: 1 });
    }
    if t_core(lam, t) != t_core(mu, t) {
        return Err(Error::CoreMismatch { outer: lam.to_string(), inner: mu.to_string(), t });
    }
    let parities = removal_height_parities(lam, mu, t);
    match parities.len() {
        0 => Err(Error::NoRemovalPath { outer: lam.to_string(), inner: mu.to_string(), t }),
        1 => Ok(*parities.iter().next().unwrap()),
        _ => Err(Error::Domain(format!("removal paths from ({lam}) to ({mu}) disagree on height parity"))),
    }
}
