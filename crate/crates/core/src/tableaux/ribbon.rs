//! Ribbon (super)tableaux as chains of partitions, each step adding one
//! border strip of size `t` labelled by a letter of `[n] ∪ [m]`.
//!
//! Labels weakly increase along the chain. Strips sharing an unprimed label
//! are added in strictly increasing position, strips sharing a primed label
//! in strictly decreasing position, so each filling has exactly one chain.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use serde_json::{json, Value};

use super::entry::SuperEntry;
use crate::error::{Error, Result};
use crate::partitions::{addable_strips, t_core, BorderStrip, Cell, Partition, SkewShape};
use crate::polyring::Monomial;

/// `max(col - row)` over the strip.
pub fn ribbon_position(strip: &BorderStrip) -> i64 {
    strip.position()
}

/// Whether a strip with `(label, pos)` may directly follow one with
/// `(prev_label, prev_pos)`.
fn follows(prev: (SuperEntry, i64), next: (SuperEntry, i64)) -> bool {
    match prev.0.cmp(&next.0) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal if next.0.primed => next.1 < prev.1,
        std::cmp::Ordering::Equal => next.1 > prev.1,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonChain {
    t: usize,
    shape: SkewShape,
    partitions: Vec<Partition>,
    labels: Vec<SuperEntry>,
    strips: Vec<BorderStrip>,
}

impl RibbonChain {
    /// Validates that consecutive partitions differ by a size-`t` border
    /// strip and that the labels satisfy the ordering rules.
    pub fn new(t: usize, partitions: Vec<Partition>, labels: Vec<SuperEntry>) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidModulus { t, min: 1 });
        }
        if partitions.is_empty() || partitions.len() != labels.len() + 1 {
            return Err(Error::InvalidChain(format!(
                "{} partitions cannot carry {} labels",
                partitions.len(),
                labels.len()
            )));
        }
        let mut strips = Vec::with_capacity(labels.len());
        for (k, w) in partitions.windows(2).enumerate() {
            let strip =
                BorderStrip::between(&w[1], &w[0]).map_err(|e| Error::InvalidChain(format!("step {}: {e}", k + 1)))?;
            if strip.size() != t {
                return Err(Error::InvalidChain(format!("step {} adds {} cells, not {t}", k + 1, strip.size())));
            }
            strips.push(strip);
        }
        for k in 1..labels.len() {
            let prev = (labels[k - 1], strips[k - 1].position());
            let next = (labels[k], strips[k].position());
            if !follows(prev, next) {
                return Err(Error::InvalidChain(format!(
                    "label {} at position {} cannot follow label {} at position {}",
                    next.0, next.1, prev.0, prev.1
                )));
            }
        }
        let shape = SkewShape::new(partitions.last().unwrap().clone(), partitions[0].clone())?;
        Ok(RibbonChain { t, shape, partitions, labels, strips })
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn labels(&self) -> &[SuperEntry] {
        &self.labels
    }

    pub fn strips(&self) -> &[BorderStrip] {
        &self.strips
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn is_standard(&self) -> bool {
        self.labels.windows(2).all(|w| w[0] != w[1])
    }

    pub fn fits(&self, n: usize, m: usize) -> bool {
        self.labels.iter().all(|l| l.fits(n, m))
    }

    /// One factor `x_i` or `y_j` per strip.
    pub fn weight(&self, n: usize, m: usize) -> Monomial {
        let mut exps = vec![0u32; n + m];
        for l in &self.labels {
            exps[l.index(n)] += 1;
        }
        Monomial::new(exps)
    }

    /// Label of every cell of the skew shape.
    pub fn filling(&self) -> BTreeMap<Cell, SuperEntry> {
        let mut out = BTreeMap::new();
        for (strip, &label) in self.strips.iter().zip(&self.labels) {
            for &c in strip.cells() {
                out.insert(c, label);
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "t": self.t,
            "shape": self.shape.to_string(),
            "partitions": self.partitions,
            "labels": self.labels,
        })
    }
}

impl Serialize for RibbonChain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Renumbers the labels to distinct ones keeping their relative order:
/// unprimed labels become `1, 2, …` and primed labels `1', 2', …` in chain
/// order. The chain order already lists equal unprimed labels by increasing
/// position and equal primed labels by decreasing position.
pub fn standardize(chain: &RibbonChain) -> RibbonChain {
    let (mut u, mut p) = (0, 0);
    let labels = chain
        .labels
        .iter()
        .map(|l| {
            if l.primed {
                p += 1;
                SuperEntry::primed(p)
            } else {
                u += 1;
                SuperEntry::unprimed(u)
            }
        })
        .collect();
    RibbonChain { labels, ..chain.clone() }
}

/// Strips of size `t` addable to `nu` that stay inside `outer`.
fn steps_within(nu: &Partition, outer: &Partition, t: usize) -> Vec<(BorderStrip, Partition)> {
    addable_strips(nu, t).into_iter().filter(|(_, next)| outer.contains(next)).collect()
}

fn no_chain_possible(shape: &SkewShape, t: usize) -> bool {
    t == 0 || !shape.size().is_multiple_of(t) || t_core(shape.outer(), t) != t_core(shape.inner(), t)
}

/// Every semistandard `t`-ribbon supertableau of `shape` over `[n] ∪ [m]`.
pub fn enumerate_ribbon_chains(shape: &SkewShape, t: usize, n: usize, m: usize) -> Vec<RibbonChain> {
    let mut out = Vec::new();
    if no_chain_possible(shape, t) {
        return out;
    }
    let mut parts = vec![shape.inner().clone()];
    let mut labels = Vec::new();
    let mut positions = Vec::new();
    extend_chain(shape, t, n, m, &mut parts, &mut labels, &mut positions, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn extend_chain(
    shape: &SkewShape,
    t: usize,
    n: usize,
    m: usize,
    parts: &mut Vec<Partition>,
    labels: &mut Vec<SuperEntry>,
    positions: &mut Vec<i64>,
    out: &mut Vec<RibbonChain>,
) {
    let nu = parts.last().unwrap().clone();
    if &nu == shape.outer() {
        let chain = RibbonChain::new(t, parts.clone(), labels.clone()).expect("enumerated chains are valid");
        out.push(chain);
        return;
    }
    let first = labels.last().map_or(0, |l| l.index(n));
    for idx in first..n + m {
        let label = SuperEntry::from_index(idx, n);
        for (strip, next) in steps_within(&nu, shape.outer(), t) {
            let pos = strip.position();
            if let (Some(&pl), Some(&pp)) = (labels.last(), positions.last()) {
                if !follows((pl, pp), (label, pos)) {
                    continue;
                }
            }
            parts.push(next);
            labels.push(label);
            positions.push(pos);
            extend_chain(shape, t, n, m, parts, labels, positions, out);
            parts.pop();
            labels.pop();
            positions.pop();
        }
    }
}

/// Number of semistandard `t`-ribbon supertableaux, by memoized counting
/// over `(partition, last label, last position)`.
pub fn count_ribbon_chains(shape: &SkewShape, t: usize, n: usize, m: usize) -> u128 {
    if no_chain_possible(shape, t) {
        return 0;
    }
    if shape.is_empty() {
        return 1;
    }
    let mut memo = HashMap::new();
    let mut total = 0u128;
    let steps = steps_within(shape.inner(), shape.outer(), t);
    for idx in 0..n + m {
        for (strip, next) in &steps {
            total += count_from(shape.outer(), t, n, m, next.clone(), idx, strip.position(), &mut memo);
        }
    }
    total
}

#[allow(clippy::too_many_arguments)]
fn count_from(
    outer: &Partition,
    t: usize,
    n: usize,
    m: usize,
    nu: Partition,
    last: usize,
    pos: i64,
    memo: &mut HashMap<(Partition, usize, i64), u128>,
) -> u128 {
    if &nu == outer {
        return 1;
    }
    let key = (nu, last, pos);
    if let Some(&c) = memo.get(&key) {
        return c;
    }
    let prev = (SuperEntry::from_index(last, n), pos);
    let mut total = 0u128;
    let steps = steps_within(&key.0, outer, t);
    for idx in last..n + m {
        let label = SuperEntry::from_index(idx, n);
        for (strip, next) in &steps {
            let p = strip.position();
            if follows(prev, (label, p)) {
                total += count_from(outer, t, n, m, next.clone(), idx, p, memo);
            }
        }
    }
    memo.insert(key, total);
    total
}

/// Standard `t`-ribbon supertableaux whose labels are `1..u` followed by
/// `1'..p'`, where `u + p` is the number of strips. These are in bijection
/// with the strip-addition sequences from the inner to the outer shape.
pub fn enumerate_standard_ribbon_chains(shape: &SkewShape, t: usize, u: usize) -> Vec<RibbonChain> {
    if no_chain_possible(shape, t) {
        return Vec::new();
    }
    let k = shape.size() / t;
    if u > k {
        return Vec::new();
    }
    let labels: Vec<SuperEntry> = (0..k).map(|i| SuperEntry::from_index(i, u)).collect();
    let mut sequences = Vec::new();
    let mut parts = vec![shape.inner().clone()];
    strip_sequences(shape.outer(), t, &mut parts, &mut sequences);
    sequences
        .into_iter()
        .map(|ps| RibbonChain::new(t, ps, labels.clone()).expect("distinct increasing labels always fit"))
        .collect()
}

fn strip_sequences(outer: &Partition, t: usize, parts: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
    let nu = parts.last().unwrap().clone();
    if &nu == outer {
        out.push(parts.clone());
        return;
    }
    for (_, next) in steps_within(&nu, outer, t) {
        parts.push(next);
        strip_sequences(outer, t, parts, out);
        parts.pop();
    }
}
