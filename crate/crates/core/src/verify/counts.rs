//! Ribbon-tableau counts against quotient products, and the congruences
//! they imply at prime `t`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{Partition, QuotientDecomposition, SkewShape};
use crate::polyring::{is_prime, serialize_bigint, serialize_display, serialize_opt_bigint};
use crate::schur::hook_schur_at_ones;
use crate::tableaux::count_ribbon_chains;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RibbonCountReport {
    #[serde(serialize_with = "serialize_display")]
    pub lambda: Partition,
    #[serde(serialize_with = "serialize_display")]
    pub mu: Partition,
    pub t: usize,
    pub d: usize,
    pub n: usize,
    pub m: usize,
    /// Ribbon size `t/d`.
    pub ribbon: usize,
    #[serde(serialize_with = "serialize_bigint")]
    pub product: BigInt,
    #[serde(serialize_with = "serialize_bigint")]
    pub count: BigInt,
    pub holds: bool,
}

/// The number of `(t/d)`-ribbon supertableaux of `λ/μ` over `[dn] ∪ [dm]`
/// against `Π_{i < t/d} hs_{λ^(i)/μ^(i)}(1^{dn}/1^{dm})`, the quotient taken
/// at modulus `t/d` and length `tn`.
pub fn count_ribbon_identity(
    lam: &Partition,
    mu: &Partition,
    t: usize,
    d: usize,
    n: usize,
    m: usize,
) -> Result<RibbonCountReport> {
    if t == 0 || d == 0 || !t.is_multiple_of(d) {
        return Err(Error::NotDivisor { d, t });
    }
    let shape = SkewShape::new(lam.clone(), mu.clone())?;
    let e = t / d;
    let outer = QuotientDecomposition::new(lam, e, t * n)?;
    let inner = QuotientDecomposition::new(mu, e, t * n)?;
    let product = if outer.residue_counts != inner.residue_counts {
        BigInt::zero()
    } else {
        outer.quotient.iter().zip(&inner.quotient).map(|(o, i)| hook_schur_at_ones(o, i, d * n, d * m, 1)).product()
    };
    let count = BigInt::from(count_ribbon_chains(&shape, e, d * n, d * m));
    Ok(RibbonCountReport {
        lambda: lam.clone(),
        mu: mu.clone(),
        t,
        d,
        n,
        m,
        ribbon: e,
        holds: product == count,
        product,
        count,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DivisibilityReport {
    #[serde(serialize_with = "serialize_display")]
    pub lambda: Partition,
    #[serde(serialize_with = "serialize_display")]
    pub mu: Partition,
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub super_alphabet: bool,
    /// Unit-ribbon count over `[tn] ∪ [tm]`.
    #[serde(serialize_with = "serialize_bigint")]
    pub unit_count: BigInt,
    /// `t`-ribbon count over `[n] ∪ [m]`.
    #[serde(serialize_with = "serialize_bigint")]
    pub ribbon_count: BigInt,
    /// `unit_count - ribbon_count`.
    #[serde(serialize_with = "serialize_bigint")]
    pub difference: BigInt,
    pub divisible: bool,
    /// `sgn(σ_λ) sgn(σ_μ)` at length `tn`, when both lengths fit.
    pub sign: Option<i8>,
    /// `unit_count - sign · ribbon_count`.
    #[serde(serialize_with = "serialize_opt_bigint")]
    pub signed_difference: Option<BigInt>,
    pub signed_divisible: Option<bool>,
}

/// Checks `φ(1, tn) - φ(t, n) ≡ 0 (mod t)`, or its super analogue over
/// `[tn] ∪ [tm]` versus `[n] ∪ [m]`. Also reports the signed difference
/// `φ(1, tn) - sgn(σ_λ) sgn(σ_μ) φ(t, n)`, which is the quantity the root of
/// unity evaluation controls.
pub fn divisibility_check(
    lam: &Partition,
    mu: &Partition,
    t: usize,
    n: usize,
    m: usize,
    super_alphabet: bool,
) -> Result<DivisibilityReport> {
    if !is_prime(t) {
        return Err(Error::Domain(format!("{t} is not prime")));
    }
    if super_alphabet && t.is_multiple_of(2) {
        return Err(Error::Domain(format!("the super alphabet needs an odd prime, got {t}")));
    }
    let m = if super_alphabet { m } else { 0 };
    let shape = SkewShape::new(lam.clone(), mu.clone())?;
    let unit_count = BigInt::from(count_ribbon_chains(&shape, 1, t * n, t * m));
    let ribbon_count = BigInt::from(count_ribbon_chains(&shape, t, n, m));
    let modulus = BigInt::from(t);
    let difference = &unit_count - &ribbon_count;
    let divisible = difference.is_multiple_of(&modulus);
    let sign = if lam.length() <= t * n {
        let outer = QuotientDecomposition::new(lam, t, t * n)?;
        let inner = QuotientDecomposition::new(mu, t, t * n)?;
        Some(outer.sigma_sign * inner.sigma_sign)
    } else {
        None
    };
    let signed_difference = sign.map(|s| &unit_count - BigInt::from(s) * &ribbon_count);
    let signed_divisible = signed_difference.as_ref().map(|d| d.is_multiple_of(&modulus));
    Ok(DivisibilityReport {
        lambda: lam.clone(),
        mu: mu.clone(),
        t,
        n,
        m,
        super_alphabet,
        unit_count,
        ribbon_count,
        difference,
        divisible,
        sign,
        signed_difference,
        signed_divisible,
    })
}
