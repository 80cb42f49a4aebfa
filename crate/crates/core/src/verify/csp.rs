//! Cyclic sieving: orbit counts from values at roots of unity.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partitions::{sigma_sign, Partition, QuotientDecomposition, SkewShape};
use crate::polyring::{bigint_to_json, divisors, evaluate_at_root, mobius, QPolynomial, RootValue};
use crate::schur::{hook_schur_at_ones, principal_specialization};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CspVerdict {
    CspExists,
    CriterionFails,
}

/// `c_j` as recovered by Möbius inversion: `weighted = j · c_j`, which is an
/// integer whenever every `f(ω^d)` is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCount {
    pub j: usize,
    pub weighted: BigInt,
}

impl OrbitCount {
    /// `c_j` if it is an integer.
    pub fn value(&self) -> Option<BigInt> {
        let (q, r) = self.weighted.div_rem(&BigInt::from(self.j));
        r.is_zero().then_some(q)
    }

    pub fn to_json(&self) -> Value {
        match self.value() {
            Some(v) => bigint_to_json(&v),
            None => Value::from(format!("{}/{}", self.weighted, self.j)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CspReport {
    pub t: usize,
    pub f: QPolynomial,
    pub f_mod_qt: Vec<BigInt>,
    /// `d ↦ f(ω^d)` for every `d | t`.
    pub values_at_roots: BTreeMap<usize, RootValue>,
    /// `j ↦ c_j`; empty when some value is not a rational integer.
    pub orbit_counts: BTreeMap<usize, OrbitCount>,
    pub verdict: CspVerdict,
    /// Why the criterion failed, if it did.
    pub failure: Option<String>,
    /// `Σ_j c_j (1 + q^{t/j} + … + q^{t(j-1)/j}) ≡ f (mod q^t - 1)`.
    pub reconstruction_holds: bool,
    /// `sgn σ_λ = sgn σ_μ`, for reports built from a shape.
    pub sign_condition: Option<bool>,
    /// `sgn σ_λ = sgn σ_μ` at every modulus `e | t`, for reports built from a
    /// shape. For composite `t` the single-modulus condition is not enough.
    pub sign_condition_all_divisors: Option<bool>,
    /// Whether `f(ω^d)` agrees with the signed quotient-product formula for
    /// every `d | t`, for reports built from a shape.
    pub routes_agree: Option<bool>,
}

impl CspReport {
    pub fn csp_exists(&self) -> bool {
        self.verdict == CspVerdict::CspExists
    }

    /// `c_j` as integers, when the criterion holds.
    pub fn orbit_profile(&self) -> Option<BTreeMap<usize, BigInt>> {
        self.csp_exists().then(|| self.orbit_counts.iter().map(|(&j, c)| (j, c.value().unwrap())).collect())
    }

    pub fn to_json(&self) -> Value {
        let values: serde_json::Map<String, Value> =
            self.values_at_roots.iter().map(|(d, v)| (d.to_string(), v.to_json())).collect();
        let counts: serde_json::Map<String, Value> =
            self.orbit_counts.iter().map(|(j, c)| (j.to_string(), c.to_json())).collect();
        json!({
            "t": self.t,
            "f": self.f.to_json(),
            "fModQt": self.f_mod_qt.iter().map(bigint_to_json).collect::<Vec<_>>(),
            "valuesAtRoots": values,
            "orbitCounts": counts,
            "verdict": self.verdict,
            "failure": self.failure,
            "reconstructionHolds": self.reconstruction_holds,
            "signCondition": self.sign_condition,
            "signConditionAllDivisors": self.sign_condition_all_divisors,
            "routesAgree": self.routes_agree,
        })
    }
}

/// Exact analysis of `f` for the cyclic group of order `t`.
pub fn csp_analyze(f: &QPolynomial, t: usize) -> Result<CspReport> {
    if t == 0 {
        return Err(Error::InvalidModulus { t, min: 1 });
    }
    let divs = divisors(t);
    let mut values = BTreeMap::new();
    for &d in &divs {
        values.insert(d, evaluate_at_root(f, t, d)?);
    }
    let mut report = CspReport {
        t,
        f: f.clone(),
        f_mod_qt: f.reduce_mod_qt_minus_one(t),
        values_at_roots: values,
        orbit_counts: BTreeMap::new(),
        verdict: CspVerdict::CspExists,
        failure: None,
        reconstruction_holds: false,
        sign_condition: None,
        sign_condition_all_divisors: None,
        routes_agree: None,
    };
    if let Some((d, v)) = report.values_at_roots.iter().find(|(_, v)| v.as_integer().is_none()) {
        report.verdict = CspVerdict::CriterionFails;
        report.failure = Some(format!("f(ω^{d}) = {v} is not an integer"));
        return Ok(report);
    }
    let int_value = |d: usize| report.values_at_roots[&d].as_integer().unwrap().clone();
    for &j in &divs {
        let mut weighted = BigInt::zero();
        for e in divisors(j) {
            weighted += BigInt::from(mobius(j / e)) * int_value(e);
        }
        report.orbit_counts.insert(j, OrbitCount { j, weighted });
    }
    let bad = report.orbit_counts.values().find(|c| c.value().is_none_or(|v| v.is_negative()));
    if let Some(c) = bad {
        report.verdict = CspVerdict::CriterionFails;
        report.failure = Some(format!("c_{} = {} is not a nonnegative integer", c.j, c.to_json()));
    }
    report.reconstruction_holds = reconstruction_holds(&report);
    Ok(report)
}

fn reconstruction_holds(report: &CspReport) -> bool {
    let t = report.t;
    let mut sum = vec![BigInt::zero(); t];
    for (&j, c) in &report.orbit_counts {
        let Some(cj) = c.value() else { return false };
        let step = t / j;
        for k in 0..j {
            sum[k * step] += &cj;
        }
    }
    sum == report.f_mod_qt
}

/// `f(ω^d)` from the quotient at modulus `e = t/d` and length `tn`:
/// zero when the `e`-cores differ, otherwise
/// `sgn_e(σ_λ) sgn_e(σ_μ) Π_{i<e} hs_{λ^(i)/μ^(i)}(1^{dn} / (-1)^{e-1} 1^{dm})`.
pub fn root_value_by_quotients(
    lam: &Partition,
    mu: &Partition,
    t: usize,
    d: usize,
    n: usize,
    m: usize,
) -> Result<BigInt> {
    if t == 0 || d == 0 || !t.is_multiple_of(d) {
        return Err(Error::NotDivisor { d, t });
    }
    let e = t / d;
    let outer = QuotientDecomposition::new(lam, e, t * n)?;
    let inner = QuotientDecomposition::new(mu, e, t * n)?;
    if outer.residue_counts != inner.residue_counts {
        return Ok(BigInt::zero());
    }
    let y_value = if e.is_multiple_of(2) { -1 } else { 1 };
    let product: BigInt = outer
        .quotient
        .iter()
        .zip(&inner.quotient)
        .map(|(o, i)| hook_schur_at_ones(o, i, d * n, d * m, y_value))
        .product();
    Ok(BigInt::from(outer.sigma_sign * inner.sigma_sign) * product)
}

fn analyze_shape(lam: &Partition, mu: &Partition, t: usize, n: usize, m: usize) -> Result<CspReport> {
    let ell = t * n;
    for p in [lam, mu] {
        if p.length() > ell {
            return Err(Error::InvalidLength { ell, length: p.length() });
        }
    }
    let f = match SkewShape::new(lam.clone(), mu.clone()) {
        Ok(shape) => principal_specialization(&shape, t, n, m),
        Err(_) => QPolynomial::zero(),
    };
    let mut report = csp_analyze(&f, t)?;
    let sign_outer = QuotientDecomposition::new(lam, t, ell)?.sigma_sign;
    let sign_inner = QuotientDecomposition::new(mu, t, ell)?.sigma_sign;
    report.sign_condition = Some(sign_outer == sign_inner);
    let mut all = true;
    for e in divisors(t) {
        all &= sigma_sign(lam, e, ell)? == sigma_sign(mu, e, ell)?;
    }
    report.sign_condition_all_divisors = Some(all);
    let mut agree = true;
    for (&d, value) in &report.values_at_roots {
        let other = if lam.contains(mu) { root_value_by_quotients(lam, mu, t, d, n, m)? } else { BigInt::zero() };
        agree &= value.as_integer() == Some(&other);
    }
    report.routes_agree = Some(agree);
    Ok(report)
}

/// `f = s_{λ/μ}(1, q, …, q^{tn-1})`. The criterion is guaranteed to hold when
/// `sgn σ_λ = sgn σ_μ`; otherwise the outcome is only reported.
pub fn verify_csp_skew(lam: &Partition, mu: &Partition, t: usize, n: usize) -> Result<CspReport> {
    analyze_shape(lam, mu, t, n, 0)
}

/// `f = hs_{λ/μ}(1, q, …, q^{tn-1} / 1, q, …, q^{tm-1})` for odd `t`.
pub fn verify_csp_super(lam: &Partition, mu: &Partition, t: usize, n: usize, m: usize) -> Result<CspReport> {
    if t.is_multiple_of(2) {
        return Err(Error::Domain(format!("the super analysis needs odd t, got {t}")));
    }
    analyze_shape(lam, mu, t, n, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn profile(r: &CspReport) -> Vec<(usize, i64)> {
        r.orbit_profile().unwrap().into_iter().map(|(j, c)| (j, i64::try_from(c).unwrap())).collect()
    }

    #[test]
    fn regular_and_trivial_actions() {
        let r = csp_analyze(&QPolynomial::from_i64s(&[1, 1, 1, 1]), 4).unwrap();
        assert_eq!(profile(&r), vec![(1, 0), (2, 0), (4, 1)]);
        assert!(r.reconstruction_holds);
        let r = csp_analyze(&QPolynomial::from_i64s(&[7]), 6).unwrap();
        assert_eq!(profile(&r), vec![(1, 7), (2, 0), (3, 0), (6, 0)]);
    }

    #[test]
    fn non_integral_value_fails() {
        let r = csp_analyze(&QPolynomial::from_i64s(&[1, 1]), 3).unwrap();
        assert_eq!(r.verdict, CspVerdict::CriterionFails);
        assert!(r.orbit_counts.is_empty());
    }

    #[test]
    fn negative_orbit_count_fails() {
        // f(-1) = 3 > f(1) = 1 would need c_2 = -1
        let r = csp_analyze(&QPolynomial::from_i64s(&[2, -1]), 2).unwrap();
        assert_eq!(r.verdict, CspVerdict::CriterionFails);
        assert_eq!(r.orbit_counts[&2].value(), Some(BigInt::from(-1)));
    }

    #[test]
    fn square_with_two_rows_of_letters() {
        let r = verify_csp_skew(&p("2,2"), &p(""), 2, 2).unwrap();
        assert_eq!(r.sign_condition, Some(true));
        assert_eq!(profile(&r), vec![(1, 4), (2, 8)]);
        assert_eq!(r.routes_agree, Some(true));
        assert_eq!(r.values_at_roots[&2].as_integer(), Some(&BigInt::from(20)));
    }

    #[test]
    fn rectangle_with_one_letter_per_runner() {
        let r = verify_csp_skew(&p("2,2"), &p(""), 2, 1).unwrap();
        assert_eq!(r.f, QPolynomial::monomial(2));
        assert_eq!(profile(&r), vec![(1, 1), (2, 0)]);
        let r = verify_csp_skew(&p("3,1"), &p("3,1"), 2, 2).unwrap();
        assert_eq!(profile(&r), vec![(1, 1), (2, 0)]);
    }

    #[test]
    fn composite_modulus_needs_every_divisor() {
        // e_2(1, q, q^2, q^3) at q = -1 is -2 < 0 = f(i)
        let r = verify_csp_skew(&p("1,1,1"), &p("1"), 4, 1).unwrap();
        assert_eq!(r.sign_condition, Some(true));
        assert_eq!(r.sign_condition_all_divisors, Some(false));
        assert_eq!(r.verdict, CspVerdict::CriterionFails);
        assert_eq!(r.orbit_counts[&2].value(), Some(BigInt::from(-1)));
        assert_eq!(r.routes_agree, Some(true));
    }

    #[test]
    fn super_instances() {
        let r = verify_csp_super(&p("3"), &p(""), 3, 1, 0).unwrap();
        assert!(r.csp_exists() && r.routes_agree == Some(true));
        let r = verify_csp_super(&p("1"), &p(""), 3, 1, 1).unwrap();
        assert_eq!(r.f, QPolynomial::from_i64s(&[2, 2, 2]));
        assert_eq!(r.routes_agree, Some(true));
        assert!(verify_csp_super(&p("1"), &p(""), 2, 1, 1).is_err());
    }
}
