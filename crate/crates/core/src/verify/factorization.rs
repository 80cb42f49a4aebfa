//! The root-of-unity factorization of skew (hook) Schur polynomials.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::partitions::{Partition, QuotientDecomposition};
use crate::polyring::{CyclotomicInteger, CyclotomicRing, Monomial, SparsePolynomial};
use crate::schur::{hook_schur_of_pair, Alphabet, JacobiTrudi, Method, Twist};

/// Outcome of comparing `H_k` over the twisted alphabet with its predicted
/// value.
#[derive(Clone, Debug)]
pub struct HSpecialization {
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub lhs: SparsePolynomial<CyclotomicInteger>,
    pub rhs: SparsePolynomial<CyclotomicInteger>,
    pub holds: bool,
}

impl HSpecialization {
    pub fn to_json(&self) -> Value {
        json!({
            "t": self.t, "n": self.n, "m": self.m, "k": self.k,
            "holds": self.holds,
            "lhs": self.lhs.to_string(),
            "rhs": self.rhs.to_string(),
        })
    }
}

fn lift_poly(p: &SparsePolynomial<BigInt>, ring: &Arc<CyclotomicRing>) -> SparsePolynomial<CyclotomicInteger> {
    p.map_coefficients(|c| ring.from_integer(c.clone()))
}

/// `H_k(X^(ω)/Y^(ω))` is zero when `t ∤ k` and `H_{k/t}(X^t/(-1)^{t-1}Y^t)`
/// otherwise.
pub fn check_h_specialization(t: usize, n: usize, m: usize, k: usize) -> Result<HSpecialization> {
    if t < 2 {
        return Err(Error::InvalidModulus { t, min: 2 });
    }
    let ring = CyclotomicRing::new(t);
    let twisted = Alphabet::twisted(n, m, Twist::new(t, 1)?);
    let lhs = crate::schur::super_complete(k as i64, &twisted);
    let rhs = if k.is_multiple_of(t) {
        lift_poly(&crate::schur::super_complete((k / t) as i64, &Alphabet::powered(n, m, t, true)), &ring)
    } else {
        SparsePolynomial::zero(Arc::clone(twisted.vars()))
    };
    let holds = lhs == rhs;
    Ok(HSpecialization { t, n, m, k, lhs, rhs, holds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `μ ⊄ λ`: both sides are zero by convention.
    Degenerate,
    /// Different `t`-cores: the twisted polynomial must vanish.
    Vanishing,
    /// Equal `t`-cores: signed product of quotient polynomials.
    Factorization,
}

#[derive(Clone, Debug)]
pub struct FactorizationVerdict {
    pub lam: Partition,
    pub mu: Partition,
    pub t: usize,
    pub n: usize,
    pub m: usize,
    pub branch: Branch,
    pub vanishes: bool,
    pub lhs: SparsePolynomial<CyclotomicInteger>,
    pub rhs: SparsePolynomial<CyclotomicInteger>,
    pub sign: i8,
    pub matches: bool,
    pub witness: Option<Monomial>,
}

impl FactorizationVerdict {
    /// Inputs and flags only.
    pub fn summary_json(&self) -> Value {
        json!({
            "lambda": self.lam.to_string(),
            "mu": self.mu.to_string(),
            "t": self.t, "n": self.n, "m": self.m,
            "branch": self.branch,
            "vanishes": self.vanishes,
            "sign": self.sign,
            "match": self.matches,
            "witness": self.witness.as_ref().map(|w| w.exponents().to_vec()),
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.summary_json();
        v["lhs"] = Value::from(self.lhs.to_string());
        v["rhs"] = Value::from(self.rhs.to_string());
        v
    }
}

/// Reusable data for one `(t, n, m)`: the twisted alphabet with its
/// supersymmetric complete functions, and the powered alphabet.
pub struct FactorizationContext {
    t: usize,
    n: usize,
    m: usize,
    ring: Arc<CyclotomicRing>,
    twisted: JacobiTrudi<CyclotomicInteger>,
    powered: Alphabet<BigInt>,
}

impl FactorizationContext {
    /// Supports shapes with first part at most `max_part`.
    pub fn new(t: usize, n: usize, m: usize, max_part: usize) -> Result<Self> {
        if t < 1 {
            return Err(Error::InvalidModulus { t, min: 1 });
        }
        let ring = CyclotomicRing::new(t);
        let twisted = JacobiTrudi::new(Alphabet::twisted(n, m, Twist::new(t, 1)?), max_part + t * n);
        let powered = Alphabet::powered(n, m, t, true);
        Ok(FactorizationContext { t, n, m, ring, twisted, powered })
    }

    pub fn verify(&self, lam: &Partition, mu: &Partition) -> Result<FactorizationVerdict> {
        let (t, n, m) = (self.t, self.n, self.m);
        let ell = t * n;
        for p in [lam, mu] {
            if p.length() > ell {
                return Err(Error::InvalidLength { ell, length: p.length() });
            }
        }
        let vars = Arc::clone(self.twisted.alphabet().vars());
        let zero = SparsePolynomial::zero(Arc::clone(&vars));
        if !lam.contains(mu) {
            return Ok(FactorizationVerdict {
                lam: lam.clone(),
                mu: mu.clone(),
                t,
                n,
                m,
                branch: Branch::Degenerate,
                vanishes: true,
                lhs: zero.clone(),
                rhs: zero,
                sign: 1,
                matches: true,
                witness: None,
            });
        }
        let lhs = self.twisted.determinant(lam, mu);
        let outer = QuotientDecomposition::new(lam, t, ell)?;
        let inner = QuotientDecomposition::new(mu, t, ell)?;
        if outer.core != inner.core {
            let vanishes = lhs.is_zero();
            let witness = lhs.first_difference(&zero);
            return Ok(FactorizationVerdict {
                lam: lam.clone(),
                mu: mu.clone(),
                t,
                n,
                m,
                branch: Branch::Vanishing,
                vanishes,
                lhs,
                rhs: zero,
                sign: 1,
                matches: vanishes,
                witness,
            });
        }
        let sign = outer.sigma_sign * inner.sigma_sign;
        let mut product = SparsePolynomial::constant(Arc::clone(self.powered.vars()), BigInt::from(1));
        for (lo, li) in outer.quotient.iter().zip(&inner.quotient) {
            product = product.mul(&hook_schur_of_pair(lo, li, &self.powered, Method::JacobiTrudi));
        }
        let rhs = lift_poly(&product, &self.ring);
        let signed = if sign < 0 { rhs.neg() } else { rhs.clone() };
        let witness = lhs.first_difference(&signed);
        Ok(FactorizationVerdict {
            lam: lam.clone(),
            mu: mu.clone(),
            t,
            n,
            m,
            branch: Branch::Factorization,
            vanishes: lhs.is_zero(),
            lhs,
            rhs,
            sign,
            matches: witness.is_none(),
            witness,
        })
    }
}

/// `hs_{λ/μ}(X^(ω)/Y^(ω))` against zero or against
/// `sgn(σ_λ) sgn(σ_μ) Π_i hs_{λ^(i)/μ^(i)}(X^t/(-1)^{t-1}Y^t)`.
pub fn verify_factorization_super(
    lam: &Partition,
    mu: &Partition,
    t: usize,
    n: usize,
    m: usize,
) -> Result<FactorizationVerdict> {
    FactorizationContext::new(t, n, m, lam.part(1))?.verify(lam, mu)
}

/// The `m = 0` case: skew Schur polynomials.
pub fn verify_factorization_schur(lam: &Partition, mu: &Partition, t: usize, n: usize) -> Result<FactorizationVerdict> {
    verify_factorization_super(lam, mu, t, n, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn h_specialization_examples() {
        let v = check_h_specialization(2, 1, 0, 1).unwrap();
        assert!(v.holds && v.lhs.is_zero());
        let v = check_h_specialization(2, 1, 1, 2).unwrap();
        assert!(v.holds);
        assert_eq!(v.rhs.to_string(), "x1^2 - y1^2");
        let v = check_h_specialization(3, 1, 1, 3).unwrap();
        assert!(v.holds);
        assert_eq!(v.rhs.to_string(), "x1^3 + y1^3");
    }

    #[test]
    fn factorization_examples() {
        let v = verify_factorization_schur(&p("1"), &p(""), 2, 1).unwrap();
        assert_eq!(v.branch, Branch::Vanishing);
        assert!(v.vanishes && v.matches);

        let v = verify_factorization_schur(&p("2,2"), &p(""), 2, 2).unwrap();
        assert_eq!(v.branch, Branch::Factorization);
        assert_eq!(v.sign, 1);
        assert!(v.matches);
        assert_eq!(v.rhs.to_string(), "x1^4 + 2*x1^2*x2^2 + x2^4");

        // h_2(x1, -x1) = x1^2; the quotient of (2) at length 2 is (0, (1))
        let v = verify_factorization_schur(&p("2"), &p(""), 2, 1).unwrap();
        assert!(v.matches);
        assert_eq!(v.lhs.to_string(), "x1^2");
        assert_eq!(v.sign, 1);

        let v = verify_factorization_schur(&p("1,1,1"), &p(""), 3, 1).unwrap();
        assert!(v.matches && !v.vanishes);

        let v = verify_factorization_super(&p("3,1"), &p("3,1"), 2, 2, 1).unwrap();
        assert!(v.matches);
        assert_eq!(v.lhs.to_string(), "1");
    }

    #[test]
    fn rejects_long_shapes() {
        assert!(verify_factorization_schur(&p("1,1,1"), &p(""), 2, 1).is_err());
    }
}
