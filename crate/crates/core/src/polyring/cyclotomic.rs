//! Cyclotomic integers `Z[x]/(Φ_t(x))`, the ring generated by a primitive
//! `t`-th root of unity.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::arith::divisors;
use super::coefficient::{bigint_to_json, Coefficient};
use super::qpoly::QPolynomial;

/// The `e`-th cyclotomic polynomial, obtained by dividing `x^e - 1` by the
/// cyclotomic polynomials of the proper divisors of `e`.
pub fn cyclotomic_polynomial(e: usize) -> QPolynomial {
    assert!(e >= 1, "cyclotomic polynomials are indexed by positive integers");
    let mut memo: BTreeMap<usize, QPolynomial> = BTreeMap::new();
    for d in divisors(e) {
        let mut xd_minus_one = vec![BigInt::zero(); d + 1];
        xd_minus_one[0] = BigInt::from(-1);
        xd_minus_one[d] = BigInt::one();
        let mut phi = QPolynomial::new(xd_minus_one);
        for (k, phi_k) in &memo {
            if d % k == 0 {
                phi = phi.div_exact(phi_k).expect("Φ_k divides x^d - 1 for k | d");
            }
        }
        memo.insert(d, phi);
    }
    memo.remove(&e).expect("e divides itself")
}

/// Context for one cyclotomic ring: its order and the monic modulus.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicRing {
    order: usize,
    modulus: Vec<BigInt>,
}

impl CyclotomicRing {
    pub fn new(order: usize) -> Arc<Self> {
        let modulus = cyclotomic_polynomial(order).coeffs().to_vec();
        Arc::new(CyclotomicRing { order, modulus })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Degree of `Φ_t`, i.e. the rank of the ring over the integers.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn zero(self: &Arc<Self>) -> CyclotomicInteger {
        CyclotomicInteger { ring: Arc::clone(self), coeffs: vec![BigInt::zero(); self.degree()] }
    }

    pub fn one(self: &Arc<Self>) -> CyclotomicInteger {
        self.from_integer(BigInt::one())
    }

    pub fn from_integer(self: &Arc<Self>, v: BigInt) -> CyclotomicInteger {
        let mut z = self.zero();
        z.coeffs[0] = v;
        z
    }

    /// `ω^k` for the class `ω` of `x`.
    pub fn root_power(self: &Arc<Self>, k: usize) -> CyclotomicInteger {
        let mut coeffs = vec![BigInt::zero(); self.order];
        coeffs[k % self.order] = BigInt::one();
        self.reduce(coeffs)
    }

    /// Reduces an arbitrary coefficient vector (constant term first) modulo
    /// `Φ_t`.
    pub fn reduce(self: &Arc<Self>, mut coeffs: Vec<BigInt>) -> CyclotomicInteger {
        let deg = self.degree();
        for k in (deg..coeffs.len()).rev() {
            if coeffs[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut coeffs[k]);
            for i in 0..deg {
                if !self.modulus[i].is_zero() {
                    coeffs[k - deg + i] -= &c * &self.modulus[i];
                }
            }
        }
        coeffs.resize(deg, BigInt::zero());
        CyclotomicInteger { ring: Arc::clone(self), coeffs }
    }
}

/// An element of `Z[ω]`, stored as its canonical representative of degree
/// below `deg Φ_t`.
#[derive(Clone)]
pub struct CyclotomicInteger {
    ring: Arc<CyclotomicRing>,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInteger {
    pub fn order(&self) -> usize {
        self.ring.order
    }

    pub fn ring(&self) -> &Arc<CyclotomicRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(self.ring.order, other.ring.order, "mixing cyclotomic rings of different orders");
    }
}

impl PartialEq for CyclotomicInteger {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order == other.ring.order && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicInteger {}

impl fmt::Debug for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[{}]({})", self.ring.order, self)
    }
}

/// Prints as a polynomial in `w`, e.g. `1 - 2w + w^2`.
impl fmt::Display for CyclotomicInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (negative, body) = c.term_prefix();
            let sign = match (first, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let var = match k {
                0 => String::new(),
                1 => "w".into(),
                _ => format!("w^{k}"),
            };
            match (body, k) {
                (None, 0) => write!(f, "{sign}1")?,
                (None, _) => write!(f, "{sign}{var}")?,
                (Some(b), _) => write!(f, "{sign}{b}{var}")?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Coefficient for CyclotomicInteger {
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }

    fn one_like(&self) -> Self {
        self.ring.one()
    }

    fn int_like(&self, v: i64) -> Self {
        self.ring.from_integer(BigInt::from(v))
    }

    fn is_zero_value(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        self.check_ring(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.check_ring(rhs);
        let deg = self.coeffs.len();
        if deg == 1 {
            return CyclotomicInteger { ring: Arc::clone(&self.ring), coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]] };
        }
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        self.ring.reduce(prod)
    }

    fn neg_ref(&self) -> Self {
        CyclotomicInteger { ring: Arc::clone(&self.ring), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn to_json(&self) -> Value {
        json!({
            "order": self.ring.order,
            "coeffs": self.coeffs.iter().map(bigint_to_json).collect::<Vec<_>>(),
        })
    }

    fn term_prefix(&self) -> (bool, Option<String>) {
        match self.as_integer() {
            Some(v) => v.term_prefix(),
            None => (false, Some(format!("({self})"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), QPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), QPolynomial::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), QPolynomial::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), QPolynomial::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), QPolynomial::from_i64s(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(7).degree(), Some(6));
    }

    #[test]
    fn root_has_exact_order() {
        for t in 1..=12 {
            let ring = CyclotomicRing::new(t);
            let w = ring.root_power(1);
            assert_eq!(w.pow(t), ring.one(), "t={t}");
            for k in 1..t {
                assert_ne!(w.pow(k), ring.one(), "t={t} k={k}");
            }
        }
    }

    #[test]
    fn prime_order_powers_sum_to_zero() {
        for t in [2, 3, 5, 7, 11] {
            let ring = CyclotomicRing::new(t);
            let mut sum = ring.zero();
            for k in 0..t {
                sum.add_assign_ref(&ring.root_power(k));
            }
            assert!(sum.is_zero_value(), "t={t}");
        }
    }

    #[test]
    fn integrality_is_canonical() {
        let ring = CyclotomicRing::new(4);
        let i = ring.root_power(1);
        assert_eq!(i.mul_ref(&i).as_integer(), Some(BigInt::from(-1)));
        assert_eq!(i.as_integer(), None);
        assert_eq!(ring.from_integer(BigInt::from(7)).to_string(), "7");
        assert_eq!(i.neg_ref().add_assign_ref_ret(&ring.one()).to_string(), "1 - w");
    }

    trait AddRet {
        fn add_assign_ref_ret(self, rhs: &Self) -> Self;
    }

    impl AddRet for CyclotomicInteger {
        fn add_assign_ref_ret(mut self, rhs: &Self) -> Self {
            self.add_assign_ref(rhs);
            self
        }
    }
}
