//! Dense univariate integer polynomials in `q`, and their exact evaluation at
//! roots of unity.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::Value;

use super::coefficient::{bigint_to_json, Coefficient};
use super::cyclotomic::{CyclotomicInteger, CyclotomicRing};
use super::sparse::SparsePolynomial;
use crate::error::{Error, Result};

/// `coeffs[i]` is the coefficient of `q^i`; no trailing zeros are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn one() -> Self {
        QPolynomial::from_i64s(&[1])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        QPolynomial::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        QPolynomial::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }

    /// Exact division by a monic divisor; `None` if there is a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if !divisor.coeffs[dd].is_one() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Some(QPolynomial::zero()) } else { None };
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            quot[k - dd] = c.clone();
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + i] -= &c * dc;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(QPolynomial::new(quot))
    }

    /// Coefficients of `f mod (q^t - 1)`, always `t` entries.
    pub fn reduce_mod_qt_minus_one(&self, t: usize) -> Vec<BigInt> {
        assert!(t >= 1);
        let mut out = vec![BigInt::zero(); t];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i % t] += c;
        }
        out
    }

    /// Reads a polynomial in a single variable.
    pub fn from_sparse(p: &SparsePolynomial<BigInt>) -> Result<Self> {
        if p.arity() > 1 {
            return Err(Error::RingMismatch(format!("expected a univariate polynomial, got {} variables", p.arity())));
        }
        let mut coeffs = Vec::new();
        for (mono, c) in p.terms() {
            let k = mono.exponents().first().copied().unwrap_or(0) as usize;
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigInt::zero());
            }
            coeffs[k] += c;
        }
        Ok(QPolynomial::new(coeffs))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(bigint_to_json).collect())
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
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
                1 => "q".into(),
                _ => format!("q^{k}"),
            };
            match (body, k) {
                (None, 0) => write!(f, "{sign}1")?,
                (None, _) => write!(f, "{sign}{var}")?,
                (Some(b), 0) => write!(f, "{sign}{b}")?,
                (Some(b), _) => write!(f, "{sign}{b}*{var}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Exact value of a polynomial at a root of unity: a rational integer when
/// the reduced representative is constant, otherwise a cyclotomic integer.
#[derive(Clone, Debug, PartialEq)]
pub enum RootValue {
    Integer(BigInt),
    Cyclotomic(CyclotomicInteger),
}

impl RootValue {
    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            RootValue::Integer(v) => Some(v),
            RootValue::Cyclotomic(_) => None,
        }
    }

    /// The value as an element of the cyclotomic ring of the given order.
    pub fn to_cyclotomic(&self, order: usize) -> CyclotomicInteger {
        match self {
            RootValue::Integer(v) => CyclotomicRing::new(order).from_integer(v.clone()),
            RootValue::Cyclotomic(c) => {
                assert_eq!(c.order(), order, "root value lives in a different cyclotomic ring");
                c.clone()
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            RootValue::Integer(v) => bigint_to_json(v),
            RootValue::Cyclotomic(c) => c.to_json(),
        }
    }
}

impl fmt::Display for RootValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootValue::Integer(v) => write!(f, "{v}"),
            RootValue::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for RootValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// `f(ω^d)` for a primitive `t`-th root of unity `ω`. With `e = t/d`, `ω^d`
/// is a primitive `e`-th root, so `f` is folded modulo `q^e - 1` and then
/// reduced modulo the `e`-th cyclotomic polynomial.
pub fn evaluate_at_root(f: &QPolynomial, t: usize, d: usize) -> Result<RootValue> {
    if t == 0 || d == 0 || !t.is_multiple_of(d) {
        return Err(Error::NotDivisor { d, t });
    }
    let e = t / d;
    let residues = f.reduce_mod_qt_minus_one(t);
    let mut folded = vec![BigInt::zero(); e];
    for (i, b) in residues.into_iter().enumerate() {
        folded[i % e] += b;
    }
    let value = CyclotomicRing::new(e).reduce(folded);
    Ok(match value.as_integer() {
        Some(v) => RootValue::Integer(v),
        None => RootValue::Cyclotomic(value),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_sum_vanishes_at_minus_one() {
        let f = QPolynomial::from_i64s(&[1, 1, 1, 1]);
        assert_eq!(evaluate_at_root(&f, 4, 2).unwrap(), RootValue::Integer(BigInt::zero()));
        assert_eq!(evaluate_at_root(&f, 4, 1).unwrap(), RootValue::Integer(BigInt::zero()));
        assert_eq!(evaluate_at_root(&f, 4, 4).unwrap(), RootValue::Integer(BigInt::from(4)));
        assert!(evaluate_at_root(&f, 4, 3).is_err());
    }

    #[test]
    fn non_integer_values_are_cyclotomic() {
        // 1 + q at a primitive cube root of unity is -ω², not an integer
        let f = QPolynomial::from_i64s(&[1, 1]);
        let v = evaluate_at_root(&f, 3, 1).unwrap();
        assert!(v.as_integer().is_none());
        let ring = CyclotomicRing::new(3);
        assert_eq!(v.to_cyclotomic(3), ring.root_power(2).neg_ref());
    }

    #[test]
    fn orbit_sum_form_evaluates_to_weighted_count() {
        // f ≡ c1 + c2(1 + q^2) + c4(1 + q + q^2 + q^3) mod q^4 - 1
        let (c1, c2, c4) = (3, 5, 7);
        let f = QPolynomial::from_i64s(&[c1 + c2 + c4, c4, c2 + c4, c4, 0, 0, 0, 0]);
        assert_eq!(evaluate_at_root(&f, 4, 4).unwrap().as_integer().unwrap(), &BigInt::from(c1 + 2 * c2 + 4 * c4));
        assert_eq!(evaluate_at_root(&f, 4, 4).unwrap().as_integer().unwrap(), &f.eval_at_one());
        assert_eq!(evaluate_at_root(&f, 4, 2).unwrap().as_integer().unwrap(), &BigInt::from(c1 + 2 * c2));
        assert_eq!(evaluate_at_root(&f, 4, 1).unwrap().as_integer().unwrap(), &BigInt::from(c1));
    }

    #[test]
    fn exact_division() {
        let num = QPolynomial::from_i64s(&[-1, 0, 0, 0, 0, 0, 1]);
        let den = QPolynomial::from_i64s(&[-1, 1]);
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, QPolynomial::from_i64s(&[1, 1, 1, 1, 1, 1]));
        assert!(QPolynomial::from_i64s(&[1, 1]).div_exact(&QPolynomial::from_i64s(&[0, 1])).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(QPolynomial::from_i64s(&[1, -2, 0, 1]).to_string(), "1 - 2*q + q^3");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }
}
