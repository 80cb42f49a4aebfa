use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

/// A commutative coefficient ring. Elements carry whatever context they need
/// (a cyclotomic element knows its order), so constants are built from an
/// existing element with the `*_like` constructors.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn int_like(&self, v: i64) -> Self;
    fn is_zero_value(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn to_json(&self) -> Value;

    /// How the coefficient prefixes a monomial when printed: whether it reads
    /// as negative, and its magnitude unless that is one.
    fn term_prefix(&self) -> (bool, Option<String>);
}

/// JSON number when it fits in an `i64`, decimal string otherwise.
pub fn bigint_to_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(v.to_string()),
    }
}

pub(crate) fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&bigint_to_json(v), s)
}

pub(crate) fn serialize_opt_bigint<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&v.as_ref().map(bigint_to_json), s)
}

pub(crate) fn serialize_display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn bigint_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Coefficient for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }

    fn one_like(&self) -> Self {
        BigInt::one()
    }

    fn int_like(&self, v: i64) -> Self {
        BigInt::from(v)
    }

    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn to_json(&self) -> Value {
        bigint_to_json(self)
    }

    fn term_prefix(&self) -> (bool, Option<String>) {
        let magnitude = self.abs();
        let body = if magnitude.is_one() { None } else { Some(magnitude.to_string()) };
        (self.is_negative(), body)
    }
}
