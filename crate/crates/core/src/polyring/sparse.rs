//! Sparse multivariate polynomials over a [`Coefficient`] ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use super::coefficient::{bigint_from_json, Coefficient};
use crate::error::{Error, Result};

/// Shared, ordered list of variable names.
pub type Variables = Arc<Vec<String>>;

/// `x1..xn, y1..ym`.
pub fn xy_variables(n: usize, m: usize) -> Variables {
    let xs = (1..=n).map(|i| format!("x{i}"));
    let ys = (1..=m).map(|j| format!("y{j}"));
    Arc::new(xs.chain(ys).collect())
}

pub fn named_variables(names: &[&str]) -> Variables {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// Dense exponent vector. Ordered graded-lexicographically: total degree
/// first, then the exponent vectors lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn variable(arity: usize, index: usize) -> Self {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with a fixed, named variable list. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Clone, Debug)]
pub struct SparsePolynomial<R> {
    vars: Variables,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Coefficient> PartialEq for SparsePolynomial<R> {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.terms == other.terms
    }
}

impl<R: Coefficient> SparsePolynomial<R> {
    pub fn zero(vars: Variables) -> Self {
        SparsePolynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Variables, c: R) -> Self {
        let arity = vars.len();
        Self::term(vars, c, Monomial::one(arity))
    }

    pub fn term(vars: Variables, c: R, mono: Monomial) -> Self {
        assert_eq!(mono.arity(), vars.len(), "monomial arity must match the variable list");
        let mut p = Self::zero(vars);
        if !c.is_zero_value() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// The variable with the given index, with coefficient `one`.
    pub fn variable(vars: Variables, index: usize, one: R) -> Self {
        let arity = vars.len();
        Self::term(vars, one, Monomial::variable(arity, index))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms(vars: Variables, terms: impl IntoIterator<Item = (Monomial, R)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Option<&R> {
        self.terms.get(mono)
    }

    /// The constant this polynomial equals, if it has no variable terms.
    pub fn as_constant(&self) -> Option<Option<&R>> {
        match self.terms.len() {
            0 => Some(None),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then_some(Some(c))
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, mono: Monomial, c: &R) {
        if c.is_zero_value() {
            return;
        }
        debug_assert_eq!(mono.arity(), self.arity());
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                existing.add_assign_ref(c);
                if existing.is_zero_value() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c.clone());
            }
        }
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let (mut acc, rest) =
            if self.terms.len() >= other.terms.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in &rest.terms {
            acc.add_term(m.clone(), c);
        }
        acc
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.check_vars(other);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn neg(&self) -> Self {
        SparsePolynomial {
            vars: Arc::clone(&self.vars),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero(Arc::clone(&self.vars));
        for (m, a) in &self.terms {
            out.add_term(m.clone(), &a.mul_ref(c));
        }
        out
    }

    /// Multiplies by the single term `c·mono`.
    pub fn mul_term(&self, c: &R, mono: &Monomial) -> Self {
        let mut out = Self::zero(Arc::clone(&self.vars));
        for (m, a) in &self.terms {
            out.add_term(m.mul(mono), &a.mul_ref(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = Self::zero(Arc::clone(&self.vars));
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                out.add_term(ma.mul(mb), &a.mul_ref(b));
            }
        }
        out
    }

    pub fn pow(&self, k: u32, one: &R) -> Self {
        let mut acc = Self::constant(Arc::clone(&self.vars), one.one_like());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies `f` to every coefficient, dropping those that become zero.
    pub fn map_coefficients<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> SparsePolynomial<S> {
        let mut out = SparsePolynomial::zero(Arc::clone(&self.vars));
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    /// Substitutes `images[i]` for variable `i`, converting coefficients with
    /// `lift`. All images must share one variable list, which becomes the
    /// variable list of the result.
    pub fn substitute<S: Coefficient>(
        &self,
        images: &[SparsePolynomial<S>],
        target_vars: &Variables,
        lift: impl Fn(&R) -> S,
    ) -> Result<SparsePolynomial<S>> {
        if images.len() != self.arity() {
            return Err(Error::RingMismatch(format!(
                "{} images supplied for {} variables",
                images.len(),
                self.arity()
            )));
        }
        if let Some(bad) = images.iter().find(|img| img.vars != *target_vars) {
            return Err(Error::RingMismatch(format!(
                "image over variables {:?}, expected {:?}",
                bad.vars, target_vars
            )));
        }
        let mut out = SparsePolynomial::zero(Arc::clone(target_vars));
        // powers of each image, built on demand
        let mut powers: Vec<Vec<SparsePolynomial<S>>> = Vec::with_capacity(images.len());
        for (m, c) in &self.terms {
            let lifted = lift(c);
            if lifted.is_zero_value() {
                continue;
            }
            let mut acc = SparsePolynomial::constant(Arc::clone(target_vars), lifted);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if powers.len() <= i {
                    powers.resize_with(i + 1, Vec::new);
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    let one = match images[i].terms.values().next() {
                        Some(c) => c.one_like(),
                        None => {
                            acc = SparsePolynomial::zero(Arc::clone(target_vars));
                            break;
                        }
                    };
                    cache.push(SparsePolynomial::constant(Arc::clone(target_vars), one));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&images[i]);
                    cache.push(next);
                }
                acc = acc.mul(&cache[e as usize]);
            }
            out.add_assign(&acc);
        }
        Ok(out)
    }

    /// Sum of all coefficients, i.e. the value at the all-ones point.
    pub fn sum_of_coefficients(&self, zero: &R) -> R {
        let mut acc = zero.zero_like();
        for c in self.terms.values() {
            acc.add_assign_ref(c);
        }
        acc
    }

    /// The largest monomial on which two polynomials differ.
    pub fn first_difference(&self, other: &Self) -> Option<Monomial> {
        let diff = self.sub(other);
        diff.terms.keys().next_back().cloned()
    }

    /// JSON document `{"variables": [...], "terms": [[[exponents], coeff], ...]}`
    /// with terms in decreasing graded-lex order.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.terms.iter().rev().map(|(m, c)| json!([m.exponents(), c.to_json()])).collect();
        json!({ "variables": self.vars.as_ref(), "terms": terms })
    }
}

impl SparsePolynomial<BigInt> {
    /// Parses the JSON produced by [`SparsePolynomial::to_json`].
    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |why: &str| Error::Parse { input: value.to_string(), reason: why.to_string() };
        let names = value
            .get("variables")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing variables"))?
            .iter()
            .map(|v| v.as_str().map(str::to_string).ok_or_else(|| bad("variable names must be strings")))
            .collect::<Result<Vec<_>>>()?;
        let vars = Arc::new(names);
        let mut p = SparsePolynomial::zero(Arc::clone(&vars));
        for term in value.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing terms"))? {
            let pair = term.as_array().filter(|a| a.len() == 2).ok_or_else(|| bad("terms are pairs"))?;
            let exps = pair[0]
                .as_array()
                .ok_or_else(|| bad("exponents must be an array"))?
                .iter()
                .map(|e| e.as_u64().map(|x| x as u32).ok_or_else(|| bad("exponents are nonnegative integers")))
                .collect::<Result<Vec<_>>>()?;
            if exps.len() != vars.len() {
                return Err(bad("exponent vector has the wrong arity"));
            }
            let c = bigint_from_json(&pair[1]).ok_or_else(|| bad("coefficient must be an integer"))?;
            p.add_term(Monomial::new(exps), &c);
        }
        Ok(p)
    }
}

impl<R: Coefficient> Serialize for SparsePolynomial<R> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

/// Terms in decreasing graded-lex order, e.g. `x1^2*x2 + 2*x1*x2*y1`.
impl<R: Coefficient> fmt::Display for SparsePolynomial<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (negative, body) = c.term_prefix();
            let sign = match (k == 0, negative) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], e) })
                .collect();
            let mono = factors.join("*");
            match (body, mono.is_empty()) {
                (None, true) => write!(f, "{sign}1")?,
                (None, false) => write!(f, "{sign}{mono}")?,
                (Some(b), true) => write!(f, "{sign}{b}")?,
                (Some(b), false) => write!(f, "{sign}{b}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// Substitution of values for every variable; an alias of
/// [`SparsePolynomial::substitute`].
pub fn specialize<R: Coefficient, S: Coefficient>(
    p: &SparsePolynomial<R>,
    images: &[SparsePolynomial<S>],
    target_vars: &Variables,
    lift: impl Fn(&R) -> S,
) -> Result<SparsePolynomial<S>> {
    p.substitute(images, target_vars, lift)
}
