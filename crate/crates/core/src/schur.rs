//! Elementary, complete and supersymmetric functions, and skew (hook) Schur
//! polynomials by Jacobi–Trudi determinants or tableau sums.
//!
//! An [`Alphabet`] is a list of x-letters and y-letters, each a coefficient
//! times a monomial. The same code therefore handles symbolic variables,
//! root-of-unity twists, principal specializations and numeric points.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{Partition, SkewShape};
use crate::polyring::{
    determinant, named_variables, xy_variables, Coefficient, CyclotomicInteger, CyclotomicRing, Monomial, QPolynomial,
    SparsePolynomial, Variables,
};
use crate::tableaux::for_each_supertableau;

/// Substitution `x_{k,j} = ω^{dk} x_j`, `k < t`, for a primitive `t`-th root
/// of unity `ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Twist {
    pub t: usize,
    pub d: usize,
}

impl Twist {
    pub fn new(t: usize, d: usize) -> Result<Self> {
        if t == 0 || d == 0 || !t.is_multiple_of(d) {
            return Err(Error::NotDivisor { d, t });
        }
        Ok(Twist { t, d })
    }
}

/// `n` x-variables and `m` y-variables, optionally twisted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AlphabetSpec {
    pub n: usize,
    pub m: usize,
    pub twist: Option<Twist>,
}

impl AlphabetSpec {
    pub fn new(n: usize, m: usize) -> Self {
        AlphabetSpec { n, m, twist: None }
    }

    pub fn twisted(n: usize, m: usize, twist: Twist) -> Self {
        AlphabetSpec { n, m, twist: Some(twist) }
    }

    /// The untwisted alphabet `x_1..x_n / y_1..y_m`.
    pub fn integral(&self) -> Alphabet<BigInt> {
        Alphabet::symbolic(self.n, self.m)
    }

    /// The alphabet over the cyclotomic integers; untwisted specs give the
    /// plain variables with order-1 coefficients.
    pub fn cyclotomic(&self) -> Alphabet<CyclotomicInteger> {
        match self.twist {
            Some(tw) => Alphabet::twisted(self.n, self.m, tw),
            None => Alphabet::symbolic(self.n, self.m).lift(&CyclotomicRing::new(1)),
        }
    }
}

/// One letter `coeff · monomial`.
#[derive(Clone, Debug, PartialEq)]
pub struct Letter<R> {
    pub coeff: R,
    pub monomial: Monomial,
}

#[derive(Clone, Debug)]
pub struct Alphabet<R> {
    vars: Variables,
    x: Vec<Letter<R>>,
    y: Vec<Letter<R>>,
    one: R,
}

impl<R: Coefficient> Alphabet<R> {
    pub fn from_letters(vars: Variables, x: Vec<Letter<R>>, y: Vec<Letter<R>>, one: R) -> Self {
        Alphabet { vars, x, y, one: one.one_like() }
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn x(&self) -> &[Letter<R>] {
        &self.x
    }

    pub fn y(&self) -> &[Letter<R>] {
        &self.y
    }

    pub fn one(&self) -> &R {
        &self.one
    }

    /// The same letters with the y-part dropped.
    pub fn without_y(&self) -> Self {
        Alphabet { y: Vec::new(), ..self.clone() }
    }

    /// Swaps the roles of the x- and y-letters.
    pub fn swapped(&self) -> Self {
        Alphabet { x: self.y.clone(), y: self.x.clone(), ..self.clone() }
    }

    fn constant(&self, c: R) -> SparsePolynomial<R> {
        SparsePolynomial::constant(Arc::clone(&self.vars), c)
    }

    fn zero(&self) -> SparsePolynomial<R> {
        SparsePolynomial::zero(Arc::clone(&self.vars))
    }
}

impl Alphabet<BigInt> {
    pub fn symbolic(n: usize, m: usize) -> Self {
        let vars = xy_variables(n, m);
        let letter = |i| Letter { coeff: BigInt::one(), monomial: Monomial::variable(n + m, i) };
        Alphabet { x: (0..n).map(letter).collect(), y: (n..n + m).map(letter).collect(), vars, one: BigInt::one() }
    }

    /// `x_j^t / ε y_j^t` with `ε = (-1)^(t-1)` when `signed`, else `ε = 1`.
    pub fn powered(n: usize, m: usize, t: usize, signed: bool) -> Self {
        let vars = xy_variables(n, m);
        let eps = if signed && t.is_multiple_of(2) { BigInt::from(-1) } else { BigInt::one() };
        let power = |i| Monomial::variable(n + m, i).pow(t as u32);
        Alphabet {
            x: (0..n).map(|i| Letter { coeff: BigInt::one(), monomial: power(i) }).collect(),
            y: (n..n + m).map(|i| Letter { coeff: eps.clone(), monomial: power(i) }).collect(),
            vars,
            one: BigInt::one(),
        }
    }

    /// `1, q, …, q^{k-1} / 1, q, …, q^{k'-1}` in the single variable `q`.
    pub fn principal(k: usize, k_prime: usize) -> Self {
        let vars = named_variables(&["q"]);
        let letter = |e: usize| Letter { coeff: BigInt::one(), monomial: Monomial::new(vec![e as u32]) };
        Alphabet { x: (0..k).map(letter).collect(), y: (0..k_prime).map(letter).collect(), vars, one: BigInt::one() }
    }

    /// `a` x-letters equal to 1 and `b` y-letters equal to `y_value`, in no
    /// variables at all.
    pub fn ones(a: usize, b: usize, y_value: i64) -> Self {
        let vars = named_variables(&[]);
        let letter = |c: i64| Letter { coeff: BigInt::from(c), monomial: Monomial::one(0) };
        Alphabet { x: vec![letter(1); a], y: vec![letter(y_value); b], vars, one: BigInt::one() }
    }

    pub fn lift(&self, ring: &Arc<CyclotomicRing>) -> Alphabet<CyclotomicInteger> {
        let lift =
            |l: &Letter<BigInt>| Letter { coeff: ring.from_integer(l.coeff.clone()), monomial: l.monomial.clone() };
        Alphabet {
            vars: Arc::clone(&self.vars),
            x: self.x.iter().map(lift).collect(),
            y: self.y.iter().map(lift).collect(),
            one: ring.one(),
        }
    }
}

impl Alphabet<CyclotomicInteger> {
    /// `ω^{dk} x_j` for `k < t` and `j ≤ n`, and likewise for the y-letters.
    pub fn twisted(n: usize, m: usize, twist: Twist) -> Self {
        let ring = CyclotomicRing::new(twist.t);
        let vars = xy_variables(n, m);
        let block = |range: std::ops::Range<usize>| -> Vec<Letter<CyclotomicInteger>> {
            range
                .flat_map(|i| {
                    let ring = Arc::clone(&ring);
                    (0..twist.t).map(move |k| Letter {
                        coeff: ring.root_power(twist.d * k),
                        monomial: Monomial::variable(n + m, i),
                    })
                })
                .collect()
        };
        Alphabet { x: block(0..n), y: block(n..n + m), vars, one: ring.one() }
    }
}

/// `h_0..h_max` (or `e_0..e_max`) of a list of letters.
fn series<R: Coefficient>(
    alphabet: &Alphabet<R>,
    letters: &[Letter<R>],
    max: usize,
    complete: bool,
) -> Vec<SparsePolynomial<R>> {
    let mut s: Vec<SparsePolynomial<R>> = (0..=max).map(|_| alphabet.zero()).collect();
    s[0] = alphabet.constant(alphabet.one.clone());
    for l in letters {
        if complete {
            // h_r(A + a) = Σ_k a^k h_{r-k}(A): new[r] = old[r] + a·new[r-1]
            for r in 1..=max {
                let shifted = s[r - 1].mul_term(&l.coeff, &l.monomial);
                s[r].add_assign(&shifted);
            }
        } else {
            for r in (1..=max).rev() {
                let shifted = s[r - 1].mul_term(&l.coeff, &l.monomial);
                s[r].add_assign(&shifted);
            }
        }
    }
    s
}

fn convolve<R: Coefficient>(
    alphabet: &Alphabet<R>,
    a: &[SparsePolynomial<R>],
    b: &[SparsePolynomial<R>],
) -> Vec<SparsePolynomial<R>> {
    (0..a.len())
        .map(|r| {
            let mut acc = alphabet.zero();
            for j in 0..=r {
                if !a[j].is_zero() && !b[r - j].is_zero() {
                    acc.add_assign(&a[j].mul(&b[r - j]));
                }
            }
            acc
        })
        .collect()
}

/// `H_0..H_max` of the alphabet `X/Y`.
pub fn super_complete_series<R: Coefficient>(alphabet: &Alphabet<R>, max: usize) -> Vec<SparsePolynomial<R>> {
    let h = series(alphabet, &alphabet.x, max, true);
    if alphabet.y.is_empty() {
        return h;
    }
    let e = series(alphabet, &alphabet.y, max, false);
    convolve(alphabet, &h, &e)
}

/// `e_r` of the x-letters; zero for `r < 0`.
pub fn elementary<R: Coefficient>(r: i64, alphabet: &Alphabet<R>) -> SparsePolynomial<R> {
    if r < 0 {
        return alphabet.zero();
    }
    series(alphabet, &alphabet.x, r as usize, false).pop().unwrap()
}

/// `h_r` of the x-letters; zero for `r < 0`.
pub fn complete<R: Coefficient>(r: i64, alphabet: &Alphabet<R>) -> SparsePolynomial<R> {
    if r < 0 {
        return alphabet.zero();
    }
    series(alphabet, &alphabet.x, r as usize, true).pop().unwrap()
}

/// `H_r(X/Y) = Σ_j h_j(X) e_{r-j}(Y)`.
pub fn super_complete<R: Coefficient>(r: i64, alphabet: &Alphabet<R>) -> SparsePolynomial<R> {
    if r < 0 {
        return alphabet.zero();
    }
    super_complete_series(alphabet, r as usize).pop().unwrap()
}

/// `E_r(X/Y) = Σ_j e_j(X) h_{r-j}(Y)`.
pub fn super_elementary<R: Coefficient>(r: i64, alphabet: &Alphabet<R>) -> SparsePolynomial<R> {
    if r < 0 {
        return alphabet.zero();
    }
    let r = r as usize;
    let e = series(alphabet, &alphabet.x, r, false);
    let h = series(alphabet, &alphabet.y, r, true);
    convolve(alphabet, &e, &h).pop().unwrap()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    JacobiTrudi,
    Tableaux,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jacobi-trudi" | "jacobi_trudi" | "jt" => Ok(Method::JacobiTrudi),
            "tableaux" | "tableau" => Ok(Method::Tableaux),
            _ => Err(Error::Parse { input: s.into(), reason: "expected jacobi-trudi or tableaux".into() }),
        }
    }
}

/// An alphabet together with its `H_0..H_max`, for evaluating many
/// Jacobi–Trudi determinants over the same letters.
pub struct JacobiTrudi<R> {
    alphabet: Alphabet<R>,
    series: Vec<SparsePolynomial<R>>,
}

impl<R: Coefficient> JacobiTrudi<R> {
    pub fn new(alphabet: Alphabet<R>, max: usize) -> Self {
        let series = super_complete_series(&alphabet, max);
        JacobiTrudi { alphabet, series }
    }

    pub fn alphabet(&self) -> &Alphabet<R> {
        &self.alphabet
    }

    /// `det(H_{λ_i - μ_j - i + j})` of size `max(ℓ(λ), ℓ(μ))`, for any pair
    /// of partitions. Zero when `μ ⊄ λ`.
    pub fn determinant(&self, lam: &Partition, mu: &Partition) -> SparsePolynomial<R> {
        if !lam.contains(mu) {
            return self.alphabet.zero();
        }
        let k = lam.length().max(mu.length());
        let needed = lam.part(1) + k;
        let extended;
        let series = if needed < self.series.len() {
            &self.series
        } else {
            extended = super_complete_series(&self.alphabet, needed);
            &extended
        };
        let entry = |i: usize, j: usize| -> SparsePolynomial<R> {
            let r = lam.part(i) as i64 - mu.part(j) as i64 - i as i64 + j as i64;
            if r < 0 {
                self.alphabet.zero()
            } else {
                series[r as usize].clone()
            }
        };
        let matrix: Vec<Vec<SparsePolynomial<R>>> = (1..=k).map(|i| (1..=k).map(|j| entry(i, j)).collect()).collect();
        determinant(&matrix, &self.alphabet.vars, &self.alphabet.one)
    }
}

/// `det(H_{λ_i - μ_j - i + j})` for a single pair of partitions.
pub fn jacobi_trudi<R: Coefficient>(lam: &Partition, mu: &Partition, alphabet: &Alphabet<R>) -> SparsePolynomial<R> {
    let k = lam.length().max(mu.length());
    JacobiTrudi::new(alphabet.clone(), lam.part(1) + k).determinant(lam, mu)
}

/// `Σ_T Π_{c} letter(T(c))` over the supertableaux of `shape` with as many
/// letters as the alphabet has.
pub fn tableau_sum<R: Coefficient>(shape: &SkewShape, alphabet: &Alphabet<R>) -> SparsePolynomial<R> {
    let n = alphabet.x.len();
    let letters: Vec<&Letter<R>> = alphabet.x.iter().chain(&alphabet.y).collect();
    let mut out = alphabet.zero();
    let arity = alphabet.vars.len();
    for_each_supertableau(shape, n, alphabet.y.len(), |word| {
        let mut coeff = alphabet.one.clone();
        let mut mono = Monomial::one(arity);
        for &v in word {
            coeff = coeff.mul_ref(&letters[v].coeff);
            mono = mono.mul(&letters[v].monomial);
        }
        out.add_term(mono, &coeff);
    });
    out
}

/// `hs_{λ/μ}(X/Y)`.
pub fn skew_hook_schur<R: Coefficient>(
    shape: &SkewShape,
    alphabet: &Alphabet<R>,
    method: Method,
) -> SparsePolynomial<R> {
    match method {
        Method::JacobiTrudi => jacobi_trudi(shape.outer(), shape.inner(), alphabet),
        Method::Tableaux => tableau_sum(shape, alphabet),
    }
}

/// `hs_{λ/μ}` for a pair of partitions that may not be nested, in which case
/// it is zero.
pub fn hook_schur_of_pair<R: Coefficient>(
    lam: &Partition,
    mu: &Partition,
    alphabet: &Alphabet<R>,
    method: Method,
) -> SparsePolynomial<R> {
    match SkewShape::new(lam.clone(), mu.clone()) {
        Ok(shape) => skew_hook_schur(&shape, alphabet, method),
        Err(_) => alphabet.zero(),
    }
}

/// `s_{λ/μ}` of the x-letters.
pub fn skew_schur<R: Coefficient>(shape: &SkewShape, alphabet: &Alphabet<R>, method: Method) -> SparsePolynomial<R> {
    skew_hook_schur(shape, &alphabet.without_y(), method)
}

/// `hs_{λ/μ}(1, q, …, q^{tn-1} / 1, q, …, q^{tm-1})`.
pub fn principal_specialization(shape: &SkewShape, t: usize, n: usize, m: usize) -> QPolynomial {
    principal_specialization_with(shape, t, n, m, Method::JacobiTrudi)
}

pub fn principal_specialization_with(shape: &SkewShape, t: usize, n: usize, m: usize, method: Method) -> QPolynomial {
    let alphabet = Alphabet::principal(t * n, t * m);
    QPolynomial::from_sparse(&skew_hook_schur(shape, &alphabet, method)).expect("principal alphabets are univariate")
}

/// Value at the point `(1^a / y_value^b)`.
pub fn hook_schur_at_ones(lam: &Partition, mu: &Partition, a: usize, b: usize, y_value: i64) -> BigInt {
    let p = hook_schur_of_pair(lam, mu, &Alphabet::ones(a, b, y_value), Method::JacobiTrudi);
    p.sum_of_coefficients(&BigInt::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn boundary_values() {
        let a = Alphabet::symbolic(3, 0);
        assert!(elementary(-3, &a).is_zero());
        assert_eq!(elementary(0, &a).to_string(), "1");
        assert_eq!(elementary(2, &a).to_string(), "x1*x2 + x1*x3 + x2*x3");
        assert_eq!(complete(2, &Alphabet::symbolic(2, 0)).to_string(), "x1^2 + x1*x2 + x2^2");
        assert_eq!(super_complete(1, &Alphabet::symbolic(1, 1)).to_string(), "x1 + y1");
        assert_eq!(super_elementary(1, &Alphabet::symbolic(1, 1)).to_string(), "x1 + y1");
        assert!(super_complete(-1, &a).is_zero());
    }

    #[test]
    fn complete_at_ones_is_stars_and_bars() {
        for k in 1..5usize {
            let ones = Alphabet::ones(k, 0, 1);
            for r in 0..7usize {
                let v = complete(r as i64, &ones).sum_of_coefficients(&BigInt::zero());
                let binom: u64 = (1..k as u64).map(|i| r as u64 + i).product::<u64>() / (1..k as u64).product::<u64>();
                assert_eq!(v, BigInt::from(binom), "k={k} r={r}");
            }
        }
    }

    #[test]
    fn hook_example_by_both_methods() {
        let a = Alphabet::symbolic(2, 1);
        let expected = "x1^2*x2 + x1^2*y1 + x1*x2^2 + 2*x1*x2*y1 + x1*y1^2 + x2^2*y1 + x2*y1^2";
        for method in [Method::JacobiTrudi, Method::Tableaux] {
            assert_eq!(skew_hook_schur(&shape("2,2/1"), &a, method).to_string(), expected);
        }
        assert_eq!(skew_schur(&shape("2,2/1"), &a, Method::JacobiTrudi).to_string(), "x1^2*x2 + x1*x2^2");
    }

    #[test]
    fn vanishing_and_trivial_shapes() {
        let a = Alphabet::symbolic(1, 0);
        assert!(skew_hook_schur(&shape("1,1"), &a, Method::JacobiTrudi).is_zero());
        assert_eq!(skew_hook_schur(&shape("3"), &a, Method::JacobiTrudi).to_string(), "x1^3");
        assert_eq!(skew_hook_schur(&shape("2,2/2,2"), &Alphabet::symbolic(3, 0), Method::Tableaux).to_string(), "1");
        assert!(hook_schur_of_pair(&p("2"), &p("1,1"), &a, Method::JacobiTrudi).is_zero());
    }

    #[test]
    fn square_at_four_ones() {
        assert_eq!(hook_schur_at_ones(&p("2,2"), &p(""), 4, 0, 1), BigInt::from(20));
    }

    #[test]
    fn principal_examples() {
        assert_eq!(principal_specialization(&shape("1"), 1, 4, 0), QPolynomial::from_i64s(&[1, 1, 1, 1]));
        assert_eq!(principal_specialization(&shape("2,2"), 2, 1, 0), QPolynomial::monomial(2));
        let f = principal_specialization(&shape("2,2"), 2, 2, 0);
        assert_eq!(f.eval_at_one(), BigInt::from(20));
        assert_eq!(f, principal_specialization_with(&shape("2,2"), 2, 2, 0, Method::Tableaux));
    }

    #[test]
    fn twisted_complete_vanishes_off_multiples() {
        // h_1(x1, -x1) = 0
        let a = Alphabet::twisted(1, 0, Twist::new(2, 1).unwrap());
        assert!(complete(1, &a).is_zero());
        assert!(!complete(2, &a).is_zero());
    }
}
