//! Division-free determinants over polynomial rings.

use std::collections::HashMap;
use std::sync::Arc;

use super::coefficient::Coefficient;
use super::sparse::{SparsePolynomial, Variables};

/// Determinant by row-by-row Laplace expansion over column subsets. Each
/// partial product is keyed by the set of columns already used, so the cost
/// is `O(2^k · k)` ring operations for a `k × k` matrix and zero entries are
/// skipped. No division is ever needed.
pub fn determinant<R: Coefficient>(
    matrix: &[Vec<SparsePolynomial<R>>],
    vars: &Variables,
    one: &R,
) -> SparsePolynomial<R> {
    let k = matrix.len();
    assert!(k <= 30, "matrix too large for subset expansion");
    assert!(matrix.iter().all(|row| row.len() == k), "matrix must be square");
    let mut layer: HashMap<u32, SparsePolynomial<R>> = HashMap::new();
    layer.insert(0, SparsePolynomial::constant(Arc::clone(vars), one.one_like()));
    for row in matrix {
        let mut next: HashMap<u32, SparsePolynomial<R>> = HashMap::new();
        for (&used, partial) in &layer {
            for (j, entry) in row.iter().enumerate() {
                if used & (1 << j) != 0 || entry.is_zero() {
                    continue;
                }
                let above = (used >> (j + 1)).count_ones();
                let mut term = partial.mul(entry);
                if above % 2 == 1 {
                    term = term.neg();
                }
                next.entry(used | (1 << j)).and_modify(|acc| acc.add_assign(&term)).or_insert(term);
            }
        }
        next.retain(|_, p| !p.is_zero());
        layer = next;
    }
    layer.remove(&(((1u64 << k) - 1) as u32)).unwrap_or_else(|| SparsePolynomial::zero(Arc::clone(vars)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::sparse::{named_variables, Monomial};
    use num_bigint::BigInt;

    fn c(vars: &Variables, v: i64) -> SparsePolynomial<BigInt> {
        SparsePolynomial::constant(Arc::clone(vars), BigInt::from(v))
    }

    #[test]
    fn integer_determinants() {
        let vars = named_variables(&[]);
        let m = vec![vec![c(&vars, 2), c(&vars, 1)], vec![c(&vars, 7), c(&vars, 4)]];
        assert_eq!(determinant(&m, &vars, &BigInt::from(1)), c(&vars, 1));
        let m3 = vec![
            vec![c(&vars, 0), c(&vars, 1), c(&vars, 0)],
            vec![c(&vars, 0), c(&vars, 0), c(&vars, 1)],
            vec![c(&vars, 1), c(&vars, 0), c(&vars, 0)],
        ];
        assert_eq!(determinant(&m3, &vars, &BigInt::from(1)), c(&vars, 1));
        let swap = vec![vec![c(&vars, 0), c(&vars, 1)], vec![c(&vars, 1), c(&vars, 0)]];
        assert_eq!(determinant(&swap, &vars, &BigInt::from(1)), c(&vars, -1));
        assert_eq!(determinant(&[], &vars, &BigInt::from(1)), c(&vars, 1));
    }

    #[test]
    fn vandermonde() {
        let vars = named_variables(&["a", "b", "c"]);
        let x: Vec<_> = (0..3).map(|i| SparsePolynomial::variable(Arc::clone(&vars), i, BigInt::from(1))).collect();
        let one = BigInt::from(1);
        let m: Vec<Vec<_>> = (0..3).map(|i| (0..3).map(|j| x[i].pow(j as u32, &one)).collect()).collect();
        let expected = x[1].sub(&x[0]).mul(&x[2].sub(&x[0])).mul(&x[2].sub(&x[1]));
        assert_eq!(determinant(&m, &vars, &one), expected);
        assert!(expected.coefficient(&Monomial::new(vec![0, 1, 2])).is_some());
    }
}
