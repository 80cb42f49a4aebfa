//! Divisor-lattice helpers.

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1, "divisors of zero are not a finite set");
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The Möbius function.
pub fn mobius(n: usize) -> i8 {
    assert!(n >= 1, "the Möbius function is defined on positive integers");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|p| p * p <= n).all(|p| !n.is_multiple_of(p))
}
