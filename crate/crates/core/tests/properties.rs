use std::sync::Arc;

use hookschur::partitions::{
    addable_strips, height_parity, removable_strips, removal_height_parities, t_core, BorderStrip,
    QuotientDecomposition,
};
use hookschur::polyring::{
    evaluate_at_root, xy_variables, Coefficient, CyclotomicRing, Monomial, QPolynomial, SparsePolynomial,
};
use hookschur::schur::{skew_hook_schur, Alphabet, Method};
use hookschur::tableaux::{
    count_supertableaux, enumerate_ribbon_chains, semistandard_quotient_inverse, semistandard_quotient_map,
    QuotientPair,
};
use hookschur::{Partition, SkewShape};
use num_bigint::BigInt;
use proptest::prelude::*;

fn partition(max_part: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn skew(max_part: usize, max_len: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (partition(max_part, max_len), prop::collection::vec(0..=max_part, max_len)).prop_map(|(lam, cuts)| {
        let mut prev = usize::MAX;
        let parts: Vec<usize> = (1..=lam.length())
            .map(|i| {
                prev = prev.min(lam.part(i)).min(cuts[i - 1]);
                prev
            })
            .collect();
        (lam, Partition::new(parts).unwrap())
    })
}

/// `μ` and `λ` obtained from it by adding size-`t` strips, so the cores agree
/// and a ribbon tableau exists.
fn strip_extension(t: usize, steps: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (partition(3, 3), prop::collection::vec(any::<prop::sample::Index>(), 0..=steps)).prop_map(move |(mu, picks)| {
        let mut lam = mu.clone();
        for pick in picks {
            let options = addable_strips(&lam, t);
            lam = options[pick.index(options.len())].1.clone();
        }
        (lam, mu)
    })
}

fn with_modulus(ts: std::ops::Range<usize>, steps: usize) -> impl Strategy<Value = (usize, (Partition, Partition))> {
    ts.prop_flat_map(move |t| (Just(t), strip_extension(t, steps)))
}

fn hook_lengths(lam: &Partition) -> Vec<usize> {
    let conj = lam.conjugate();
    lam.cells().into_iter().map(|c| lam.part(c.row) - c.col + conj.part(c.col) - c.row + 1).collect()
}

fn cyclo(order: usize, coeffs: &[i64]) -> hookschur::polyring::CyclotomicInteger {
    CyclotomicRing::new(order).reduce(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

fn qpoly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-4i64..=4, 0..8).prop_map(|v| QPolynomial::from_i64s(&v))
}

fn sparse() -> impl Strategy<Value = SparsePolynomial<BigInt>> {
    prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -3i64..=3), 0..5).prop_map(|terms| {
        let vars = xy_variables(2, 1);
        let mut p = SparsePolynomial::zero(Arc::clone(&vars));
        for ((a, b, c), k) in terms {
            p.add_term(Monomial::new(vec![a, b, c]), &BigInt::from(k));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parse_round_trip(lam in partition(6, 6)) {
        prop_assert_eq!(lam.to_string().parse::<Partition>().unwrap(), lam.clone());
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn core_has_no_hook_divisible_by_t(lam in partition(6, 6), t in 2usize..5) {
        let core = t_core(&lam, t);
        prop_assert!(hook_lengths(&core).iter().all(|h| h % t != 0));
        prop_assert!(lam.contains(&core));
        prop_assert_eq!((lam.size() - core.size()) % t, 0);
    }

    #[test]
    fn removable_strips_match_hooks_of_length_t(lam in partition(6, 6), t in 1usize..5) {
        let strips = removable_strips(&lam, t);
        prop_assert_eq!(strips.len(), hook_lengths(&lam).iter().filter(|&&h| h == t).count());
        for (strip, nu) in strips {
            prop_assert_eq!(strip.size(), t);
            prop_assert_eq!(BorderStrip::between(&lam, &nu).unwrap(), strip);
        }
    }

    #[test]
    fn size_identity_and_reconstruction(lam in partition(6, 6), t in 2usize..5, extra in 0usize..3) {
        let ell = t * (lam.length().div_ceil(t) + extra);
        let q = QuotientDecomposition::new(&lam, t, ell).unwrap();
        let quotient_size: usize = q.quotient.iter().map(Partition::size).sum();
        prop_assert_eq!(lam.size(), q.core.size() + t * quotient_size);
        prop_assert_eq!(&q.core, &t_core(&lam, t));
        prop_assert_eq!(QuotientDecomposition::reconstruct(&q.residue_counts, &q.quotient).unwrap(), lam.clone());
        // a shift of the length by t leaves the quotient alone
        let shifted = QuotientDecomposition::new(&lam, t, ell + t).unwrap();
        prop_assert_eq!(shifted.quotient, q.quotient);
    }

    #[test]
    fn sign_matches_strip_heights((t, (lam, mu)) in with_modulus(2..5, 3), extra in 0usize..2) {
        let ell = t * (lam.length().div_ceil(t) + extra);
        let sign = QuotientDecomposition::new(&lam, t, ell).unwrap().sigma_sign
            * QuotientDecomposition::new(&mu, t, ell).unwrap().sigma_sign;
        let expected = u8::from(sign < 0);
        let parities = removal_height_parities(&lam, &mu, t);
        prop_assert_eq!(parities.into_iter().collect::<Vec<_>>(), vec![expected]);
        prop_assert_eq!(height_parity(&lam, &mu, t).unwrap(), expected);
    }

    #[test]
    fn methods_agree((lam, mu) in skew(4, 4), n in 0usize..3, m in 0usize..3) {
        let shape = SkewShape::new(lam, mu).unwrap();
        let alphabet = Alphabet::symbolic(n, m);
        let jt = skew_hook_schur(&shape, &alphabet, Method::JacobiTrudi);
        let tab = skew_hook_schur(&shape, &alphabet, Method::Tableaux);
        prop_assert_eq!(jt, tab);
    }

    #[test]
    fn conjugation_swaps_alphabets(lam in partition(4, 4), n in 0usize..3, m in 0usize..3) {
        let a = count_supertableaux(&SkewShape::straight(lam.clone()), n, m);
        let b = count_supertableaux(&SkewShape::straight(lam.conjugate()), m, n);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn quotient_map_round_trips((t, (lam, mu)) in with_modulus(2..4, 3), a in 0usize..3, b in 0usize..2) {
        let pair = QuotientPair::minimal(&lam, &mu, t).unwrap();
        let shape = SkewShape::new(lam.clone(), mu.clone()).unwrap();
        for chain in enumerate_ribbon_chains(&shape, t, a, b).into_iter().take(40) {
            let tabs = semistandard_quotient_map(&chain, &pair).unwrap();
            for tab in &tabs {
                prop_assert!(tab.validate(a, b).is_ok());
            }
            prop_assert_eq!(semistandard_quotient_inverse(&tabs, &pair).unwrap(), chain);
        }
    }

    #[test]
    fn cyclotomic_ring_axioms(order in 1usize..9,
                              x in prop::collection::vec(-5i64..=5, 0..9),
                              y in prop::collection::vec(-5i64..=5, 0..9),
                              z in prop::collection::vec(-5i64..=5, 0..9)) {
        let (a, b, c) = (cyclo(order, &x), cyclo(order, &y), cyclo(order, &z));
        let mut sum = b.clone();
        sum.add_assign_ref(&c);
        let mut split = a.mul_ref(&b);
        split.add_assign_ref(&a.mul_ref(&c));
        prop_assert_eq!(a.mul_ref(&sum), split);
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        let mut zero = a.clone();
        zero.add_assign_ref(&a.neg_ref());
        prop_assert!(zero.is_zero_value());
        prop_assert_eq!(a.mul_ref(&a.one_like()), a.clone());
    }

    #[test]
    fn root_evaluation_is_multiplicative(f in qpoly(), g in qpoly(), t in 1usize..9, pick in any::<prop::sample::Index>()) {
        let divisors: Vec<usize> = (1..=t).filter(|d| t % d == 0).collect();
        let d = divisors[pick.index(divisors.len())];
        let e = t / d;
        let fg = evaluate_at_root(&f.mul(&g), t, d).unwrap().to_cyclotomic(e);
        let prod = evaluate_at_root(&f, t, d).unwrap().to_cyclotomic(e)
            .mul_ref(&evaluate_at_root(&g, t, d).unwrap().to_cyclotomic(e));
        prop_assert_eq!(fg, prod);
        let sum = evaluate_at_root(&f.add(&g), t, d).unwrap().to_cyclotomic(e);
        let mut parts = evaluate_at_root(&f, t, d).unwrap().to_cyclotomic(e);
        parts.add_assign_ref(&evaluate_at_root(&g, t, d).unwrap().to_cyclotomic(e));
        prop_assert_eq!(sum, parts);
    }

    #[test]
    fn sparse_ring_laws(p in sparse(), q in sparse(), r in sparse()) {
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert!(p.sub(&p).is_zero());
        let json = p.to_json();
        prop_assert_eq!(SparsePolynomial::from_json(&json).unwrap(), p);
    }
}
