//! Randomized structural invariants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use ewens_walk::characters::character;
use ewens_walk::partitions::{enumerate_partitions, factorial};
use ewens_walk::permutation::Permutation;
use ewens_walk::spectrum::{eigenvalue_exact, eigenvalue_signed_log, schur_principal};
use ewens_walk::Partition;

/// Random partition of a random n <= max_n, by index into the enumeration.
fn partition_strategy(max_n: u32) -> impl Strategy<Value = Partition> {
    (1..=max_n).prop_flat_map(|n| {
        let parts = enumerate_partitions(n).unwrap();
        (0..parts.len()).prop_map(move |i| parts[i].clone())
    })
}

fn permutation_strategy(n: u32) -> impl Strategy<Value = Permutation> {
    let total = factorial(n as u64).to_u64().unwrap();
    (0..total).prop_map(move |r| Permutation::from_lehmer_rank(n, r).unwrap())
}

fn rational_theta() -> impl Strategy<Value = BigRational> {
    (1i64..=40, 1i64..=8)
        .prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lam in partition_strategy(20)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam);
    }

    #[test]
    fn conjugate_preserves_hook_multiset(lam in partition_strategy(16)) {
        let mut a = lam.hook_lengths_book_order();
        let mut b = lam.conjugate().hook_lengths_book_order();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn eigenvalues_stay_in_unit_interval(
        lam in partition_strategy(12),
        theta in rational_theta()
    ) {
        let beta = eigenvalue_exact(&lam, &theta);
        prop_assert!(beta.abs() <= BigRational::one());
        // Signed-log form agrees in sign and magnitude.
        let log = eigenvalue_signed_log(&lam, &theta);
        if beta.is_zero() {
            prop_assert_eq!(log.sign, 0);
        } else {
            let exact_sign = if beta.is_positive() { 1i8 } else { -1 };
            prop_assert_eq!(log.sign, exact_sign);
            let e = beta.to_f64().unwrap().abs();
            prop_assert!((log.ln_magnitude - e.ln()).abs() < 1e-9);
        }
    }

    #[test]
    fn trivial_character_is_one(mu in partition_strategy(12)) {
        prop_assert_eq!(character(&Partition::row(mu.n()).unwrap(), &mu).unwrap(), 1);
        prop_assert_eq!(
            character(&Partition::column(mu.n()).unwrap(), &mu).unwrap(),
            mu.sign()
        );
    }

    #[test]
    fn schur_specialization_zero_iff_too_many_rows(
        lam in partition_strategy(10),
        k in 1u32..=4
    ) {
        let s = schur_principal(&lam, k).unwrap();
        prop_assert_eq!(s.is_zero(), lam.len() > k as usize);
    }

    #[test]
    fn permutation_group_axioms(
        p in permutation_strategy(6),
        q in permutation_strategy(6),
        r in permutation_strategy(6)
    ) {
        let pq_r = p.compose(&q).unwrap().compose(&r).unwrap();
        let p_qr = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(pq_r, p_qr);
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert_eq!(p.lehmer_rank(), Permutation::from_lehmer_rank(6, p.lehmer_rank()).unwrap().lehmer_rank());
    }

    #[test]
    fn cycle_type_is_a_class_invariant(
        p in permutation_strategy(7),
        r in permutation_strategy(7)
    ) {
        let conj = r.compose(&p).unwrap().compose(&r.inverse()).unwrap();
        prop_assert_eq!(conj.cycle_type(), p.cycle_type());
        prop_assert_eq!(p.inverse().cycle_type(), p.cycle_type());
    }

    #[test]
    fn partition_text_round_trip(lam in partition_strategy(24)) {
        let parsed: Partition = lam.to_string().parse().unwrap();
        prop_assert_eq!(parsed, lam.clone());
        let json = serde_json::to_string(&lam).unwrap();
        let back: Partition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, lam);
    }

    #[test]
    fn decimal_output_parses_back(x in -1.0e6f64..1.0e6) {
        let s = ewens_walk::cli::decimal(x);
        let back: f64 = s.parse().unwrap();
        let tol = 1e-11 * x.abs().max(1.0);
        prop_assert!((back - x).abs() <= tol, "{} -> {} -> {}", x, s, back);
    }
}
