// Cross-module invariants against brute-force scans.

use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use powerdiv::divset::{
    brute_enumerate, certify, enumerate, extensions, member, member_direct, parent, CertifyOutcome, Instance,
};
use powerdiv::general::{enumerate_general, member_general, plus_member, plus_set};

fn coprime(a: i64, b: i64) -> bool {
    a.gcd(&b) == 1 && a != b && a != -b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_scan(a in -30i64..30, b in -30i64..30, j in 1u32..4) {
        prop_assume!(coprime(a, b));
        let inst = Instance::new(a, b, j).unwrap();
        prop_assert_eq!(enumerate(&inst, 3000).unwrap().members, brute_enumerate(&inst, 3000));
    }

    #[test]
    fn members_are_certified_and_closed_downward(a in -40i64..40, b in -40i64..40, j in 1u32..4) {
        prop_assume!(coprime(a, b));
        let inst = Instance::new(a, b, j).unwrap();
        let e = enumerate(&inst, 5000).unwrap();
        for &n in &e.members {
            match certify(&inst, n).unwrap() {
                CertifyOutcome::Member(c) => prop_assert!(c.verify(&inst)),
                CertifyOutcome::NonMember(s) => prop_assert!(false, "{} failed at {:?}", n, s),
            }
            if let Some(p) = parent(n).unwrap() {
                prop_assert!(member(&inst, p).unwrap());
                prop_assert_eq!(e.tree.spanning_parent(n), Some(p));
            }
        }
    }

    #[test]
    fn sets_are_nested(a in -25i64..25, b in -25i64..25) {
        prop_assume!(coprime(a, b));
        let sets: Vec<Vec<u64>> = (1..=4)
            .map(|j| enumerate(&Instance::new(a, b, j).unwrap(), 2000).unwrap().members)
            .collect();
        for w in sets.windows(2) {
            prop_assert!(w[1].iter().all(|n| w[0].binary_search(n).is_ok()));
        }
    }

    #[test]
    fn extensions_are_complete(a in -15i64..15, b in -15i64..15, j in 1u32..4) {
        prop_assume!(coprime(a, b));
        let inst = Instance::new(a, b, j).unwrap();
        let all = brute_enumerate(&inst, 2000);
        for &n in all.iter().filter(|&&n| n <= 500) {
            let ext = extensions(&inst, n, 500).unwrap();
            for p in powerdiv::arith::primes_up_to(500).into_iter().filter(|&p| n * p <= 2000) {
                let listed = ext.entries.iter().any(|e| e.p == p);
                prop_assert_eq!(listed, all.binary_search(&(n * p)).is_ok(), "n = {}, p = {}", n, p);
            }
        }
    }

    #[test]
    fn general_matches_scan(a in -60i64..60, b in -60i64..60, j in 1u32..5) {
        prop_assume!(a != b);
        let got = enumerate_general(&BigInt::from(a), &BigInt::from(b), j, 1500).unwrap().members;
        let want: Vec<u64> = (1..=1500)
            .filter(|&n| member_direct(&BigInt::from(a), &BigInt::from(b), j, n))
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn member_general_agrees_on_large_n(a in -1000i64..1000, b in -1000i64..1000, j in 1u32..4, n in 1u64..1_000_000) {
        prop_assume!(a != 0 || b != 0);
        let (a, b) = (BigInt::from(a), BigInt::from(b));
        prop_assert_eq!(member_general(&a, &b, j, n).unwrap(), member_direct(&a, &b, j, n));
    }

    #[test]
    fn plus_sets_match_scan(a in -30i64..30, b in -30i64..30, j in 1u32..4) {
        prop_assume!(a != 0 || b != 0);
        let (ba, bb) = (BigInt::from(a), BigInt::from(b));
        let got = plus_set(&ba, &bb, j, 1000).unwrap().members;
        let want: Vec<u64> = (1..=1000).filter(|&n| plus_member(&ba, &bb, j, n).unwrap()).collect();
        prop_assert_eq!(&got, &want);
        if j >= 2 && a.gcd(&b) == 1 {
            prop_assert!(got.iter().all(|n| n % 2 == 1));
        }
    }
}

#[test]
fn doubling_for_second_powers() {
    for a in -12i64..=12 {
        for b in -12i64..=12 {
            if !coprime(a, b) {
                continue;
            }
            let inst = Instance::new(a, b, 2).unwrap();
            let set = brute_enumerate(&inst, 4000);
            for &n in set.iter().filter(|&&n| n % 4 == 2 && 2 * n <= 4000) {
                assert!(set.binary_search(&(2 * n)).is_ok(), "({a},{b}): {n} in, {} not", 2 * n);
            }
        }
    }
}

#[test]
fn first_powers_absorb_their_primes() {
    for (a, b) in [(3, 1), (7, -2), (10, 3), (-5, 2)] {
        let inst = Instance::new(a, b, 1).unwrap();
        let set = brute_enumerate(&inst, 5000);
        for &n in set.iter().filter(|&&n| n > 1) {
            for p in powerdiv::arith::factorize(n).unwrap().primes() {
                if n * p <= 5000 {
                    assert!(set.binary_search(&(n * p)).is_ok(), "({a},{b}): {n} * {p}");
                }
            }
        }
    }
}
