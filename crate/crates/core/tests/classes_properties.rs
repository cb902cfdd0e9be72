use std::collections::BTreeSet;
use std::sync::Arc;

use monopole_obstruct_core::classes::{
    euler_s1_complex, sw_total, total_segre, whitney_sum, FlatBundleDescriptor, Generator, GradedClass,
    RingPresentation,
};
use monopole_obstruct_core::exact::{binomial_mod2, BigInt};
use proptest::prelude::*;

/// All exponent vectors of the given degree, within the truncation bounds.
fn monomials_of_degree(ring: &RingPresentation, degree: u32) -> Vec<Vec<u32>> {
    fn go(ring: &RingPresentation, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let gens = ring.generators();
        if i == gens.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let g = &gens[i];
        let cap = g.nilpotency.map_or(u32::MAX, |n| n - 1);
        let mut e = 0;
        while e <= cap && e * g.degree <= left {
            cur.push(e);
            go(ring, i + 1, left - e * g.degree, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    go(ring, 0, degree, &mut Vec::new(), &mut out);
    out
}

fn ring_strategy() -> impl Strategy<Value = Arc<RingPresentation>> {
    proptest::collection::vec((prop_oneof![Just(2u32), Just(4)], 1u32..=6), 1..=3).prop_map(|gens| {
        let gens = gens
            .into_iter()
            .enumerate()
            .map(|(i, (deg, nil))| Generator::new(&format!("g{i}"), deg).nilpotent(nil))
            .collect();
        RingPresentation::new(0, gens).unwrap()
    })
}

fn chern_strategy() -> impl Strategy<Value = Vec<GradedClass>> {
    (ring_strategy(), 1usize..=3, any::<u64>()).prop_map(|(ring, rank, seed)| {
        let mut state = seed;
        let mut next = || {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        let mut chern = vec![GradedClass::one(&ring)];
        for j in 1..=rank {
            let mut c = GradedClass::zero(&ring);
            for m in monomials_of_degree(&ring, 2 * j as u32) {
                let term = GradedClass::monomial(&ring, m, BigInt::from(next())).unwrap();
                c = c.checked_add(&term).unwrap();
            }
            chern.push(c);
        }
        chern
    })
}

proptest! {
    #[test]
    fn chern_times_segre_is_one(chern in chern_strategy(), length in 1usize..=6) {
        let s = total_segre(&chern, length).unwrap();
        let ring = chern[0].ring().clone();
        for k in 1..=length {
            let mut acc = GradedClass::zero(&ring);
            for i in 0..=k.min(chern.len() - 1) {
                acc = acc.checked_add(&chern[i].checked_mul(&s[k - i]).unwrap()).unwrap();
            }
            prop_assert!(acc.is_zero(), "degree {} term is {}", 2 * k, acc);
        }
    }

    #[test]
    fn euler_class_is_multiplicative(a in chern_strategy(), seed in any::<u64>()) {
        // Second factor over the same ring: scale the first by a small integer.
        let ring = a[0].ring().clone();
        let n = BigInt::from((seed % 5) as i64 - 2);
        let b: Vec<_> = a
            .iter()
            .enumerate()
            .map(|(j, c)| if j == 0 { c.clone() } else { c.scale(&n) })
            .collect();
        let sum = whitney_sum(&a, &b).unwrap();
        let (r1, ea) = euler_s1_complex(&a, a.len() - 1).unwrap();
        let (_, eb) = euler_s1_complex(&b, b.len() - 1).unwrap();
        let (r3, es) = euler_s1_complex(&sum, sum.len() - 1).unwrap();
        prop_assert_eq!(&r1, &r3);
        prop_assert_eq!(ea.checked_mul(&eb).unwrap(), es);
        prop_assert_eq!(ring.generators(), &r1.generators()[..ring.generators().len()]);
    }

    #[test]
    fn projective_coefficients_are_binomials(n in 0u32..12, u in 0u64..5, v in 0u64..40) {
        let d = FlatBundleDescriptor::RealProjective { dim: n, u, v };
        let w = sw_total(&d);
        for i in 0..=n {
            let bit = w.coeff(&[i]) == BigInt::from(1);
            prop_assert_eq!(bit, binomial_mod2(v, i as u64), "i = {}", i);
        }
    }

    #[test]
    fn whitney_formula_for_torus_bundles(
        dim in 1u32..5,
        lines_a in proptest::collection::vec(proptest::collection::btree_set(0u32..5, 0..3), 0..4),
        lines_b in proptest::collection::vec(proptest::collection::btree_set(0u32..5, 0..3), 0..4),
        ta in 0u64..3,
        tb in 0u64..3,
    ) {
        let clip = |ls: Vec<BTreeSet<u32>>| -> Vec<BTreeSet<u32>> {
            ls.into_iter().map(|s| s.into_iter().filter(|&i| i < dim).collect()).collect()
        };
        let a = FlatBundleDescriptor::torus(dim, clip(lines_a), ta).unwrap();
        let b = FlatBundleDescriptor::torus(dim, clip(lines_b), tb).unwrap();
        let sum = a.direct_sum(&b).unwrap();
        prop_assert_eq!(sw_total(&sum), sw_total(&a).checked_mul(&sw_total(&b)).unwrap());
    }

    #[test]
    fn whitney_formula_for_projective_bundles(n in 0u32..10, u1 in 0u64..4, v1 in 0u64..12, u2 in 0u64..4, v2 in 0u64..12) {
        let a = FlatBundleDescriptor::RealProjective { dim: n, u: u1, v: v1 };
        let b = FlatBundleDescriptor::RealProjective { dim: n, u: u2, v: v2 };
        let sum = a.direct_sum(&b).unwrap();
        prop_assert_eq!(sw_total(&sum), sw_total(&a).checked_mul(&sw_total(&b)).unwrap());
    }
}
