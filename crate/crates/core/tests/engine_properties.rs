use monopole_obstruct_core::classes::FlatBundleDescriptor;
use monopole_obstruct_core::engine::{
    check_even_involution, check_family_euler, check_furuta_point, check_point_donaldson, check_zp_action,
    zp_certificate, EquivariantIndex, FamilyHypothesis, InvolutionType, Verdict, Witness, ZpActionHypothesis,
};
use monopole_obstruct_core::exact::Prime;
use monopole_obstruct_core::lattice::{dirac_index, Block, IntersectionLattice, SpinCData};
use proptest::prelude::*;

fn lattice_strategy() -> impl Strategy<Value = IntersectionLattice> {
    proptest::collection::vec(0u64..4, 5)
        .prop_map(|c| IntersectionLattice::from_blocks(Block::ALL.iter().copied().zip(c)))
}

/// A characteristic `c²` for the lattice: `Σ (odd integers)²` over the
/// diagonal blocks with sign, zero on the even part.
fn characteristic(l: &IntersectionLattice, odd: &[i64]) -> SpinCData {
    if l.is_even() {
        return SpinCData::spin();
    }
    let plus = l.count(Block::DiagPlus) as usize;
    let minus = l.count(Block::DiagMinus) as usize;
    let pick = |i: usize| {
        let k = odd[i % odd.len()];
        k * k
    };
    let c2 = (0..plus).map(pick).sum::<i64>() - (plus..plus + minus).map(pick).sum::<i64>();
    SpinCData::with_c_squared(c2)
}

fn odd_values() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(prop_oneof![Just(1i64), Just(3), Just(5)], 1..4)
}

proptest! {
    #[test]
    fn donaldson_witness_is_sound(l in lattice_strategy(), odd in odd_values()) {
        let s = characteristic(&l, &odd);
        let r = check_point_donaldson(&l, &s).unwrap();
        if let Some(Witness::PositiveIndex { d, c_squared, signature }) = r.witness {
            prop_assert_eq!(l.b_plus(), 0);
            prop_assert_eq!(signature, l.signature());
            prop_assert_eq!(c_squared, s.c_squared);
            prop_assert_eq!(d, (c_squared - signature) / 8);
            prop_assert!(d > 0);
        } else {
            prop_assert!(l.b_plus() > 0 || dirac_index(&l, &s).unwrap() <= 0);
        }
    }

    #[test]
    fn furuta_is_monotone_in_b_plus(b in 0u64..12, k in 1u64..8) {
        let at = |b: u64| {
            let l = IntersectionLattice::from_blocks([(Block::H, b), (Block::E8Minus, 2 * k)]);
            check_furuta_point(&l, None).unwrap()
        };
        let r = at(b);
        if r.verdict == Verdict::Consistent {
            prop_assert_eq!(at(b + 1).verdict, Verdict::Consistent);
        }
        if let Some(Witness::TenEighths { b_plus, d, .. }) = r.witness {
            prop_assert_eq!(b_plus, b);
            prop_assert_eq!(d, 2 * k as i64);
            prop_assert!((b_plus as i64) < d + 1);
        }
    }

    #[test]
    fn zp_lowering_an_index_keeps_consistency(
        p in prop_oneof![Just(3u32), Just(5), Just(7)],
        raw in proptest::collection::vec(-4i64..=2, 7),
        at in 0usize..7,
    ) {
        let prime = Prime::new(p).unwrap();
        let d: Vec<i64> = raw[..p as usize].to_vec();
        let verdict = |d: &[i64]| {
            check_zp_action(&ZpActionHypothesis::new(prime, EquivariantIndex::Eigen(d.to_vec()), 0))
                .unwrap()
                .verdict
        };
        if verdict(&d) == Verdict::Consistent {
            let mut lower = d.clone();
            lower[at % p as usize] -= 1;
            prop_assert_eq!(verdict(&lower), Verdict::Consistent);
        }
    }

    #[test]
    fn zp_certificates_under_every_relabelling(
        p in prop_oneof![Just(3u32), Just(5)],
        raw in proptest::collection::vec(-3i64..=3, 5),
        h_half in proptest::collection::vec(0u64..=3, 2),
    ) {
        let prime = Prime::new(p).unwrap();
        let n = p as usize;
        let d = &raw[..n];
        let mut h = vec![0u64; n];
        for i in 0..(n - 1) / 2 {
            h[i + 1] = h_half[i];
            h[n - 1 - i] = h_half[i];
        }
        for shift in 0..n {
            let (_, cert) = zp_certificate(prime, d, Some(&h), shift).unwrap();
            let relabeled = |j: usize| d[(j + shift) % n];
            let sign = (0..n).all(|j| relabeled(j) + relabeled((n - j) % n) <= 0);
            prop_assert_eq!(cert.outcome.is_polynomial(), sign, "shift {}", shift);
        }
        let r = check_zp_action(&ZpActionHypothesis::new(prime, EquivariantIndex::Eigen(d.to_vec()), 0)).unwrap();
        if let Some(Witness::ZpEigenspace { j, certificate, .. }) = r.witness {
            prop_assert!(d[j] > 0);
            prop_assert_eq!(certificate.shift, j);
            prop_assert!(!certificate.outcome.is_polynomial());
        }
    }

    #[test]
    fn family_euler_witness_is_the_top_class(k in 1u32..5, extra in 0u64..3, b in 0u64..4) {
        // k·H ⊕ (b+1)·(-1) ⊕ (-E8) with c² = -(b+1), so d = 1.
        let l = IntersectionLattice::from_blocks([
            (Block::H, k as u64 + extra),
            (Block::DiagMinus, b + 1),
            (Block::E8Minus, 1),
        ]);
        let hplus = FlatBundleDescriptor::torus_coordinate_lines(k, extra);
        let h = FamilyHypothesis::new(l, SpinCData::with_c_squared(-(b as i64 + 1)), hplus);
        let r = check_family_euler(&h).unwrap();
        // The top class w_{k+extra} vanishes once a trivial summand is present.
        if extra == 0 {
            let Some(Witness::NonzeroEuler { degree, class, d }) = r.witness else {
                return Err(TestCaseError::fail(format!("{r:?}")));
            };
            prop_assert_eq!(degree, k as u64);
            prop_assert_eq!(d, 1);
            let expected: Vec<String> = (1..=k).map(|i| format!("t{i}")).collect();
            prop_assert_eq!(class, expected.join("·"));
        } else {
            prop_assert_eq!(r.verdict, Verdict::Consistent);
        }
    }
}

#[test]
fn even_involution_needs_three_invariant_directions() {
    for sigma in [-16i64, -32, -48] {
        for b in 0..=12u64 {
            for inv in 0..=b {
                let r = check_even_involution(sigma, inv, InvolutionType::Even, Some(b)).unwrap();
                assert_eq!(
                    r.verdict == Verdict::Obstructed,
                    inv <= 2,
                    "σ={sigma} b+={b} inv={inv}"
                );
                let odd = check_even_involution(sigma, inv, InvolutionType::Odd, Some(b)).unwrap();
                assert_eq!(odd.verdict, Verdict::NotApplicable);
            }
        }
    }
}
