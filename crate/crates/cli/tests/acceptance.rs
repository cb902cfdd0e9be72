//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Each criterion recomputes the expected outcome with its own oracle
//! (closed forms, binomial parity, expanded Laurent division) and compares
//! it with the engine and the command-line tool.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use monopole_obstruct::catalog::{identity_suites, DEFAULT_SEED};
use monopole_obstruct_core::classes::FlatBundleDescriptor;
use monopole_obstruct_core::engine::{
    check_even_involution, check_furuta_point, check_spin_family_pin, check_z2_action, check_zp_action,
    z2_certificate, zp_certificate, EquivariantIndex, FamilyHypothesis, InvolutionType, Verdict, Witness,
    ZpActionHypothesis,
};
use monopole_obstruct_core::exact::{
    laurent_exact_divide, BigInt, CyclotomicInteger, CyclotomicRational, LaurentPoly, Prime,
};
use monopole_obstruct_core::lattice::{Block, IntersectionLattice, SpinCData};
use monopole_obstruct_core::scenarios::{
    scenario_branched_cover, scenario_nonspin_family, scenario_spin_family, ScenarioHypothesis,
};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_monopole-obstruct");

fn cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    let code = out.status.code().expect("exit code");
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

fn even_lattice(b_plus: u64, sigma: i64) -> IntersectionLattice {
    IntersectionLattice::from_blocks([(Block::H, b_plus), (Block::E8Minus, (-sigma / 8) as u64)])
}

fn verdict_of(obstructed: bool) -> Verdict {
    if obstructed {
        Verdict::Obstructed
    } else {
        Verdict::Consistent
    }
}

fn criterion_1() -> String {
    let (code, v) = cli(&["check", "donaldson", "--lattice", "E8m", "--spin"]);
    assert_eq!(code, 3);
    assert_eq!(v["verdict"], "obstructed");
    assert_eq!(v["witness"]["d"], 1);
    let (code, v) = cli(&["check", "donaldson", "--lattice", "8D1m", "--c2", "-8"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "consistent");
    let (_, inv) = cli(&["invariants", "--lattice", "8D1m", "--c2", "-8"]);
    assert_eq!(inv["d"], 0);
    "E8m obstructed d=1; 8D1m consistent d=0".into()
}

fn criterion_2() -> String {
    let mut cases = 0;
    for sigma in [-16i64, -32, -48] {
        let mut obstructed = Vec::new();
        for b in 0..=12u64 {
            // b+ ≥ d + 1 with d = -σ/8, and d ≤ 0 when b+ = 0.
            let d = -sigma / 8;
            let expected = verdict_of((b as i64) < d + 1);
            let got = check_furuta_point(&even_lattice(b, sigma), None).unwrap().verdict;
            assert_eq!(got, expected, "σ={sigma} b+={b}");
            if got == Verdict::Obstructed {
                obstructed.push(b);
            }
            cases += 1;
        }
        match sigma {
            -16 => assert_eq!(obstructed, vec![0, 1, 2]),
            -32 => assert_eq!(obstructed, vec![0, 1, 2, 3, 4]),
            _ => {}
        }
    }
    let (code, v) = cli(&["check", "furuta", "--lattice", "2H+2E8m", "--spin"]);
    assert_eq!((code, v["verdict"].as_str()), (3, Some("obstructed")));
    format!("{cases} (b+, σ) pairs exact")
}

/// `w_i(R^u ⊕ R^v_-) = C(v, i) x^i` on `RP^n`, nonzero when `C(v,i)` is odd
/// and `i ≤ n`.
fn rp_window_nonzero(b_plus: u64, v: u64) -> bool {
    (b_plus.saturating_sub(2)..=b_plus).any(|i| i <= b_plus && i <= v && (v & i) == i)
}

fn criterion_3() -> String {
    let mut cases = 0;
    for sigma in [-16i64, -32] {
        for b in 0..=30u64 {
            for u in 0..=b {
                let v = b - u;
                let oracle = verdict_of(rp_window_nonzero(b, v));
                let closed = verdict_of(u <= 2);
                assert_eq!(oracle, closed, "b+={b} u={u}");
                let got = check_even_involution(sigma, u, InvolutionType::Even, Some(b))
                    .unwrap()
                    .verdict;
                let family = FamilyHypothesis::new(
                    even_lattice(b, sigma),
                    SpinCData::spin(),
                    FlatBundleDescriptor::RealProjective { dim: b as u32, u, v },
                );
                let pipeline = check_spin_family_pin(&family).unwrap().verdict;
                assert_eq!(got, oracle, "σ={sigma} b+={b} u={u}");
                assert_eq!(pipeline, oracle, "family σ={sigma} b+={b} u={u}");
                cases += 1;
            }
        }
    }
    format!("{cases} splits, 0 mismatches")
}

fn criterion_4() -> String {
    for (p, g, b) in [(3u32, 5u64, 1u64), (5, 12, 1)] {
        let s = scenario_branched_cover(p, g, b).unwrap();
        let ScenarioHypothesis::Action(h) = &s.hypothesis else {
            panic!("branched cover is an action")
        };
        let (lattice, _) = h.lattice.unwrap();
        let h_count = g * (p as u64 - 1);
        let e8 = 2 * b * p as u64;
        assert_eq!(lattice.count(Block::H), h_count);
        assert_eq!(lattice.count(Block::E8Minus), e8);
        // d = (0 - σ)/8 with σ = -8·e8.
        assert_eq!(h.index.total(), e8 as i64);
        assert_eq!(s.report.verdict, Verdict::Obstructed);
        let flag = |n: &str| s.flags.iter().find(|f| f.name == n).unwrap().value;
        assert!(flag("locally_linear_realizable"));
        assert_eq!(flag("wall_realizable"), h_count > 3 * b * p as u64);
        assert!(flag("wall_realizable"));
        assert!(flag("smooth_action_obstructed"));
        assert!(flag("smooth_structure_exists"));
    }
    let s = scenario_branched_cover(3, 5, 1).unwrap();
    let ScenarioHypothesis::Action(h) = &s.hypothesis else {
        unreachable!()
    };
    assert_eq!(h.lattice.unwrap().0, "10H+6E8m".parse().unwrap());
    assert_eq!(h.index.total(), 6);
    let (code, v) = cli(&["scenario", "branched-cover", "-p", "3", "-g", "5", "-b", "1"]);
    assert_eq!(code, 3);
    assert!(v["scenario"]["flags"]
        .as_array()
        .unwrap()
        .iter()
        .all(|f| f["value"] == true));
    "(3,5,1) 10H+6E8m d=6; (5,12,1) 48>45 d=10".into()
}

fn int_poly(coeffs: &[i64]) -> LaurentPoly<BigInt> {
    LaurentPoly::from_coeffs((), 0, coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

/// Expands numerator and denominator over Z and divides.
fn z2_laurent_oracle(dp: i64, dm: i64, b: u64) -> bool {
    let app = (-dp).max(0) as u64;
    let apm = (-dm).max(0) as u64;
    let ap = app as i64 + dp;
    let am = apm as i64 + dm;
    let one_minus = int_poly(&[1, -1]);
    let one_plus = int_poly(&[1, 1]);
    let top = &(&int_poly(&[1 << b]) * &one_minus.pow(2 * app)) * &one_plus.pow(2 * apm);
    let bottom = &one_minus.pow(2 * ap as u64) * &one_plus.pow(2 * am as u64);
    matches!(laurent_exact_divide(&top, &bottom).unwrap(), Some(q) if q.is_polynomial())
}

fn criterion_5() -> String {
    let mut cases = 0;
    for dp in -6..=6i64 {
        for dm in -6..=6i64 {
            for b in 0..=8u64 {
                let closed = dp <= 0 && dm <= 0;
                let (_, cert) = z2_certificate(dp, dm, b);
                assert_eq!(cert.outcome.is_polynomial(), closed, "d+={dp} d-={dm} b+={b}");
                assert_eq!(
                    z2_laurent_oracle(dp, dm, b),
                    closed,
                    "oracle d+={dp} d-={dm} b+={b}"
                );
                let mut hyp = ZpActionHypothesis::new(Prime::TWO, EquivariantIndex::Eigen(vec![dp, dm]), 0);
                hyp.hplus_eigen = Some(vec![0, b]);
                assert_eq!(check_z2_action(&hyp).unwrap().verdict, verdict_of(!closed));
                cases += 1;
            }
        }
    }
    format!("{cases} cases, 100% agreement")
}

/// Divides the constant `∏(1-ω^j)^{h_j}` by each `(1 - ω^j t)` in turn over
/// `Q(ω)`, multiplying in the positive powers first.
fn zp_division_oracle(p: Prime, d: &[i64], h: &[u64]) -> bool {
    let n = d.len();
    let one = CyclotomicInteger::one(p);
    let mut c = one.clone();
    for (j, &hj) in h.iter().enumerate().skip(1) {
        c = &c * &(&one - &CyclotomicInteger::omega_pow(p, j as i64)).pow(hj);
    }
    let form = |j: usize| {
        LaurentPoly::from_terms(
            p,
            [
                (0, CyclotomicRational::one(p)),
                (1, -CyclotomicInteger::omega_pow(p, j as i64).to_rational()),
            ],
        )
    };
    let mut acc = LaurentPoly::constant(c.to_rational());
    let exps: Vec<i64> = (0..n).map(|j| -(d[j] + d[(n - j) % n])).collect();
    for (j, &e) in exps.iter().enumerate() {
        if e > 0 {
            acc = &acc * &form(j).pow(e as u64);
        }
    }
    for (j, &e) in exps.iter().enumerate() {
        for _ in 0..(-e).max(0) {
            match laurent_exact_divide(&acc, &form(j)).unwrap() {
                Some(q) => acc = q,
                None => return false,
            }
        }
    }
    acc.is_polynomial()
}

fn criterion_6() -> String {
    let mut cases = 0usize;
    let mut oracle_cases = 0usize;
    for p in [3u32, 5] {
        let prime = Prime::new(p).unwrap();
        let n = p as usize;
        let half = (n - 1) / 2;
        let hs: Vec<Vec<u64>> = (0..4u64.pow(half as u32))
            .map(|code| {
                let mut h = vec![0u64; n];
                for i in 0..half {
                    let x = (code / 4u64.pow(i as u32)) % 4;
                    h[i + 1] = x;
                    h[n - 1 - i] = x;
                }
                h
            })
            .collect();
        for code in 0..7u64.pow(p) {
            let d: Vec<i64> = (0..n)
                .map(|i| ((code / 7u64.pow(i as u32)) % 7) as i64 - 3)
                .collect();
            let sign = (0..n).all(|j| d[j] + d[(n - j) % n] <= 0);
            for h in &hs {
                let (_, cert) = zp_certificate(prime, &d, Some(h), 0).unwrap();
                assert_eq!(cert.outcome.is_polynomial(), sign, "p={p} d={d:?} h={h:?}");
                cases += 1;
                if cases.is_multiple_of(211) {
                    assert_eq!(
                        zp_division_oracle(prime, &d, h),
                        sign,
                        "oracle p={p} d={d:?} h={h:?}"
                    );
                    oracle_cases += 1;
                }
            }
            let hyp = ZpActionHypothesis::new(prime, EquivariantIndex::Eigen(d.clone()), 0);
            assert_eq!(
                check_zp_action(&hyp).unwrap().verdict,
                verdict_of(d.iter().any(|&x| x > 0))
            );
        }
    }
    format!("{cases} cases, 100% agreement ({oracle_cases} also by division)")
}

fn criterion_7() -> String {
    let suites = identity_suites(DEFAULT_SEED).unwrap();
    for (name, outcome) in &suites {
        assert!(outcome.mismatches.is_empty(), "{name}: {:?}", outcome.mismatches);
    }
    assert_eq!(suites[0].1.cases, 200);
    for p in [3u32, 5, 7] {
        let prime = Prime::new(p).unwrap();
        let one = CyclotomicInteger::one(prime);
        let prod = (1..p as i64).fold(one.clone(), |a, j| {
            &a * &(&one - &CyclotomicInteger::omega_pow(prime, j))
        });
        assert_eq!(prod.as_scalar(), Some(&BigInt::from(p)));
    }
    let total: usize = suites.iter().map(|(_, o)| o.cases).sum();
    format!("{} suites, {total} identities", suites.len())
}

fn criterion_8() -> String {
    let s = scenario_spin_family(3, 1).unwrap();
    let ScenarioHypothesis::Family(h) = &s.hypothesis else {
        panic!()
    };
    let (bp, bm) = (h.lattice.b_plus(), h.lattice.b_minus());
    assert_eq!((bp, bm), (3, 19));
    assert_eq!(s.torus_dim.unwrap().0 as u64, bp.min(bm) - 2);
    assert_eq!(s.report.verdict, Verdict::Obstructed);
    match &s.report.witness {
        Some(Witness::SwWindow { indices, classes, .. }) => {
            assert_eq!(indices, &vec![bp - 2]);
            assert_eq!(classes, &vec!["t1".to_string()]);
        }
        w => panic!("{w:?}"),
    }

    let s = scenario_nonspin_family(1, 0, false).unwrap();
    let ScenarioHypothesis::Family(h) = &s.hypothesis else {
        panic!()
    };
    let (bp, bm) = (h.lattice.b_plus(), h.lattice.b_minus());
    assert_eq!((bp, bm), (1, 10));
    assert_eq!(s.torus_dim.unwrap().0 as u64, bp.min(bm));
    assert_eq!(s.report.verdict, Verdict::Obstructed);
    match &s.report.witness {
        Some(Witness::NonzeroEuler { degree, class, d }) => {
            assert_eq!((*degree, class.as_str(), *d), (bp, "t1", 1));
        }
        w => panic!("{w:?}"),
    }
    "spin w_1 over T^1; nonspin w_1 over T^1".into()
}

fn criterion_9() -> String {
    let out = Command::new(BIN).arg("catalog").output().expect("binary runs");
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    let summary = text.lines().last().unwrap_or_default().to_string();
    assert!(summary.ends_with(", 0 mismatches"), "{summary}");
    for c in 1..=8 {
        assert!(
            text.lines().any(|l| l.starts_with(&format!("{c} "))),
            "criterion {c} missing"
        );
    }
    summary
}

type Criterion = (u32, Duration, fn() -> String);

fn main() {
    let criteria: [Criterion; 9] = [
        (1, Duration::from_secs(1), criterion_1),
        (2, Duration::from_secs(1), criterion_2),
        (3, Duration::from_secs(5), criterion_3),
        (4, Duration::from_secs(1), criterion_4),
        (5, Duration::from_secs(10), criterion_5),
        (6, Duration::from_secs(60), criterion_6),
        (7, Duration::from_secs(10), criterion_7),
        (8, Duration::from_secs(1), criterion_8),
        (9, Duration::from_secs(120), criterion_9),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, budget, f) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f));
        let elapsed = start.elapsed();
        let line = match result {
            Ok(detail) if elapsed <= budget => {
                format!("PASS  criterion {n}: {detail} [{elapsed:.2?} / {budget:?}]")
            }
            Ok(detail) => {
                failed += 1;
                format!("FAIL  criterion {n}: {detail}, over budget [{elapsed:.2?} / {budget:?}]")
            }
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("FAIL  criterion {n}: {msg} [{elapsed:.2?}]")
            }
        };
        println!("{line}");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
