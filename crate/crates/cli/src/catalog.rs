//! Every worked example and exhaustive grid, with the verdict each one is
//! expected to produce.

use std::collections::BTreeSet;
use std::sync::Arc;

use monopole_obstruct_core::classes::{
    sw_total, total_segre, FlatBundleDescriptor, Generator, GradedClass, RingPresentation,
};
use monopole_obstruct_core::engine::{
    check_even_involution, check_furuta_point, check_point_donaldson, check_spin_family_pin, check_z2_action,
    check_zp_action, z2_certificate, zp_certificate, EquivariantIndex, FamilyHypothesis, InvolutionType,
    Verdict, Witness, ZpActionHypothesis,
};
use monopole_obstruct_core::exact::{BigInt, CyclotomicInteger, Prime};
use monopole_obstruct_core::lattice::{dirac_index, Block, IntersectionLattice, SpinCData};
use monopole_obstruct_core::rep::{character_at, lambda_total, psi2, Pin2Element, ZpVirtualRep};
use monopole_obstruct_core::scenarios::{
    scenario_branched_cover, scenario_nonspin_family, scenario_spin_family, Scenario,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CliError;

pub const SEED_VAR: &str = "MONOPOLE_OBSTRUCT_SEED";
pub const DEFAULT_SEED: u64 = 0x6d6f_6e6f;

/// Seed for the randomized suites, from `MONOPOLE_OBSTRUCT_SEED` if set.
pub fn seed_from_env() -> Result<u64, CliError> {
    match std::env::var(SEED_VAR) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{SEED_VAR}={s:?} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogRow {
    pub criterion: u8,
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl CatalogRow {
    fn verdict(criterion: u8, id: impl Into<String>, expected: Verdict, actual: Verdict) -> Self {
        CatalogRow {
            criterion,
            id: id.into(),
            expected: expected.as_str().into(),
            actual: actual.as_str().into(),
            ok: expected == actual,
        }
    }

    fn grid(criterion: u8, id: impl Into<String>, rule: &str, g: &GridOutcome) -> Self {
        CatalogRow {
            criterion,
            id: id.into(),
            expected: rule.into(),
            actual: format!("{} cases, {} mismatches", g.cases, g.mismatches.len()),
            ok: g.mismatches.is_empty(),
        }
    }

    fn check(criterion: u8, id: impl Into<String>, expected: impl Into<String>, actual: String) -> Self {
        let expected = expected.into();
        CatalogRow {
            criterion,
            id: id.into(),
            ok: expected == actual,
            expected,
            actual,
        }
    }
}

/// Case count and a description of every disagreement.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridOutcome {
    pub cases: usize,
    pub mismatches: Vec<String>,
}

impl GridOutcome {
    fn record(&mut self, agree: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !agree {
            self.mismatches.push(describe());
        }
    }
}

fn obstructed_if(b: bool) -> Verdict {
    if b {
        Verdict::Obstructed
    } else {
        Verdict::Consistent
    }
}

fn even_lattice(b_plus: u64, sigma: i64) -> IntersectionLattice {
    IntersectionLattice::from_blocks([(Block::H, b_plus), (Block::E8Minus, (-sigma / 8) as u64)])
}

/// `b⁺·H ⊕ (-σ/8)·(-E8)` against `b⁺ ≥ -σ/8 + 1`.
pub fn furuta_grid(sigmas: &[i64], max_b_plus: u64) -> Result<GridOutcome, CliError> {
    let mut g = GridOutcome::default();
    for &sigma in sigmas {
        for b in 0..=max_b_plus {
            let expected = obstructed_if(b as i64 <= -sigma / 8);
            let actual = check_furuta_point(&even_lattice(b, sigma), None)?.verdict;
            g.record(expected == actual, || format!("σ={sigma} b+={b}: {actual:?}"));
        }
    }
    Ok(g)
}

/// `check_even_involution` against `inv_dim ≤ 2` and against the spin
/// family check on `R^u ⊕ R^v_-` over `RP^{b⁺}`, every split `u + v = b⁺`.
pub fn even_involution_grid(sigmas: &[i64], max_b_plus: u64) -> Result<GridOutcome, CliError> {
    let mut g = GridOutcome::default();
    for &sigma in sigmas {
        for b in 0..=max_b_plus {
            for u in 0..=b {
                let v = b - u;
                let actual = check_even_involution(sigma, u, InvolutionType::Even, Some(b))?.verdict;
                let family = FamilyHypothesis::new(
                    even_lattice(b, sigma),
                    SpinCData::spin(),
                    FlatBundleDescriptor::RealProjective { dim: b as u32, u, v },
                );
                let pipeline = check_spin_family_pin(&family)?.verdict;
                let closed = obstructed_if(u <= 2);
                g.record(actual == pipeline && actual == closed, || {
                    format!("σ={sigma} b+={b} u={u}: {actual:?} vs family {pipeline:?}")
                });
            }
        }
    }
    Ok(g)
}

/// Laurent certificate and checker verdict against `d₊ ≤ 0 ∧ d₋ ≤ 0`.
pub fn z2_grid(range: i64, max_b_plus: u64) -> Result<GridOutcome, CliError> {
    let mut g = GridOutcome::default();
    for dp in -range..=range {
        for dm in -range..=range {
            for b in 0..=max_b_plus {
                let closed = dp <= 0 && dm <= 0;
                let (_, cert) = z2_certificate(dp, dm, b);
                let mut hyp = ZpActionHypothesis::new(Prime::TWO, EquivariantIndex::Eigen(vec![dp, dm]), 0);
                hyp.hplus_eigen = Some(vec![0, b]);
                let verdict = check_z2_action(&hyp)?.verdict;
                g.record(
                    cert.outcome.is_polynomial() == closed && verdict == obstructed_if(!closed),
                    || format!("d+={dp} d-={dm} b+={b}: {:?}, {verdict:?}", cert.outcome),
                );
            }
        }
    }
    Ok(g)
}

/// Cyclotomic certificate against `d_j + d_{p-j} ≤ 0` for all `j`, over
/// `d_j ∈ [-range, range]` and symmetric `h` with `h_j ∈ [0, max_h]`.
pub fn zp_grid(p: u32, range: i64, max_h: u64) -> Result<GridOutcome, CliError> {
    let prime = Prime::new(p)?;
    let n = p as usize;
    let half = (n - 1) / 2;
    let mut g = GridOutcome::default();
    let mut hs = Vec::new();
    let mut half_h = vec![0u64; half];
    loop {
        let mut h = vec![0u64; n];
        for (i, &x) in half_h.iter().enumerate() {
            h[i + 1] = x;
            h[n - 1 - i] = x;
        }
        hs.push(h);
        if !advance(&mut half_h, 0, max_h) {
            break;
        }
    }
    let mut d = vec![-range; n];
    loop {
        let closed = (0..n).all(|j| d[j] + d[(n - j) % n] <= 0);
        let mut hyp = ZpActionHypothesis::new(prime, EquivariantIndex::Eigen(d.clone()), 0);
        hyp.hplus_eigen = Some(vec![0; n]);
        let verdict = check_zp_action(&hyp)?.verdict;
        let any_positive = d.iter().any(|&x| x > 0);
        for h in &hs {
            let (_, cert) = zp_certificate(prime, &d, Some(h), 0)?;
            g.record(
                cert.outcome.is_polynomial() == closed && verdict == obstructed_if(any_positive),
                || format!("p={p} d={d:?} h={h:?}: {:?}, {verdict:?}", cert.outcome),
            );
        }
        if !advance_signed(&mut d, range) {
            break;
        }
    }
    Ok(g)
}

fn advance(v: &mut [u64], lo: u64, hi: u64) -> bool {
    for x in v.iter_mut() {
        if *x < hi {
            *x += 1;
            return true;
        }
        *x = lo;
    }
    false
}

fn advance_signed(v: &mut [i64], range: i64) -> bool {
    for x in v.iter_mut() {
        if *x < range {
            *x += 1;
            return true;
        }
        *x = -range;
    }
    false
}

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

fn random_chern(rng: &mut ChaCha8Rng) -> Result<Vec<GradedClass>, CliError> {
    let gens = (0..rng.gen_range(1..=3))
        .map(|i| {
            Generator::new(&format!("g{i}"), [2, 4][rng.gen_range(0..2)]).nilpotent(rng.gen_range(1..=6))
        })
        .collect();
    let ring = RingPresentation::new(0, gens)?;
    let mut chern = vec![GradedClass::one(&ring)];
    for j in 1..=rng.gen_range(1..=3u32) {
        let mut c = GradedClass::zero(&ring);
        for m in monomials_of_degree(&ring, 2 * j) {
            c = c.checked_add(&GradedClass::monomial(
                &ring,
                m,
                BigInt::from(rng.gen_range(-3..=3)),
            )?)?;
        }
        chern.push(c);
    }
    Ok(chern)
}

/// `Σ_i c_i s_{k-i} = 0` for `0 < k ≤ length`.
fn chern_segre_identity(rng: &mut ChaCha8Rng, cases: usize) -> Result<GridOutcome, CliError> {
    let mut g = GridOutcome::default();
    for _ in 0..cases {
        let chern = random_chern(rng)?;
        let length = rng.gen_range(1..=6usize);
        let s = total_segre(&chern, length)?;
        let ring: Arc<RingPresentation> = chern[0].ring().clone();
        let mut ok = s[0] == GradedClass::one(&ring);
        for k in 1..=length {
            let mut acc = GradedClass::zero(&ring);
            for i in 0..=k.min(chern.len() - 1) {
                acc = acc.checked_add(&chern[i].checked_mul(&s[k - i])?)?;
            }
            ok &= acc.is_zero();
        }
        g.record(ok, || format!("c = {chern:?}"));
    }
    Ok(g)
}

fn random_torus_bundle(rng: &mut ChaCha8Rng, dim: u32) -> Result<FlatBundleDescriptor, CliError> {
    let lines = (0..rng.gen_range(0..=4))
        .map(|_| (0..dim).filter(|_| rng.gen_bool(0.4)).collect::<BTreeSet<_>>())
        .collect();
    Ok(FlatBundleDescriptor::torus(dim, lines, rng.gen_range(0..=2))?)
}

fn whitney_identity(rng: &mut ChaCha8Rng, cases: usize) -> Result<GridOutcome, CliError> {
    let mut g = GridOutcome::default();
    for _ in 0..cases {
        let (a, b) = if rng.gen_bool(0.5) {
            let dim = rng.gen_range(1..=5);
            (random_torus_bundle(rng, dim)?, random_torus_bundle(rng, dim)?)
        } else {
            let dim = rng.gen_range(1..=12);
            let mut pick = || FlatBundleDescriptor::RealProjective {
                dim,
                u: rng.gen_range(0..=3),
                v: rng.gen_range(0..=8),
            };
            (pick(), pick())
        };
        let sum = sw_total(&a.direct_sum(&b)?);
        let product = sw_total(&a).checked_mul(&sw_total(&b))?;
        g.record(sum == product, || format!("{a:?} ⊕ {b:?}"));
    }
    Ok(g)
}

fn random_rep(rng: &mut ChaCha8Rng, p: Prime, lo: i64, hi: i64) -> Result<ZpVirtualRep, CliError> {
    let mult: Vec<i64> = (0..p.as_usize()).map(|_| rng.gen_range(lo..=hi)).collect();
    Ok(ZpVirtualRep::from_i64(p, &mult)?)
}

fn random_prime(rng: &mut ChaCha8Rng) -> Prime {
    Prime::new([2, 3, 5, 7][rng.gen_range(0..4)]).expect("listed primes")
}

fn psi2_character_identity(rng: &mut ChaCha8Rng, cases: usize) -> Result<GridOutcome, CliError> {
    let mut g = GridOutcome::default();
    for _ in 0..cases {
        let p = random_prime(rng);
        let r = random_rep(rng, p, -5, 5)?;
        let k = rng.gen_range(0..2 * p.get() as i64);
        g.record(character_at(&psi2(&r), k) == character_at(&r, 2 * k), || {
            format!("{r} at k={k}")
        });
    }
    Ok(g)
}

fn lambda_multiplicativity(rng: &mut ChaCha8Rng, cases: usize) -> Result<GridOutcome, CliError> {
    let mut g = GridOutcome::default();
    for _ in 0..cases {
        let p = random_prime(rng);
        let a = random_rep(rng, p, 0, 3)?;
        let b = random_rep(rng, p, 0, 3)?;
        let lhs = lambda_total(&(&a + &b))?;
        let rhs = &lambda_total(&a)? * &lambda_total(&b)?;
        g.record(lhs == rhs, || format!("a = {a}, b = {b}"));
    }
    Ok(g)
}

fn pin2_products(max: u32) -> GridOutcome {
    let mut g = GridOutcome::default();
    for a in 0..=max {
        for b in 0..=max {
            let lhs = &Pin2Element::mu(a) * &Pin2Element::mu(b);
            let rhs = &Pin2Element::mu(a + b) + &Pin2Element::mu(a.abs_diff(b));
            g.record(lhs == rhs, || format!("μ_{a}·μ_{b}"));
        }
    }
    g
}

fn cyclotomic_norm(primes: &[u32]) -> Result<GridOutcome, CliError> {
    let mut g = GridOutcome::default();
    for &p in primes {
        let prime = Prime::new(p)?;
        let one = CyclotomicInteger::one(prime);
        let product = (1..p as i64).fold(one.clone(), |acc, j| {
            &acc * &(&one - &CyclotomicInteger::omega_pow(prime, j))
        });
        g.record(
            product == CyclotomicInteger::from_scalar(prime, BigInt::from(p)),
            || format!("p={p}: {product:?}"),
        );
    }
    Ok(g)
}

/// The randomized and exhaustive algebraic identities, in a fixed order.
pub fn identity_suites(seed: u64) -> Result<Vec<(&'static str, GridOutcome)>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(vec![
        ("c(V)s(V) = 1", chern_segre_identity(&mut rng, 200)?),
        ("w(A ⊕ B) = w(A)w(B)", whitney_identity(&mut rng, 200)?),
        ("tr_k ∘ ψ² = tr_2k", psi2_character_identity(&mut rng, 200)?),
        ("λ(a + b) = λ(a)λ(b)", lambda_multiplicativity(&mut rng, 200)?),
        ("μ_a μ_b = μ_{a+b} + μ_|a-b|, a,b ≤ 8", pin2_products(8)),
        ("∏(1 - ω^j) = p, p ∈ {3,5,7}", cyclotomic_norm(&[3, 5, 7])?),
    ])
}

fn flag(s: &Scenario, name: &str) -> bool {
    s.flags.iter().any(|f| f.name == name && f.value)
}

fn branched_cover_row(p: u32, g: u64, b: u64) -> Result<CatalogRow, CliError> {
    let s = scenario_branched_cover(p, g, b)?;
    let lattice = IntersectionLattice::from_blocks([
        (Block::H, g * (p as u64 - 1)),
        (Block::E8Minus, 2 * b * p as u64),
    ]);
    let d = dirac_index(&lattice, &SpinCData::spin())?;
    let threshold = 3 * b * p as u64;
    let h = g * (p as u64 - 1);
    let expected = format!(
        "{lattice} d={d} obstructed (i)=true (ii)={} (iii)=true smooth={}",
        h > threshold,
        h >= threshold
    );
    let actual = match &s.hypothesis {
        monopole_obstruct_core::scenarios::ScenarioHypothesis::Action(hyp) => format!(
            "{} d={} {} (i)={} (ii)={} (iii)={} smooth={}",
            hyp.lattice.map(|(l, _)| l.to_string()).unwrap_or_default(),
            hyp.index.total(),
            s.report.verdict.as_str(),
            flag(&s, "locally_linear_realizable"),
            flag(&s, "wall_realizable"),
            flag(&s, "smooth_action_obstructed"),
            flag(&s, "smooth_structure_exists"),
        ),
        _ => "family hypothesis".into(),
    };
    Ok(CatalogRow::check(4, s.id, expected, actual))
}

fn family_row(s: &Scenario, expected: &str) -> CatalogRow {
    let witness = match &s.report.witness {
        Some(Witness::SwWindow { indices, classes, .. }) => format!("w_{indices:?} = {classes:?}"),
        Some(Witness::NonzeroEuler { degree, class, .. }) => format!("w_{degree} = {class}"),
        Some(w) => format!("{w:?}"),
        None => "none".into(),
    };
    let torus = s
        .torus_dim
        .map(|(d, f)| format!("T^{d} ({f})"))
        .unwrap_or_default();
    CatalogRow::check(
        8,
        s.id.clone(),
        expected,
        format!("{} {witness} over {torus}", s.report.verdict.as_str()),
    )
}

/// Runs every catalogued example in criterion order.
pub fn run_catalog(seed: u64) -> Result<Vec<CatalogRow>, CliError> {
    let mut rows = Vec::new();

    let e8: IntersectionLattice = "E8m".parse()?;
    rows.push(CatalogRow::verdict(
        1,
        "donaldson E8m spin",
        Verdict::Obstructed,
        check_point_donaldson(&e8, &SpinCData::spin())?.verdict,
    ));
    let diag: IntersectionLattice = "8D1m".parse()?;
    rows.push(CatalogRow::verdict(
        1,
        "donaldson 8D1m c2=-8",
        Verdict::Consistent,
        check_point_donaldson(&diag, &SpinCData::with_c_squared(-8))?.verdict,
    ));

    for (b, expected) in [(2, Verdict::Obstructed), (3, Verdict::Consistent)] {
        let l = even_lattice(b, -16);
        rows.push(CatalogRow::verdict(
            2,
            format!("furuta {l}"),
            expected,
            check_furuta_point(&l, None)?.verdict,
        ));
    }
    rows.push(CatalogRow::grid(
        2,
        "furuta σ ∈ {-16,-32,-48}, b+ ≤ 12",
        "obstructed iff b+ ≤ -σ/8",
        &furuta_grid(&[-16, -32, -48], 12)?,
    ));

    for (inv, expected) in [(2, Verdict::Obstructed), (3, Verdict::Consistent)] {
        rows.push(CatalogRow::verdict(
            3,
            format!("even involution σ=-16 inv_dim={inv}"),
            expected,
            check_even_involution(-16, inv, InvolutionType::Even, Some(3))?.verdict,
        ));
    }
    rows.push(CatalogRow::grid(
        3,
        "even involution vs RP^b+ family, b+ ≤ 30",
        "obstructed iff inv_dim ≤ 2, equal to family",
        &even_involution_grid(&[-16, -32], 30)?,
    ));

    rows.push(branched_cover_row(3, 5, 1)?);
    rows.push(branched_cover_row(5, 12, 1)?);

    rows.push(CatalogRow::grid(
        5,
        "z2 certificate, d± ∈ [-6,6], b+ ≤ 8",
        "polynomial iff d+ ≤ 0 and d- ≤ 0",
        &z2_grid(6, 8)?,
    ));
    for p in [3, 5] {
        rows.push(CatalogRow::grid(
            6,
            format!("zp certificate p={p}, d_j ∈ [-3,3], h_j ≤ 3"),
            "polynomial iff d_j + d_(p-j) ≤ 0",
            &zp_grid(p, 3, 3)?,
        ));
    }

    for (name, outcome) in identity_suites(seed)? {
        rows.push(CatalogRow::grid(7, name, "identity holds", &outcome));
    }

    rows.push(family_row(
        &scenario_spin_family(3, 1)?,
        "obstructed w_[1] = [\"t1\"] over T^1 (min{b+,b-} - 2)",
    ));
    rows.push(family_row(
        &scenario_nonspin_family(1, 0, false)?,
        "obstructed w_1 = t1 over T^1 (min{b+,b-})",
    ));
    rows.push(family_row(
        &scenario_nonspin_family(1, 0, true)?,
        "consistent none over T^1 (min{b+,b-})",
    ));

    Ok(rows)
}

/// Plain-text table with a summary line.
pub fn render_table(rows: &[CatalogRow]) -> String {
    let id_w = rows
        .iter()
        .map(|r| r.id.chars().count())
        .max()
        .unwrap_or(2)
        .max(2);
    let mut out = format!("{:<2}  {:<id_w$}  {:<6}  {}\n", "#", "id", "status", "result");
    for r in rows {
        let status = if r.ok { "ok" } else { "MISMATCH" };
        out.push_str(&format!(
            "{:<2}  {:<id_w$}  {:<6}  {}",
            r.criterion, r.id, status, r.actual
        ));
        if !r.ok {
            out.push_str(&format!("  (expected {})", r.expected));
        }
        out.push('\n');
    }
    let bad = rows.iter().filter(|r| !r.ok).count();
    out.push_str(&format!("{} entries, {} mismatches\n", rows.len(), bad));
    out
}
