//! Generators for the worked constructions: branched covers with cyclic
//! actions, and mapping-torus families over tori.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::classes::FlatBundleDescriptor;
use crate::engine::{
    check_family_euler, check_spin_family_pin, check_zp_action, EquivariantIndex, FamilyHypothesis,
    ObstructionReport, TheoremId, ZpActionHypothesis,
};
use crate::error::{Error, Result};
use crate::exact::Prime;
use crate::lattice::{Block, IntersectionLattice, SpinCData};

#[derive(Clone, Debug, PartialEq)]
pub enum ScenarioHypothesis {
    Family(FamilyHypothesis),
    Action(ZpActionHypothesis),
}

/// A yes/no statement about the construction with what it rests on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScenarioFlag {
    pub name: &'static str,
    pub value: bool,
    /// A theorem id, or a short description of the topological input.
    pub basis: &'static str,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub id: String,
    pub description: String,
    pub hypothesis: ScenarioHypothesis,
    /// Number of `D1m` blocks standing for a fake `CP²` (nontrivial
    /// Kirby-Siebenmann class, same intersection form).
    pub fake_blocks: u64,
    pub flags: Vec<ScenarioFlag>,
    /// `(dimension, formula)` for families over a torus.
    pub torus_dim: Option<(u32, &'static str)>,
    /// Consequence for diffeomorphism groups, stated but not checked.
    pub corollary: Option<String>,
    pub report: ObstructionReport,
}

/// `X = #g(p-1)(S²×S²) # 2bp(-E8)` with the `Z_p` action from the branched
/// cover of `S^4` along a genus `g` surface, `-E8` summands attached along a
/// free orbit.
pub fn scenario_branched_cover(p: u32, g: u64, b: u64) -> Result<Scenario> {
    let prime = Prime::new(p)?;
    if !prime.is_odd() {
        return Err(Error::InvalidInput(
            "the branched cover needs an odd prime".into(),
        ));
    }
    if b < 1 {
        return Err(Error::InvalidInput("b must be at least 1".into()));
    }
    let p64 = p as u64;
    let h_count = g * (p64 - 1);
    let e8_count = 2 * b * p64;
    let lattice = IntersectionLattice::from_blocks([(Block::H, h_count), (Block::E8Minus, e8_count)]);
    let mut hyp = ZpActionHypothesis::new(prime, EquivariantIndex::Total(e8_count as i64), 0);
    hyp.lattice = Some((lattice, SpinCData::spin()));
    let report = check_zp_action(&hyp)?;
    let threshold = 3 * b * p64;
    let flags = vec![
        ScenarioFlag {
            name: "locally_linear_realizable",
            value: true,
            basis: "branched-cover construction",
        },
        ScenarioFlag {
            name: "wall_realizable",
            value: h_count > threshold,
            basis: "wall realization, g(p-1) > 3bp",
        },
        ScenarioFlag {
            name: "smooth_action_obstructed",
            value: report.is_obstructed(),
            basis: TheoremId::Zp.as_str(),
        },
        ScenarioFlag {
            name: "smooth_structure_exists",
            value: h_count >= threshold,
            basis: "K3 decomposition, g(p-1) >= 3bp",
        },
    ];
    Ok(Scenario {
        id: format!("branched-cover(p={p},g={g},b={b})"),
        description: format!(
            "{p}-fold branched cover of S^4 along a genus {g} surface, plus {e8_count} copies of -E8 on a free orbit"
        ),
        hypothesis: ScenarioHypothesis::Action(hyp),
        fake_blocks: 0,
        flags,
        torus_dim: None,
        corollary: None,
        report,
    })
}

/// `X = #a(S²×S²) # 2b(-E8)` with the spin family over `T^{a-2}` whose
/// monodromies each swap the orientation of one `H⁺((S²×S²)_j)`.
pub fn scenario_spin_family(a: u64, b: u64) -> Result<Scenario> {
    if a < 3 {
        return Err(Error::InvalidInput(format!(
            "a = {a}: the construction needs a >= 3"
        )));
    }
    if b < 1 {
        return Err(Error::InvalidInput("b must be at least 1 so that σ < 0".into()));
    }
    let lattice = IntersectionLattice::from_blocks([(Block::H, a), (Block::E8Minus, 2 * b)]);
    let dim = u32::try_from(a - 2).map_err(|_| Error::InvalidInput("a too large".into()))?;
    let hplus = FlatBundleDescriptor::torus_coordinate_lines(dim, 2);
    let hyp = FamilyHypothesis::new(lattice, SpinCData::spin(), hplus);
    let report = check_spin_family_pin(&hyp)?;
    let min = lattice.b_plus().min(lattice.b_minus());
    Ok(Scenario {
        id: format!("spin-family(a={a},b={b})"),
        description: format!(
            "mapping-torus spin family of #{a}(S^2xS^2) # {}(-E8) over T^{dim}",
            2 * b
        ),
        hypothesis: ScenarioHypothesis::Family(hyp),
        fake_blocks: 0,
        flags: vec![ScenarioFlag {
            name: "smooth_family_obstructed",
            value: report.is_obstructed(),
            basis: TheoremId::SpinFamily.as_str(),
        }],
        torus_dim: Some((dim, "min{b+,b-} - 2")),
        corollary: Some(format!(
            "pi_j(Diff(X)) -> pi_j(Homeo(X)) is not an isomorphism for some j <= min{{b+,b-}} - 3 = {}",
            min as i64 - 3
        )),
        report,
    })
}

/// `X = #a(S²×S²) # b(-CP²) # (-E8) # (-CP²_fake)` with `c² = -(b+1)`, the
/// family over `T^a`. With `trivial_hplus` the bundle is replaced by a
/// trivial one, which silences the check.
pub fn scenario_nonspin_family(a: u64, b: u64, trivial_hplus: bool) -> Result<Scenario> {
    if a < 1 {
        return Err(Error::InvalidInput("a must be at least 1".into()));
    }
    let lattice =
        IntersectionLattice::from_blocks([(Block::H, a), (Block::DiagMinus, b + 1), (Block::E8Minus, 1)]);
    let spinc = SpinCData::with_c_squared(-(b as i64 + 1));
    let dim = u32::try_from(a).map_err(|_| Error::InvalidInput("a too large".into()))?;
    let hplus = if trivial_hplus {
        FlatBundleDescriptor::torus(dim, Vec::new(), a)?
    } else {
        FlatBundleDescriptor::torus_coordinate_lines(dim, 0)
    };
    let hyp = FamilyHypothesis::new(lattice, spinc, hplus);
    let report = check_family_euler(&hyp)?;
    let min = lattice.b_plus().min(lattice.b_minus());
    Ok(Scenario {
        id: format!(
            "nonspin-family(a={a},b={b}{})",
            if trivial_hplus { ",trivial" } else { "" }
        ),
        description: format!(
            "mapping-torus family of #{a}(S^2xS^2) # {b}(-CP^2) # (-E8) # (-fake CP^2) over T^{dim}"
        ),
        hypothesis: ScenarioHypothesis::Family(hyp),
        fake_blocks: 1,
        flags: vec![ScenarioFlag {
            name: "smooth_family_obstructed",
            value: report.is_obstructed(),
            basis: TheoremId::FamilyEuler.as_str(),
        }],
        torus_dim: Some((dim, "min{b+,b-}")),
        corollary: Some(format!(
            "pi_j(Diff(X)) -> pi_j(Homeo(X)) is not an isomorphism for some j <= min{{b+,b-}} - 1 = {}",
            min as i64 - 1
        )),
        report,
    })
}
