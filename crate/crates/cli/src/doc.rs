//! The JSON hypothesis document and its conversion into engine inputs.

use std::collections::BTreeSet;

use monopole_obstruct_core::classes::{FlatBundleDescriptor, GradedClass};
use monopole_obstruct_core::engine::{
    EquivariantIndex, FamilyHypothesis, InvolutionType, ZpActionHypothesis,
};
use monopole_obstruct_core::exact::{BigInt, Prime};
use monopole_obstruct_core::lattice::{IntersectionLattice, SpinCData};
use monopole_obstruct_core::rep::ZpVirtualRep;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypothesisDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin: Option<bool>,
    /// Whether the family is fibrewise spin; defaults to `spin`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spin_family: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<BaseDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hplus: Option<HplusDoc>,
    /// Mod-2 Segre classes `s_1, s_2, ...`, each a list of exponent vectors
    /// over the generators of the base ring.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segre: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<ActionDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reps: Option<RepsDoc>,
    /// Overrides `b+` where a checker takes it separately from the lattice.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b_plus: Option<u64>,
    /// Signature for `even-involution` when no lattice is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseKind {
    Point,
    Torus,
    Rp,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseDoc {
    pub kind: BaseKind,
    #[serde(default)]
    pub dim: u32,
}

/// `{"u", "v"}` over `RP^n`, or `{"lines", "trivial"}` otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HplusDoc {
    Split(SplitDoc),
    Lines(LinesDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitDoc {
    pub u: u64,
    pub v: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinesDoc {
    #[serde(default)]
    pub lines: Vec<Vec<u32>>,
    #[serde(default)]
    pub trivial: u64,
}

impl HplusDoc {
    pub fn lines(lines: Vec<Vec<u32>>, trivial: u64) -> Self {
        HplusDoc::Lines(LinesDoc { lines, trivial })
    }

    pub fn split(u: u64, v: u64) -> Self {
        HplusDoc::Split(SplitDoc { u, v })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionKind {
    Even,
    Odd,
}

impl From<InvolutionKind> for InvolutionType {
    fn from(k: InvolutionKind) -> Self {
        match k {
            InvolutionKind::Even => InvolutionType::Even,
            InvolutionKind::Odd => InvolutionType::Odd,
        }
    }
}

/// `d` has either `p` entries `d_0, ..., d_{p-1}` or a single total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub p: u32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub d: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<Vec<u64>>,
    #[serde(default)]
    pub inv_dim: u64,
    #[serde(default, rename = "type", skip_serializing_if = "Option::is_none")]
    pub kind: Option<InvolutionKind>,
}

/// Multiplicity vectors in `R[Z_p]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepsDoc {
    pub p: u32,
    pub hplus: Vec<i64>,
    pub v: Vec<i64>,
    pub vp: Vec<i64>,
}

fn missing(what: &str) -> CliError {
    CliError::Input(format!("missing input: {what}"))
}

impl HypothesisDoc {
    pub fn parse_lattice(&self) -> Result<IntersectionLattice, CliError> {
        let s = self.lattice.as_deref().ok_or_else(|| missing("lattice"))?;
        Ok(s.parse()?)
    }

    /// `spin: true` means spin with `c² = 0`; otherwise `c2` is required
    /// unless the lattice is even, in which case spin is assumed.
    pub fn spinc(&self, lattice: &IntersectionLattice) -> Result<SpinCData, CliError> {
        let s = match (self.spin, self.c2) {
            (Some(true), Some(c)) if c != 0 => {
                return Err(CliError::Input(format!(
                    "spin structures have c² = 0, got c2 = {c}"
                )))
            }
            (Some(true), _) => SpinCData::spin(),
            (_, Some(c)) => SpinCData::with_c_squared(c),
            (Some(false), None) => return Err(missing("c2 for a non-spin structure")),
            (None, None) if lattice.is_even() => SpinCData::spin(),
            (None, None) => return Err(missing("c2 (the lattice is odd)")),
        };
        s.validate(lattice)?;
        Ok(s)
    }

    pub fn flat_bundle(&self) -> Result<FlatBundleDescriptor, CliError> {
        let base = self.base.as_ref().ok_or_else(|| missing("base"))?;
        let hplus = self.hplus.as_ref().ok_or_else(|| missing("hplus"))?;
        match (base.kind, hplus) {
            (BaseKind::Point, HplusDoc::Lines(l)) if l.lines.is_empty() => {
                Ok(FlatBundleDescriptor::Point { rank: l.trivial })
            }
            (BaseKind::Torus, HplusDoc::Lines(l)) => {
                let lines = l
                    .lines
                    .iter()
                    .map(|g| g.iter().copied().collect::<BTreeSet<_>>())
                    .collect();
                Ok(FlatBundleDescriptor::torus(base.dim, lines, l.trivial)?)
            }
            (BaseKind::Rp, HplusDoc::Split(sp)) => Ok(FlatBundleDescriptor::RealProjective {
                dim: base.dim,
                u: sp.u,
                v: sp.v,
            }),
            (kind, h) => Err(CliError::Input(format!(
                "hplus {h:?} does not describe a flat bundle over a {kind:?} base"
            ))),
        }
    }

    pub fn family(&self) -> Result<FamilyHypothesis, CliError> {
        let lattice = self.parse_lattice()?;
        let spinc = self.spinc(&lattice)?;
        let hplus = self.flat_bundle()?;
        let mut h = FamilyHypothesis::new(lattice, spinc, hplus);
        if let Some(sf) = self.spin_family {
            h.spin_family = sf;
        }
        if let Some(segre) = &self.segre {
            let ring = h.hplus.base().mod2_ring();
            let mut classes = Vec::with_capacity(segre.len());
            for monomials in segre {
                let mut c = GradedClass::zero(&ring);
                for exps in monomials {
                    let m = GradedClass::monomial(&ring, exps.clone(), BigInt::from(1))?;
                    c = c.checked_add(&m)?;
                }
                classes.push(c);
            }
            h.segre = Some(classes);
        }
        h.validate()?;
        Ok(h)
    }

    pub fn action_doc(&self) -> Result<&ActionDoc, CliError> {
        self.action.as_ref().ok_or_else(|| missing("action"))
    }

    pub fn zp_action(&self) -> Result<ZpActionHypothesis, CliError> {
        let a = self.action_doc()?;
        let p = Prime::new(a.p)?;
        let index = match a.d.len() {
            0 => return Err(missing("action.d")),
            1 => EquivariantIndex::Total(a.d[0]),
            _ => EquivariantIndex::Eigen(a.d.clone()),
        };
        let mut h = ZpActionHypothesis::new(p, index, a.inv_dim);
        h.hplus_eigen = a.h.clone();
        h.involution_type = a.kind.map(Into::into);
        if self.lattice.is_some() {
            let lattice = self.parse_lattice()?;
            h.lattice = Some((lattice, self.spinc(&lattice)?));
        }
        h.validate()?;
        Ok(h)
    }

    pub fn reps(&self) -> Result<(ZpVirtualRep, ZpVirtualRep, ZpVirtualRep), CliError> {
        let r = self.reps.as_ref().ok_or_else(|| missing("reps"))?;
        let p = Prime::new(r.p)?;
        Ok((
            ZpVirtualRep::from_i64(p, &r.hplus)?,
            ZpVirtualRep::from_i64(p, &r.v)?,
            ZpVirtualRep::from_i64(p, &r.vp)?,
        ))
    }

    /// Canonical form of the document: the lattice in block order, and the
    /// characteristic data spelled out when it can be resolved.
    /// Normalizing twice is the same as normalizing once.
    pub fn normalized(&self) -> Result<HypothesisDoc, CliError> {
        let mut out = self.clone();
        if self.lattice.is_some() {
            let lattice = self.parse_lattice()?;
            out.lattice = Some(lattice.to_string());
            if let Ok(s) = self.spinc(&lattice) {
                out.c2 = Some(s.c_squared);
                out.spin = Some(s.is_spin);
            }
        }
        Ok(out)
    }
}
