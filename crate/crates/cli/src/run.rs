//! Dispatch from a theorem id and a hypothesis document to the engine.

use monopole_obstruct_core::classes::FlatBundleDescriptor;
use monopole_obstruct_core::engine::{
    check_10on8_equivariant, check_even_involution, check_family_euler, check_furuta_point,
    check_point_donaldson, check_spin_family_pin, check_z2_action, check_zp_action, check_zp_spin,
    EquivariantIndex, InvolutionType, ObstructionReport, TheoremId,
};
use monopole_obstruct_core::scenarios::{Scenario, ScenarioHypothesis};

use crate::doc::{ActionDoc, BaseDoc, BaseKind, HplusDoc, HypothesisDoc, InvolutionKind};
use crate::CliError;

pub fn run_check(theorem: TheoremId, doc: &HypothesisDoc) -> Result<ObstructionReport, CliError> {
    let report = match theorem {
        TheoremId::Donaldson => {
            let lattice = doc.parse_lattice()?;
            check_point_donaldson(&lattice, &doc.spinc(&lattice)?)?
        }
        TheoremId::Furuta => check_furuta_point(&doc.parse_lattice()?, doc.b_plus)?,
        TheoremId::FamilyEuler => check_family_euler(&doc.family()?)?,
        TheoremId::SpinFamily => check_spin_family_pin(&doc.family()?)?,
        TheoremId::Z2 => {
            let h = doc.zp_action()?;
            if h.p.get() != 2 {
                return Err(CliError::Input(format!("z2 needs p = 2, got p = {}", h.p.get())));
            }
            check_z2_action(&h)?
        }
        TheoremId::Zp => {
            let h = doc.zp_action()?;
            if !h.p.is_odd() {
                return Err(CliError::Input(
                    "zp needs an odd prime; use z2 for involutions".into(),
                ));
            }
            check_zp_action(&h)?
        }
        TheoremId::ZpSpin => {
            let h = doc.zp_action()?;
            match &h.index {
                EquivariantIndex::Eigen(d) => check_zp_spin(d[0], h.hplus_invariant_dim)?,
                EquivariantIndex::Total(_) => {
                    return Err(CliError::Input("zp-spin needs the eigenspace index d_0".into()))
                }
            }
        }
        TheoremId::EvenInvolution => {
            let a = doc.action_doc()?;
            let ty = match a.kind {
                Some(k) => InvolutionType::from(k),
                None => return Err(CliError::Input("missing input: action.type".into())),
            };
            let (sigma, lattice_b_plus) = match (&doc.lattice, doc.sigma) {
                (Some(_), sigma) => {
                    let l = doc.parse_lattice()?;
                    if sigma.is_some_and(|s| s != l.signature()) {
                        return Err(CliError::Input(format!(
                            "sigma disagrees with the lattice signature {}",
                            l.signature()
                        )));
                    }
                    (l.signature(), Some(l.b_plus()))
                }
                (None, Some(s)) => (s, None),
                (None, None) => return Err(CliError::Input("missing input: lattice or sigma".into())),
            };
            check_even_involution(sigma, a.inv_dim, ty, doc.b_plus.or(lattice_b_plus))?
        }
        TheoremId::TenEighthsEquivariant => {
            let (hplus, v, vp) = doc.reps()?;
            check_10on8_equivariant(&hplus, &v, &vp)?
        }
    };
    Ok(report)
}

/// The hypothesis document a scenario stands for, so that feeding it back
/// through [`run_check`] reproduces the scenario's report.
pub fn scenario_doc(s: &Scenario) -> HypothesisDoc {
    match &s.hypothesis {
        ScenarioHypothesis::Action(h) => {
            let mut doc = HypothesisDoc::default();
            if let Some((lattice, spinc)) = &h.lattice {
                doc.lattice = Some(lattice.to_string());
                doc.c2 = Some(spinc.c_squared);
                doc.spin = Some(spinc.is_spin);
            }
            doc.action = Some(ActionDoc {
                p: h.p.get(),
                d: match &h.index {
                    EquivariantIndex::Eigen(d) => d.clone(),
                    EquivariantIndex::Total(d) => vec![*d],
                },
                h: h.hplus_eigen.clone(),
                inv_dim: h.hplus_invariant_dim,
                kind: h.involution_type.map(|t| match t {
                    InvolutionType::Even => InvolutionKind::Even,
                    InvolutionType::Odd => InvolutionKind::Odd,
                }),
            });
            doc
        }
        ScenarioHypothesis::Family(h) => {
            let (base, hplus) = match &h.hplus {
                FlatBundleDescriptor::Point { rank } => (
                    BaseDoc {
                        kind: BaseKind::Point,
                        dim: 0,
                    },
                    HplusDoc::lines(vec![], *rank),
                ),
                FlatBundleDescriptor::Torus {
                    dim,
                    lines,
                    trivial_rank,
                } => (
                    BaseDoc {
                        kind: BaseKind::Torus,
                        dim: *dim,
                    },
                    HplusDoc::lines(
                        lines.iter().map(|l| l.iter().copied().collect()).collect(),
                        *trivial_rank,
                    ),
                ),
                FlatBundleDescriptor::RealProjective { dim, u, v } => (
                    BaseDoc {
                        kind: BaseKind::Rp,
                        dim: *dim,
                    },
                    HplusDoc::split(*u, *v),
                ),
            };
            HypothesisDoc {
                lattice: Some(h.lattice.to_string()),
                c2: Some(h.spinc.c_squared),
                spin: Some(h.spinc.is_spin),
                spin_family: (h.spin_family != h.spinc.is_spin).then_some(h.spin_family),
                base: Some(base),
                hplus: Some(hplus),
                ..Default::default()
            }
        }
    }
}
