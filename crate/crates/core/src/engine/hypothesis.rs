use alloc::format;
use alloc::vec::Vec;

use crate::classes::{FlatBundleDescriptor, GradedClass};
use crate::error::{Error, Result};
use crate::exact::Prime;
use crate::lattice::{dirac_index, IntersectionLattice, SpinCData};

/// A hypothetical family of 4-manifolds over a base, described by the fibre's
/// intersection form, a characteristic element, and the bundle `H⁺`.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyHypothesis {
    pub lattice: IntersectionLattice,
    pub spinc: SpinCData,
    pub hplus: FlatBundleDescriptor,
    /// `s_1(D), s_2(D), …` reduced mod 2 into the base's mod-2 ring.
    pub segre: Option<Vec<GradedClass>>,
    /// Whether the family carries a fibrewise spin structure.
    pub spin_family: bool,
}

impl FamilyHypothesis {
    pub fn new(lattice: IntersectionLattice, spinc: SpinCData, hplus: FlatBundleDescriptor) -> Self {
        FamilyHypothesis {
            lattice,
            spinc,
            hplus,
            segre: None,
            spin_family: spinc.is_spin,
        }
    }

    /// Checks the rank of `H⁺` against `b⁺`, the characteristic data, and the
    /// placement and degrees of the Segre data. Returns the index `d`.
    pub fn validate(&self) -> Result<i64> {
        let d = dirac_index(&self.lattice, &self.spinc)?;
        let b_plus = self.lattice.b_plus();
        if self.hplus.rank() != b_plus {
            return Err(Error::RankMismatch {
                bundle: self.hplus.rank(),
                b_plus,
            });
        }
        if self.spin_family && !self.spinc.is_spin {
            return Err(Error::InvalidInput(
                "a spin family needs spin characteristic data".into(),
            ));
        }
        if let Some(segre) = &self.segre {
            let ring = self.hplus.base().mod2_ring();
            for (i, s) in segre.iter().enumerate() {
                if **s.ring() != *ring {
                    return Err(Error::PresentationMismatch);
                }
                let j = i as u32 + 1;
                if let Some(deg) = s.homogeneous_degree() {
                    if deg != 2 * j {
                        return Err(Error::InvalidInput(format!(
                            "s_{j} has degree {deg}, expected {}",
                            2 * j
                        )));
                    }
                } else if !s.is_zero() {
                    return Err(Error::InvalidInput(format!("s_{j} is not homogeneous")));
                }
            }
        }
        Ok(d)
    }
}

/// What is known about the index of the lifted action on the Dirac operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivariantIndex {
    /// `d_j`, the virtual dimension of the `ω^j` eigenspace, for
    /// `j = 0, …, p-1`.
    Eigen(Vec<i64>),
    /// Only `d = Σ d_j`.
    Total(i64),
}

impl EquivariantIndex {
    pub fn total(&self) -> i64 {
        match self {
            EquivariantIndex::Eigen(d) => d.iter().sum(),
            EquivariantIndex::Total(d) => *d,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvolutionType {
    Even,
    Odd,
}

/// A hypothetical smooth `Z_p` action preserving a spin^c structure.
#[derive(Clone, Debug, PartialEq)]
pub struct ZpActionHypothesis {
    pub p: Prime,
    /// Fibre data, used to cross-check the index and the `H⁺` dimensions.
    pub lattice: Option<(IntersectionLattice, SpinCData)>,
    pub index: EquivariantIndex,
    pub hplus_invariant_dim: u64,
    /// `h_j`, the dimension of the `ω^j` eigenspace of `H⁺ ⊗ C`.
    pub hplus_eigen: Option<Vec<u64>>,
    pub involution_type: Option<InvolutionType>,
}

impl ZpActionHypothesis {
    pub fn new(p: Prime, index: EquivariantIndex, hplus_invariant_dim: u64) -> Self {
        ZpActionHypothesis {
            p,
            lattice: None,
            index,
            hplus_invariant_dim,
            hplus_eigen: None,
            involution_type: None,
        }
    }

    /// `b⁺` from the lattice, else from the eigenspace dimensions.
    pub fn b_plus(&self) -> Option<u64> {
        self.lattice
            .as_ref()
            .map(|(l, _)| l.b_plus())
            .or_else(|| self.hplus_eigen.as_ref().map(|h| h.iter().sum()))
    }

    pub fn validate(&self) -> Result<()> {
        let p = self.p.as_usize();
        if let EquivariantIndex::Eigen(d) = &self.index {
            if d.len() != p {
                return Err(Error::InvalidInput(format!(
                    "expected {p} eigenspace indices d_j, got {}",
                    d.len()
                )));
            }
        }
        if let Some((lattice, spinc)) = &self.lattice {
            let d = dirac_index(lattice, spinc)?;
            if d != self.index.total() {
                return Err(Error::InvalidInput(format!(
                    "eigenspace indices sum to {}, but (c² - σ)/8 = {d}",
                    self.index.total()
                )));
            }
            if self.hplus_invariant_dim > lattice.b_plus() {
                return Err(Error::InvalidInput(format!(
                    "invariant part of H+ has dimension {} > b+ = {}",
                    self.hplus_invariant_dim,
                    lattice.b_plus()
                )));
            }
        }
        if let Some(h) = &self.hplus_eigen {
            if h.len() != p {
                return Err(Error::InvalidInput(format!(
                    "expected {p} eigenspace dimensions h_j, got {}",
                    h.len()
                )));
            }
            if h[0] != self.hplus_invariant_dim {
                return Err(Error::InvalidInput(format!(
                    "h_0 = {} differs from the invariant dimension {}",
                    h[0], self.hplus_invariant_dim
                )));
            }
            if (1..p).any(|j| h[j] != h[p - j]) {
                return Err(Error::InvalidInput(
                    "h_j must equal h_(p-j) for the complexification of H+".into(),
                ));
            }
            if let Some((lattice, _)) = &self.lattice {
                let sum: u64 = h.iter().sum();
                if sum != lattice.b_plus() {
                    return Err(Error::InvalidInput(format!(
                        "eigenspace dimensions sum to {sum}, but b+ = {}",
                        lattice.b_plus()
                    )));
                }
            }
        }
        Ok(())
    }
}
