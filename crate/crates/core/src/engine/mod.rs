//! One checker per obstruction theorem.
//!
//! Every checker is contrapositive: the theorems say that a smooth family or
//! smooth action satisfies some constraint, so a checker reports
//! [`Verdict::Obstructed`] only when the input provably violates that
//! constraint, and attaches a [`Witness`] from which the violation can be
//! re-derived. [`Verdict::Consistent`] means no constraint fired, not that the
//! object exists.

mod action;
mod equivariant;
mod family;
mod hypothesis;
mod point;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use action::{
    check_even_involution, check_z2_action, check_zp_action, check_zp_spin, z2_certificate, zp_certificate,
};
pub use equivariant::check_10on8_equivariant;
pub use family::{check_family_euler, check_spin_family_pin};
pub use hypothesis::{EquivariantIndex, FamilyHypothesis, InvolutionType, ZpActionHypothesis};
pub use point::{check_furuta_point, check_point_donaldson};

use crate::exact::Polynomiality;
use crate::rep::ZpVirtualRep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Obstructed,
    Consistent,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Obstructed => "obstructed",
            Verdict::Consistent => "consistent",
            Verdict::NotApplicable => "not_applicable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which theorem a report comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Negative definite forms: `b⁺ = 0` forces `d ≤ 0`.
    Donaldson,
    /// `b⁺ ≥ -σ/8 + 1` for spin manifolds with `b⁺ ≥ 1`.
    Furuta,
    /// Nonzero Euler class of `H⁺` over the base forces `d ≤ 0`, and kills
    /// its products with high Segre classes of the index bundle.
    FamilyEuler,
    /// Spin families: a nonzero `w_i(H⁺)` for `i ∈ {b⁺, b⁺-1, b⁺-2}`
    /// forces `d ≤ 0`.
    SpinFamily,
    /// Involutions with `H⁺` anti-invariant: `d_± ≤ 0`.
    Z2,
    /// Even spin involutions with `σ < 0` have `dim H⁺^{Z_2} ≥ 3`.
    EvenInvolution,
    /// Odd prime order actions with `H⁺` having no invariants: `d_j ≤ 0`.
    Zp,
    /// Odd prime order spin actions with invariant `H⁺`: `dim ≥ d_0 + 1`.
    ZpSpin,
    /// Equivariant 10/8: divisibility of exterior powers in `R[Z_p]`.
    TenEighthsEquivariant,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Donaldson,
        TheoremId::Furuta,
        TheoremId::FamilyEuler,
        TheoremId::SpinFamily,
        TheoremId::Z2,
        TheoremId::EvenInvolution,
        TheoremId::Zp,
        TheoremId::ZpSpin,
        TheoremId::TenEighthsEquivariant,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Donaldson => "donaldson",
            TheoremId::Furuta => "furuta",
            TheoremId::FamilyEuler => "family-euler",
            TheoremId::SpinFamily => "spin-family",
            TheoremId::Z2 => "z2",
            TheoremId::EvenInvolution => "even-involution",
            TheoremId::Zp => "zp",
            TheoremId::ZpSpin => "zp-spin",
            TheoremId::TenEighthsEquivariant => "ten-eighths-equivariant",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EigenSign {
    Plus,
    Minus,
}

impl EigenSign {
    pub fn as_str(self) -> &'static str {
        match self {
            EigenSign::Plus => "+",
            EigenSign::Minus => "-",
        }
    }
}

/// The divisibility certificate for involutions: whether
/// `2^{b⁺} (1-t)^{2a'₊} (1+t)^{2a'₋} / ((1-t)^{2a₊} (1+t)^{2a₋})` is a
/// polynomial, with `a'± = max(0, -d±)` and `a± = a'± + d±`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z2Certificate {
    pub b_plus: u64,
    pub a_plus: u64,
    pub a_minus: u64,
    pub a_prime_plus: u64,
    pub a_prime_minus: u64,
    pub outcome: Polynomiality,
}

/// The divisibility certificate for odd prime order: whether
/// `∏_{j≥1} (1-ω^j)^{h_j} ∏_j (1-ω^j t)^{-(d'_j + d'_{-j})}` is a polynomial,
/// where `d'_j = d_{j + shift}` relabels the lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZpCertificate {
    pub shift: usize,
    pub outcome: Polynomiality,
}

/// Evidence attached to an obstructed verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// `b⁺ = 0` but `d = (c² - σ)/8 > 0`.
    PositiveIndex { d: i64, c_squared: i64, signature: i64 },
    /// `σ` is not divisible by 16, so the quaternionic index `-σ/16` is not
    /// an integer.
    IndexIntegrality { signature: i64 },
    /// `b⁺ < d + 1` (refined) or `d > 0` with `b⁺ = 0` (unrefined).
    TenEighths { b_plus: u64, d: i64, refined: bool },
    /// `w_{b⁺}(H⁺) ≠ 0` while `d > 0`.
    NonzeroEuler { d: i64, degree: u64, class: String },
    /// `w_{b⁺}(H⁺) · s_j(D) ≠ 0` for some `j > -d`.
    NonzeroSegreProduct { d: i64, j: u64, product: String },
    /// Nonzero Stiefel-Whitney classes in the top window while `d > 0`.
    SwWindow {
        d: i64,
        b_plus: u64,
        indices: Vec<u64>,
        classes: Vec<String>,
    },
    /// `d₊ > 0` or `d₋ > 0` for an involution with no invariant `H⁺`.
    Z2Eigenspace {
        sign: EigenSign,
        d_plus: i64,
        d_minus: i64,
        certificate: Z2Certificate,
    },
    /// Even involution with `σ < 0` and at most two invariant directions; the
    /// Borel family over `RP^{b⁺}` with `H⁺ = R^u ⊕ R^v_-` has nonzero
    /// `w_v` in the top window.
    EvenInvolution {
        signature: i64,
        inv_dim: u64,
        b_plus: u64,
        u: u64,
        v: u64,
        d: i64,
        indices: Vec<u64>,
    },
    /// `d_j > 0` for an action with no invariant `H⁺`.
    ZpEigenspace {
        p: u32,
        j: usize,
        d: Vec<i64>,
        certificate: ZpCertificate,
    },
    /// Only the total index is known and it is positive, so some `d_j > 0`.
    ZpTotalIndex { p: u32, d: i64 },
    /// `dim H⁺^{Z_p} < d_0 + 1`.
    ZpSpin { d0: i64, inv_dim: u64 },
    /// `denominator` does not divide `numerator` in `R[Z_p]`; `character`
    /// is an index at which the traces already fail to divide, if any.
    EquivariantDivisibility {
        p: u32,
        refined: bool,
        character: Option<usize>,
        numerator: ZpVirtualRep,
        denominator: ZpVirtualRep,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ObstructionReport {
    pub theorem: TheoremId,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// One line stating what was compared.
    pub reason: String,
}

impl ObstructionReport {
    pub fn obstructed(theorem: TheoremId, witness: Witness, reason: String) -> Self {
        ObstructionReport {
            theorem,
            verdict: Verdict::Obstructed,
            witness: Some(witness),
            reason,
        }
    }

    pub fn consistent(theorem: TheoremId, reason: String) -> Self {
        ObstructionReport {
            theorem,
            verdict: Verdict::Consistent,
            witness: None,
            reason,
        }
    }

    pub fn not_applicable(theorem: TheoremId, reason: String) -> Self {
        ObstructionReport {
            theorem,
            verdict: Verdict::NotApplicable,
            witness: None,
            reason,
        }
    }

    pub fn is_obstructed(&self) -> bool {
        self.verdict == Verdict::Obstructed
    }
}
