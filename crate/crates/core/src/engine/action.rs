use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::family::check_spin_family_pin;
use super::{
    EigenSign, EquivariantIndex, FamilyHypothesis, InvolutionType, ObstructionReport, TheoremId, Witness,
    Z2Certificate, ZpActionHypothesis, ZpCertificate,
};
use crate::classes::FlatBundleDescriptor;
use crate::error::{Error, Result};
use crate::exact::{CyclotomicInteger, FactoredRational, LaurentPoly, Prime};
use crate::lattice::{Block, IntersectionLattice, SpinCData};

/// The rational function
/// `2^{b⁺} (1-t)^{2a'₊} (1+t)^{2a'₋} / ((1-t)^{2a₊} (1+t)^{2a₋})` with the
/// minimal choice `a'± = max(0, -d±)`, `a± = a'± + d±`. It is a polynomial
/// exactly when `d₊ ≤ 0` and `d₋ ≤ 0`.
pub fn z2_certificate(d_plus: i64, d_minus: i64, b_plus: u64) -> (FactoredRational, Z2Certificate) {
    let a_prime_plus = (-d_plus).max(0);
    let a_prime_minus = (-d_minus).max(0);
    let a_plus = a_prime_plus + d_plus;
    let a_minus = a_prime_minus + d_minus;
    let numerator = BigInt::from(2).pow(b_plus as u32);
    // For p = 2, root exponent 0 is 1 - t and root exponent 1 is 1 + t.
    let r = FactoredRational::with_constant(
        Prime::TWO,
        numerator,
        [
            (0, 2 * a_prime_plus),
            (1, 2 * a_prime_minus),
            (0, -2 * a_plus),
            (1, -2 * a_minus),
        ],
    );
    let cert = Z2Certificate {
        b_plus,
        a_plus: a_plus as u64,
        a_minus: a_minus as u64,
        a_prime_plus: a_prime_plus as u64,
        a_prime_minus: a_prime_minus as u64,
        outcome: r.is_polynomial(),
    };
    (r, cert)
}

/// The rational function
/// `∏_{j=1}^{p-1} (1-ω^j)^{h_j} ∏_{j=0}^{p-1} (1-ω^j t)^{-(d'_j + d'_{p-j})}`
/// with `d'_j = d_{j+shift}`. It is a polynomial exactly when
/// `d'_j + d'_{p-j} ≤ 0` for every `j`. Missing `h` means all `h_j = 0`.
pub fn zp_certificate(
    p: Prime,
    d: &[i64],
    h: Option<&[u64]>,
    shift: usize,
) -> Result<(FactoredRational, ZpCertificate)> {
    let n = p.as_usize();
    if d.len() != n {
        return Err(Error::InvalidInput(format!(
            "expected {n} values d_j, got {}",
            d.len()
        )));
    }
    let one = CyclotomicInteger::one(p);
    let mut constant = one.clone();
    if let Some(h) = h {
        for (j, &hj) in h.iter().enumerate().skip(1) {
            let f = &one - &CyclotomicInteger::omega_pow(p, j as i64);
            constant = &constant * &f.pow(hj);
        }
    }
    let relabeled = |j: usize| d[(j + shift) % n];
    let factors: Vec<(i64, i64)> = (0..n)
        .map(|j| (j as i64, -(relabeled(j) + relabeled((n - j) % n))))
        .collect();
    let r = FactoredRational::new(LaurentPoly::constant(constant), factors);
    let cert = ZpCertificate {
        shift: shift % n,
        outcome: r.is_polynomial(),
    };
    Ok((r, cert))
}

fn total_index_report(t: TheoremId, p: Prime, d: i64) -> ObstructionReport {
    if d > 0 {
        ObstructionReport::obstructed(
            t,
            Witness::ZpTotalIndex { p: p.get(), d },
            format!("d = Σ d_j = {d} > 0, so some eigenspace index d_j is positive"),
        )
    } else {
        ObstructionReport::consistent(t, format!("only the total index d = {d} <= 0 is known"))
    }
}

/// Involutions with `H⁺^{Z_2} = 0` have `d₊ ≤ 0` and `d₋ ≤ 0`.
pub fn check_z2_action(hyp: &ZpActionHypothesis) -> Result<ObstructionReport> {
    let t = TheoremId::Z2;
    if hyp.p != Prime::TWO {
        return Ok(ObstructionReport::not_applicable(
            t,
            format!("p = {} is not 2", hyp.p),
        ));
    }
    hyp.validate()?;
    if hyp.hplus_invariant_dim > 0 {
        return Ok(ObstructionReport::not_applicable(
            t,
            format!("H+ has invariant part of dimension {}", hyp.hplus_invariant_dim),
        ));
    }
    let d = match &hyp.index {
        EquivariantIndex::Total(d) => return Ok(total_index_report(t, hyp.p, *d)),
        EquivariantIndex::Eigen(d) => d,
    };
    let (d_plus, d_minus) = (d[0], d[1]);
    if d_plus <= 0 && d_minus <= 0 {
        return Ok(ObstructionReport::consistent(
            t,
            format!("d+ = {d_plus} <= 0 and d- = {d_minus} <= 0"),
        ));
    }
    let (_, certificate) = z2_certificate(d_plus, d_minus, hyp.b_plus().unwrap_or(0));
    let (sign, value) = if d_plus > 0 {
        (EigenSign::Plus, d_plus)
    } else {
        (EigenSign::Minus, d_minus)
    };
    Ok(ObstructionReport::obstructed(
        t,
        Witness::Z2Eigenspace {
            sign,
            d_plus,
            d_minus,
            certificate,
        },
        format!("d{} = {value} > 0", sign.as_str()),
    ))
}

/// Even spin involutions with `σ < 0` have `dim H⁺^{Z_2} ≥ 3`.
///
/// The witness reruns the spin family check on the Borel family over
/// `RP^{b⁺}`, where `H⁺ = R^u ⊕ R^v_-` with `u` the invariant dimension.
/// `b_plus` defaults to the invariant dimension; it only affects the shape
/// of the witness.
pub fn check_even_involution(
    signature: i64,
    inv_dim: u64,
    ty: InvolutionType,
    b_plus: Option<u64>,
) -> Result<ObstructionReport> {
    let t = TheoremId::EvenInvolution;
    if ty == InvolutionType::Odd {
        return Ok(ObstructionReport::not_applicable(
            t,
            "the involution is of odd type".into(),
        ));
    }
    if signature >= 0 {
        return Ok(ObstructionReport::not_applicable(
            t,
            format!("σ = {signature} >= 0"),
        ));
    }
    if signature % 8 != 0 {
        return Err(Error::InvalidInput(format!(
            "σ = {signature} is not the signature of an even form"
        )));
    }
    let b_plus = b_plus.unwrap_or(inv_dim);
    if b_plus < inv_dim {
        return Err(Error::InvalidInput(format!(
            "invariant dimension {inv_dim} exceeds b+ = {b_plus}"
        )));
    }
    if inv_dim >= 3 {
        return Ok(ObstructionReport::consistent(
            t,
            format!("dim H+^Z2 = {inv_dim} >= 3"),
        ));
    }
    let (u, v) = (inv_dim, b_plus - inv_dim);
    let lattice =
        IntersectionLattice::from_blocks([(Block::H, b_plus), (Block::E8Minus, (-signature / 8) as u64)]);
    let family = FamilyHypothesis::new(
        lattice,
        SpinCData::spin(),
        FlatBundleDescriptor::RealProjective {
            dim: u32::try_from(b_plus).map_err(|_| Error::InvalidInput("b+ too large".into()))?,
            u,
            v,
        },
    );
    let inner = check_spin_family_pin(&family)?;
    let (d, indices) = match inner.witness {
        Some(Witness::SwWindow { d, indices, .. }) => (d, indices),
        _ => {
            return Err(Error::Domain(format!(
                "Borel family over RP^{b_plus} unexpectedly unobstructed"
            )))
        }
    };
    Ok(ObstructionReport::obstructed(
        t,
        Witness::EvenInvolution {
            signature,
            inv_dim,
            b_plus,
            u,
            v,
            d,
            indices,
        },
        format!("dim H+^Z2 = {inv_dim} <= 2 with σ = {signature} < 0"),
    ))
}

/// Actions of odd prime order with `H⁺^{Z_p} = 0` have `d_j ≤ 0` for all `j`.
pub fn check_zp_action(hyp: &ZpActionHypothesis) -> Result<ObstructionReport> {
    let t = TheoremId::Zp;
    if !hyp.p.is_odd() {
        return Ok(ObstructionReport::not_applicable(
            t,
            "p = 2; use the involution checks".into(),
        ));
    }
    hyp.validate()?;
    if hyp.hplus_invariant_dim > 0 {
        return Ok(ObstructionReport::not_applicable(
            t,
            format!("H+ has invariant part of dimension {}", hyp.hplus_invariant_dim),
        ));
    }
    let d = match &hyp.index {
        EquivariantIndex::Total(d) => return Ok(total_index_report(t, hyp.p, *d)),
        EquivariantIndex::Eigen(d) => d,
    };
    let Some(j) = d.iter().position(|&dj| dj > 0) else {
        return Ok(ObstructionReport::consistent(t, "every d_j <= 0".into()));
    };
    // Relabelling the lift by ω^j moves d_j to position 0.
    let (_, certificate) = zp_certificate(hyp.p, d, hyp.hplus_eigen.as_deref(), j)?;
    Ok(ObstructionReport::obstructed(
        t,
        Witness::ZpEigenspace {
            p: hyp.p.get(),
            j,
            d: d.clone(),
            certificate,
        },
        format!("d_{j} = {} > 0", d[j]),
    ))
}

/// Spin actions of odd prime order with `H⁺^{Z_p} ≠ 0` have
/// `dim H⁺^{Z_p} ≥ d_0 + 1`.
pub fn check_zp_spin(d0: i64, inv_dim: u64) -> Result<ObstructionReport> {
    let t = TheoremId::ZpSpin;
    if inv_dim == 0 {
        return Ok(ObstructionReport::not_applicable(
            t,
            "H+ has no invariant part".into(),
        ));
    }
    if (inv_dim as i64) < d0 + 1 {
        return Ok(ObstructionReport::obstructed(
            t,
            Witness::ZpSpin { d0, inv_dim },
            format!("dim H+^Zp = {inv_dim} < d_0 + 1 = {}", d0 + 1),
        ));
    }
    Ok(ObstructionReport::consistent(
        t,
        format!("dim H+^Zp = {inv_dim} >= d_0 + 1 = {}", d0 + 1),
    ))
}
