use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::{FamilyHypothesis, ObstructionReport, TheoremId, Witness};
use crate::classes::{sw_class, sw_top_range_nonzero};
use crate::error::Result;

/// A nonzero Euler class of `H⁺` forces `d ≤ 0`, and then
/// `e(H⁺) s_j(D) = 0` for all `j > -d`. The Euler class is tested through
/// its mod-2 reduction `w_{b⁺}(H⁺)`, so a nonzero reduction certifies a
/// nonzero Euler class.
pub fn check_family_euler(h: &FamilyHypothesis) -> Result<ObstructionReport> {
    let t = TheoremId::FamilyEuler;
    let d = h.validate()?;
    let b_plus = h.lattice.b_plus();
    let w = sw_class(&h.hplus, b_plus);
    if w.is_zero() {
        return Ok(ObstructionReport::consistent(
            t,
            format!("w_{b_plus}(H+) = 0, so the Euler class test is silent"),
        ));
    }
    if d > 0 {
        return Ok(ObstructionReport::obstructed(
            t,
            Witness::NonzeroEuler {
                d,
                degree: b_plus,
                class: w.to_string(),
            },
            format!("w_{b_plus}(H+) = {w} is nonzero but d = {d} > 0"),
        ));
    }
    if let Some(segre) = &h.segre {
        for (i, s) in segre.iter().enumerate() {
            let j = i as u64 + 1;
            if (j as i64) <= -d {
                continue;
            }
            let product = w.checked_mul(s)?;
            if !product.is_zero() {
                return Ok(ObstructionReport::obstructed(
                    t,
                    Witness::NonzeroSegreProduct {
                        d,
                        j,
                        product: product.to_string(),
                    },
                    format!(
                        "w_{b_plus}(H+) · s_{j}(D) = {product} is nonzero with {j} > -d = {}",
                        -d
                    ),
                ));
            }
        }
    }
    Ok(ObstructionReport::consistent(
        t,
        format!("w_{b_plus}(H+) is nonzero and d = {d} <= 0"),
    ))
}

/// For spin families, a nonzero `w_i(H⁺)` with `i ∈ {b⁺, b⁺-1, b⁺-2}` forces
/// `d ≤ 0`. Here `d = -σ/8`.
pub fn check_spin_family_pin(h: &FamilyHypothesis) -> Result<ObstructionReport> {
    let t = TheoremId::SpinFamily;
    if !h.spin_family {
        return Ok(ObstructionReport::not_applicable(
            t,
            "the family is not spin".to_string(),
        ));
    }
    let d = h.validate()?;
    let b_plus = h.lattice.b_plus();
    let indices: Vec<u64> = sw_top_range_nonzero(&h.hplus, b_plus)?.into_iter().collect();
    if indices.is_empty() {
        return Ok(ObstructionReport::consistent(
            t,
            format!("w_i(H+) = 0 for every i in {{b+, b+-1, b+-2}} with b+ = {b_plus}"),
        ));
    }
    if d <= 0 {
        return Ok(ObstructionReport::consistent(
            t,
            format!("w_{}(H+) is nonzero but d = {d} <= 0", indices[0]),
        ));
    }
    let classes = indices
        .iter()
        .map(|&i| sw_class(&h.hplus, i).to_string())
        .collect();
    let list = indices
        .iter()
        .map(|i| format!("w_{i}"))
        .collect::<Vec<_>>()
        .join(", ");
    Ok(ObstructionReport::obstructed(
        t,
        Witness::SwWindow {
            d,
            b_plus,
            indices,
            classes,
        },
        format!("{list} nonzero with b+ = {b_plus}, but d = {d} > 0"),
    ))
}
