use alloc::format;

use num_bigint::BigInt;

use super::{ObstructionReport, TheoremId, Witness};
use crate::error::{Error, Result};
use crate::rep::{character_obstruction, k_euler, lambda_total, psi2, repring_exact_divide, ZpVirtualRep};

/// Equivariant 10/8: there is `η ∈ R[Z_p]` with
/// `Λ*(H⁺ ⊗ C) · Λ*ψ²(V') = η · Λ*ψ²(V)`, and `η` is even when
/// `Λ_{-1}(H⁺ ⊗ C) = 0`.
///
/// `V` and `V'` are the quaternionic representations of a finite
/// dimensional approximation, `hplus` the complexified `H⁺`.
pub fn check_10on8_equivariant(
    hplus: &ZpVirtualRep,
    v: &ZpVirtualRep,
    vp: &ZpVirtualRep,
) -> Result<ObstructionReport> {
    let t = TheoremId::TenEighthsEquivariant;
    let p = hplus.modulus();
    for (name, r) in [("V", v), ("V'", vp)] {
        if r.modulus() != p {
            return Err(Error::ModulusMismatch {
                left: p.get(),
                right: r.modulus().get(),
            });
        }
        if !r.is_genuine() || !r.is_quaternionic() {
            return Err(Error::Domain(format!(
                "{name} = {r} must be genuine, self-conjugate and of even dimension"
            )));
        }
    }
    if !hplus.is_genuine() || !hplus.is_self_conjugate() {
        return Err(Error::Domain(format!(
            "H+ = {hplus} must be genuine and self-conjugate"
        )));
    }
    let a = &lambda_total(hplus)? * &lambda_total(&psi2(vp))?;
    let b = lambda_total(&psi2(v))?;
    let refined = k_euler(hplus)?.is_zero();
    let target = if refined { b.scale(&BigInt::from(2)) } else { b };
    match repring_exact_divide(&a, &target)? {
        Some(eta) => Ok(ObstructionReport::consistent(
            t,
            format!(
                "{a} = ({eta}) · ({target}){}",
                if refined {
                    ", refined by the vanishing Euler class"
                } else {
                    ""
                }
            ),
        )),
        None => {
            let character = character_obstruction(&a, &target)?;
            let how = match character {
                Some(k) => format!("traces at g^{k} do not divide"),
                None => "the circulant system has no integer solution".into(),
            };
            Ok(ObstructionReport::obstructed(
                t,
                Witness::EquivariantDivisibility {
                    p: p.get(),
                    refined,
                    character,
                    numerator: a.clone(),
                    denominator: target.clone(),
                },
                format!("{target} does not divide {a} in R[Z_{p}]: {how}"),
            ))
        }
    }
}
