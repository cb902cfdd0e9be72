use alloc::format;

use super::{ObstructionReport, TheoremId, Witness};
use crate::error::Result;
use crate::lattice::{dirac_index, IntersectionLattice, SpinCData};

/// With `b⁺ = 0` the index `d = (c² - σ)/8` must be nonpositive.
pub fn check_point_donaldson(lattice: &IntersectionLattice, s: &SpinCData) -> Result<ObstructionReport> {
    let t = TheoremId::Donaldson;
    let d = dirac_index(lattice, s)?;
    let b_plus = lattice.b_plus();
    if b_plus != 0 {
        return Ok(ObstructionReport::not_applicable(t, format!("b+ = {b_plus} > 0")));
    }
    let sigma = lattice.signature();
    if d > 0 {
        let witness = Witness::PositiveIndex {
            d,
            c_squared: s.c_squared,
            signature: sigma,
        };
        return Ok(ObstructionReport::obstructed(
            t,
            witness,
            format!("b+ = 0 but d = ({} - ({sigma}))/8 = {d} > 0", s.c_squared),
        ));
    }
    Ok(ObstructionReport::consistent(
        t,
        format!("b+ = 0 and d = {d} <= 0"),
    ))
}

/// The 10/8 inequality for a spin manifold with `σ < 0`: `b⁺ ≥ d + 1` with
/// `d = -σ/8` when `b⁺ ≥ 1`, and `d ≤ 0` when `b⁺ = 0`. Also requires
/// `16 | σ` so that the quaternionic index is an integer.
///
/// `b_plus_override` replaces the lattice's `b⁺`.
pub fn check_furuta_point(
    lattice: &IntersectionLattice,
    b_plus_override: Option<u64>,
) -> Result<ObstructionReport> {
    let t = TheoremId::Furuta;
    if !lattice.is_even() {
        return Ok(ObstructionReport::not_applicable(t, format!("{lattice} is odd")));
    }
    let sigma = lattice.signature();
    if sigma >= 0 {
        return Ok(ObstructionReport::not_applicable(t, format!("σ = {sigma} >= 0")));
    }
    if sigma.rem_euclid(16) != 0 {
        return Ok(ObstructionReport::obstructed(
            t,
            Witness::IndexIntegrality { signature: sigma },
            format!("σ = {sigma} is not divisible by 16, so -σ/16 is not an integer"),
        ));
    }
    let d = dirac_index(lattice, &SpinCData::spin())?;
    let b_plus = b_plus_override.unwrap_or_else(|| lattice.b_plus());
    if b_plus == 0 {
        if d > 0 {
            return Ok(ObstructionReport::obstructed(
                t,
                Witness::TenEighths {
                    b_plus,
                    d,
                    refined: false,
                },
                format!("b+ = 0 but d = {d} > 0"),
            ));
        }
        return Ok(ObstructionReport::consistent(
            t,
            format!("b+ = 0 and d = {d} <= 0"),
        ));
    }
    if (b_plus as i64) < d + 1 {
        return Ok(ObstructionReport::obstructed(
            t,
            Witness::TenEighths {
                b_plus,
                d,
                refined: true,
            },
            format!("b+ = {b_plus} < d + 1 = {}", d + 1),
        ));
    }
    Ok(ObstructionReport::consistent(
        t,
        format!("b+ = {b_plus} >= d + 1 = {}", d + 1),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Verdict;

    fn l(s: &str) -> IntersectionLattice {
        s.parse().unwrap()
    }

    #[test]
    fn donaldson_examples() {
        let r = check_point_donaldson(&l("E8m"), &SpinCData::spin()).unwrap();
        assert_eq!(r.verdict, Verdict::Obstructed);
        assert_eq!(
            r.witness,
            Some(Witness::PositiveIndex {
                d: 1,
                c_squared: 0,
                signature: -8
            })
        );
        let r = check_point_donaldson(&l("7D1m"), &SpinCData::with_c_squared(-7)).unwrap();
        assert_eq!(r.verdict, Verdict::Consistent);
        let r = check_point_donaldson(&l("2H+E8m"), &SpinCData::spin()).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
    }

    #[test]
    fn furuta_examples() {
        assert_eq!(
            check_furuta_point(&l("3H+2E8m"), None).unwrap().verdict,
            Verdict::Consistent
        );
        let r = check_furuta_point(&l("2H+2E8m"), None).unwrap();
        assert_eq!(r.verdict, Verdict::Obstructed);
        assert_eq!(
            r.witness,
            Some(Witness::TenEighths {
                b_plus: 2,
                d: 2,
                refined: true
            })
        );
        let r = check_furuta_point(&l("2E8m"), None).unwrap();
        assert_eq!(
            r.witness,
            Some(Witness::TenEighths {
                b_plus: 0,
                d: 2,
                refined: false
            })
        );
        let r = check_furuta_point(&l("3H+E8m"), None).unwrap();
        assert_eq!(r.witness, Some(Witness::IndexIntegrality { signature: -8 }));
        assert_eq!(
            check_furuta_point(&l("H+D1m"), None).unwrap().verdict,
            Verdict::NotApplicable
        );
        assert_eq!(
            check_furuta_point(&l("2E8p"), None).unwrap().verdict,
            Verdict::NotApplicable
        );
        assert_eq!(
            check_furuta_point(&l("2H+2E8m"), Some(3)).unwrap().verdict,
            Verdict::Consistent
        );
    }
}
