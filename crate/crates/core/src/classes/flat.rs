use alloc::collections::BTreeSet;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::ring::{GradedClass, RingPresentation};
use crate::error::{Error, Result};

/// The base space of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Point,
    Torus(u32),
    RealProjective(u32),
}

impl Base {
    pub fn dim(self) -> u32 {
        match self {
            Base::Point => 0,
            Base::Torus(n) | Base::RealProjective(n) => n,
        }
    }

    /// Mod-2 cohomology ring of the base.
    pub fn mod2_ring(self) -> Arc<RingPresentation> {
        match self {
            Base::Point => RingPresentation::point(2),
            Base::Torus(n) => RingPresentation::torus_mod2(n),
            Base::RealProjective(n) => RingPresentation::projective_mod2(n),
        }
    }
}

/// A flat real vector bundle built from sign representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FlatBundleDescriptor {
    /// A trivial bundle over a point.
    Point { rank: u64 },
    /// Line summands over `T^dim` each with `w_1` the sum of the listed
    /// degree-1 generators (0-based), plus a trivial summand.
    Torus {
        dim: u32,
        lines: Vec<BTreeSet<u32>>,
        trivial_rank: u64,
    },
    /// `R^u ⊕ R^v_-` over `RP^dim`, where `R_-` is the tautological line.
    RealProjective { dim: u32, u: u64, v: u64 },
}

impl FlatBundleDescriptor {
    pub fn torus(dim: u32, lines: Vec<BTreeSet<u32>>, trivial_rank: u64) -> Result<Self> {
        for line in &lines {
            if let Some(&bad) = line.iter().find(|&&i| i >= dim) {
                return Err(Error::InvalidInput(format!(
                    "line summand uses generator {bad}, torus has dimension {dim}"
                )));
            }
        }
        Ok(FlatBundleDescriptor::Torus {
            dim,
            lines,
            trivial_rank,
        })
    }

    /// `k` line summands on `T^k`, the `i`-th twisted along the `i`-th circle.
    pub fn torus_coordinate_lines(k: u32, trivial_rank: u64) -> Self {
        let lines = (0..k).map(|i| BTreeSet::from([i])).collect();
        FlatBundleDescriptor::Torus {
            dim: k,
            lines,
            trivial_rank,
        }
    }

    pub fn base(&self) -> Base {
        match self {
            FlatBundleDescriptor::Point { .. } => Base::Point,
            FlatBundleDescriptor::Torus { dim, .. } => Base::Torus(*dim),
            FlatBundleDescriptor::RealProjective { dim, .. } => Base::RealProjective(*dim),
        }
    }

    pub fn rank(&self) -> u64 {
        match self {
            FlatBundleDescriptor::Point { rank } => *rank,
            FlatBundleDescriptor::Torus {
                lines, trivial_rank, ..
            } => lines.len() as u64 + trivial_rank,
            FlatBundleDescriptor::RealProjective { u, v, .. } => u + v,
        }
    }

    /// Direct sum over a common base.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        use FlatBundleDescriptor::*;
        match (self, other) {
            (Point { rank: a }, Point { rank: b }) => Ok(Point { rank: a + b }),
            (
                Torus {
                    dim,
                    lines,
                    trivial_rank,
                },
                Torus {
                    dim: dim2,
                    lines: lines2,
                    trivial_rank: t2,
                },
            ) if dim == dim2 => {
                let mut all = lines.clone();
                all.extend(lines2.iter().cloned());
                Ok(Torus {
                    dim: *dim,
                    lines: all,
                    trivial_rank: trivial_rank + t2,
                })
            }
            (
                RealProjective { dim, u, v },
                RealProjective {
                    dim: dim2,
                    u: u2,
                    v: v2,
                },
            ) if dim == dim2 => Ok(RealProjective {
                dim: *dim,
                u: u + u2,
                v: v + v2,
            }),
            _ => Err(Error::InvalidInput(format!(
                "bundles over different bases: {:?} and {:?}",
                self.base(),
                other.base()
            ))),
        }
    }
}

/// Total Stiefel-Whitney class in the mod-2 cohomology of the base.
pub fn sw_total(desc: &FlatBundleDescriptor) -> GradedClass {
    let ring = desc.base().mod2_ring();
    let one = GradedClass::one(&ring);
    match desc {
        FlatBundleDescriptor::Point { .. } => one,
        FlatBundleDescriptor::Torus { lines, .. } => lines.iter().fold(one.clone(), |acc, line| {
            let w1 = line.iter().fold(GradedClass::zero(&ring), |s, &i| {
                let t = GradedClass::generator_at(&ring, i as usize).expect("validated index");
                s.checked_add(&t).expect("same ring")
            });
            acc.checked_mul(&one.checked_add(&w1).expect("same ring"))
                .expect("same ring")
        }),
        FlatBundleDescriptor::RealProjective { v, .. } => {
            let x = GradedClass::generator(&ring, "x").expect("projective ring has x");
            one.checked_add(&x).expect("same ring").pow(*v)
        }
    }
}

/// `w_i`, the degree-`i` component of [`sw_total`].
pub fn sw_class(desc: &FlatBundleDescriptor, i: u64) -> GradedClass {
    match u32::try_from(i) {
        Ok(i) => sw_total(desc).component(i),
        Err(_) => GradedClass::zero(&desc.base().mod2_ring()),
    }
}

/// The indices `i ∈ {b⁺, b⁺-1, b⁺-2}` (those that are nonnegative) with
/// `w_i ≠ 0`.
pub fn sw_top_range_nonzero(desc: &FlatBundleDescriptor, b_plus: u64) -> Result<BTreeSet<u64>> {
    if desc.rank() != b_plus {
        return Err(Error::RankMismatch {
            bundle: desc.rank(),
            b_plus,
        });
    }
    let total = sw_total(desc);
    Ok((0..=2)
        .filter_map(|k| b_plus.checked_sub(k))
        .filter(|&i| u32::try_from(i).is_ok_and(|i| !total.component(i).is_zero()))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn projective_total_class() {
        let d = FlatBundleDescriptor::RealProjective { dim: 5, u: 2, v: 3 };
        assert_eq!(sw_total(&d).to_string(), "1 + x + x^2 + x^3");
    }

    #[test]
    fn torus_total_class() {
        let d = FlatBundleDescriptor::torus_coordinate_lines(3, 0);
        assert_eq!(
            sw_total(&d).to_string(),
            "1 + t1 + t2 + t3 + t1·t2 + t1·t3 + t2·t3 + t1·t2·t3"
        );
        let trivial = FlatBundleDescriptor::torus(2, vec![], 5).unwrap();
        assert_eq!(sw_total(&trivial).to_string(), "1");
    }

    #[test]
    fn top_range_examples() {
        for b in 3..10u64 {
            let d = FlatBundleDescriptor::RealProjective {
                dim: b as u32,
                u: 2,
                v: b - 2,
            };
            assert_eq!(sw_top_range_nonzero(&d, b).unwrap(), BTreeSet::from([b - 2]));
        }
        for a in 3..8u32 {
            let d = FlatBundleDescriptor::torus_coordinate_lines(a - 2, 2);
            assert_eq!(
                sw_top_range_nonzero(&d, a as u64).unwrap(),
                BTreeSet::from([a as u64 - 2])
            );
        }
        let d = FlatBundleDescriptor::torus(4, vec![], 7).unwrap();
        assert!(sw_top_range_nonzero(&d, 7).unwrap().is_empty());
    }

    #[test]
    fn rank_mismatch() {
        let d = FlatBundleDescriptor::Point { rank: 3 };
        assert_eq!(
            sw_top_range_nonzero(&d, 4),
            Err(Error::RankMismatch { bundle: 3, b_plus: 4 })
        );
    }

    #[test]
    fn out_of_range_line_is_rejected() {
        assert!(FlatBundleDescriptor::torus(2, vec![BTreeSet::from([2])], 0).is_err());
    }
}
