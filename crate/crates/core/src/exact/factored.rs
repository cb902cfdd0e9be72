//! Rational functions in `t` with a Laurent numerator over `Z[ω_p]` and a
//! denominator made of powers of the linear forms `1 - ω^j t`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::cyclotomic::CyclotomicInteger;
use super::laurent::LaurentPoly;
use super::prime::Prime;

/// The factor `(1 - ω^{root_exponent} t)^{multiplicity}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearFactor {
    pub root_exponent: usize,
    pub multiplicity: i64,
}

/// Outcome of [`FactoredRational::is_polynomial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Polynomiality {
    Polynomial,
    /// The numerator vanishes to order `vanishing_order` at `t = ω^{-j}`,
    /// but the denominator has a zero of order `required` there.
    PoleAtRoot {
        root_exponent: usize,
        vanishing_order: u32,
        required: u32,
    },
    /// The numerator has a pole of this order at `t = 0`.
    PoleAtOrigin {
        order: u64,
    },
}

impl Polynomiality {
    pub fn is_polynomial(&self) -> bool {
        matches!(self, Polynomiality::Polynomial)
    }

    pub fn root_exponent(&self) -> Option<usize> {
        match self {
            Polynomiality::PoleAtRoot { root_exponent, .. } => Some(*root_exponent),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FactoredRational {
    p: Prime,
    numerator: LaurentPoly<CyclotomicInteger>,
    factors: Vec<LinearFactor>,
}

impl FactoredRational {
    /// Root exponents are reduced mod `p`; multiplicities are kept as given.
    pub fn new(
        numerator: LaurentPoly<CyclotomicInteger>,
        factors: impl IntoIterator<Item = (i64, i64)>,
    ) -> Self {
        let p = numerator.ctx();
        let factors = factors
            .into_iter()
            .map(|(j, e)| LinearFactor {
                root_exponent: p.residue(j),
                multiplicity: e,
            })
            .collect();
        FactoredRational {
            p,
            numerator,
            factors,
        }
    }

    /// Convenience constructor for an integer constant numerator.
    pub fn with_constant(p: Prime, numerator: BigInt, factors: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let num = LaurentPoly::constant(CyclotomicInteger::from_scalar(p, numerator));
        Self::new(num, factors)
    }

    pub fn modulus(&self) -> Prime {
        self.p
    }

    pub fn numerator(&self) -> &LaurentPoly<CyclotomicInteger> {
        &self.numerator
    }

    pub fn factors(&self) -> &[LinearFactor] {
        &self.factors
    }

    /// Net multiplicity of each root exponent after combining repeats.
    pub fn net_multiplicities(&self) -> BTreeMap<usize, i64> {
        let mut net = BTreeMap::new();
        for f in &self.factors {
            *net.entry(f.root_exponent).or_insert(0) += f.multiplicity;
        }
        net
    }

    /// `1 - ω^j t`.
    pub fn linear_form(p: Prime, j: usize) -> LaurentPoly<CyclotomicInteger> {
        LaurentPoly::from_terms(
            p,
            [
                (0, CyclotomicInteger::one(p)),
                (1, -CyclotomicInteger::omega_pow(p, j as i64)),
            ],
        )
    }

    /// Decides whether the function is a polynomial in `t`.
    ///
    /// The linear forms have constant term 1 and pairwise distinct roots, so
    /// divisibility reduces to comparing, root by root, the order to which
    /// the numerator vanishes against the net denominator multiplicity.
    /// The first failing root in increasing `j` is reported.
    pub fn is_polynomial(&self) -> Polynomiality {
        if self.numerator.is_zero() {
            return Polynomiality::Polynomial;
        }
        if let Some(low) = self.numerator.min_exp().filter(|&e| e < 0) {
            return Polynomiality::PoleAtOrigin {
                order: low.unsigned_abs(),
            };
        }
        for (j, e) in self.net_multiplicities() {
            if e >= 0 {
                continue;
            }
            let required = u32::try_from(-e).unwrap_or(u32::MAX);
            let root = CyclotomicInteger::omega_pow(self.p, -(j as i64));
            let order = self
                .numerator
                .vanishing_order(&root, required)
                .expect("numerator checked polynomial above");
            if order < required {
                return Polynomiality::PoleAtRoot {
                    root_exponent: j,
                    vanishing_order: order,
                    required,
                };
            }
        }
        Polynomiality::Polynomial
    }

    /// Numerator times the positive factors, and the product of the negative
    /// factors, both fully expanded.
    pub fn expanded_parts(&self) -> (LaurentPoly<CyclotomicInteger>, LaurentPoly<CyclotomicInteger>) {
        let mut top = self.numerator.clone();
        let mut bottom = LaurentPoly::one(self.p);
        for f in &self.factors {
            let form = Self::linear_form(self.p, f.root_exponent).pow(f.multiplicity.unsigned_abs());
            if f.multiplicity >= 0 {
                top = &top * &form;
            } else {
                bottom = &bottom * &form;
            }
        }
        (top, bottom)
    }
}
