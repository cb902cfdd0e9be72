//! Sparse Laurent polynomials in one variable `t`.
//!
//! Throughout the crate `t` stands for `ξ^{-1}`, the inverse of the weight-one
//! character of the circle; divisibility statements are all phrased in it.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::binomial::binomial;
use super::scalar::{CoeffRing, Coefficient, Field, IntegralDomain};
use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_e t^e` with no stored zero coefficients.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<C: Coefficient> {
    ctx: C::Ctx,
    terms: BTreeMap<i64, C>,
}

impl<C: Coefficient> LaurentPoly<C> {
    pub fn zero(ctx: C::Ctx) -> Self {
        LaurentPoly {
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: C::Ctx) -> Self {
        Self::constant(C::one(ctx))
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: C, exp: i64) -> Self {
        let mut out = Self::zero(c.ctx());
        if !c.is_zero() {
            out.terms.insert(exp, c);
        }
        out
    }

    /// The variable `t`.
    pub fn variable(ctx: C::Ctx) -> Self {
        Self::monomial(C::one(ctx), 1)
    }

    /// `Σ coeffs[i] t^{lowest + i}`.
    pub fn from_coeffs(ctx: C::Ctx, lowest: i64, coeffs: Vec<C>) -> Self {
        let mut out = Self::zero(ctx);
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                out.terms.insert(lowest + i as i64, c);
            }
        }
        out
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(ctx: C::Ctx, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero(ctx);
        for (e, c) in terms {
            out.add_term(e, &c);
        }
        out
    }

    fn add_term(&mut self, exp: i64, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                let sum = existing.add_ref(c);
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    #[inline]
    pub fn ctx(&self) -> C::Ctx {
        self.ctx
    }

    pub fn ring(&self) -> CoeffRing {
        C::ring(self.ctx)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(|| C::zero(self.ctx))
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative powers of `t` occur.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// True when the coefficients are invariant under `t ↦ t^{-1}`.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&e, c)| self.terms.get(&-e) == Some(c))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "coefficient rings differ: {} and {}",
                self.ring(),
                other.ring()
            )))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (&e, c) in &other.terms {
            out.add_term(e, &c.neg_ref());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Self::zero(self.ctx);
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &other.terms {
                out.add_term(e1 + e2, &c1.mul_ref(c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero(self.ctx);
        for (&e, c) in &self.terms {
            out.add_term(e, &c.mul_ref(s));
        }
        out
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `t ↦ t^k`.
    pub fn dilate(&self, k: i64) -> Self {
        Self::from_terms(self.ctx, self.terms.iter().map(|(&e, c)| (e * k, c.clone())))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ctx);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at `x`. Negative powers are rejected, so this is only
    /// defined on polynomials.
    pub fn evaluate(&self, x: &C) -> Option<C> {
        if !self.is_polynomial() {
            return None;
        }
        let mut acc = C::zero(self.ctx);
        let mut power = C::one(self.ctx);
        let mut at = 0i64;
        for (&e, c) in &self.terms {
            while at < e {
                power = power.mul_ref(x);
                at += 1;
            }
            acc = acc.add_ref(&c.mul_ref(&power));
        }
        Some(acc)
    }

    /// The `k`-th Hasse derivative `Σ C(e, k) c_e t^{e-k}` of a polynomial.
    pub fn hasse_derivative(&self, k: u64) -> Option<Self> {
        if !self.is_polynomial() {
            return None;
        }
        let terms = self.terms.iter().filter(|(&e, _)| e as u64 >= k).map(|(&e, c)| {
            let factor = C::from_integer(self.ctx, &binomial(e as u64, k));
            (e - k as i64, c.mul_ref(&factor))
        });
        Some(Self::from_terms(self.ctx, terms))
    }

    /// Order of vanishing at `root`, capped at `cap`. Counts successive
    /// Hasse derivatives that vanish there. Returns `None` for non-polynomials;
    /// the zero polynomial vanishes to every order and reports `cap`.
    pub fn vanishing_order(&self, root: &C, cap: u32) -> Option<u32> {
        if !self.is_polynomial() {
            return None;
        }
        for k in 0..cap {
            let value = self.hasse_derivative(k as u64)?.evaluate(root)?;
            if !value.is_zero() {
                return Some(k);
            }
        }
        Some(cap)
    }

    /// Re-expresses coefficients in another ring.
    pub fn map_coeffs<D: Coefficient>(&self, ctx: D::Ctx, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        LaurentPoly::from_terms(ctx, self.terms.iter().map(|(&e, c)| (e, f(c))))
    }

    fn dense_from(&self, lowest: i64) -> Vec<C> {
        let top = self.max_exp().unwrap_or(lowest);
        let mut out = vec![C::zero(self.ctx); (top - lowest + 1) as usize];
        for (&e, c) in &self.terms {
            out[(e - lowest) as usize] = c.clone();
        }
        out
    }
}

impl<C: IntegralDomain> LaurentPoly<C> {
    pub fn to_frac(&self) -> LaurentPoly<C::Frac> {
        self.map_coeffs(self.ctx, C::to_frac)
    }

    pub fn from_frac(value: &LaurentPoly<C::Frac>) -> Option<Self> {
        let mut out = Self::zero(value.ctx());
        for (e, c) in value.terms() {
            out.terms.insert(e, C::from_frac(c)?);
        }
        Some(out)
    }
}

/// Polynomial long division over a field, for dense ascending coefficient
/// vectors with a nonzero leading divisor coefficient. Returns the quotient
/// when the remainder vanishes.
fn long_divide<F: Field>(ctx: F::Ctx, mut num: Vec<F>, den: &[F]) -> Option<Vec<F>> {
    let den_deg = den.len() - 1;
    let lead_inv = den[den_deg].inv()?;
    if num.len() < den.len() {
        return num.iter().all(Coefficient::is_zero).then(Vec::new);
    }
    let quot_len = num.len() - den_deg;
    let mut quot = vec![F::zero(ctx); quot_len];
    for shift in (0..quot_len).rev() {
        let lead = &num[shift + den_deg];
        if lead.is_zero() {
            continue;
        }
        let q = lead.mul_ref(&lead_inv);
        for (i, d) in den.iter().enumerate() {
            num[shift + i] = num[shift + i].sub_ref(&q.mul_ref(d));
        }
        quot[shift] = q;
    }
    num.iter().all(Coefficient::is_zero).then_some(quot)
}

/// Exact quotient `f / g` in the Laurent ring.
///
/// Division is carried out over the fraction field; the result is returned
/// only if every quotient coefficient lies back in the coefficient ring.
/// `Ok(None)` means `g` does not divide `f`.
pub fn laurent_exact_divide<C: IntegralDomain>(
    f: &LaurentPoly<C>,
    g: &LaurentPoly<C>,
) -> Result<Option<LaurentPoly<C>>> {
    f.same_ring(g)?;
    let (g_low, _) = match (g.min_exp(), g.max_exp()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::DivisionByZero),
    };
    let f_low = match f.min_exp() {
        Some(lo) => lo,
        None => return Ok(Some(LaurentPoly::zero(f.ctx))),
    };
    let ff = f.to_frac();
    let gf = g.to_frac();
    let num = ff.dense_from(f_low);
    let den = gf.dense_from(g_low);
    let quot = match long_divide(f.ctx, num, &den) {
        Some(q) => q,
        None => return Ok(None),
    };
    let quot = LaurentPoly::from_coeffs(f.ctx, f_low - g_low, quot);
    Ok(LaurentPoly::from_frac(&quot))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a, C: Coefficient> $trait<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
            type Output = LaurentPoly<C>;

            fn $method(self, rhs: &'a LaurentPoly<C>) -> LaurentPoly<C> {
                self.$checked(rhs)
                    .expect("Laurent operands over different rings")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Coefficient> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;

    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            ctx: self.ctx,
            terms: self.terms.iter().map(|(&e, c)| (e, c.neg_ref())).collect(),
        }
    }
}

impl<C: Coefficient> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{e}")?,
            }
        }
        Ok(())
    }
}
