use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    /// Smallest exponent at which the generator's powers vanish.
    pub nilpotency: Option<u32>,
    /// 0, or 2 when every term containing the generator is 2-torsion.
    pub annihilator: u8,
}

impl Generator {
    pub fn new(name: &str, degree: u32) -> Self {
        Generator {
            name: name.to_string(),
            degree,
            nilpotency: None,
            annihilator: 0,
        }
    }

    pub fn nilpotent(mut self, exponent: u32) -> Self {
        self.nilpotency = Some(exponent);
        self
    }

    pub fn two_torsion(mut self) -> Self {
        self.annihilator = 2;
        self
    }
}

/// A commutative graded ring `Z[g_1, …]/I` or `Z_2[g_1, …]/I`, where the
/// relations are truncations `g^n = 0` and 2-torsion of single generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingPresentation {
    modulus: u8,
    generators: Vec<Generator>,
}

impl RingPresentation {
    /// Validates admissibility: coefficients in `Z` or `Z_2`, and with
    /// integer coefficients only even-degree generators (so that the ring is
    /// honestly commutative).
    pub fn new(modulus: u8, generators: Vec<Generator>) -> Result<Arc<Self>> {
        if modulus != 0 && modulus != 2 {
            return Err(Error::InadmissiblePresentation(format!(
                "coefficient modulus must be 0 or 2, got {modulus}"
            )));
        }
        for g in &generators {
            if g.annihilator != 0 && g.annihilator != 2 {
                return Err(Error::InadmissiblePresentation(format!(
                    "generator {} has annihilator {}, expected 0 or 2",
                    g.name, g.annihilator
                )));
            }
            if g.nilpotency == Some(0) {
                return Err(Error::InadmissiblePresentation(format!(
                    "generator {} has nilpotency exponent 0",
                    g.name
                )));
            }
            if modulus == 0 && g.degree % 2 == 1 {
                return Err(Error::InadmissiblePresentation(format!(
                    "integral generator {} has odd degree {}",
                    g.name, g.degree
                )));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::InadmissiblePresentation(format!(
                    "duplicate generator name {}",
                    g.name
                )));
            }
        }
        Ok(Arc::new(RingPresentation { modulus, generators }))
    }

    /// `Z` or `Z_2` with no generators: the cohomology of a point.
    pub fn point(modulus: u8) -> Arc<Self> {
        Self::new(modulus, Vec::new()).expect("point ring is admissible")
    }

    /// `Z_2[x]/(x^{n+1})`, the mod-2 cohomology of `RP^n`.
    pub fn projective_mod2(n: u32) -> Arc<Self> {
        Self::new(2, vec![Generator::new("x", 1).nilpotent(n + 1)]).expect("admissible")
    }

    /// The mod-2 exterior algebra on `t1, …, tn` in degree 1, the mod-2
    /// cohomology of the `n`-torus.
    pub fn torus_mod2(n: u32) -> Arc<Self> {
        let gens = (1..=n)
            .map(|i| Generator::new(&format!("t{i}"), 1).nilpotent(2))
            .collect();
        Self::new(2, gens).expect("admissible")
    }

    /// `Z[v, w]/(2w, w²)` with `v` in degree 4 and `w` in degree 2.
    pub fn bpin2_integral() -> Arc<Self> {
        Self::new(
            0,
            vec![
                Generator::new("v", 4),
                Generator::new("w", 2).nilpotent(2).two_torsion(),
            ],
        )
        .expect("admissible")
    }

    /// `Z_2[v, u]/(u³)` with `v` in degree 4 and `u` in degree 1.
    pub fn bpin2_mod2() -> Arc<Self> {
        Self::new(
            2,
            vec![Generator::new("v", 4), Generator::new("u", 1).nilpotent(3)],
        )
        .expect("admissible")
    }

    /// Adjoins a new polynomial generator, keeping existing ones in front.
    pub fn adjoin(self: &Arc<Self>, generator: Generator) -> Result<Arc<Self>> {
        let mut gens = self.generators.clone();
        gens.push(generator);
        Self::new(self.modulus, gens)
    }

    pub fn modulus(&self) -> u8 {
        self.modulus
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn degree_of(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.generators).map(|(e, g)| e * g.degree).sum()
    }

    fn is_zero_monomial(&self, exps: &[u32]) -> bool {
        exps.iter()
            .zip(&self.generators)
            .any(|(e, g)| g.nilpotency.is_some_and(|n| *e >= n))
    }

    fn torsion_of(&self, exps: &[u32]) -> Option<u8> {
        if self.modulus == 2 {
            return Some(2);
        }
        exps.iter()
            .zip(&self.generators)
            .any(|(e, g)| *e > 0 && g.annihilator == 2)
            .then_some(2)
    }
}

/// An element of a [`RingPresentation`], always fully reduced.
#[derive(Clone)]
pub struct GradedClass {
    ring: Arc<RingPresentation>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl PartialEq for GradedClass {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for GradedClass {}

fn same_ring(a: &Arc<RingPresentation>, b: &Arc<RingPresentation>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
}

impl GradedClass {
    pub fn zero(ring: &Arc<RingPresentation>) -> Self {
        GradedClass {
            ring: Arc::clone(ring),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<RingPresentation>) -> Self {
        Self::constant(ring, BigInt::one())
    }

    pub fn constant(ring: &Arc<RingPresentation>, n: BigInt) -> Self {
        let exps = vec![0; ring.generators.len()];
        Self::monomial(ring, exps, n).expect("constant monomial has the right length")
    }

    pub fn monomial(ring: &Arc<RingPresentation>, exps: Vec<u32>, coeff: BigInt) -> Result<Self> {
        if exps.len() != ring.generators.len() {
            return Err(Error::InvalidInput(format!(
                "monomial has {} exponents, ring has {} generators",
                exps.len(),
                ring.generators.len()
            )));
        }
        let mut out = Self::zero(ring);
        out.add_term(exps, coeff);
        Ok(out)
    }

    /// The generator with the given name.
    pub fn generator(ring: &Arc<RingPresentation>, name: &str) -> Result<Self> {
        let idx = ring
            .generator_index(name)
            .ok_or_else(|| Error::InvalidInput(format!("no generator named {name}")))?;
        let mut exps = vec![0; ring.generators.len()];
        exps[idx] = 1;
        Self::monomial(ring, exps, BigInt::one())
    }

    /// The generator at a position in the presentation.
    pub fn generator_at(ring: &Arc<RingPresentation>, index: usize) -> Result<Self> {
        let name = ring
            .generators
            .get(index)
            .ok_or_else(|| Error::InvalidInput(format!("no generator at index {index}")))?
            .name
            .clone();
        Self::generator(ring, &name)
    }

    fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        if self.ring.is_zero_monomial(&exps) {
            return;
        }
        let torsion = self.ring.torsion_of(&exps);
        let mut c = self.terms.remove(&exps).unwrap_or_default() + coeff;
        if let Some(m) = torsion {
            c = c.mod_floor(&BigInt::from(m));
        }
        if !c.is_zero() {
            self.terms.insert(exps, c);
        }
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The degree shared by all monomials, if any. Zero has no degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| self.ring.degree_of(e));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Self {
        GradedClass {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| self.ring.degree_of(e) == degree)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::PresentationMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        let mut out = Self::zero(&self.ring);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * n);
        }
        out
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same ring");
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Includes the class into a ring whose presentation extends this one by
    /// further generators.
    pub fn extend_to(&self, target: &Arc<RingPresentation>) -> Result<Self> {
        let n = self.ring.generators.len();
        if target.modulus != self.ring.modulus
            || target.generators.len() < n
            || target.generators[..n] != self.ring.generators[..]
        {
            return Err(Error::PresentationMismatch);
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut exps = e.clone();
            exps.resize(target.generators.len(), 0);
            out.add_term(exps, c.clone());
        }
        Ok(out)
    }
}

/// Sum or product of two classes in the same presentation.
pub fn ring_arith(a: &GradedClass, b: &GradedClass, op: RingOp) -> Result<GradedClass> {
    match op {
        RingOp::Add => a.checked_add(b),
        RingOp::Mul => a.checked_mul(b),
    }
}

impl fmt::Debug for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Lowest degree first, then by exponent vector.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| (self.ring.degree_of(e), core::cmp::Reverse((*e).clone())));
        for (i, (exps, c)) in terms.into_iter().enumerate() {
            let mono: String = exps
                .iter()
                .zip(&self.ring.generators)
                .filter(|(e, _)| **e > 0)
                .map(|(e, g)| {
                    if *e == 1 {
                        g.name.clone()
                    } else {
                        format!("{}^{e}", g.name)
                    }
                })
                .collect::<Vec<_>>()
                .join("·");
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&mono)?,
                (false, false) => write!(f, "{mag}{mono}")?,
            }
        }
        Ok(())
    }
}
