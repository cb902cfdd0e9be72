use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::ring::{Generator, GradedClass, RingPresentation};
use crate::error::{Error, Result};

fn check_chern(chern: &[GradedClass]) -> Result<&Arc<RingPresentation>> {
    let first = chern
        .first()
        .ok_or_else(|| Error::InvalidInput("Chern data must start with c_0 = 1".into()))?;
    let ring = first.ring();
    if *first != GradedClass::one(ring) {
        return Err(Error::InvalidInput(format!("c_0 must be 1, got {first}")));
    }
    for (j, c) in chern.iter().enumerate() {
        if c.ring() != ring {
            return Err(Error::PresentationMismatch);
        }
        if let Some(deg) = c.homogeneous_degree() {
            if deg != 2 * j as u32 {
                return Err(Error::InvalidInput(format!(
                    "c_{j} has degree {deg}, expected {}",
                    2 * j
                )));
            }
        }
    }
    Ok(ring)
}

/// Segre classes `s_0, …, s_length`, the inverse of the total Chern class:
/// `s_0 = 1` and `s_k = -Σ_{i=1..k} c_i s_{k-i}`. Chern classes beyond the
/// supplied list are taken to be zero.
pub fn total_segre(chern: &[GradedClass], length: usize) -> Result<Vec<GradedClass>> {
    let ring = check_chern(chern)?;
    let mut s = Vec::with_capacity(length + 1);
    s.push(GradedClass::one(ring));
    for k in 1..=length {
        let mut acc = GradedClass::zero(ring);
        for i in 1..=k.min(chern.len() - 1) {
            acc = acc.checked_add(&chern[i].checked_mul(&s[k - i])?)?;
        }
        s.push(acc.neg());
    }
    Ok(s)
}

/// `x^r + x^{r-1} c_1 + … + c_r` in the base ring with a degree-2 generator
/// `x` adjoined. Returns the extended presentation alongside the class.
pub fn euler_s1_complex(chern: &[GradedClass], rank: usize) -> Result<(Arc<RingPresentation>, GradedClass)> {
    let base = check_chern(chern)?;
    let mut name = alloc::string::String::from("x");
    while base.generator_index(&name).is_some() {
        name.push('\'');
    }
    let ring = base.adjoin(Generator::new(&name, 2))?;
    let x = GradedClass::generator(&ring, &name)?;
    let mut e = GradedClass::zero(&ring);
    for i in 0..=rank {
        let c = match chern.get(i) {
            Some(c) => c.extend_to(&ring)?,
            None => continue,
        };
        e = e.checked_add(&c.checked_mul(&x.pow((rank - i) as u64))?)?;
    }
    Ok((ring, e))
}

/// Total Chern data of a direct sum, by convolution.
pub fn whitney_sum(a: &[GradedClass], b: &[GradedClass]) -> Result<Vec<GradedClass>> {
    let ring = check_chern(a)?;
    check_chern(b)?;
    let len = a.len() + b.len() - 1;
    let mut out = alloc::vec![GradedClass::zero(ring); len];
    for (i, ci) in a.iter().enumerate() {
        for (j, cj) in b.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(&ci.checked_mul(cj)?)?;
        }
    }
    Ok(out)
}

/// `n` times the named generator.
pub fn multiple(ring: &Arc<RingPresentation>, name: &str, n: i64) -> Result<GradedClass> {
    Ok(GradedClass::generator(ring, name)?.scale(&BigInt::from(n)))
}
