//! Intersection forms presented as block sums of the standard unimodular
//! forms, and the index `d = (c² - σ)/8` of the spin^c Dirac operator.

use alloc::format;
use alloc::string::ToString;
use core::fmt;
use core::ops::Add;
use core::str::FromStr;

use crate::error::{Error, Result};

/// One summand of a block-sum lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// The hyperbolic plane.
    H,
    E8Plus,
    E8Minus,
    /// `⟨+1⟩`.
    DiagPlus,
    /// `⟨-1⟩`.
    DiagMinus,
}

impl Block {
    pub const ALL: [Block; 5] = [
        Block::H,
        Block::E8Plus,
        Block::E8Minus,
        Block::DiagPlus,
        Block::DiagMinus,
    ];

    pub fn rank(self) -> u64 {
        match self {
            Block::H => 2,
            Block::E8Plus | Block::E8Minus => 8,
            Block::DiagPlus | Block::DiagMinus => 1,
        }
    }

    pub fn signature(self) -> i64 {
        match self {
            Block::H => 0,
            Block::E8Plus => 8,
            Block::E8Minus => -8,
            Block::DiagPlus => 1,
            Block::DiagMinus => -1,
        }
    }

    pub fn is_even(self) -> bool {
        matches!(self, Block::H | Block::E8Plus | Block::E8Minus)
    }

    /// The code used in lattice expressions such as `10H+6E8m`.
    pub fn code(self) -> &'static str {
        match self {
            Block::H => "H",
            Block::E8Plus => "E8p",
            Block::E8Minus => "E8m",
            Block::DiagPlus => "D1p",
            Block::DiagMinus => "D1m",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A multiset of blocks.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntersectionLattice {
    counts: [u64; 5],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeInvariants {
    pub rank: u64,
    pub signature: i64,
    pub b_plus: u64,
    pub b_minus: u64,
    pub parity: Parity,
}

impl IntersectionLattice {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `n` copies of one block.
    pub fn block(block: Block, n: u64) -> Self {
        let mut out = Self::empty();
        out.counts[block.index()] = n;
        out
    }

    pub fn from_blocks(blocks: impl IntoIterator<Item = (Block, u64)>) -> Self {
        blocks
            .into_iter()
            .fold(Self::empty(), |acc, (b, n)| acc.connected_sum(&Self::block(b, n)))
    }

    pub fn count(&self, block: Block) -> u64 {
        self.counts[block.index()]
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&n| n == 0)
    }

    pub fn rank(&self) -> u64 {
        Block::ALL.iter().map(|&b| b.rank() * self.count(b)).sum()
    }

    pub fn signature(&self) -> i64 {
        Block::ALL
            .iter()
            .map(|&b| b.signature() * self.count(b) as i64)
            .sum()
    }

    pub fn b_plus(&self) -> u64 {
        ((self.rank() as i64 + self.signature()) / 2) as u64
    }

    pub fn b_minus(&self) -> u64 {
        ((self.rank() as i64 - self.signature()) / 2) as u64
    }

    pub fn parity(&self) -> Parity {
        let odd = Block::ALL.iter().any(|&b| !b.is_even() && self.count(b) > 0);
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn invariants(&self) -> LatticeInvariants {
        LatticeInvariants {
            rank: self.rank(),
            signature: self.signature(),
            b_plus: self.b_plus(),
            b_minus: self.b_minus(),
            parity: self.parity(),
        }
    }

    /// Block sum, the intersection form of a connected sum.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let mut out = *self;
        for (c, o) in out.counts.iter_mut().zip(other.counts) {
            *c += o;
        }
        out
    }
}

/// Free-function form of [`IntersectionLattice::invariants`].
pub fn lattice_invariants(lattice: &IntersectionLattice) -> LatticeInvariants {
    lattice.invariants()
}

impl Add for IntersectionLattice {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.connected_sum(&rhs)
    }
}

/// Renders as `count code` terms joined by `+`, in the fixed block order.
/// The empty lattice renders as `0H`.
impl fmt::Display for IntersectionLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0H");
        }
        let mut first = true;
        for b in Block::ALL {
            let n = self.count(b);
            if n == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            write!(f, "{n}{}", b.code())?;
            first = false;
        }
        Ok(())
    }
}

/// Parses `term ('+' term)*` with `term := [count] code`. A missing count
/// means 1. Whitespace between tokens is ignored. Error positions are byte
/// offsets into the input.
impl FromStr for IntersectionLattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut out = Self::empty();
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let err = |position: usize, message: &str| Error::LatticeSyntax {
            position,
            message: message.to_string(),
        };

        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(err(pos, "empty lattice expression"));
        }
        loop {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let count = if pos == start {
                1
            } else {
                s[start..pos]
                    .parse::<u64>()
                    .map_err(|_| err(start, "count out of range"))?
            };
            skip_ws(&mut pos);
            let code_start = pos;
            let block = Block::ALL
                .into_iter()
                .filter(|b| s[pos..].starts_with(b.code()))
                .max_by_key(|b| b.code().len())
                .ok_or_else(|| {
                    if pos == bytes.len() {
                        err(pos, "expected a block code after count")
                    } else {
                        err(pos, "unknown block code, expected one of H, E8p, E8m, D1p, D1m")
                    }
                })?;
            pos = code_start + block.code().len();
            let slot = &mut out.counts[block.index()];
            *slot = slot
                .checked_add(count)
                .ok_or_else(|| err(start, "count out of range"))?;
            skip_ws(&mut pos);
            if pos == bytes.len() {
                return Ok(out);
            }
            if bytes[pos] != b'+' {
                return Err(err(
                    pos,
                    &format!(
                        "unexpected character {:?}",
                        s[pos..].chars().next().unwrap_or(' ')
                    ),
                ));
            }
            pos += 1;
            skip_ws(&mut pos);
            if pos == bytes.len() {
                return Err(err(pos, "expected a term after '+'"));
            }
        }
    }
}

/// The square of a characteristic element together with whether it is zero
/// because the structure comes from a spin structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpinCData {
    pub c_squared: i64,
    pub is_spin: bool,
}

impl SpinCData {
    pub fn spin() -> Self {
        SpinCData {
            c_squared: 0,
            is_spin: true,
        }
    }

    pub fn with_c_squared(c_squared: i64) -> Self {
        SpinCData {
            c_squared,
            is_spin: false,
        }
    }

    /// Checks `c² ≡ σ (mod 8)`, and that a spin structure sits on an even
    /// lattice with `c² = 0`.
    pub fn validate(&self, lattice: &IntersectionLattice) -> Result<()> {
        if self.is_spin {
            if !lattice.is_even() {
                return Err(Error::InvalidCharacteristic(format!(
                    "spin structure requested on the odd lattice {lattice}"
                )));
            }
            if self.c_squared != 0 {
                return Err(Error::InvalidCharacteristic(format!(
                    "spin structure requires c² = 0, got {}",
                    self.c_squared
                )));
            }
        }
        let sigma = lattice.signature();
        if (self.c_squared - sigma).rem_euclid(8) != 0 {
            return Err(Error::InvalidCharacteristic(format!(
                "c² = {} is not congruent to σ = {sigma} mod 8",
                self.c_squared
            )));
        }
        Ok(())
    }
}

/// `d = (c² - σ)/8` after validating the characteristic data.
pub fn dirac_index(lattice: &IntersectionLattice, s: &SpinCData) -> Result<i64> {
    s.validate(lattice)?;
    Ok((s.c_squared - lattice.signature()) / 8)
}
