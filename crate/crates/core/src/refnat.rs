//! Conventional arbitrary-precision naturals.
//!
//! `RefNat` implements only the six primitives (plus fast digit conversion);
//! every derived operation runs through the generic algorithms. The native
//! `oracle_*` functions bypass them and serve as ground truth in tests.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{NatError, Result};
use crate::nat::{Digit, Nat};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RefNat(pub BigUint);

impl RefNat {
    pub fn magnitude(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn oracle_add(&self, y: &Self) -> Self {
        RefNat(&self.0 + &y.0)
    }

    pub fn oracle_sub(&self, y: &Self) -> Option<Self> {
        (self.0 >= y.0).then(|| RefNat(&self.0 - &y.0))
    }

    pub fn oracle_mul(&self, y: &Self) -> Self {
        RefNat(&self.0 * &y.0)
    }

    pub fn oracle_cmp(&self, y: &Self) -> Ordering {
        self.0.cmp(&y.0)
    }

    pub fn oracle_div_rem(&self, y: &Self) -> Option<(Self, Self)> {
        if y.0.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&y.0);
        Some((RefNat(q), RefNat(r)))
    }

    pub fn oracle_pow(&self, y: u32) -> Self {
        RefNat(Pow::pow(&self.0, y))
    }

    pub fn oracle_exp2(k: u64) -> Self {
        RefNat(BigUint::one() << k)
    }

    pub fn oracle_and(&self, y: &Self) -> Self {
        RefNat(&self.0 & &y.0)
    }

    pub fn oracle_or(&self, y: &Self) -> Self {
        RefNat(&self.0 | &y.0)
    }

    pub fn oracle_xor(&self, y: &Self) -> Self {
        RefNat(&self.0 ^ &y.0)
    }

    /// Digit count in bijective base 2: `floor(log2(n+1))`.
    pub fn oracle_bitsize(&self) -> u64 {
        (&self.0 + 1u32).bits() - 1
    }
}

impl From<u64> for RefNat {
    fn from(v: u64) -> Self {
        RefNat(BigUint::from(v))
    }
}

impl From<BigUint> for RefNat {
    fn from(v: BigUint) -> Self {
        RefNat(v)
    }
}

impl PartialOrd for RefNat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RefNat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for RefNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for RefNat {
    type Err = NatError;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(pos) = s.bytes().position(|b| !b.is_ascii_digit()) {
            return Err(NatError::Parse {
                pos,
                msg: "expected a decimal digit".into(),
            });
        }
        if s.is_empty() {
            return Err(NatError::Parse {
                pos: 0,
                msg: "empty decimal".into(),
            });
        }
        BigUint::from_str(s)
            .map(RefNat)
            .map_err(|e| NatError::Parse {
                pos: 0,
                msg: e.to_string(),
            })
    }
}

impl Nat for RefNat {
    fn e() -> Self {
        RefNat(BigUint::zero())
    }

    fn o(self) -> Self {
        RefNat((self.0 << 1u32) + 1u32)
    }

    fn i(self) -> Self {
        RefNat((self.0 << 1u32) + 2u32)
    }

    fn o_inv(self) -> Result<Self> {
        if self.0.is_odd() {
            Ok(RefNat(self.0 >> 1u32))
        } else {
            Err(NatError::Destructor {
                op: "o_inv",
                expected: "o",
            })
        }
    }

    fn i_inv(self) -> Result<Self> {
        if self.0.is_even() && !self.0.is_zero() {
            Ok(RefNat((self.0 - 2u32) >> 1u32))
        } else {
            Err(NatError::Destructor {
                op: "i_inv",
                expected: "i",
            })
        }
    }

    fn is_o(&self) -> bool {
        self.0.is_odd()
    }

    fn is_e(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    // The digits of n are the binary digits of n+1 below its leading one,
    // with 0 read as o and 1 as i.
    fn digits(&self) -> Vec<Digit> {
        let v = &self.0 + 1u32;
        let top = v.bits() - 1;
        (0..top)
            .rev()
            .map(|k| if v.bit(k) { Digit::I } else { Digit::O })
            .collect()
    }

    fn from_digits(digits: &[Digit]) -> Self {
        let mut bits = Vec::with_capacity(digits.len() + 1);
        bits.push(1u8);
        bits.extend(digits.iter().map(|d| u8::from(*d == Digit::I)));
        let v = BigUint::from_radix_be(&bits, 2).expect("binary digits");
        RefNat(v - 1u32)
    }
}
