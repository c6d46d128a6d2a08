//! Arithmetic in GF(2^m) for 1 <= m <= 8.
//!
//! Elements are stored as polynomial bitmasks over GF(2), reduced by a fixed
//! low-weight irreducible modulus per degree. Multiplication, inversion and
//! square roots go through lazily built lookup tables, so the hot paths in the
//! search kernels are single table loads.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported extension degree.
pub const MAX_DEGREE: u8 = 8;

/// Fixed irreducible moduli, indexed by `m`. GF(2) needs no reduction.
const MODULI: [u16; 9] = [0, 0x2, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11B];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("scalars live in different fields ({0} vs {1})")]
    FieldMismatch(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported extension degree {0} (expected 1..=8)")]
    UnsupportedDegree(u32),
    #[error("scalar {bits:#x} out of range for {field}")]
    OutOfRange { bits: u32, field: Field },
    #[error("malformed field `{0}` (expected 2^m)")]
    BadFieldText(String),
    #[error("malformed scalar `{0}` (expected 0x-prefixed hex)")]
    BadScalarText(String),
}

/// The field GF(2^m). The modulus is implied by `m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Field {
    m: u8,
}

struct Tables {
    mul: Vec<u8>,
    inv: Vec<u8>,
    sqrt: Vec<u8>,
}

fn tables(m: u8) -> &'static Tables {
    static CACHE: [OnceLock<Tables>; 9] = [const { OnceLock::new() }; 9];
    CACHE[m as usize].get_or_init(|| build_tables(m))
}

/// Carry-less product reduced by the modulus for degree `m`.
fn slow_mul(m: u8, a: u8, b: u8) -> u8 {
    let modulus = MODULI[m as usize];
    let mut acc: u16 = 0;
    let mut x = a as u16;
    let mut y = b as u16;
    while y != 0 {
        if y & 1 == 1 {
            acc ^= x;
        }
        y >>= 1;
        x <<= 1;
        if x & (1 << m) != 0 {
            x ^= modulus;
        }
    }
    acc as u8
}

fn build_tables(m: u8) -> Tables {
    let q = 1usize << m;
    let mut mul = vec![0u8; q * q];
    for a in 0..q {
        for b in 0..q {
            mul[a * q + b] = slow_mul(m, a as u8, b as u8);
        }
    }
    let mut inv = vec![0u8; q];
    for a in 1..q {
        inv[a] = (1..q).find(|&b| mul[a * q + b] == 1).unwrap() as u8;
    }
    let mut sqrt = vec![0u8; q];
    for a in 0..q {
        sqrt[mul[a * q + a] as usize] = a as u8;
    }
    Tables { mul, inv, sqrt }
}

impl Field {
    pub fn new(m: u32) -> Result<Field, FieldError> {
        if (1..=MAX_DEGREE as u32).contains(&m) {
            Ok(Field { m: m as u8 })
        } else {
            Err(FieldError::UnsupportedDegree(m))
        }
    }

    /// GF(2).
    pub fn gf2() -> Field {
        Field { m: 1 }
    }

    pub fn degree(self) -> u32 {
        self.m as u32
    }

    /// Field order q = 2^m.
    pub fn order(self) -> usize {
        1usize << self.m
    }

    /// The fixed reduction polynomial as an (m+1)-bit mask.
    pub fn modulus(self) -> u16 {
        MODULI[self.m as usize]
    }

    pub fn scalar(self, bits: u32) -> Result<Scalar, FieldError> {
        if (bits as usize) < self.order() {
            Ok(Scalar { bits: bits as u8, field: self })
        } else {
            Err(FieldError::OutOfRange { bits, field: self })
        }
    }

    pub fn zero(self) -> Scalar {
        Scalar { bits: 0, field: self }
    }

    pub fn one(self) -> Scalar {
        Scalar { bits: 1, field: self }
    }

    /// All elements in increasing bitmask order.
    pub fn elements(self) -> impl Iterator<Item = u8> {
        (0..self.order()).map(|b| b as u8)
    }

    pub fn contains(self, raw: u8) -> bool {
        (raw as usize) < self.order()
    }

    // Raw arithmetic on bitmasks. Callers guarantee the operands are in range.

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        a ^ b
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        if self.m == 1 {
            return a & b;
        }
        tables(self.m).mul[((a as usize) << self.m) | b as usize]
    }

    #[inline]
    pub fn inv(self, a: u8) -> Option<u8> {
        if a == 0 {
            None
        } else if self.m == 1 {
            Some(1)
        } else {
            Some(tables(self.m).inv[a as usize])
        }
    }

    #[inline]
    pub fn sqrt(self, a: u8) -> u8 {
        if self.m == 1 {
            a
        } else {
            tables(self.m).sqrt[a as usize]
        }
    }

    /// `a^k` with the convention `0^0 = 1`.
    pub fn pow(self, a: u8, mut k: u64) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "2^{}", self.m)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})", self.m)
    }
}

impl FromStr for Field {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FieldError::BadFieldText(s.to_string());
        let exp = s.trim().strip_prefix("2^").ok_or_else(bad)?;
        let m: u32 = exp.parse().map_err(|_| bad())?;
        Field::new(m)
    }
}

impl TryFrom<String> for Field {
    type Error = FieldError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Field> for String {
    fn from(f: Field) -> String {
        f.to_string()
    }
}

/// Formats a raw field element as lowercase `0x` hex.
pub fn hex(bits: u8) -> String {
    format!("{bits:#x}")
}

/// Parses `0x`-prefixed hex into a raw element of `field`.
pub fn parse_hex(field: Field, text: &str) -> Result<u8, FieldError> {
    let digits = text.strip_prefix("0x").ok_or_else(|| FieldError::BadScalarText(text.to_string()))?;
    let bits = u32::from_str_radix(digits, 16).map_err(|_| FieldError::BadScalarText(text.to_string()))?;
    Ok(field.scalar(bits)?.bits)
}

/// A field element tagged with its field; arithmetic checks that both operands agree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    bits: u8,
    field: Field,
}

impl Scalar {
    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn field(self) -> Field {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    fn same_field(self, other: Scalar) -> Result<Field, FieldError> {
        if self.field == other.field {
            Ok(self.field)
        } else {
            Err(FieldError::FieldMismatch(self.field, other.field))
        }
    }

    pub fn checked_add(self, other: Scalar) -> Result<Scalar, FieldError> {
        let f = self.same_field(other)?;
        Ok(Scalar { bits: f.add(self.bits, other.bits), field: f })
    }

    pub fn checked_mul(self, other: Scalar) -> Result<Scalar, FieldError> {
        let f = self.same_field(other)?;
        Ok(Scalar { bits: f.mul(self.bits, other.bits), field: f })
    }

    /// Multiplicative inverse, `a^(q-2)`.
    pub fn inv(self) -> Result<Scalar, FieldError> {
        let bits = self.field.inv(self.bits).ok_or(FieldError::DivisionByZero)?;
        Ok(Scalar { bits, field: self.field })
    }

    /// The unique square root, `a^(2^(m-1))`.
    pub fn sqrt(self) -> Scalar {
        Scalar { bits: self.field.sqrt(self.bits), field: self.field }
    }

    pub fn pow(self, k: u64) -> Scalar {
        Scalar { bits: self.field.pow(self.bits, k), field: self.field }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.bits)
    }
}
