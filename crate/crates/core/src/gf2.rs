//! Bit vectors over GF(2) and incremental Gaussian elimination.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A fixed-length vector over GF(2). Bit `i` is coordinate `i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters; returns `None` on any other
    /// character.
    pub fn parse(s: &str) -> Option<Self> {
        let mut v = BitVector::zeros(s.len());
        for (i, c) in s.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => v.set(i),
                _ => return None,
            }
        }
        Some(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn xor_assign(&mut self, other: &BitVector) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    /// Index of the highest set coordinate.
    fn leading(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl From<&BitVector> for String {
    fn from(v: &BitVector) -> String {
        alloc::format!("{v}")
    }
}

/// Echelon basis keyed by leading coordinate.
pub(crate) struct EchelonBasis {
    rows: Vec<BitVector>,
}

impl EchelonBasis {
    pub(crate) fn new() -> Self {
        EchelonBasis { rows: Vec::new() }
    }

    /// Adds `v` to the basis if it is linearly independent of the rows
    /// inserted so far. Returns whether it was added.
    pub(crate) fn insert(&mut self, v: &BitVector) -> bool {
        let mut r = v.clone();
        loop {
            let Some(lead) = r.leading() else {
                return false;
            };
            match self.rows.iter().find(|row| row.leading() == Some(lead)) {
                Some(row) => r.xor_assign(row),
                None => {
                    self.rows.push(r);
                    return true;
                }
            }
        }
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::BitVector;
    use serde::de::{self, Visitor};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    impl Serialize for BitVector {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            s.collect_str(self)
        }
    }

    struct BitsVisitor;

    impl Visitor<'_> for BitsVisitor {
        type Value = BitVector;

        fn expecting(&self, f: &mut core::fmt::Formatter) -> core::fmt::Result {
            f.write_str("a string of 0 and 1 characters")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<BitVector, E> {
            BitVector::parse(v).ok_or_else(|| E::invalid_value(de::Unexpected::Str(v), &self))
        }
    }

    impl<'de> Deserialize<'de> for BitVector {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<BitVector, D::Error> {
            d.deserialize_str(BitsVisitor)
        }
    }
}
