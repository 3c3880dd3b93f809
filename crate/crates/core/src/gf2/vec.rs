use std::fmt;

use serde::{Deserialize, Serialize};

use super::bits;
use crate::error::{Error, Result};

/// Packed binary vector. Bits past `len` in the last word are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinVec {
    len: usize,
    words: Vec<u64>,
}

impl BinVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; bits::words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; bits::words_for(len)],
        };
        v.mask_tail();
        v
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut words = Vec::new();
        let mut len = 0;
        for b in bits {
            if len % 64 == 0 {
                words.push(0);
            }
            if b {
                words[len / 64] |= 1 << (len % 64);
            }
            len += 1;
        }
        Self { len, words }
    }

    /// Builds a vector from raw words; bits past `len` are cleared.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(bits::words_for(len), 0);
        let mut v = Self { len, words };
        v.mask_tail();
        v
    }

    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in support {
            v.flip(i);
        }
        v
    }

    fn mask_tail(&mut self) {
        if let Some(last) = self.words.last_mut() {
            *last &= bits::tail_mask(self.len);
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        bits::get(&self.words, i)
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        bits::set(&mut self.words, i, value);
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn weight(&self) -> usize {
        bits::popcount(&self.words)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn dot(&self, other: &BinVec) -> bool {
        assert_eq!(self.len, other.len, "dot product of unequal lengths");
        bits::dot(&self.words, &other.words)
    }

    pub fn xor_assign(&mut self, other: &BinVec) {
        assert_eq!(self.len, other.len, "xor of unequal lengths");
        bits::xor_into(&mut self.words, &other.words);
    }

    pub fn xor(&self, other: &BinVec) -> BinVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Indices of the set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        bits::ones(&self.words).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn concat(&self, other: &BinVec) -> BinVec {
        BinVec::from_bits(self.iter().chain(other.iter()))
    }

    pub fn slice(&self, start: usize, end: usize) -> BinVec {
        assert!(start <= end && end <= self.len);
        BinVec::from_bits((start..end).map(|i| self.get(i)))
    }

    /// Bitwise OR weight of two equal-length halves: the qubit weight of a
    /// Pauli written as `(x | z)`.
    pub fn or_weight(x: &BinVec, z: &BinVec) -> usize {
        assert_eq!(x.len, z.len);
        x.words
            .iter()
            .zip(&z.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn to_string01(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }

    pub fn parse01(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                c if c.is_whitespace() => {}
                c => return Err(Error::Invalid(format!("unexpected character {c:?} in 0/1 string"))),
            }
        }
        Ok(Self::from_bits(bits))
    }
}

impl fmt::Debug for BinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinVec({})", self.to_string01())
    }
}

impl fmt::Display for BinVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string01())
    }
}

impl Serialize for BinVec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string01())
    }
}

impl<'de> Deserialize<'de> for BinVec {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        BinVec::parse01(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_bits_stay_clear() {
        let v = BinVec::ones(70);
        assert_eq!(v.weight(), 70);
        assert_eq!(v.words()[1], (1 << 6) - 1);
        let w = BinVec::from_words(3, vec![u64::MAX]);
        assert_eq!(w.weight(), 3);
    }

    #[test]
    fn parse_and_print() {
        let v = BinVec::parse01("1011 0").unwrap();
        assert_eq!(v.len(), 5);
        assert_eq!(v.to_string01(), "10110");
        assert_eq!(v.support(), vec![0, 2, 3]);
        assert!(BinVec::parse01("10x").is_err());
    }

    #[test]
    fn or_weight_counts_qubits() {
        let x = BinVec::parse01("1100").unwrap();
        let z = BinVec::parse01("0110").unwrap();
        assert_eq!(BinVec::or_weight(&x, &z), 3);
    }
}
