use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Coordinate `i` lives in bit `i % 64` of word `i / 64`, so coordinate 0 is the
/// least significant bit of the first word. Bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = BitVector {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_tail();
        v
    }

    /// Builds a vector of length `len` from the low bits of `word`.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= WORD_BITS, "from_word needs len <= 64, got {len}");
        let mut v = BitVector::zeros(len);
        if len > 0 {
            v.words[0] = word;
            v.clear_tail();
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, ones: &[usize]) -> Self {
        let mut v = BitVector::zeros(len);
        for &i in ones {
            v.set(i, true);
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The vector as a single word, if it fits.
    pub fn to_word(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "index {i} out of range for length {}",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Standard inner product `sum u_i v_i` over GF(2).
    pub fn dot(&self, other: &BitVector) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::Dimension(format!(
                "dot of vectors of lengths {} and {}",
                self.len, other.len
            )));
        }
        Ok(self.dot_unchecked(other))
    }

    /// Inner product without the length check; lengths must agree.
    #[inline]
    pub fn dot_unchecked(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVector) -> BitVector {
        debug_assert_eq!(self.len, other.len);
        BitVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    /// Indices of the set coordinates in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    /// Lowest set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        out.words[..self.words.len()].copy_from_slice(&self.words);
        let shift = self.len % WORD_BITS;
        let base = self.len / WORD_BITS;
        for (i, &w) in other.words.iter().enumerate() {
            if shift == 0 {
                out.words[base + i] |= w;
            } else {
                out.words[base + i] |= w << shift;
                if base + i + 1 < out.words.len() {
                    out.words[base + i + 1] |= w >> (WORD_BITS - shift);
                }
            }
        }
        out
    }

    /// Coordinates `start..end` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> BitVector {
        assert!(start <= end && end <= self.len);
        let mut out = BitVector::zeros(end - start);
        for (j, i) in (start..end).enumerate() {
            if self.get(i) {
                out.set(j, true);
            }
        }
        out
    }

    /// The vector restricted to `coords`, in that order.
    pub fn select(&self, coords: &[usize]) -> BitVector {
        let mut out = BitVector::zeros(coords.len());
        for (j, &i) in coords.iter().enumerate() {
            if self.get(i) {
                out.set(j, true);
            }
        }
        out
    }

    /// Moves coordinate `i` to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> BitVector {
        assert_eq!(perm.len(), self.len);
        let mut out = BitVector::zeros(self.len);
        for i in self.iter_ones() {
            out.set(perm[i], true);
        }
        out
    }

    fn clear_tail(&mut self) {
        let r = self.len % WORD_BITS;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

impl Ord for BitVector {
    /// Shorter vectors first; equal lengths compare as unsigned integers with
    /// coordinate 0 as the least significant bit.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BitVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
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

impl FromStr for BitVector {
    type Err = Error;

    /// Parses a string of `0`/`1` characters; spaces are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::format(
                    None,
                    format!("unexpected character {other:?}"),
                )),
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(BitVector::from_bools(&bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dot_examples() {
        let z = BitVector::zeros(5);
        let v: BitVector = "10110".parse().unwrap();
        assert!(!z.dot(&v).unwrap());
        let a: BitVector = "111".parse().unwrap();
        let b: BitVector = "110".parse().unwrap();
        assert!(!a.dot(&b).unwrap());
        assert!(matches!(a.dot(&v), Err(Error::Dimension(_))));
    }

    #[test]
    fn weight_examples() {
        assert_eq!(BitVector::zeros(7).weight(), 0);
        assert_eq!(BitVector::ones(22).weight(), 22);
        assert_eq!(BitVector::ones(130).weight(), 130);
    }

    #[test]
    fn tail_bits_stay_clear() {
        let v = BitVector::from_word(5, u64::MAX);
        assert_eq!(v.words(), &[0b11111]);
        let w = BitVector::ones(70);
        assert_eq!(w.words()[1], 0b111111);
    }

    #[test]
    fn concat_across_word_boundary() {
        let a = BitVector::ones(60);
        let b: BitVector = "1011001".parse().unwrap();
        let c = a.concat(&b);
        assert_eq!(c.len(), 67);
        assert_eq!(c.slice(60, 67), b);
        assert_eq!(c.weight(), 64);
    }

    #[test]
    fn integer_order() {
        let a: BitVector = "1000".parse().unwrap(); // value 1
        let b: BitVector = "0100".parse().unwrap(); // value 2
        assert!(a < b);
    }

    proptest! {
        #[test]
        fn dot_is_parity_of_and(u in proptest::collection::vec(any::<bool>(), 0..150),
                                seed in any::<u64>()) {
            let n = u.len();
            let a = BitVector::from_bools(&u);
            let mut b = BitVector::zeros(n);
            let mut s = seed;
            for i in 0..n {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                b.set(i, (s >> 33) & 1 == 1);
            }
            prop_assert_eq!(a.dot(&b).unwrap(), a.and(&b).weight() % 2 == 1);
            prop_assert!(a.weight() <= n);
        }
    }
}
