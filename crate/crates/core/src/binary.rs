//! Binary words and their even-position statistics.
//!
//! Positions are 1-indexed throughout: the even-count of a word is the
//! number of ones sitting at positions 2, 4, 6, ...

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::binom::binomial_u64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BinaryWordError {
    #[error("invalid bit character {ch:?} at index {index}")]
    InvalidBit { ch: char, index: usize },
    #[error("word length {len} is odd; pair operations need an even length")]
    OddLength { len: usize },
    #[error("pair index {index} out of range for {pairs} pairs")]
    PairIndexOutOfRange { index: usize, pairs: usize },
}

/// An exact half-integer, stored as a count of half-units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    halves: i64,
}

impl HalfInt {
    pub fn from_halves(halves: i64) -> HalfInt {
        HalfInt { halves }
    }

    pub fn from_integer(n: i64) -> HalfInt {
        HalfInt { halves: 2 * n }
    }

    pub fn halves(self) -> i64 {
        self.halves
    }

    pub fn is_integer(self) -> bool {
        self.halves % 2 == 0
    }

    pub fn as_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.halves / 2)
    }

    pub fn abs(self) -> HalfInt {
        HalfInt {
            halves: self.halves.abs(),
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.halves % 2 == 0 {
            write!(f, "{}", self.halves / 2)
        } else {
            write!(f, "{}/2", self.halves)
        }
    }
}

/// A word over {0, 1}.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord {
    bits: Vec<bool>,
}

impl BinaryWord {
    pub fn parse(text: &str) -> Result<BinaryWord, BinaryWordError> {
        let bits = text
            .chars()
            .enumerate()
            .map(|(index, ch)| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(BinaryWordError::InvalidBit { ch, index }),
            })
            .collect::<Result<_, _>>()?;
        Ok(BinaryWord { bits })
    }

    pub fn from_bits(bits: Vec<bool>) -> BinaryWord {
        BinaryWord { bits }
    }

    /// Bits in position order; index 0 holds position 1.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn zeroes(&self) -> usize {
        self.len() - self.ones()
    }

    /// Membership in the class of words with 2m zeroes and 2n ones.
    pub fn in_class(&self, m: usize, n: usize) -> bool {
        self.zeroes() == 2 * m && self.ones() == 2 * n
    }

    /// Number of ones at even (1-indexed) positions.
    pub fn even_count(&self) -> u64 {
        self.bits
            .iter()
            .enumerate()
            .filter(|(i, b)| (i + 1) % 2 == 0 && **b)
            .count() as u64
    }

    /// Even-count minus half the total number of ones.
    pub fn shifted_even_count(&self) -> HalfInt {
        HalfInt::from_halves(2 * self.even_count() as i64 - self.ones() as i64)
    }

    pub fn absolute_even_count(&self) -> HalfInt {
        self.shifted_even_count().abs()
    }

    /// The consecutive disjoint pairs (positions (1,2), (3,4), ...).
    pub fn odd_indexed_pairs(&self) -> Result<Vec<(bool, bool)>, BinaryWordError> {
        if !self.len().is_multiple_of(2) {
            return Err(BinaryWordError::OddLength { len: self.len() });
        }
        Ok(self.bits.chunks_exact(2).map(|p| (p[0], p[1])).collect())
    }

    /// Swap the two values of pair `index` (0-indexed pairs).
    pub fn toggle(&self, index: usize) -> Result<BinaryWord, BinaryWordError> {
        if !self.len().is_multiple_of(2) {
            return Err(BinaryWordError::OddLength { len: self.len() });
        }
        let pairs = self.len() / 2;
        if index >= pairs {
            return Err(BinaryWordError::PairIndexOutOfRange { index, pairs });
        }
        let mut bits = self.bits.clone();
        bits.swap(2 * index, 2 * index + 1);
        Ok(BinaryWord { bits })
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            write!(f, "{}", if *b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = BinaryWordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BinaryWord::parse(s)
    }
}

/// All words with 2m zeroes and 2n ones, in deterministic order (the
/// positions of the ones advance like an odometer from the front).
pub fn class_words(m: usize, n: usize) -> ClassWords {
    let len = 2 * m + 2 * n;
    assert!(
        len <= 63,
        "class_words supports lengths up to 63, got {len}"
    );
    let remaining = binomial_u64(len as u64, (2 * n) as u64);
    let mask: u64 = if 2 * n == 0 { 0 } else { (1u64 << (2 * n)) - 1 };
    ClassWords {
        len,
        mask,
        remaining,
    }
}

pub struct ClassWords {
    len: usize,
    mask: u64,
    remaining: u64,
}

impl Iterator for ClassWords {
    type Item = BinaryWord;

    fn next(&mut self) -> Option<BinaryWord> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let mask = self.mask;
        // bit (len-1-i) of the mask marks a one at position i+1
        let bits = (0..self.len)
            .map(|i| mask >> (self.len - 1 - i) & 1 == 1)
            .collect();
        if self.remaining > 0 {
            // Gosper's hack: next mask with the same popcount
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            self.mask = (((r ^ mask) >> 2) / c) | r;
        }
        Some(BinaryWord { bits })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn even_count_examples() {
        let w = BinaryWord::parse("1010110000").unwrap();
        assert_eq!(w.even_count(), 1);
        assert_eq!(w.shifted_even_count(), HalfInt::from_integer(-1));
        assert_eq!(w.absolute_even_count(), HalfInt::from_integer(1));

        let w = BinaryWord::parse("11").unwrap();
        assert_eq!(w.even_count(), 1);
        assert_eq!(w.shifted_even_count(), HalfInt::from_integer(0));

        let w = BinaryWord::parse("0101").unwrap();
        assert_eq!(w.even_count(), 2);
        assert_eq!(w.shifted_even_count(), HalfInt::from_integer(1));
        assert_eq!(w.absolute_even_count(), HalfInt::from_integer(1));
    }

    #[test]
    fn shifted_even_count_may_be_a_strict_half_integer() {
        let w = BinaryWord::parse("100").unwrap();
        assert_eq!(w.shifted_even_count(), HalfInt::from_halves(-1));
        assert_eq!(w.shifted_even_count().to_string(), "-1/2");
        assert!(w.shifted_even_count().as_integer().is_none());
    }

    #[test]
    fn odd_indexed_pairs_examples() {
        let w = BinaryWord::parse("10011100").unwrap();
        assert_eq!(
            w.odd_indexed_pairs().unwrap(),
            vec![(true, false), (false, true), (true, true), (false, false)]
        );
        assert_eq!(
            BinaryWord::parse("11")
                .unwrap()
                .odd_indexed_pairs()
                .unwrap(),
            vec![(true, true)]
        );
        assert_eq!(
            BinaryWord::parse("101").unwrap().odd_indexed_pairs(),
            Err(BinaryWordError::OddLength { len: 3 })
        );
    }

    #[test]
    fn pair_decomposition_formula_holds_exhaustively() {
        // shifted even-count equals (# (0,1) pairs) - (# mixed pairs)/2 for
        // every even-length word up to length 10.
        for len in (0..=10usize).step_by(2) {
            for code in 0u32..1 << len {
                let bits: Vec<bool> = (0..len).map(|i| code >> i & 1 == 1).collect();
                let w = BinaryWord::from_bits(bits);
                let pairs = w.odd_indexed_pairs().unwrap();
                let zero_one = pairs.iter().filter(|p| **p == (false, true)).count() as i64;
                let mixed = pairs.iter().filter(|(a, b)| a != b).count() as i64;
                assert_eq!(w.shifted_even_count().halves(), 2 * zero_one - mixed);
            }
        }
    }

    #[test]
    fn class_words_enumerates_the_whole_class() {
        let words: Vec<BinaryWord> = class_words(1, 1).collect();
        assert_eq!(words.len(), 6);
        assert!(words.iter().all(|w| w.in_class(1, 1)));
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);

        let mut empty = class_words(0, 0);
        assert_eq!(empty.next(), Some(BinaryWord::from_bits(vec![])));
        assert_eq!(empty.next(), None);
    }

    #[test]
    fn class_distribution_of_absolute_even_count() {
        let mut zero = 0;
        let mut one = 0;
        for w in class_words(1, 1) {
            match w.absolute_even_count().as_integer().unwrap() {
                0 => zero += 1,
                1 => one += 1,
                other => panic!("unexpected value {other}"),
            }
        }
        assert_eq!((zero, one), (4, 2));
    }

    #[test]
    fn parse_rejects_bad_characters() {
        assert_eq!(
            BinaryWord::parse("102"),
            Err(BinaryWordError::InvalidBit { ch: '2', index: 2 })
        );
    }
}
