use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite binary string. Symbols are stored as `0`/`1` bytes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BitString(Vec<u8>);

impl BitString {
    pub fn empty() -> Self {
        BitString(Vec::new())
    }

    /// Builds a string from symbols, rejecting anything outside {0, 1}.
    pub fn from_symbols(bits: impl IntoIterator<Item = u8>) -> Result<Self> {
        let bits: Vec<u8> = bits.into_iter().collect();
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::InvalidSymbol(char::from_digit(b as u32 % 36, 36).unwrap_or('?')));
        }
        Ok(BitString(bits))
    }

    /// `symbol` repeated `len` times.
    pub fn constant(symbol: u8, len: usize) -> Self {
        assert!(symbol <= 1, "symbol must be 0 or 1");
        BitString(vec![symbol; len])
    }

    /// Alternating string of length `len` starting with `first`.
    pub fn alternating(first: u8, len: usize) -> Self {
        assert!(first <= 1, "symbol must be 0 or 1");
        BitString((0..len).map(|i| first ^ (i as u8 & 1)).collect())
    }

    /// The `len`-bit string whose big-endian value is `value`; position 0 is the
    /// most significant bit, so increasing `value` walks strings in lexicographic order.
    pub fn from_index(value: u64, len: usize) -> Self {
        debug_assert!(len <= 64);
        BitString((0..len).map(|i| ((value >> (len - 1 - i)) & 1) as u8).collect())
    }

    /// Inverse of [`BitString::from_index`].
    pub fn to_index(&self) -> u64 {
        debug_assert!(self.len() <= 64);
        self.0.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64)
    }

    /// Every string of length `len` in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = BitString> {
        assert!(len < 64, "cannot enumerate strings of length {len}");
        (0..1u64 << len).map(move |v| BitString::from_index(v, len))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Option<u8> {
        self.0.get(i).copied()
    }

    pub fn hamming_weight(&self) -> usize {
        self.0.iter().filter(|&&b| b == 1).count()
    }

    /// Bitwise complement.
    pub fn complement(&self) -> BitString {
        BitString(self.0.iter().map(|&b| b ^ 1).collect())
    }

    /// True for the empty string and for 0^m / 1^m.
    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// True when no two adjacent symbols are equal.
    pub fn is_alternating(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    /// Greedy subsequence test.
    pub fn contains_subsequence(&self, x: &BitString) -> bool {
        let mut it = self.0.iter();
        x.0.iter().all(|s| it.any(|b| b == s))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString(\"{self}\")")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BitString)
    }
}

impl TryFrom<String> for BitString {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BitString> for String {
    fn from(b: BitString) -> String {
        b.to_string()
    }
}

/// Shorthand for tests and examples; panics on invalid input.
pub fn bits(s: &str) -> BitString {
    s.parse().unwrap_or_else(|e| panic!("invalid bit string {s:?}: {e}"))
}
