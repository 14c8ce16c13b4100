//! Run-length encodings `(a1; k1, ..., kl)` of binary strings.

use std::fmt;
use std::str::FromStr;

use crate::bitstring::BitString;
use crate::error::{Error, Result};

/// Run-length encoding: a leading symbol and the lengths of the alternating runs.
///
/// The empty string has zero blocks; its leading symbol is meaningless and kept as 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rle {
    leading: u8,
    blocks: Vec<usize>,
}

impl Rle {
    /// Validates that `leading` is a bit and every block is nonempty.
    pub fn new(leading: u8, blocks: Vec<usize>) -> Result<Self> {
        if leading > 1 {
            return Err(Error::InvalidRle(format!("leading symbol {leading} is not a bit")));
        }
        if let Some(pos) = blocks.iter().position(|&k| k == 0) {
            return Err(Error::InvalidRle(format!("block {} has zero length", pos + 1)));
        }
        let leading = if blocks.is_empty() { 0 } else { leading };
        Ok(Rle { leading, blocks })
    }

    /// Builds an encoding from explicit `(symbol, length)` runs, which must alternate.
    pub fn from_runs(runs: &[(u8, usize)]) -> Result<Self> {
        if let Some(w) = runs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidRle(format!(
                "adjacent runs share symbol {}",
                w[0].0
            )));
        }
        let leading = runs.first().map_or(0, |r| r.0);
        Rle::new(leading, runs.iter().map(|r| r.1).collect())
    }

    pub fn encode(s: &BitString) -> Self {
        let mut blocks = Vec::new();
        let mut prev = None;
        for &b in s.bits() {
            if prev == Some(b) {
                *blocks.last_mut().unwrap() += 1;
            } else {
                blocks.push(1);
                prev = Some(b);
            }
        }
        Rle {
            leading: s.get(0).unwrap_or(0),
            blocks,
        }
    }

    pub fn decode(&self) -> BitString {
        let bits = self
            .runs()
            .flat_map(|(sym, k)| std::iter::repeat(sym).take(k))
            .collect::<Vec<u8>>();
        BitString::from_symbols(bits).expect("runs carry valid symbols")
    }

    pub fn leading(&self) -> u8 {
        self.leading
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Number of runs, written ℓ elsewhere.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Length of the decoded string.
    pub fn total_len(&self) -> usize {
        self.blocks.iter().sum()
    }

    /// Symbol of block `i` (0-based).
    pub fn symbol(&self, i: usize) -> u8 {
        self.leading ^ (i as u8 & 1)
    }

    /// `(symbol, length)` for every run, in order.
    pub fn runs(&self) -> impl Iterator<Item = (u8, usize)> + '_ {
        self.blocks.iter().enumerate().map(|(i, &k)| (self.symbol(i), k))
    }

    /// Encoding with the first block removed.
    pub fn without_first_block(&self) -> Rle {
        Rle {
            leading: if self.blocks.len() > 1 { self.leading ^ 1 } else { 0 },
            blocks: self.blocks.iter().skip(1).copied().collect(),
        }
    }
}

/// `rle_encode`.
pub fn rle_encode(s: &BitString) -> Rle {
    Rle::encode(s)
}

/// `rle_decode`.
pub fn rle_decode(r: &Rle) -> BitString {
    r.decode()
}

impl fmt::Display for Rle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("()");
        }
        write!(f, "({}; ", self.leading)?;
        for (i, k) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Rle {
    type Err = Error;

    /// Parses `(a1; k1,k2,...)`; whitespace is ignored and `()` is the empty encoding.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidRle(format!("expected parentheses in {s:?}")))?;
        if inner.is_empty() {
            return Ok(Rle { leading: 0, blocks: Vec::new() });
        }
        let (lead, rest) = inner
            .split_once(';')
            .ok_or_else(|| Error::InvalidRle(format!("missing ';' in {s:?}")))?;
        let leading = match lead {
            "0" => 0,
            "1" => 1,
            other => return Err(Error::InvalidRle(format!("leading symbol {other:?} is not a bit"))),
        };
        let blocks = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|k| {
                    k.parse::<usize>()
                        .map_err(|_| Error::InvalidRle(format!("block length {k:?} is not a number")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Rle::new(leading, blocks)
    }
}
