use std::fmt;

use serde::Serialize;

use crate::bitstring::BitString;
use crate::error::{Error, Result};

/// A strictly increasing set of 0-based positions inside a string of known length.
///
/// Projection masks (kept positions), deletion masks (removed positions) and
/// initial masks are all values of this type. Display is 1-based: `{1, 2, 5}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Mask(Vec<usize>);

impl Mask {
    pub fn new(indices: Vec<usize>, target_len: usize) -> Result<Self> {
        if let Some(w) = indices.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidMask(format!(
                "indices not strictly increasing at {} >= {}",
                w[0] + 1,
                w[1] + 1
            )));
        }
        if let Some(&last) = indices.last() {
            if last >= target_len {
                return Err(Error::InvalidMask(format!(
                    "index {} outside a string of length {target_len}",
                    last + 1
                )));
            }
        }
        Ok(Mask(indices))
    }

    /// Unchecked constructor for internal enumerators that build increasing sequences.
    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Mask(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// `y` filtered by this mask.
    pub fn apply(&self, y: &BitString) -> BitString {
        BitString::from_symbols(self.0.iter().map(|&i| y.bits()[i])).expect("bits of y")
    }

    /// Complement within `[0, n)`: turns a projection mask into a deletion mask and back.
    pub fn complement(&self, n: usize) -> Mask {
        let mut kept = self.0.iter().peekable();
        let rest = (0..n)
            .filter(|i| {
                if kept.peek() == Some(&i) {
                    kept.next();
                    false
                } else {
                    true
                }
            })
            .collect();
        Mask(rest)
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, idx) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", idx + 1)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstring::bits;

    #[test]
    fn validation() {
        assert!(Mask::new(vec![0, 2, 4], 5).is_ok());
        assert!(Mask::new(vec![0, 0], 5).is_err());
        assert!(Mask::new(vec![3, 1], 5).is_err());
        assert!(Mask::new(vec![5], 5).is_err());
        assert!(Mask::new(vec![], 0).is_ok());
    }

    #[test]
    fn projection_and_deletion_are_complements() {
        let y = bits("11000");
        let pi = Mask::new(vec![0, 1, 4], 5).unwrap();
        assert_eq!(pi.apply(&y), bits("110"));
        let delta = pi.complement(5);
        assert_eq!(delta.indices(), &[2, 3]);
        assert_eq!(delta.len(), y.len() - pi.len());
        assert_eq!(delta.complement(5), pi);
        assert_eq!(pi.to_string(), "{1, 2, 5}");
    }
}
