use crate::error::{Error, Result};

/// Default cap on the supersequence length for exhaustive enumeration.
pub const DEFAULT_MAX_N: usize = 24;

/// Hard ceiling: enumeration indexes strings with a `u64`, and every weight of a
/// string this short fits in a `u64`.
pub const HARD_MAX_N: usize = 63;

/// Cap on the length of strings that enumeration routines will walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    max_n: usize,
}

impl Budget {
    pub fn new(max_n: usize) -> Result<Self> {
        if max_n > HARD_MAX_N {
            return Err(Error::BudgetExceeded {
                what: "budget",
                value: max_n as u64,
                limit: HARD_MAX_N as u64,
            });
        }
        Ok(Budget { max_n })
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub(crate) fn check(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::BudgetExceeded {
                what,
                value: n as u64,
                limit: self.max_n as u64,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_n: DEFAULT_MAX_N }
    }
}
