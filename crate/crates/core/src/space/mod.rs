//! The space Υ(n, x) of length-`n` supersequences of `x`: its size, its Hamming
//! clusters, maximal initials and singletons.

mod clusters;
mod initials;
mod singletons;

pub use clusters::{cluster_size_closed, cluster_size_recursive, cluster_size_simple};
pub use initials::{initial_mask, is_maximal_initial, maximal_initials_cluster, maximal_initials_total};
pub use singletons::{
    enumerate_singletons, run_slots, singleton_count, singleton_count_by_cluster, singletons_by_cluster, RunSlots,
};

use crate::bitstring::BitString;
use crate::budget::Budget;
use crate::count::{binomial, sum, ExactCount};
use crate::embed::count_embeddings_dp;
use crate::error::{range_err, Result};

/// Number of extra ones a supersequence carries relative to `x`, `0 ≤ c ≤ n − m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClusterIndex {
    c: usize,
    n: usize,
    m: usize,
}

impl ClusterIndex {
    pub fn new(c: usize, n: usize, m: usize) -> Result<Self> {
        if m > n {
            return range_err(format!("m = {m} exceeds n = {n}"));
        }
        if c > n - m {
            return range_err(format!("cluster c = {c} outside [0, {}]", n - m));
        }
        Ok(ClusterIndex { c, n, m })
    }

    pub fn value(&self) -> usize {
        self.c
    }

    /// Inserted ones.
    pub fn extra_ones(&self) -> usize {
        self.c
    }

    /// Inserted zeros, n − m − c.
    pub fn extra_zeros(&self) -> usize {
        self.n - self.m - self.c
    }
}

pub(crate) fn check_lengths(n: usize, m: usize, h: usize) -> Result<()> {
    if m > n {
        return range_err(format!("m = {m} exceeds n = {n}"));
    }
    if h > m {
        return range_err(format!("Hamming weight {h} exceeds m = {m}"));
    }
    Ok(())
}

/// |Υ(n, x)| for any `x` of length `m`: Σ_{r=m}^{n} C(n, r).
pub fn upsilon_size<T: ExactCount>(n: usize, m: usize) -> Result<T> {
    check_lengths(n, m, 0)?;
    sum((m..=n).map(|r| binomial(n as u64, r as i64)))
}

/// Lazily walks `{0,1}^n` in lexicographic order and yields each supersequence of
/// `x` with its weight ω_x(y).
///
/// Weights are exact `u64`s: the budget never exceeds 63, and no weight of a string
/// that short reaches 2^64.
pub struct Supersequences {
    x: BitString,
    n: usize,
    next: u64,
    end: u64,
}

impl Iterator for Supersequences {
    type Item = (BitString, u64);

    fn next(&mut self) -> Option<Self::Item> {
        while self.next < self.end {
            let y = BitString::from_index(self.next, self.n);
            self.next += 1;
            let w: u64 = count_embeddings_dp(&y, &self.x).expect("weights below 2^64 within budget");
            if w > 0 {
                return Some((y, w));
            }
        }
        None
    }
}

/// Every `y` of length `n` containing `x`, paired with its weight.
pub fn enumerate_supersequences(n: usize, x: &BitString, budget: &Budget) -> Result<Supersequences> {
    budget.check("n", n)?;
    let end = if x.len() > n { 0 } else { 1u64 << n };
    Ok(Supersequences {
        x: x.clone(),
        n,
        next: 0,
        end,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstring::bits;
    use crate::error::Error;

    #[test]
    fn upsilon_examples() {
        assert_eq!(upsilon_size::<u64>(5, 3).unwrap(), 16);
        for n in 0..20 {
            assert_eq!(upsilon_size::<u64>(n, n).unwrap(), 1);
            assert_eq!(upsilon_size::<u64>(n, 0).unwrap(), 1 << n);
        }
        assert!(upsilon_size::<u64>(3, 5).is_err());
    }

    #[test]
    fn supersequence_stream() {
        let b = Budget::default();
        let all: Vec<(BitString, u64)> = enumerate_supersequences(5, &bits("110"), &b).unwrap().collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all.iter().map(|e| e.1).sum::<u64>(), 40);
        assert!(all.contains(&(bits("11100"), 6)));
        assert!(all.contains(&(bits("11010"), 4)));
        assert!(all.windows(2).all(|w| w[0].0 < w[1].0));

        let other: Vec<_> = enumerate_supersequences(5, &bits("101"), &b).unwrap().collect();
        assert!(other.contains(&(bits("10011"), 4)));

        let tiny: Vec<_> = enumerate_supersequences(3, &bits("110"), &b).unwrap().collect();
        assert_eq!(tiny, vec![(bits("110"), 1)]);

        assert_eq!(enumerate_supersequences(2, &bits("110"), &b).unwrap().count(), 0);
        assert!(matches!(
            enumerate_supersequences(30, &bits("1"), &b),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn cluster_index_range() {
        let c = ClusterIndex::new(1, 5, 3).unwrap();
        assert_eq!((c.extra_ones(), c.extra_zeros()), (1, 1));
        assert!(ClusterIndex::new(3, 5, 3).is_err());
        assert!(ClusterIndex::new(0, 2, 3).is_err());
    }
}
