//! Brute-force reference implementations.
//!
//! Everything here works from the definitions: embeddings are found by walking
//! index sets one by one, and supersequence spaces by scanning all of `{0,1}^n`.
//! Only the value types are shared with the optimized modules; none of their
//! algorithms are called from here.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitstring::BitString;
use crate::entropy::{EntropyReport, WeightDistribution};
use crate::error::{Error, Result};
use crate::mask::Mask;

/// Limits for oracle computations. Inputs over a limit are refused, never truncated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest `n` for weight distributions and counts.
    pub max_n: usize,
    /// Largest `n` for listings that carry every mask of every string.
    pub max_listing_n: usize,
    /// Largest C(|y|, |x|) for a single embedding count.
    pub max_subsets: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 24,
            max_listing_n: 14,
            max_subsets: 1 << 26,
        }
    }
}

impl OracleBudget {
    fn check_n(&self, n: usize, limit: usize, what: &'static str) -> Result<()> {
        if n > limit || n >= 64 {
            return Err(Error::BudgetExceeded {
                what,
                value: n as u64,
                limit: limit.min(63) as u64,
            });
        }
        Ok(())
    }

    fn check_subsets(&self, n: usize, m: usize) -> Result<()> {
        let subsets = naive_choose(n, m);
        if subsets > self.max_subsets as u128 {
            return Err(Error::BudgetExceeded {
                what: "subsets",
                value: subsets.min(u64::MAX as u128) as u64,
                limit: self.max_subsets,
            });
        }
        Ok(())
    }
}

// Pascal's triangle row, saturating. Only used for budget guards.
fn naive_choose(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1].saturating_add(row[i]);
        }
        row = next;
    }
    row[k]
}

/// Depth-first walk over index sets `pi` with `y_pi = x`, in lexicographic order.
/// `visit` returns `false` to stop the walk.
fn walk_masks(y: &[u8], x: &[u8], mut visit: impl FnMut(&[usize]) -> bool) {
    // Remaining ones and zeros in each suffix, used to abandon hopeless branches.
    let suffix = |s: &[u8]| {
        let mut acc = vec![(0usize, 0usize); s.len() + 1];
        for i in (0..s.len()).rev() {
            let (z, o) = acc[i + 1];
            acc[i] = if s[i] == 0 { (z + 1, o) } else { (z, o + 1) };
        }
        acc
    };
    let ys = suffix(y);
    let xs = suffix(x);

    fn go(
        y: &[u8],
        x: &[u8],
        ys: &[(usize, usize)],
        xs: &[(usize, usize)],
        start: usize,
        path: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let k = path.len();
        if k == x.len() {
            return visit(path);
        }
        if ys[start].0 < xs[k].0 || ys[start].1 < xs[k].1 {
            return true;
        }
        for i in start..y.len() {
            if y.len() - i < x.len() - k {
                break;
            }
            if y[i] == x[k] {
                path.push(i);
                let keep_going = go(y, x, ys, xs, i + 1, path, visit);
                path.pop();
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }

    let mut path = Vec::with_capacity(x.len());
    go(y, x, &ys, &xs, 0, &mut path, &mut visit);
}

fn count_capped(y: &BitString, x: &BitString, cap: Option<u64>) -> u64 {
    let mut count = 0u64;
    walk_masks(y.bits(), x.bits(), |_| {
        count += 1;
        cap.map_or(true, |c| count < c)
    });
    count
}

/// Number of index sets `pi` with `y_pi = x`, by direct enumeration.
pub fn oracle_count(y: &BitString, x: &BitString, budget: &OracleBudget) -> Result<u64> {
    budget.check_subsets(y.len(), x.len())?;
    Ok(count_capped(y, x, None))
}

/// Like [`oracle_count`] but stops once `cap` embeddings have been seen.
pub fn oracle_count_capped(y: &BitString, x: &BitString, cap: u64) -> u64 {
    count_capped(y, x, Some(cap))
}

/// Every projection mask of `x` in `y`, lexicographically sorted.
pub fn oracle_masks(y: &BitString, x: &BitString, budget: &OracleBudget) -> Result<Vec<Mask>> {
    budget.check_subsets(y.len(), x.len())?;
    let mut out = Vec::new();
    walk_masks(y.bits(), x.bits(), |p| {
        out.push(Mask::from_sorted(p.to_vec()));
        true
    });
    Ok(out)
}

/// The first mask in lexicographic order, if any.
pub fn oracle_first_mask(y: &BitString, x: &BitString) -> Option<Mask> {
    let mut first = None;
    walk_masks(y.bits(), x.bits(), |p| {
        first = Some(Mask::from_sorted(p.to_vec()));
        false
    });
    first
}

/// One compatible supersequence found by the exhaustive scan.
#[derive(Clone, Debug, Serialize)]
pub struct OracleEntry {
    pub y: BitString,
    pub weight: u64,
    /// All masks, lexicographic; present only for listings within `max_listing_n`.
    pub masks: Option<Vec<Mask>>,
}

/// Exhaustive listing of the compatible supersequences of `x` of length `n`.
#[derive(Clone, Debug, Serialize)]
pub struct OracleSpace {
    pub n: usize,
    pub x: BitString,
    pub entries: Vec<OracleEntry>,
}

impl OracleSpace {
    pub fn distribution(&self) -> WeightDistribution {
        let mut counts = BTreeMap::new();
        for e in &self.entries {
            *counts.entry(e.weight).or_insert(0u64) += 1;
        }
        WeightDistribution::from_counts(self.n, self.x.clone(), counts)
    }

    pub fn total_weight(&self) -> u64 {
        self.entries.iter().map(|e| e.weight).sum()
    }

    /// Sizes of the Hamming clusters, indexed by the number of extra ones.
    pub fn cluster_sizes(&self) -> Vec<u64> {
        let h = self.x.hamming_weight();
        let mut sizes = vec![0u64; self.n - self.x.len() + 1];
        for e in &self.entries {
            sizes[e.y.hamming_weight() - h] += 1;
        }
        sizes
    }

    /// Per-cluster counts of strings whose first embedding ends on the last position.
    pub fn maximal_initials_by_cluster(&self) -> Vec<u64> {
        let h = self.x.hamming_weight();
        let mut sizes = vec![0u64; self.n - self.x.len() + 1];
        for e in &self.entries {
            if self.is_maximal(e) {
                sizes[e.y.hamming_weight() - h] += 1;
            }
        }
        sizes
    }

    fn is_maximal(&self, e: &OracleEntry) -> bool {
        let first = match &e.masks {
            Some(m) => m.first().cloned(),
            None => oracle_first_mask(&e.y, &self.x),
        };
        first.and_then(|m| m.last()) == Some(self.n - 1)
    }

    pub fn singletons(&self) -> Vec<BitString> {
        self.entries
            .iter()
            .filter(|e| e.weight == 1)
            .map(|e| e.y.clone())
            .collect()
    }
}

/// Scans `{0,1}^n` and keeps every `y` containing `x`, with its weight.
pub fn oracle_space(n: usize, x: &BitString, budget: &OracleBudget) -> Result<OracleSpace> {
    budget.check_n(n, budget.max_n, "n")?;
    budget.check_subsets(n, x.len())?;
    let listing = n <= budget.max_listing_n;
    let mut entries = Vec::new();
    if x.len() <= n {
        for v in 0..(1u64 << n) {
            let y = BitString::from_index(v, n);
            if listing {
                let masks = oracle_masks(&y, x, budget)?;
                if !masks.is_empty() {
                    entries.push(OracleEntry {
                        y,
                        weight: masks.len() as u64,
                        masks: Some(masks),
                    });
                }
            } else {
                let weight = count_capped(&y, x, None);
                if weight > 0 {
                    entries.push(OracleEntry { y, weight, masks: None });
                }
            }
        }
    }
    Ok(OracleSpace {
        n,
        x: x.clone(),
        entries,
    })
}

/// Weight distribution only; skips mask storage.
pub fn oracle_distribution(n: usize, x: &BitString, budget: &OracleBudget) -> Result<WeightDistribution> {
    budget.check_n(n, budget.max_n, "n")?;
    budget.check_subsets(n, x.len())?;
    let mut counts = BTreeMap::new();
    if x.len() <= n {
        for v in 0..(1u64 << n) {
            let w = count_capped(&BitString::from_index(v, n), x, None);
            if w > 0 {
                *counts.entry(w).or_insert(0u64) += 1;
            }
        }
    }
    Ok(WeightDistribution::from_counts(n, x.clone(), counts))
}

/// Supersequences of weight exactly one.
pub fn oracle_singleton_count(n: usize, x: &BitString, budget: &OracleBudget) -> Result<u64> {
    budget.check_n(n, budget.max_n, "n")?;
    if x.len() > n {
        return Ok(0);
    }
    Ok((0..(1u64 << n))
        .filter(|&v| count_capped(&BitString::from_index(v, n), x, Some(2)) == 1)
        .count() as u64)
}

/// Entropies computed string by string over `{0,1}^n`, not by weight class.
pub fn oracle_entropy(
    n: usize,
    x: &BitString,
    alphas: &[f64],
    budget: &OracleBudget,
) -> Result<EntropyReport<f64>> {
    if let Some(&a) = alphas.iter().find(|&&a| !(a > 0.0) || a == 1.0) {
        return Err(Error::InvalidOrder(a));
    }
    budget.check_n(n, budget.max_n, "n")?;
    budget.check_subsets(n, x.len())?;
    if x.len() > n {
        return Err(Error::InvalidRange(format!("|x| = {} exceeds n = {n}", x.len())));
    }
    let weights: Vec<u64> = (0..(1u64 << n))
        .map(|v| count_capped(&BitString::from_index(v, n), x, None))
        .filter(|&w| w > 0)
        .collect();
    let total: u64 = weights.iter().sum();
    let total = total as f64;

    let mut shannon = 0.0;
    let mut power_sums = vec![0.0; alphas.len()];
    let mut max_p: f64 = 0.0;
    for &w in &weights {
        let p = w as f64 / total;
        shannon -= p * p.log2();
        for (s, &a) in power_sums.iter_mut().zip(alphas) {
            *s += p.powf(a);
        }
        max_p = max_p.max(p);
    }
    let renyi = alphas
        .iter()
        .zip(power_sums)
        .map(|(&a, s)| (a, s.log2() / (1.0 - a)))
        .collect();
    Ok(EntropyReport {
        shannon,
        renyi,
        min_entropy: -max_p.log2(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstring::bits;

    #[test]
    fn counts_from_definition() {
        let b = OracleBudget::default();
        assert_eq!(oracle_count(&bits("11000"), &bits("110"), &b).unwrap(), 3);
        assert_eq!(oracle_count(&bits("10101"), &bits("101"), &b).unwrap(), 4);
        assert_eq!(
            oracle_count(&bits("0000111100001111"), &bits("0011"), &b).unwrap(),
            300
        );
        assert_eq!(oracle_count(&bits("01"), &bits("011"), &b).unwrap(), 0);
        assert_eq!(oracle_count(&bits("0110"), &BitString::empty(), &b).unwrap(), 1);
    }

    #[test]
    fn masks_are_lexicographic() {
        let b = OracleBudget::default();
        let masks = oracle_masks(&bits("11100"), &bits("110"), &b).unwrap();
        let shown: Vec<String> = masks.iter().map(|m| m.to_string()).collect();
        assert_eq!(
            shown,
            ["{1, 2, 4}", "{1, 2, 5}", "{1, 3, 4}", "{1, 3, 5}", "{2, 3, 4}", "{2, 3, 5}"]
        );
        assert_eq!(oracle_first_mask(&bits("110011"), &bits("1011")).unwrap().to_string(), "{1, 3, 5, 6}");
    }

    #[test]
    fn space_is_consistent_with_mask_total() {
        let b = OracleBudget::default();
        for x in ["110", "101"] {
            let space = oracle_space(5, &bits(x), &b).unwrap();
            assert_eq!(space.entries.len(), 16);
            assert_eq!(space.total_weight(), 40);
        }
        let tiny = oracle_space(3, &bits("110"), &b).unwrap();
        assert_eq!(tiny.entries.len(), 1);
        assert_eq!(tiny.entries[0].y, bits("110"));
        assert_eq!(tiny.entries[0].weight, 1);
    }

    #[test]
    fn budget_is_enforced() {
        let b = OracleBudget {
            max_n: 10,
            max_listing_n: 8,
            max_subsets: 100,
        };
        assert!(matches!(
            oracle_space(11, &bits("1"), &b),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            oracle_count(&BitString::constant(0, 10), &BitString::constant(0, 5), &b),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn constant_weights_give_log_of_support() {
        // x = 0^m and n = m: a single string of weight one.
        let b = OracleBudget::default();
        let r = oracle_entropy(4, &bits("0000"), &[2.0], &b).unwrap();
        assert_eq!(r.shannon, 0.0);
        // n = m + 1 with x = ε-like short input: both 1-bit strings carry weight 1.
        let r = oracle_entropy(1, &BitString::empty(), &[2.0, 0.5], &b).unwrap();
        assert!((r.shannon - 1.0).abs() < 1e-15);
        assert!((r.renyi[0].1 - 1.0).abs() < 1e-15);
        assert!((r.min_entropy - 1.0).abs() < 1e-15);
    }
}
