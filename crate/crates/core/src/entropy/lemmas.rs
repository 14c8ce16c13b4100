use std::collections::BTreeMap;

use num_traits::Float;
use serde::Serialize;

use super::{shannon_entropy, WeightDistribution};
use crate::bitstring::BitString;
use crate::error::{range_err, Error, Result};
use crate::oracle::{oracle_distribution, OracleBudget};
use crate::rle::Rle;

/// Absolute tolerance for entropy comparisons; strict inequalities need a margin
/// larger than this.
pub const ENTROPY_TOL: f64 = 1e-9;

/// Merges the first two runs: (k1, k2, k3, …) ↦ (k1 + k2, k3, …), taking the
/// symbol of the second run. Constant strings (and ε) are fixed.
pub fn g_transform(x: &BitString) -> BitString {
    let rle = Rle::encode(x);
    if rle.num_blocks() < 2 {
        return x.clone();
    }
    let k = rle.blocks();
    let mut merged = vec![k[0] + k[1]];
    merged.extend_from_slice(&k[2..]);
    Rle::new(1 - rle.leading(), merged)
        .expect("merged runs stay positive")
        .decode()
}

/// `x, g(x), g(g(x)), …` up to and including the constant fixed point.
pub fn g_chain(x: &BitString) -> Vec<BitString> {
    let mut out = vec![x.clone()];
    loop {
        let next = g_transform(out.last().unwrap());
        if &next == out.last().unwrap() {
            return out;
        }
        out.push(next);
    }
}

/// Weights after one insertion, split by kind of insertion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingleCases {
    /// One string per run, its run lengthened: weight k_i + 1.
    pub lengthened: Vec<u64>,
    /// Strings where the inserted symbol splits a run or extends an end; weight 1.
    pub singletons: u64,
}

/// Weights after two insertions, split by the number of run-lengthening (first)
/// and run-splitting (second) insertions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCases {
    /// 2/0: one string per pair i ≤ j of runs.
    pub two_zero: Vec<u64>,
    /// 0/2: the number of weight-one strings.
    pub zero_two: u64,
    /// 1/1: (weight, multiplicity) pairs; the lengthened strings per run in run
    /// order, then the alternating-pair strings.
    pub one_one: Vec<(u64, u64)>,
}

fn runs_of(x: &BitString) -> Vec<u64> {
    Rle::encode(x).blocks().iter().map(|&k| k as u64).collect()
}

/// Splitting slots per run; a lone run is also open at both ends.
fn tilde(k: &[u64]) -> Vec<u64> {
    let l = k.len();
    if l == 1 {
        return vec![k[0] + 1];
    }
    k.iter()
        .enumerate()
        .map(|(i, &ki)| if i == 0 || i == l - 1 { ki } else { ki - 1 })
        .collect()
}

fn choose2(a: u64) -> u64 {
    a * a.saturating_sub(1) / 2
}

fn zero_two_count(kt: &[u64]) -> u64 {
    let total: u64 = kt.iter().sum();
    let squares: u64 = kt.iter().map(|v| v * v).sum();
    (total * total - squares) / 2 + kt.iter().map(|&v| choose2(v + 1)).sum::<u64>()
}

pub fn predicted_cases_single(x: &BitString) -> SingleCases {
    let k = runs_of(x);
    SingleCases {
        lengthened: k.iter().map(|ki| ki + 1).collect(),
        singletons: (x.len() + 2 - k.len()) as u64,
    }
}

/// Weight multiset of Υ(|x| + 1, x) from the run lengths of `x`.
pub fn predicted_weights_single(x: &BitString) -> WeightDistribution {
    let cases = predicted_cases_single(x);
    let mut d = WeightDistribution::from_weights(x.len() + 1, x.clone(), cases.lengthened);
    if cases.singletons > 0 {
        *d.counts.entry(1).or_insert(0) += cases.singletons;
    }
    d
}

fn two_zero_weights(k: &[u64]) -> Vec<u64> {
    let l = k.len();
    let mut out = Vec::with_capacity(l * (l + 1) / 2);
    for i in 0..l {
        out.push(choose2(k[i] + 2));
        for j in i + 1..l {
            out.push((k[i] + 1) * (k[j] + 1));
        }
    }
    out
}

const EMPTY_DOUBLE: DoubleCases = DoubleCases {
    two_zero: vec![],
    zero_two: 4,
    one_one: vec![],
};

/// Double-insertion cases for any `x`.
///
/// In the 1/1 case, each run is lengthened and a new unit run of the other symbol
/// is added somewhere; this yields `slots − 1` strings of weight k_i + 1 per run
/// (`slots` for the first run), where `slots` = m − ℓ + 2. On top of that, inserting
/// an alternating pair at the boundary after run p gives a string of weight
/// k_p + k_(p+1) + 1. When an inner run has length one, the pairs at its two
/// boundaries give the same string: a chain of such runs p+1, …, q collapses
/// into one string of weight k_p + k_(q+1) + (q − p) + 1, and each collapsed inner
/// run contributes one more lengthened string instead.
pub fn predicted_cases_double(x: &BitString) -> DoubleCases {
    let k = runs_of(x);
    let l = k.len();
    if l == 0 {
        return EMPTY_DOUBLE;
    }
    let slots = x.len() as u64 + 2 - l as u64;
    let inner_unit = |i: usize| i > 0 && i + 1 < l && k[i] == 1;
    let mut one_one = Vec::with_capacity(2 * l);
    for i in 0..l {
        let base = if i == 0 { slots } else { slots - 1 };
        one_one.push((k[i] + 1, base + u64::from(inner_unit(i))));
    }
    let mut p = 0;
    while p < l {
        let mut q = p;
        while q + 1 < l && inner_unit(q + 1) {
            q += 1;
        }
        let next = k.get(q + 1).copied().unwrap_or(0);
        one_one.push((k[p] + next + (q - p) as u64 + 1, 1));
        p = q + 1;
    }
    DoubleCases {
        two_zero: two_zero_weights(&k),
        zero_two: zero_two_count(&tilde(&k)),
        one_one,
    }
}

/// The 1/1 assembly taken run by run without merging coinciding strings: for
/// run 1, m − ℓ + 2 strings of weight k_1 + 1 and one of weight k_1 + k_2 + 1; for
/// each later run, m − ℓ + 1 of weight k_i + 1 and one of weight k_i + k_(i+1) + 1.
///
/// Agrees with [`predicted_cases_double`] exactly when no inner run has length one.
pub fn predicted_cases_double_unmerged(x: &BitString) -> DoubleCases {
    let k = runs_of(x);
    let l = k.len();
    if l == 0 {
        return EMPTY_DOUBLE;
    }
    let slots = x.len() as u64 + 2 - l as u64;
    let mut one_one = Vec::with_capacity(2 * l);
    for i in 0..l {
        let next = k.get(i + 1).copied().unwrap_or(0);
        let lengthened = if i == 0 { slots } else { slots - 1 };
        one_one.push((k[i] + 1, lengthened));
        one_one.push((k[i] + next + 1, 1));
    }
    DoubleCases {
        two_zero: two_zero_weights(&k),
        zero_two: zero_two_count(&tilde(&k)),
        one_one,
    }
}

impl DoubleCases {
    pub fn into_distribution(self, x: &BitString) -> WeightDistribution {
        let mut counts = BTreeMap::new();
        for w in self.two_zero {
            *counts.entry(w).or_insert(0) += 1;
        }
        if self.zero_two > 0 {
            *counts.entry(1).or_insert(0) += self.zero_two;
        }
        for (w, c) in self.one_one {
            if c > 0 {
                *counts.entry(w).or_insert(0) += c;
            }
        }
        WeightDistribution::from_counts(x.len() + 2, x.clone(), counts)
    }
}

/// Weight multiset of Υ(|x| + 2, x) from the run lengths of `x`.
pub fn predicted_weights_double(x: &BitString) -> WeightDistribution {
    predicted_cases_double(x).into_distribution(x)
}

/// (k1+k2+1)·log₂(k1+k2+1) − (k1+1)·log₂(k1+1) − (k2+1)·log₂(k2+1): the change
/// in Σ w·log₂ w when g merges runs of lengths `k1` and `k2` for a single
/// deletion. Dividing by μ = 2(m + 1) gives H(x) − H(g(x)).
pub fn delta_single<F: Float>(k1: u64, k2: u64) -> F {
    assert!(k1 >= 1 && k2 >= 1, "run lengths are positive");
    let t = |v: u64| {
        let v = F::from(v).unwrap();
        v * v.log2()
    };
    t(k1 + k2 + 1) - t(k1 + 1) - t(k2 + 1)
}

/// One g-step checked for a given number of deletions.
#[derive(Clone, Debug, Serialize)]
pub struct GStep {
    pub x: BitString,
    pub gx: BitString,
    pub n: usize,
    pub deletions: usize,
    pub h_x: f64,
    pub h_gx: f64,
    /// H(x) − H(g(x)) from the predicted multisets.
    pub difference: f64,
    /// The same difference from exhaustive oracle distributions, when requested.
    pub oracle_difference: Option<f64>,
    pub holds: bool,
}

fn predicted(x: &BitString, deletions: usize) -> WeightDistribution {
    if deletions == 1 {
        predicted_weights_single(x)
    } else {
        predicted_weights_double(x)
    }
}

/// Checks H(x) > H(g(x)) at n = |x| + deletions, or equality at the fixed point.
pub fn verify_g_decreases(x: &BitString, deletions: usize, oracle: Option<&OracleBudget>) -> Result<GStep> {
    if deletions != 1 && deletions != 2 {
        return range_err(format!("deletions must be 1 or 2, got {deletions}"));
    }
    if x.is_empty() {
        return range_err("g needs a nonempty x");
    }
    let gx = g_transform(x);
    let n = x.len() + deletions;
    let h_x: f64 = shannon_entropy(&predicted(x, deletions));
    let h_gx: f64 = shannon_entropy(&predicted(&gx, deletions));
    let difference = h_x - h_gx;
    let oracle_difference = match oracle {
        Some(b) => {
            let a: f64 = shannon_entropy(&oracle_distribution(n, x, b)?);
            let c: f64 = shannon_entropy(&oracle_distribution(n, &gx, b)?);
            Some(a - c)
        }
        None => None,
    };
    let ok = |d: f64| {
        if x.is_constant() {
            d.abs() <= ENTROPY_TOL
        } else {
            d > ENTROPY_TOL
        }
    };
    let holds = ok(difference)
        && oracle_difference.map_or(true, |d| ok(d) && (d - difference).abs() <= ENTROPY_TOL);
    Ok(GStep {
        x: x.clone(),
        gx,
        n,
        deletions,
        h_x,
        h_gx,
        difference,
        oracle_difference,
        holds,
    })
}

/// Outcome of a closed-form counting identity over a run-length composition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub composition: Vec<usize>,
    pub lhs: i128,
    pub rhs: i128,
    /// The left side with the uncorrected cross term.
    pub uncorrected_lhs: i128,
    pub holds: bool,
}

fn check_composition(k: &[usize]) -> Result<()> {
    if k.is_empty() || k.contains(&0) {
        return Err(Error::InvalidComposition(format!("{k:?}")));
    }
    Ok(())
}

/// The string 0^k1 1^k2 0^k3 … with the given run lengths.
pub fn composition_string(k: &[usize]) -> Result<BitString> {
    check_composition(k)?;
    Ok(Rle::new(0, k.to_vec())?.decode())
}

/// All compositions of `m` (ordered tuples of positive parts summing to `m`).
pub fn compositions(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![];
    }
    (0..1u64 << (m - 1))
        .map(|cuts| {
            let mut parts = vec![];
            let mut run = 1;
            for b in 0..m - 1 {
                if cuts >> (m - 2 - b) & 1 == 1 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            parts
        })
        .collect()
}

fn c2(a: i128) -> i128 {
    a * (a - 1) / 2
}

/// String count of the double-insertion multiset against |Υ(m + 2, x)|.
pub fn sanity_identity_counts_double(k: &[usize]) -> Result<IdentityCheck> {
    check_composition(k)?;
    let l = k.len() as i128;
    let m: i128 = k.iter().map(|&v| v as i128).sum();
    let kk: Vec<u64> = k.iter().map(|&v| v as u64).collect();
    let f = zero_two_count(&tilde(&kk)) as i128;
    let base = l * (l + 1) / 2 + f + 1;
    let rhs = c2(m + 2) + (m + 2) + 1;
    let lhs = base + l * (m - l + 2);
    Ok(IdentityCheck {
        name: "double-insertion string count",
        composition: k.to_vec(),
        lhs,
        rhs,
        uncorrected_lhs: base + l * (m - l - 2),
        holds: lhs == rhs,
    })
}

/// Weight sum of the double-insertion multiset against μ(m + 2, m) = 4·C(m + 2, 2).
pub fn sanity_identity_weights_double(k: &[usize]) -> Result<IdentityCheck> {
    let x = composition_string(k)?;
    let lhs = predicted_weights_double(&x).total_weight() as i128;
    let m = x.len() as i128;
    let l = k.len();
    let kk: Vec<i128> = k.iter().map(|&v| v as i128).collect();
    let mut literal: i128 = kk.iter().map(|&ki| c2(ki + 2)).sum();
    for i in 0..l {
        for j in i + 1..l {
            literal += (kk[i] + 1) * (kk[j] + 1);
        }
    }
    let ku: Vec<u64> = k.iter().map(|&v| v as u64).collect();
    literal += zero_two_count(&tilde(&ku)) as i128;
    for i in 0..l {
        let next = kk.get(i + 1).copied().unwrap_or(0);
        literal += (m - l as i128 + 2) * (kk[i] + 1) + kk[i] + next + 1;
    }
    let rhs = 4 * c2(m + 2);
    Ok(IdentityCheck {
        name: "double-insertion weight sum",
        composition: k.to_vec(),
        lhs,
        rhs,
        uncorrected_lhs: literal,
        holds: lhs == rhs,
    })
}
