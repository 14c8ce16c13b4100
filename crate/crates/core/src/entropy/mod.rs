//! Weight distributions over Υ(n, x), posteriors, and Shannon / Rényi / min
//! entropies in bits.

mod lemmas;
mod sweep;

pub use lemmas::{
    composition_string, compositions, delta_single, g_chain, g_transform, predicted_cases_double,
    predicted_cases_double_unmerged, predicted_cases_single, predicted_weights_double, predicted_weights_single,
    sanity_identity_counts_double, sanity_identity_weights_double, verify_g_decreases, DoubleCases,
    GStep, IdentityCheck, SingleCases, ENTROPY_TOL,
};
pub use sweep::{sweep, SweepRow};

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Float, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bitstring::BitString;
use crate::budget::Budget;
use crate::count::{binomial, mul, pow2, ExactCount};
use crate::embed::count_embeddings_dp;
use crate::error::{range_err, Error, Result};

/// μ(n, m) = C(n, m)·2^(n − m), the number of masks over all of Υ(n, x).
pub fn mu<T: ExactCount>(n: usize, m: usize) -> Result<T> {
    if m > n {
        return range_err(format!("m = {m} exceeds n = {n}"));
    }
    mul(&binomial::<T>(n as u64, m as i64)?, &pow2::<T>((n - m) as u32)?)
}

/// Multiplicities of each weight ω_x(y) over Υ(n, x).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightDistribution {
    pub n: usize,
    pub x: BitString,
    /// weight → number of supersequences with that weight
    pub counts: BTreeMap<u64, u64>,
    /// The same map per Hamming cluster `c`, when requested.
    pub by_cluster: Option<Vec<BTreeMap<u64, u64>>>,
}

impl WeightDistribution {
    pub fn from_counts(n: usize, x: BitString, counts: BTreeMap<u64, u64>) -> Self {
        WeightDistribution {
            n,
            x,
            counts,
            by_cluster: None,
        }
    }

    /// Builds the map from a list of weights, one per string.
    pub fn from_weights(n: usize, x: BitString, weights: impl IntoIterator<Item = u64>) -> Self {
        let mut counts = BTreeMap::new();
        for w in weights {
            *counts.entry(w).or_insert(0) += 1;
        }
        Self::from_counts(n, x, counts)
    }

    pub fn m(&self) -> usize {
        self.x.len()
    }

    pub fn total_strings(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn total_weight(&self) -> u64 {
        self.counts.iter().map(|(w, c)| w * c).sum()
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.counts.keys().next_back().copied()
    }

    /// Drops the per-cluster breakdown, for comparisons against plain maps.
    pub fn without_clusters(mut self) -> Self {
        self.by_cluster = None;
        self
    }
}

fn scan(n: usize, x: &BitString, budget: &Budget, clusters: bool) -> Result<WeightDistribution> {
    budget.check("n", n)?;
    let m = x.len();
    if m > n {
        return range_err(format!("|x| = {m} exceeds n = {n}"));
    }
    let h = x.hamming_weight();
    let width = if clusters { n - m + 1 } else { 1 };
    let empty = || vec![BTreeMap::<u64, u64>::new(); width];
    let per_cluster = (0..1u64 << n)
        .into_par_iter()
        .fold(empty, |mut acc, v| {
            let y = BitString::from_index(v, n);
            let w: u64 = count_embeddings_dp(&y, x).expect("weights below 2^64 within budget");
            if w > 0 {
                let slot = if clusters { y.hamming_weight() - h } else { 0 };
                *acc[slot].entry(w).or_insert(0) += 1;
            }
            acc
        })
        .reduce(empty, |mut a, b| {
            for (ma, mb) in a.iter_mut().zip(b) {
                for (w, c) in mb {
                    *ma.entry(w).or_insert(0) += c;
                }
            }
            a
        });
    let mut counts = BTreeMap::new();
    for map in &per_cluster {
        for (&w, &c) in map {
            *counts.entry(w).or_insert(0) += c;
        }
    }
    let mut d = WeightDistribution::from_counts(n, x.clone(), counts);
    if clusters {
        d.by_cluster = Some(per_cluster);
    }
    Ok(d)
}

/// Exact weight distribution of Υ(n, x) by scanning `{0,1}^n` with the
/// embedding-count DP.
pub fn weight_distribution(n: usize, x: &BitString, budget: &Budget) -> Result<WeightDistribution> {
    scan(n, x, budget, false)
}

/// As [`weight_distribution`], also split by Hamming cluster.
pub fn weight_distribution_by_cluster(n: usize, x: &BitString, budget: &Budget) -> Result<WeightDistribution> {
    scan(n, x, budget, true)
}

/// P(Y = y | X = x) = ω_x(y) / μ(n, m), exactly.
pub fn posterior(y: &BitString, x: &BitString, n: usize) -> Result<BigRational> {
    if y.len() != n {
        return range_err(format!("|y| = {} but n = {n}", y.len()));
    }
    if x.len() > n {
        return range_err(format!("|x| = {} exceeds n = {n}", x.len()));
    }
    let w: BigUint = count_embeddings_dp(y, x)?;
    if w.is_zero() {
        return Ok(BigRational::zero());
    }
    let total: BigUint = mu(n, x.len())?;
    Ok(BigRational::new(w.into(), total.into()))
}

fn lift<F: Float>(v: u64) -> F {
    F::from(v).expect("u64 fits any float type")
}

fn check_nonempty(d: &WeightDistribution) {
    assert!(!d.counts.is_empty(), "entropy of an empty distribution");
}

/// H = −Σ p log₂ p, summed by ascending weight.
pub fn shannon_entropy<F: Float>(d: &WeightDistribution) -> F {
    check_nonempty(d);
    let total: F = lift(d.total_weight());
    d.counts.iter().fold(F::zero(), |acc, (&w, &c)| {
        let p = lift::<F>(w) / total;
        acc - lift::<F>(c) * p * p.log2()
    })
}

/// H_α = log₂(Σ p^α) / (1 − α), for α > 0, α ≠ 1.
pub fn renyi_entropy<F: Float>(d: &WeightDistribution, alpha: F) -> Result<F> {
    if !(alpha > F::zero()) || alpha == F::one() || !alpha.is_finite() {
        return Err(Error::InvalidOrder(alpha.to_f64().unwrap_or(f64::NAN)));
    }
    check_nonempty(d);
    let total: F = lift(d.total_weight());
    let s = d.counts.iter().fold(F::zero(), |acc, (&w, &c)| {
        acc + lift::<F>(c) * (lift::<F>(w) / total).powf(alpha)
    });
    // adding zero turns a -0.0 from a point mass into 0.0
    Ok(s.log2() / (F::one() - alpha) + F::zero())
}

/// H_∞ = −log₂ max p.
pub fn min_entropy<F: Float>(d: &WeightDistribution) -> F {
    check_nonempty(d);
    let top: F = lift(d.max_weight().unwrap_or(0));
    F::zero() - (top / lift::<F>(d.total_weight())).log2()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntropyReport<F> {
    pub shannon: F,
    /// (α, H_α) in the order requested
    pub renyi: Vec<(F, F)>,
    pub min_entropy: F,
}

impl<F: Float> EntropyReport<F> {
    pub fn renyi_at(&self, alpha: F) -> Option<F> {
        self.renyi.iter().find(|(a, _)| *a == alpha).map(|e| e.1)
    }
}

pub fn entropy_report<F: Float>(d: &WeightDistribution, alphas: &[F]) -> Result<EntropyReport<F>> {
    let renyi = alphas
        .iter()
        .map(|&a| Ok((a, renyi_entropy(d, a)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(EntropyReport {
        shannon: shannon_entropy(d),
        renyi,
        min_entropy: min_entropy(d),
    })
}
