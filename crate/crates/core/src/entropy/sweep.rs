use rayon::prelude::*;
use serde::Serialize;

use super::{entropy_report, weight_distribution, EntropyReport};
use crate::bitstring::BitString;
use crate::budget::Budget;
use crate::error::{Error, Result};

/// Entropies of one `x` in a sweep over all strings of a given length.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub x: BitString,
    pub n: usize,
    /// |Υ(n, x)|
    pub strings: u64,
    /// μ(n, m)
    pub masks: u64,
    pub max_weight: u64,
    pub report: EntropyReport<f64>,
}

/// Every `x` of length `m`, in lexicographic order, with its entropies at length `n`.
pub fn sweep(m: usize, n: usize, alphas: &[f64], budget: &Budget) -> Result<Vec<SweepRow>> {
    if let Some(&a) = alphas.iter().find(|&&a| !(a > 0.0) || a == 1.0 || !a.is_finite()) {
        return Err(Error::InvalidOrder(a));
    }
    let xs: Vec<BitString> = BitString::all(m).collect();
    xs.into_par_iter()
        .map(|x| {
            let d = weight_distribution(n, &x, budget)?;
            Ok(SweepRow {
                strings: d.total_strings(),
                masks: d.total_weight(),
                max_weight: d.max_weight().unwrap_or(0),
                report: entropy_report(&d, alphas)?,
                n,
                x,
            })
        })
        .collect()
}
