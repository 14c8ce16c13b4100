use serde::Serialize;

use super::enumerate_supersequences;
use crate::bitstring::BitString;
use crate::budget::Budget;
use crate::count::{mul, multichoose, pow2, sum, ExactCount};
use crate::error::{range_err, Result};
use crate::rle::Rle;

/// Insertion slots of `x`, split by the symbol of the run they sit in.
///
/// An opposite symbol inserted into one of these slots splits a run (or prepends /
/// appends to `x`) without creating a second embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RunSlots {
    pub rho0: usize,
    pub rho1: usize,
}

impl RunSlots {
    pub fn total(&self) -> usize {
        self.rho0 + self.rho1
    }
}

/// Slots per run: length + 1 for a run covering all of `x`, length for a run
/// touching exactly one end of `x`, length − 1 for an inner run.
pub fn run_slots(x: &BitString) -> Result<RunSlots> {
    if x.is_empty() {
        return range_err("run slots need a nonempty x");
    }
    let rle = Rle::encode(x);
    let last = rle.num_blocks() - 1;
    let mut rho = [0usize; 2];
    for (i, (sym, len)) in rle.runs().enumerate() {
        let ends_touched = usize::from(i == 0) + usize::from(i == last);
        rho[sym as usize] += len + ends_touched - 1;
    }
    Ok(RunSlots {
        rho0: rho[0],
        rho1: rho[1],
    })
}

/// Singletons per Hamming cluster: `n − m − c` zeros go into the slots of the
/// runs of ones, and `c` ones into the slots of the runs of zeros.
pub fn singletons_by_cluster<T: ExactCount>(n: usize, x: &BitString) -> Result<Vec<T>> {
    let m = x.len();
    if m > n {
        return range_err(format!("|x| = {m} exceeds n = {n}"));
    }
    let slots = run_slots(x)?;
    (0..=n - m)
        .map(|c| {
            mul(
                &multichoose::<T>((n - m - c) as u64, slots.rho1 as u64)?,
                &multichoose::<T>(c as u64, slots.rho0 as u64)?,
            )
        })
        .collect()
}

/// |S(n, x)| = C(n − m + ρ1 + ρ0 − 1, n − m).
///
/// For x = ε every string has exactly one (empty) embedding, giving 2^n.
pub fn singleton_count<T: ExactCount>(n: usize, x: &BitString) -> Result<T> {
    let m = x.len();
    if m > n {
        return range_err(format!("|x| = {m} exceeds n = {n}"));
    }
    if m == 0 {
        return pow2(n as u32);
    }
    multichoose((n - m) as u64, run_slots(x)?.total() as u64)
}

/// Sum over clusters of [`singletons_by_cluster`]; equals [`singleton_count`].
pub fn singleton_count_by_cluster<T: ExactCount>(n: usize, x: &BitString) -> Result<T> {
    sum(singletons_by_cluster::<T>(n, x)?.into_iter().map(Ok))
}

/// All weight-one supersequences, lexicographically.
pub fn enumerate_singletons(n: usize, x: &BitString, budget: &Budget) -> Result<Vec<BitString>> {
    Ok(enumerate_supersequences(n, x, budget)?
        .filter(|(_, w)| *w == 1)
        .map(|(y, _)| y)
        .collect())
}
