//! Counting and listing the embeddings of `x` in `y`.
//!
//! Three routes are provided: an O(|x|·|y|) dynamic program, explicit mask
//! enumeration, and a run-based count that partitions the masks by the block map
//! they induce between the run-length encodings of `x` and `y`.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::bitstring::BitString;
use crate::budget::Budget;
use crate::count::{add, binomial, mul, ExactCount};
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::rle::Rle;

/// ω_x(y) by dynamic programming.
///
/// `row[j]` holds the number of embeddings of `x[..j]` in the prefix of `y` read
/// so far; each new symbol of `y` extends every prefix of `x` ending in that symbol.
pub fn count_embeddings_dp<T: ExactCount>(y: &BitString, x: &BitString) -> Result<T> {
    let (y, x) = (y.bits(), x.bits());
    if x.len() > y.len() {
        return Ok(T::zero());
    }
    let mut row = vec![T::zero(); x.len() + 1];
    row[0] = T::one();
    for (i, &b) in y.iter().enumerate() {
        // x[..j] cannot fit in y[..=i] once j > i + 1
        let hi = x.len().min(i + 1);
        for j in (1..=hi).rev() {
            if x[j - 1] == b {
                row[j] = add(&row[j], &row[j - 1])?;
            }
        }
    }
    Ok(row.pop().expect("row has x.len() + 1 entries"))
}

/// All projection masks of `x` in `y`, in lexicographic order.
///
/// The first element, when present, is the initial (canonical) embedding.
pub fn enumerate_masks(y: &BitString, x: &BitString, budget: &Budget) -> Result<Vec<Mask>> {
    budget.check("|y|", y.len())?;
    let (yb, xb) = (y.bits(), x.bits());
    let (n, m) = (yb.len(), xb.len());
    if m > n {
        return Ok(Vec::new());
    }
    // fits[i][j]: x[j..] embeds in y[i..]
    let mut fits = vec![vec![false; m + 1]; n + 1];
    for row in fits.iter_mut() {
        row[m] = true;
    }
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            fits[i][j] = fits[i + 1][j] || (yb[i] == xb[j] && fits[i + 1][j + 1]);
        }
    }

    fn walk(yb: &[u8], xb: &[u8], fits: &[Vec<bool>], start: usize, path: &mut Vec<usize>, out: &mut Vec<Mask>) {
        let depth = path.len();
        if depth == xb.len() {
            out.push(Mask::from_sorted(path.clone()));
            return;
        }
        for i in start..yb.len() {
            if yb[i] == xb[depth] && fits[i + 1][depth + 1] {
                path.push(i);
                walk(yb, xb, fits, i + 1, path, out);
                path.pop();
            }
        }
    }

    let mut out = Vec::new();
    if fits[0][0] {
        walk(yb, xb, &fits, 0, &mut Vec::with_capacity(m), &mut out);
    }
    Ok(out)
}

/// A strictly increasing, parity-preserving map from the blocks of `x` to the
/// blocks of `y`, stored as its image sequence with 0-based block indexes.
///
/// Block `i` of `x` is sent to the block of `y` that holds the last symbol of `x`'s
/// block `i` under the embedding. Display is 1-based: `{1→1, 2→4}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct BlockMap(Vec<usize>);

impl BlockMap {
    /// Validates monotonicity, parity and range against `l` target blocks.
    pub fn new(image: Vec<usize>, l: usize) -> Result<Self> {
        let ok = image.iter().enumerate().all(|(i, &f)| f % 2 == i % 2 && f < l)
            && image.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(BlockMap(image))
        } else {
            Err(Error::InvalidRange(format!(
                "{image:?} is not an increasing parity-preserving map into {l} blocks"
            )))
        }
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for BlockMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}→{}", i + 1, t + 1)?;
        }
        f.write_str("}")
    }
}

/// |S| for `l_x` source blocks and `l_y` target blocks, in closed form.
pub fn sigma_count<T: ExactCount>(l_x: usize, l_y: usize) -> Result<T> {
    if l_y < l_x {
        return Ok(T::zero());
    }
    // the last image must share the parity of l_x
    let top = if (l_y - l_x) % 2 == 0 { l_y } else { l_y - 1 };
    let gaps = (top - l_x) / 2;
    binomial((l_x + gaps) as u64, gaps as i64)
}

/// |S| through the first-image recurrence σ(l', l) = Σ_i σ(l' − 1, l − 1 − 2i).
pub fn sigma_recurrence<T: ExactCount>(l_x: usize, l_y: usize) -> Result<T> {
    fn go<T: ExactCount>(lx: usize, ly: usize, memo: &mut HashMap<(usize, usize), T>) -> Result<T> {
        if lx == 0 {
            return Ok(T::one());
        }
        if ly < lx {
            return Ok(T::zero());
        }
        if let Some(v) = memo.get(&(lx, ly)) {
            return Ok(v.clone());
        }
        let mut total = T::zero();
        for i in 0..=(ly - lx) / 2 {
            total = add(&total, &go(lx - 1, ly - 1 - 2 * i, memo)?)?;
        }
        memo.insert((lx, ly), total.clone());
        Ok(total)
    }
    go(l_x, l_y, &mut HashMap::new())
}

/// Every block map from `l_x` blocks into `l_y` blocks, lexicographically ordered.
pub fn enumerate_block_maps(l_x: usize, l_y: usize) -> Vec<BlockMap> {
    fn go(i: usize, lo: usize, l_x: usize, l_y: usize, cur: &mut Vec<usize>, out: &mut Vec<BlockMap>) {
        if i == l_x {
            out.push(BlockMap(cur.clone()));
            return;
        }
        // remaining blocks need distinct, alternating-parity targets after this one
        let remaining = l_x - i - 1;
        let mut t = lo;
        while t + remaining < l_y {
            cur.push(t);
            go(i + 1, t + 1, l_x, l_y, cur, out);
            cur.pop();
            t += 2;
        }
    }
    let mut out = Vec::new();
    go(0, 0, l_x, l_y, &mut Vec::with_capacity(l_x), &mut out);
    out
}

/// Per-block-map terms of the run-based count.
#[derive(Clone, Debug)]
pub struct RunBreakdown<T> {
    /// True when `y` started with the other symbol and its first block was dropped.
    pub trimmed_first_block: bool,
    /// Block maps index into the (possibly trimmed) blocks of `y`.
    pub terms: Vec<(BlockMap, T)>,
}

impl<T: ExactCount> RunBreakdown<T> {
    pub fn total(&self) -> Result<T> {
        self.terms.iter().try_fold(T::zero(), |acc, (_, t)| add(&acc, t))
    }
}

/// Aligns the leading symbols by dropping `y`'s first block when they differ.
fn aligned_runs(y: &BitString, x: &BitString) -> (Rle, Rle, bool) {
    let ry = Rle::encode(y);
    let rx = Rle::encode(x);
    if !x.is_empty() && !y.is_empty() && ry.leading() != rx.leading() {
        (ry.without_first_block(), rx, true)
    } else {
        (ry, rx, false)
    }
}

/// Number of masks inducing the block map `f` between blocks `ky` and `kx`.
///
/// For each block `i` of `x`, its symbols are drawn from the same-symbol blocks of
/// `y` between `f(i-1)` and `f(i)`, at least one of them from block `f(i)`.
fn block_map_weight<T: ExactCount>(f: &[usize], ky: &[usize], kx: &[usize]) -> Result<T> {
    let mut product = T::one();
    for (i, (&target, &need)) in f.iter().zip(kx).enumerate() {
        let start = if i == 0 { 0 } else { f[i - 1] + 1 };
        let pool: usize = (start..=target).step_by(2).map(|j| ky[j]).sum();
        let without_last = pool - ky[target];
        let with: T = binomial(pool as u64, need as i64)?;
        let without: T = binomial(without_last as u64, need as i64)?;
        let term = with.checked_sub(&without).ok_or(Error::Overflow)?;
        if term.is_zero() {
            return Ok(T::zero());
        }
        product = mul(&product, &term)?;
    }
    Ok(product)
}

/// The run-based count broken down by block map. Zero-weight maps are kept.
pub fn run_breakdown<T: ExactCount>(y: &BitString, x: &BitString) -> Result<RunBreakdown<T>> {
    let (ry, rx, trimmed) = aligned_runs(y, x);
    let terms = enumerate_block_maps(rx.num_blocks(), ry.num_blocks())
        .into_iter()
        .map(|f| {
            let w = block_map_weight(f.image(), ry.blocks(), rx.blocks())?;
            Ok((f, w))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RunBreakdown {
        trimmed_first_block: trimmed,
        terms,
    })
}

/// ω_x(y) as the sum over block maps of the per-map mask counts.
pub fn count_embeddings_runs<T: ExactCount>(y: &BitString, x: &BitString) -> Result<T> {
    run_breakdown(y, x)?.total()
}

/// The block map induced by a projection mask, in the block indexing used by
/// [`run_breakdown`]. Returns `None` if `mask` does not project `y` onto `x`.
pub fn induced_block_map(y: &BitString, x: &BitString, mask: &Mask) -> Option<BlockMap> {
    if mask.len() != x.len() || mask.last().map_or(false, |i| i >= y.len()) || mask.apply(y) != *x {
        return None;
    }
    let (_, rx, trimmed) = aligned_runs(y, x);
    // block index of every position of y
    let mut block_of = Vec::with_capacity(y.len());
    let mut block = 0usize;
    for i in 0..y.len() {
        if i > 0 && y.bits()[i] != y.bits()[i - 1] {
            block += 1;
        }
        block_of.push(block);
    }
    let shift = usize::from(trimmed);
    let mut image = Vec::with_capacity(rx.num_blocks());
    let mut end = 0usize;
    for &k in rx.blocks() {
        end += k;
        image.push(block_of[mask.indices()[end - 1]] - shift);
    }
    Some(BlockMap(image))
}
