use std::collections::HashMap;

use super::{check_lengths, ClusterIndex};
use crate::bitstring::BitString;
use crate::count::{add, binomial, mul, multichoose, sum, ExactCount};
use crate::error::Result;

/// |Υ^c(n, x)| from maximal initials: a string in cluster `c` is a maximal initial
/// of length `l` with `g` extra ones, followed by `n − l` free symbols holding the
/// other `c − g` extra ones.
pub fn cluster_size_closed<T: ExactCount>(n: usize, m: usize, h: usize, c: usize) -> Result<T> {
    check_lengths(n, m, h)?;
    ClusterIndex::new(c, n, m)?;
    if m == 0 {
        return binomial(n as u64, c as i64);
    }
    let mut total = T::zero();
    for l in m..=n {
        let lo = c.saturating_sub(n - l);
        let hi = c.min(l - m);
        for g in lo..=hi {
            let zeros_in_prefix = (l - m - g) as u64;
            let term = mul(
                &mul(
                    &multichoose::<T>(zeros_in_prefix, h as u64)?,
                    &multichoose::<T>(g as u64, (m - h) as u64)?,
                )?,
                &binomial::<T>((n - l) as u64, (c - g) as i64)?,
            )?;
            total = add(&total, &term)?;
        }
    }
    Ok(total)
}

/// |Υ^c(n, x)| by placing the position `p` of the last matched one for
/// x = 1^h 0^(m−h): Σ_{p=h}^{h+z} C(p − 1, h − 1)·C(n − p, c) with z = n − m − c.
pub fn cluster_size_simple<T: ExactCount>(n: usize, m: usize, h: usize, c: usize) -> Result<T> {
    check_lengths(n, m, h)?;
    let idx = ClusterIndex::new(c, n, m)?;
    if h == 0 {
        return binomial(n as u64, c as i64);
    }
    let z = idx.extra_zeros();
    sum((h..=h + z).map(|p| {
        Ok(mul(
            &binomial::<T>((p - 1) as u64, (h - 1) as i64)?,
            &binomial::<T>((n - p) as u64, c as i64)?,
        )?)
    }))
}

/// |Υ^c(n, x)| by recursion on the first symbols of `x` and `y`, memoized on
/// (suffix of `x`, n, c).
pub fn cluster_size_recursive<T: ExactCount>(n: usize, x: &BitString, c: usize) -> Result<T> {
    ClusterIndex::new(c, n, x.len())?;

    fn go<T: ExactCount>(
        x: &[u8],
        j: usize,
        n: usize,
        c: usize,
        memo: &mut HashMap<(usize, usize, usize), T>,
    ) -> Result<T> {
        let rest = x.len() - j;
        if rest == 0 {
            return binomial(n as u64, c as i64);
        }
        if c + rest > n {
            return Ok(T::zero());
        }
        if let Some(v) = memo.get(&(j, n, c)) {
            return Ok(v.clone());
        }
        // y starts with x[j]: match it and recurse on the tails.
        let matched = go(x, j + 1, n - 1, c, memo)?;
        // y starts with the other symbol: it is an inserted symbol. An inserted one
        // uses up one of the c extra ones.
        let skipped = if x[j] == 0 {
            if c > 0 {
                go(x, j, n - 1, c - 1, memo)?
            } else {
                T::zero()
            }
        } else {
            go(x, j, n - 1, c, memo)?
        };
        let v = add(&matched, &skipped)?;
        memo.insert((j, n, c), v.clone());
        Ok(v)
    }

    go(x.bits(), 0, n, c, &mut HashMap::new())
}
