use super::{check_lengths, ClusterIndex};
use crate::bitstring::BitString;
use crate::count::{binomial, mul, multichoose, ExactCount};
use crate::error::{range_err, Result};
use crate::mask::Mask;

/// The canonical embedding: each symbol of `x` matched at the leftmost possible
/// position. Equals the lexicographically smallest projection mask.
pub fn initial_mask(y: &BitString, x: &BitString) -> Option<Mask> {
    let mut out = Vec::with_capacity(x.len());
    let mut pos = 0;
    for &s in x.bits() {
        let off = y.bits()[pos..].iter().position(|&b| b == s)?;
        out.push(pos + off);
        pos += off + 1;
    }
    Some(Mask::from_sorted(out))
}

/// True when the canonical embedding ends on the last symbol of `y`.
pub fn is_maximal_initial(y: &BitString, x: &BitString) -> bool {
    match initial_mask(y, x) {
        Some(m) => match m.last() {
            Some(last) => last + 1 == y.len(),
            // ε embeds in every y through the empty mask; it is maximal only in ε
            None => y.is_empty(),
        },
        None => false,
    }
}

/// |M(n, x)| = C(n − 1, m − 1), for any `x` of length `m ≥ 1`.
pub fn maximal_initials_total<T: ExactCount>(n: usize, m: usize) -> Result<T> {
    if m == 0 {
        return range_err("maximal initials need a nonempty x");
    }
    check_lengths(n, m, 0)?;
    binomial((n - 1) as u64, (m - 1) as i64)
}

/// |M^c(n, x)|: the inserted zeros sit in the gaps before the `h` ones of `x` and
/// the inserted ones in the gaps before its `m − h` zeros.
pub fn maximal_initials_cluster<T: ExactCount>(n: usize, m: usize, h: usize, c: usize) -> Result<T> {
    if m == 0 {
        return range_err("maximal initials need a nonempty x");
    }
    check_lengths(n, m, h)?;
    let idx = ClusterIndex::new(c, n, m)?;
    mul(
        &multichoose::<T>(idx.extra_zeros() as u64, h as u64)?,
        &multichoose::<T>(idx.extra_ones() as u64, (m - h) as u64)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitstring::bits;

    #[test]
    fn canonical_embeddings() {
        assert_eq!(initial_mask(&bits("110011"), &bits("1011")).unwrap().to_string(), "{1, 3, 5, 6}");
        assert_eq!(initial_mask(&bits("101011"), &bits("1011")).unwrap().to_string(), "{1, 2, 3, 5}");
        assert_eq!(initial_mask(&bits("000"), &bits("1")), None);
        assert!(is_maximal_initial(&bits("110011"), &bits("1011")));
        assert!(!is_maximal_initial(&bits("101011"), &bits("1011")));
        assert!(is_maximal_initial(&bits("0110"), &bits("0110")));
        assert!(!is_maximal_initial(&bits("000"), &bits("1")));
    }

    #[test]
    fn totals_and_clusters() {
        assert_eq!(maximal_initials_total::<u64>(5, 3).unwrap(), 6);
        assert_eq!(maximal_initials_total::<u64>(7, 7).unwrap(), 1);
        assert_eq!(maximal_initials_total::<u64>(7, 1).unwrap(), 1);
        assert!(maximal_initials_total::<u64>(3, 0).is_err());

        let split: Vec<u64> = (0..=2).map(|c| maximal_initials_cluster(5, 3, 2, c).unwrap()).collect();
        assert_eq!(split, [3, 2, 1]);
    }

    #[test]
    fn cluster_split_sums_to_total() {
        for n in 1..=20 {
            for m in 1..=n {
                for h in 0..=m {
                    let total: u64 = (0..=n - m)
                        .map(|c| maximal_initials_cluster::<u64>(n, m, h, c).unwrap())
                        .sum();
                    assert_eq!(total, maximal_initials_total::<u64>(n, m).unwrap(), "n={n} m={m} h={h}");
                }
            }
        }
    }
}
