//! Exact, overflow-checked integer arithmetic shared by every closed form.
//!
//! All counting code is generic over [`ExactCount`], which is implemented for
//! the unsigned primitives and for [`num_bigint::BigUint`]. Fixed-width backings
//! report [`Error::Overflow`] instead of wrapping; `BigUint` never overflows.

use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, FromPrimitive, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A nonnegative exact integer usable as a count.
pub trait ExactCount:
    Clone
    + Ord
    + Debug
    + Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + CheckedDiv
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
}

impl<T> ExactCount for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + CheckedDiv
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}

pub(crate) fn lift<T: ExactCount>(v: u64) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow)
}

pub(crate) fn add<T: ExactCount>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn mul<T: ExactCount>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// Sum of an iterator of fallible counts.
pub(crate) fn sum<T: ExactCount>(terms: impl IntoIterator<Item = Result<T>>) -> Result<T> {
    terms.into_iter().try_fold(T::zero(), |acc, t| add(&acc, &t?))
}

/// Binomial coefficient C(n, k), zero when `k < 0` or `k > n`.
pub fn binomial<T: ExactCount>(n: u64, k: i64) -> Result<T> {
    if k < 0 || k as u64 > n {
        return Ok(T::zero());
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = T::one();
    for i in 1..=k {
        // acc * (n - k + i) / i is exactly C(n - k + i, i)
        acc = mul(&acc, &lift(n - k + i)?)?
            .checked_div(&lift(i)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(acc)
}

/// Number of multisets of size `items` drawn from `bins` kinds, C(items + bins - 1, items).
///
/// Zero items always gives one configuration, even with zero bins.
pub fn multichoose<T: ExactCount>(items: u64, bins: u64) -> Result<T> {
    match (items, bins) {
        (0, _) => Ok(T::one()),
        (_, 0) => Ok(T::zero()),
        _ => binomial(items + bins - 1, items as i64),
    }
}

/// 2^e.
pub fn pow2<T: ExactCount>(e: u32) -> Result<T> {
    let two = lift::<T>(2)?;
    (0..e).try_fold(T::one(), |acc, _| mul(&acc, &two))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn small_binomials() {
        assert_eq!(binomial::<u64>(5, 3).unwrap(), 10);
        assert_eq!(binomial::<u64>(4, 2).unwrap(), 6);
        assert_eq!(binomial::<u64>(3, 5).unwrap(), 0);
        assert_eq!(binomial::<u64>(3, -1).unwrap(), 0);
        assert_eq!(binomial::<u64>(0, 0).unwrap(), 1);
    }

    #[test]
    fn pascal_rule_holds_in_bigint() {
        for n in 1..60u64 {
            for k in 1..=n as i64 {
                let lhs: BigUint = binomial(n, k).unwrap();
                let rhs = binomial::<BigUint>(n - 1, k).unwrap() + binomial::<BigUint>(n - 1, k - 1).unwrap();
                assert_eq!(lhs, rhs, "C({n},{k})");
            }
        }
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        assert_eq!(binomial::<u8>(20, 10), Err(Error::Overflow));
        assert_eq!(pow2::<u16>(16), Err(Error::Overflow));
        assert_eq!(binomial::<u128>(100, 50).unwrap(), 100891344545564193334812497256u128);
        let big: BigUint = binomial(200, 100).unwrap();
        assert!(big.bits() > 128);
    }

    #[test]
    fn multiset_coefficient_matches_binomial() {
        for items in 0..12u64 {
            for bins in 1..12u64 {
                assert_eq!(
                    multichoose::<u64>(items, bins).unwrap(),
                    binomial::<u64>(items + bins - 1, items as i64).unwrap()
                );
            }
        }
        assert_eq!(multichoose::<u64>(0, 0).unwrap(), 1);
        assert_eq!(multichoose::<u64>(3, 0).unwrap(), 0);
    }
}
