use delkit::entropy::{predicted_weights_double, predicted_weights_single};
use delkit::oracle::{oracle_count, oracle_distribution, oracle_singleton_count, oracle_space, OracleBudget};
use delkit::space::{
    cluster_size_closed, cluster_size_recursive, cluster_size_simple, enumerate_supersequences, singleton_count,
    singletons_by_cluster,
};
use delkit::{
    binomial, count_embeddings_dp, count_embeddings_runs, enumerate_masks, min_entropy, mu, posterior,
    renyi_entropy, rle_decode, rle_encode, shannon_entropy, upsilon_size, weight_distribution, BitString, Budget,
    Count, Posterior,
};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn bitstring(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = BitString> {
    prop::collection::vec(0u8..2, len).prop_map(|v| BitString::from_symbols(v).unwrap())
}

fn reversed(s: &BitString) -> BitString {
    BitString::from_symbols(s.bits().iter().rev().copied()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn counting_methods_agree(y in bitstring(0..=14), x in bitstring(0..=6)) {
        let dp: u64 = count_embeddings_dp(&y, &x).unwrap();
        prop_assert_eq!(count_embeddings_runs::<u64>(&y, &x).unwrap(), dp);
        prop_assert_eq!(oracle_count(&y, &x, &OracleBudget::default()).unwrap(), dp);
        let masks = enumerate_masks(&y, &x, &Budget::default()).unwrap();
        prop_assert_eq!(masks.len() as u64, dp);
        for m in &masks {
            prop_assert_eq!(&m.apply(&y), &x);
        }
        prop_assert_eq!(dp > 0, y.contains_subsequence(&x));
    }

    #[test]
    fn bignum_matches_primitive(y in bitstring(0..=40), x in bitstring(0..=8)) {
        let small: u128 = count_embeddings_dp(&y, &x).unwrap();
        let big: Count = count_embeddings_runs(&y, &x).unwrap();
        prop_assert_eq!(Count::from(small), big);
    }

    #[test]
    fn weight_symmetries(y in bitstring(0..=14), x in bitstring(0..=6)) {
        let w: u64 = count_embeddings_dp(&y, &x).unwrap();
        prop_assert_eq!(count_embeddings_dp::<u64>(&y.complement(), &x.complement()).unwrap(), w);
        prop_assert_eq!(count_embeddings_dp::<u64>(&reversed(&y), &reversed(&x)).unwrap(), w);
    }

    #[test]
    fn rle_round_trip(s in bitstring(0..=64)) {
        let r = rle_encode(&s);
        prop_assert_eq!(rle_decode(&r), s.clone());
        prop_assert_eq!(r.total_len(), s.len());
        prop_assert!(r.blocks().iter().all(|&k| k > 0));
    }

    #[test]
    fn conservation(x in bitstring(0..=8), extra in 0usize..=3) {
        let n = x.len() + extra;
        let d = weight_distribution(n, &x, &Budget::default()).unwrap();
        prop_assert_eq!(d.total_strings(), upsilon_size::<u64>(n, x.len()).unwrap());
        prop_assert_eq!(d.total_weight(), mu::<u64>(n, x.len()).unwrap());
        prop_assert_eq!(&d, &oracle_distribution(n, &x, &OracleBudget::default()).unwrap());
        let flipped = weight_distribution(n, &x.complement(), &Budget::default()).unwrap();
        prop_assert_eq!(&flipped.counts, &d.counts);
    }

    #[test]
    fn posterior_sums_to_one(x in bitstring(0..=5), extra in 0usize..=3) {
        let n = x.len() + extra;
        let mut total = Posterior::zero();
        for (y, _) in enumerate_supersequences(n, &x, &Budget::default()).unwrap() {
            total += posterior(&y, &x, n).unwrap();
        }
        prop_assert!(total.is_one());
    }

    #[test]
    fn cluster_forms_match_oracle(x in bitstring(1..=7), extra in 0usize..=4) {
        let n = x.len() + extra;
        let (m, h) = (x.len(), x.hamming_weight());
        let sizes = oracle_space(n, &x, &OracleBudget { max_listing_n: 0, ..OracleBudget::default() })
            .unwrap()
            .cluster_sizes();
        for (c, &want) in sizes.iter().enumerate() {
            prop_assert_eq!(cluster_size_closed::<u64>(n, m, h, c).unwrap(), want);
            prop_assert_eq!(cluster_size_simple::<u64>(n, m, h, c).unwrap(), want);
            prop_assert_eq!(cluster_size_recursive::<u64>(n, &x, c).unwrap(), want);
        }
    }

    #[test]
    fn singletons_match_oracle(x in bitstring(0..=7), extra in 0usize..=4) {
        let n = x.len() + extra;
        let want = oracle_singleton_count(n, &x, &OracleBudget::default()).unwrap();
        prop_assert_eq!(singleton_count::<u64>(n, &x).unwrap(), want);
        if !x.is_empty() {
            let parts: Vec<u64> = singletons_by_cluster(n, &x).unwrap();
            prop_assert_eq!(parts.iter().sum::<u64>(), want);
        }
    }

    #[test]
    fn entropy_ordering(x in bitstring(0..=8), extra in 0usize..=3, alpha in 1.05f64..6.0) {
        let n = x.len() + extra;
        let d = weight_distribution(n, &x, &Budget::default()).unwrap();
        let h: f64 = shannon_entropy(&d);
        let r: f64 = renyi_entropy(&d, alpha).unwrap();
        let r_half: f64 = renyi_entropy(&d, 0.5).unwrap();
        let hmin: f64 = min_entropy(&d);
        let tol = 1e-9;
        prop_assert!(hmin <= r + tol && r <= h + tol && h <= r_half + tol);
        let cap = (upsilon_size::<u64>(n, x.len()).unwrap() as f64).log2();
        prop_assert!(r_half <= cap + tol);
        prop_assert!(hmin >= -tol);
    }

    #[test]
    fn single_and_double_predictions(x in bitstring(0..=9)) {
        let b = Budget::default();
        let one = weight_distribution(x.len() + 1, &x, &b).unwrap();
        prop_assert_eq!(&predicted_weights_single(&x).counts, &one.counts);
        let two = weight_distribution(x.len() + 2, &x, &b).unwrap();
        prop_assert_eq!(&predicted_weights_double(&x).counts, &two.counts);
    }
}

#[test]
fn binomial_rows_sum_to_powers() {
    for n in 0..=60u64 {
        let row: u128 = (0..=n as i64).map(|k| binomial::<u128>(n, k).unwrap()).sum();
        assert_eq!(row, 1u128 << n);
    }
}
