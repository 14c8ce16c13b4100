//! Exact combinatorics of the binary deletion channel.
//!
//! Counting is generic over [`ExactCount`] (any unsigned primitive or
//! [`num_bigint::BigUint`]) and entropies over [`num_traits::Float`].

pub mod bitstring;
pub mod budget;
pub mod count;
pub mod embed;
pub mod entropy;
pub mod error;
pub mod mask;
pub mod oracle;
pub mod rle;
pub mod space;
pub mod verify;

pub use bitstring::{bits, BitString};
pub use budget::{Budget, DEFAULT_MAX_N, HARD_MAX_N};
pub use count::{binomial, multichoose, pow2, ExactCount};
pub use embed::{
    count_embeddings_dp, count_embeddings_runs, enumerate_block_maps, enumerate_masks, induced_block_map,
    run_breakdown, sigma_count, sigma_recurrence, BlockMap, RunBreakdown,
};
pub use entropy::{
    entropy_report, min_entropy, mu, posterior, renyi_entropy, shannon_entropy, weight_distribution,
    weight_distribution_by_cluster, EntropyReport, WeightDistribution,
};
pub use error::{Error, Result};
pub use mask::Mask;
pub use rle::{rle_decode, rle_encode, Rle};
pub use space::{upsilon_size, ClusterIndex};

/// Arbitrary-precision count.
pub type Count = num_bigint::BigUint;
/// Exact posterior probability.
pub type Posterior = num_rational::BigRational;
