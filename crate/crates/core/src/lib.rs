//! Coalition formation on weighted graphs.
//!
//! An instance is a set of `n` agents with pairwise valuations (a weighted
//! graph, stored as a [`ValuationMatrix`]). A [`Partition`] groups the agents
//! into coalitions; the quality of a partition is measured by its social
//! welfare (sum of within-coalition valuations over ordered pairs), its
//! correlation welfare, and the partition-independent total value.
//!
//! The crate provides:
//!
//! - the welfare functionals and exact algebraic identities ([`welfare`]),
//! - brute-force oracles over all partitions, over two-block partitions, and
//!   an exact maximum-clique solver ([`exact`]),
//! - seeded random instance models: weighted Erdős–Rényi graphs and random
//!   (balanced) multipartite graphs ([`generators`]),
//! - greedy clique-formation solvers for those models ([`greedy`]),
//! - two-block correlation-welfare maximizers and the derived
//!   social-welfare approximation for nonnegative-total-value games ([`cw2`]),
//! - a maximum-weight-matching baseline ([`baseline`]),
//! - the clique-to-game reduction gadget and its clique extraction
//!   procedure ([`hardness`]).
//!
//! All randomness flows through the pinned [`rng::SplitMix64`] generator, so
//! identical seeds produce bit-identical instances and partitions on every
//! platform.

pub mod baseline;
pub mod cw2;
pub mod error;
pub mod exact;
pub mod generators;
pub mod greedy;
pub mod hardness;
pub mod matrix;
pub mod meta;
pub mod partition;
pub mod rng;
pub mod welfare;

pub use error::{Error, Result};
pub use matrix::{Mode, ValuationMatrix, WeightStore};
pub use meta::{InstanceMeta, ModelKind};
pub use partition::Partition;
pub use welfare::{
    correlation_welfare_twice, negative_pair_within, per_agent_utilities, social_welfare,
    total_value, welfare_report, Welfare, WelfareReport,
};
