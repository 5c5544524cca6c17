//! Rule-filtered factorization machine recommender.
//!
//! The pipeline mines association rules from users' favorable rating
//! history (via Apriori or FP-growth), turns them into per-user item
//! profiles, and uses those profiles to shortlist the candidates that a
//! factorization machine actually has to score. The `eval` module
//! measures what the filtering costs in accuracy (MAE, NDCG@k, rank-sum
//! tests) and what it saves in prediction work.

pub mod config;
pub mod eval;
pub mod fm;
pub mod ingest;
pub mod mining;
pub mod profiles;

pub use ingest::{EvalSplit, RatingDataset, RatingRecord, Transaction};
pub use mining::{AssociationRule, FrequentItemset, ItemSet};

/// User identifiers as they appear in the ratings file (1-based).
pub type UserId = u32;
/// Item identifiers as they appear in the ratings file (1-based).
pub type ItemId = u32;
