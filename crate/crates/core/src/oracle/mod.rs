//! Brute-force ground truth: spanning-tree enumeration, the exact
//! minimum-average-distance spanning tree, labeled-tree enumeration, and
//! seeded graph generators.

mod enumerate;
mod family;
mod prufer;

pub use enumerate::{for_each_spanning_tree, kirchhoff_count, mrct, spanning_trees, DEFAULT_CAP};
pub use family::{generate, FamilyKind, FamilySpec, GNP_RETRIES};
pub use prufer::{all_labeled_trees, prufer_decode, prufer_encode, MAX_LABELED_ORDER};

use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("{count} spanning trees exceed the cap of {cap}")]
    Overflow { count: BigInt, cap: u64 },
    #[error("labeled-tree order {0} outside 1..=9")]
    Order(usize),
    #[error("bad Prüfer sequence: {0}")]
    Prufer(String),
    #[error("bad family spec: {0}")]
    Spec(String),
    #[error("infeasible family parameters: {0}")]
    Infeasible(String),
    #[error("no connected sample after {0} attempts")]
    RetriesExhausted(u64),
}
