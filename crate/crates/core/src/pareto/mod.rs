//! Dominance, non-dominated filtering, the bounded archive, random weights and
//! front-quality metrics.

mod archive;
mod dominance;
mod metrics;
mod weights;

pub use archive::{ArchiveEntry, InsertOutcome, ParetoArchive, DEFAULT_ARCHIVE_CAPACITY};
pub use dominance::{dominates, dominates_or_equal, non_dominated_filter};
pub use metrics::{front_error, generational_distance, ReferenceFront};
pub use weights::{random_weights, weighted_scalarize, WeightVector};

pub(crate) use dominance::dominates_unchecked;
pub(crate) use weights::scalarize_unchecked;
