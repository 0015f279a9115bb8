//! Littlewood-Richardson expansions of complementary Schur products
//! `s_λ s_λᶜ` over a rectangle, witnesses for their linear independence,
//! and the machinery to certify it.

pub mod cache;
pub mod error;
pub mod lr;
pub mod oracle;
pub mod partition;
mod serde_util;
pub mod verify;
pub mod witness;
pub mod word;

pub use cache::ExpansionCache;
pub use error::{Error, Result};
pub use lr::{lr_coefficient, product_expansion, skew_expansion, LRTableau, SchurExpansion, SkewShape};
pub use partition::{contains, ComplementaryPair, Partition, Rectangle};
pub use witness::{WitnessCertificate, WitnessMethod};
pub use word::{Letter, Word};
