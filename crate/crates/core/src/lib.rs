pub mod algebra;
pub mod constructions;
pub mod error;
pub mod group;
pub mod harness;
pub mod hughes;
pub mod perm;
pub mod structure;

pub use error::{Error, Result};
pub use group::PermGroup;
pub use perm::{compose, element_order, Permutation};
