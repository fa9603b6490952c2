//! Exact census of 0/1-polytopes of the `n`-cube up to the symmetries of
//! the cube, by cycle-index algebra and inclusion-exclusion over
//! hyperplane sections.

pub mod census;
pub mod cycle_index;
pub mod error;
pub mod group;
pub mod hyperplane;
pub mod linalg;
pub mod oracle;
pub mod reference;
pub mod verify;

pub use error::{Error, Result};
