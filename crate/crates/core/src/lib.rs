//! Exact computations with column-tabloid presentations of Specht modules.
//!
//! The space `M^λ` spanned by column tabloids, the Garnir relations that cut
//! it down to the Specht module `S^λ`, the Garnir operator `φ` on two-column
//! shapes together with its eigenspaces, and the symmetric-group character
//! theory needed to identify those eigenspaces. Everything is exact: there
//! is no floating point anywhere in the crate.

pub mod chars;
pub mod error;
pub mod exactla;
pub mod garnir;
pub mod partition;
pub mod perm;
pub mod tableau;
pub mod tabloid;
pub mod twocol;
pub mod verify;

pub use error::{Error, Result};
pub use exactla::RationalMatrix;
pub use garnir::{GarnirPolicy, PolicyKind};
pub use partition::Partition;
pub use perm::Permutation;
pub use tableau::{Guard, Tableau};
pub use tabloid::TabloidVector;
