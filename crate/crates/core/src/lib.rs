//! Exact computations in Burnside rings of wreath products.
//!
//! The crate builds finite permutation groups and their subgroup classes,
//! the Burnside ring `A(G)` with its table of marks, the subring `𝔸(G, n)` of
//! `A(G ≀ Σₙ)` indexed by decorated partitions, total power operations, the
//! parks character and the induced maps on parks. Every formula has a
//! brute-force counterpart in [`gsets`] built from explicit group actions.

pub mod burnside;
pub mod error;
pub mod groups;
pub mod gsets;
pub mod induced;
pub mod json;
pub mod linalg;
pub mod partitions;
pub mod verify;
pub mod wreath_power;

pub use burnside::{AdditiveMapMatrix, BurnsideElement, MarksVector};
pub use error::{Error, Result};
pub use groups::{
    Caps, ConjugacyClassTable, GroupHom, GroupRef, PermGroup, Permutation, SubgroupRef, TableRef,
    WreathProduct,
};
pub use gsets::FiniteGSet;
pub use induced::ParksMapMatrix;
pub use partitions::{Composition, DecoratedPartition};
pub use wreath_power::{AAElement, Level, ParksVector};
