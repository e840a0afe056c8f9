//! Permutation groups, subgroups, homomorphisms and wreath products.

mod classes;
mod group;
mod hom;
mod monomial;
mod permutation;
mod subgroup;
mod wreath;

pub use classes::{induced_class_map, ConjugacyClassTable, TableRef};
pub use group::{GroupRef, PermGroup, CATALOG};
pub use hom::GroupHom;
pub use monomial::{monomial_representation, MonomialRepresentation};
pub use permutation::Permutation;
pub use subgroup::{closure, double_cosets, SubgroupRef};
pub use wreath::{wreath_order, DirectProduct, WreathProduct};

/// Size limits for exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group whose elements may be listed.
    pub max_elements: usize,
    /// Largest group whose subgroup classes may be enumerated.
    pub max_subgroup_order: usize,
    /// Largest explicit G-set that may be built.
    pub max_points: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_elements: 10_000,
            max_subgroup_order: 400,
            max_points: 1_000_000,
        }
    }
}
