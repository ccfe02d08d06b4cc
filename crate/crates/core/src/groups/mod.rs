//! Finite groups by Cayley table, subgroups, families of subgroups and group extensions.

mod extension;
mod family;
mod group;
mod search;
mod subgroup;

pub use extension::{GroupExtension, ModuleTables};
pub use family::{closed_families, family_close, Family, FamilyFlags};
pub use group::{named_group, small_groups, FiniteGroup};
pub use search::{fixed_point_free_prime_power_element, is_homomorphism};
pub use subgroup::{all_subgroups, subgroup_classes, subgroup_closure, Subgroup, SubgroupEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("element index {0} out of range")]
    BadIndex(usize),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("invalid extension: {0}")]
    BadExtension(String),
    #[error("the coset space has a single point")]
    SingletonAction,
    #[error("no fixed-point-free element of prime-power order exists")]
    NotFound,
}
