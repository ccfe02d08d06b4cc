//! Low-dimensional interpretations of Bredon cohomology: `H⁰` as a limit,
//! `H¹` through `F`-derivations and splittings, `H²` through `F`-structures,
//! and character groups of families.

mod characters;
mod derivations;
mod finite;
mod limit;
mod linear;
mod splittings;
mod structures;

pub use characters::{character_group, CharacterGroup};
pub use derivations::{f_derivation_quotient, DerivationQuotient, FDerivation, FDerivationValues};
pub use limit::h0_limit;
pub use splittings::{splittings_mod_conjugacy, SplittingClasses};
pub use structures::{
    axiom_one_lifts, check_f_structure, enumerate_f_structures, satisfies_axiom_one, AxiomViolation, FStructureClass,
    FStructureWitness, StructureReport,
};

use crate::intlin::IntLinError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InterpError {
    #[error("the family must contain the trivial subgroup")]
    FamilyMissingTrivial,
    #[error("module and family belong to different groups")]
    GroupMismatch,
    #[error("the module must be finite")]
    InfiniteModule,
    #[error("size limit: {0}")]
    SizeLimit(String),
    #[error(transparent)]
    Linear(#[from] IntLinError),
}

#[cfg(test)]
mod tests;
