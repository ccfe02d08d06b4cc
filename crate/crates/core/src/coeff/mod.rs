//! Coefficient systems: `G`-modules, invariant subgroups, fixed point functors
//! and general orbit modules.

mod gmodule;
mod invariants;
mod orbit;

pub use gmodule::{FiniteModule, GModule, NormalizedModule};
pub use invariants::{invariants, InvariantSubgroup};
pub use orbit::{fixed_point_functor, fixed_point_functor_on, restrict_module, FixedPointData, OrbitModule};

use crate::intlin::IntLinError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("expected {expected} action matrices, found {found}")]
    WrongMatrixCount { expected: usize, found: usize },
    #[error("expected {expected} values, found {found}")]
    WrongValueCount { expected: usize, found: usize },
    #[error("action of element {0} does not respect the relations")]
    NotWellDefined(usize),
    #[error("the identity element does not act as the identity")]
    IdentityActsNontrivially,
    #[error("action({0}) ∘ action({1}) differs from the action of their product")]
    NotAnAction(usize, usize),
    #[error("the given elements do not generate the group")]
    GeneratorsDoNotGenerate,
    #[error("a sign action needs a subgroup of index 2")]
    NotIndexTwo,
    #[error("module and family belong to different groups")]
    GroupMismatch,
    #[error("functoriality violated: {0}")]
    FunctorialityViolation(String),
    #[error("some H ∩ S is not in the family, so the restriction has no value there")]
    NotRestrictable,
    #[error(transparent)]
    Linear(#[from] IntLinError),
}
