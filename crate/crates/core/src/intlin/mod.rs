//! Exact integer linear algebra: Smith normal form, finitely generated abelian
//! groups, homomorphisms between them and subquotients `ker / im`.

mod abgroup;
mod hom;
mod jsonint;
mod lattice;
mod matrix;
mod quotient;
mod scalar;
mod snf;
mod sparse;

pub use abgroup::{FgAbGroup, NormalForm};
pub use hom::{hom_well_defined, AbHom};
pub use jsonint::JsonInt;
pub use lattice::EchelonLattice;
pub use matrix::{IntMatrix, Mat};
pub use quotient::{homology, subquotient, Subquotient};
pub use scalar::{Checked, Overflow, Scalar};
pub use snf::{smith_diagonal, smith_normal_form, SmithForm};
pub use sparse::{dense_to_sparse, sparse_to_dense, SparseMatrix, SparseVec};

pub(crate) use lattice::projected_kernel;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntLinError {
    #[error("d_out ∘ d_in is not zero")]
    CompositionNonzero,
    #[error("groups do not chain: target of the first map differs from source of the second")]
    ChainMismatch,
    #[error("{context}: expected {expected}, found {found}")]
    ShapeMismatch { context: &'static str, expected: usize, found: usize },
    #[error("map does not send source relations into target relations")]
    NotWellDefined,
}
