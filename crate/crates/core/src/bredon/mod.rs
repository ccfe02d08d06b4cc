//! Bredon cohomology from the standard cochain complex over the orbit category,
//! ordinary cohomology from the bar complex, and restriction-kernel intersections.
//!
//! A degree-`n` cochain assigns to each chain `(id^{H₀}, f₁, …, fₙ)` a value in
//! `M(G/H₀)`. The differential is
//!
//! ```text
//! dⁿ(f)(f₁,…,fₙ₊₁) = M(f₁)(f(f₂,…,fₙ₊₁)) + Σᵢ (−1)ⁱ f(…, fᵢ₊₁∘fᵢ, …) + (−1)ⁿ⁺¹ f(f₁,…,fₙ)
//! ```

mod bar;
mod complex;
mod restriction;

pub use bar::{bar_cohomology, BarComplex};
pub use complex::{bredon_cohomology, differential, BredonComplex, CochainGroup, Cocycle, CohomologyResult};
pub use restriction::{restriction_kernel_intersection, Hypothesis, KernelIntersection};

use crate::coeff::CoeffError;
use crate::intlin::IntLinError;
use crate::orbitcat::OrbitError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BredonError {
    #[error("size limit: {0}")]
    SizeLimit(String),
    #[error("degree {0} is outside the computed range 0..={1}")]
    DegreeOutOfRange(usize, usize),
    #[error("module and family belong to different groups")]
    GroupMismatch,
    #[error(transparent)]
    Linear(#[from] IntLinError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("orbit category: {0}")]
    Orbit(OrbitError),
}

impl From<OrbitError> for BredonError {
    fn from(e: OrbitError) -> Self {
        match e {
            OrbitError::SizeLimit { .. } => BredonError::SizeLimit(e.to_string()),
            other => BredonError::Orbit(other),
        }
    }
}

#[cfg(test)]
mod tests;
