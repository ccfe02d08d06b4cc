use num_bigint::BigInt;

use super::abgroup::FgAbGroup;
use super::matrix::IntMatrix;
use super::quotient::{homology, Subquotient};
use super::sparse::{SparseMatrix, SparseVec};
use super::IntLinError;

/// Homomorphism given on generators: column `j` is the image of source generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: SparseMatrix,
}

impl AbHom {
    /// Shape-checked constructor. Well-definedness is a separate question, see [`hom_well_defined`].
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self, IntLinError> {
        Self::from_sparse(source, target, SparseMatrix::from_dense(&matrix))
    }

    pub fn from_sparse(source: FgAbGroup, target: FgAbGroup, matrix: SparseMatrix) -> Result<Self, IntLinError> {
        if matrix.rows() != target.ngens() {
            return Err(IntLinError::ShapeMismatch {
                context: "hom matrix rows must equal target generators",
                expected: target.ngens(),
                found: matrix.rows(),
            });
        }
        if matrix.cols() != source.ngens() {
            return Err(IntLinError::ShapeMismatch {
                context: "hom matrix columns must equal source generators",
                expected: source.ngens(),
                found: matrix.cols(),
            });
        }
        Ok(AbHom { source, target, matrix })
    }

    /// Like [`AbHom::new`] but rejects maps that do not respect the relations.
    pub fn new_checked(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self, IntLinError> {
        let f = Self::new(source, target, matrix)?;
        if hom_well_defined(&f) {
            Ok(f)
        } else {
            Err(IntLinError::NotWellDefined)
        }
    }

    pub fn identity(a: &FgAbGroup) -> Self {
        AbHom { source: a.clone(), target: a.clone(), matrix: SparseMatrix::identity(a.ngens()) }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        AbHom {
            source: source.clone(),
            target: target.clone(),
            matrix: SparseMatrix::zeros(target.ngens(), source.ngens()),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    /// Dense matrix on generators.
    pub fn matrix(&self) -> IntMatrix {
        self.matrix.to_dense()
    }

    pub fn sparse(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.mul_vec(x)
    }

    pub fn apply_sparse(&self, x: &SparseVec) -> SparseVec {
        self.matrix.mul_sparse_vec(x)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &AbHom) -> Result<AbHom, IntLinError> {
        if other.target != self.source {
            return Err(IntLinError::ChainMismatch);
        }
        Ok(AbHom { source: other.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&other.matrix) })
    }

    /// Every generator maps to zero in the target.
    pub fn is_zero_map(&self) -> bool {
        (0..self.source.ngens()).all(|j| {
            let col = self.target.to_chart_sparse(self.matrix.column(j));
            chart_is_zero(&self.target, &col)
        })
    }

    /// Agreement as maps: every generator has the same image modulo target relations.
    pub fn same_map(&self, other: &AbHom) -> bool {
        self.source == other.source
            && self.target == other.target
            && AbHom {
                source: self.source.clone(),
                target: self.target.clone(),
                matrix: self.matrix.sub(&other.matrix),
            }
            .is_zero_map()
    }

    pub fn kernel(&self) -> Subquotient {
        let zero = AbHom::zero(&FgAbGroup::trivial(), &self.source);
        homology(&zero, self).expect("kernel of a well-defined map")
    }

    /// `target / image`
    pub fn cokernel(&self) -> Subquotient {
        let zero = AbHom::zero(&self.target, &FgAbGroup::trivial());
        homology(self, &zero).expect("cokernel is always defined")
    }

    /// Image as a subquotient of the target: the subgroup generated by the columns.
    pub fn image(&self) -> FgAbGroup {
        let ker = self.kernel();
        // source / kernel
        let gens: Vec<Vec<BigInt>> = ker.generators().to_vec();
        let src = &self.source;
        let incl = AbHom::new(ker.group().clone(), src.clone(), IntMatrix::from_columns(src.ngens(), &gens))
            .expect("shapes agree");
        incl.cokernel().group().clone()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().group().is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().group().is_trivial()
    }
}

fn chart_is_zero(g: &FgAbGroup, col: &SparseVec) -> bool {
    col.iter().all(|(i, v)| {
        let m = &g.moduli()[*i];
        !num_traits::Zero::is_zero(m) && num_traits::Zero::is_zero(&num_integer::Integer::mod_floor(v, m))
    })
}

/// True iff every relator of the source lands in the relation lattice of the target.
pub fn hom_well_defined(f: &AbHom) -> bool {
    f.source.relators().iter().all(|r| {
        let img = f.target.to_chart_sparse(&f.apply_sparse(r));
        chart_is_zero(&f.target, &img)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn well_definedness_examples() {
        let z2 = FgAbGroup::cyclic(2);
        let z4 = FgAbGroup::cyclic(4);
        assert!(hom_well_defined(&AbHom::identity(&z2)));
        let times2 = AbHom::new(z2.clone(), z4.clone(), IntMatrix::from_i64_rows(&[vec![2]])).unwrap();
        assert!(hom_well_defined(&times2));
        let times1 = AbHom::new(z2, z4, IntMatrix::from_i64_rows(&[vec![1]])).unwrap();
        assert!(!hom_well_defined(&times1));
    }

    #[test]
    fn kernel_image_cokernel() {
        // x2: Z/4 -> Z/4
        let z4 = FgAbGroup::cyclic(4);
        let f = AbHom::new(z4.clone(), z4.clone(), IntMatrix::from_i64_rows(&[vec![2]])).unwrap();
        assert_eq!(f.kernel().group().normal_form().to_string(), "Z/2");
        assert_eq!(f.image().normal_form().to_string(), "Z/2");
        assert_eq!(f.cokernel().group().normal_form().to_string(), "Z/2");
        assert!(!f.is_injective());
        let g = AbHom::new(z4.clone(), z4.clone(), IntMatrix::from_i64_rows(&[vec![3]])).unwrap();
        assert!(g.is_injective() && g.is_surjective());
        assert!(g.compose(&g).unwrap().same_map(&AbHom::identity(&z4)));
    }
}
