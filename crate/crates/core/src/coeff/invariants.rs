use num_bigint::BigInt;

use super::GModule;
use crate::groups::Subgroup;
use crate::intlin::{AbHom, FgAbGroup, IntMatrix, SparseMatrix, Subquotient};

/// `M^H` as a subgroup of the carrier, with its own normal-form presentation.
#[derive(Clone, Debug)]
pub struct InvariantSubgroup {
    subgroup: Subgroup,
    sq: Subquotient,
    inclusion: AbHom,
}

impl InvariantSubgroup {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// `M^H` in normal form.
    pub fn group(&self) -> &FgAbGroup {
        self.sq.group()
    }

    /// Generators of `M^H` in carrier coordinates, matching [`InvariantSubgroup::group`].
    pub fn generators(&self) -> &[Vec<BigInt>] {
        self.sq.generators()
    }

    pub fn inclusion(&self) -> &AbHom {
        &self.inclusion
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.sq.contains(x)
    }

    /// Coordinates of a fixed element in the generators of `M^H`.
    pub fn coordinates(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        self.sq.coordinates(x)
    }
}

/// `{m : h·m = m for all h ∈ H}`, the kernel of `m ↦ (s·m − m)_s` over generators `s` of `H`.
pub fn invariants(m: &GModule, h: &Subgroup) -> InvariantSubgroup {
    assert!(h.group() == m.group(), "subgroup of a different group");
    let a = m.carrier();
    let gens = h.generators();
    let target = FgAbGroup::direct_sum(&vec![a.clone(); gens.len()]);
    let n = a.ngens();
    let mut cols: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); n];
    for (b, &s) in gens.iter().enumerate() {
        let diff = m.action(s).sparse().sub(&SparseMatrix::identity(n));
        for (j, col) in diff.columns().iter().enumerate() {
            cols[j].extend(col.iter().map(|(i, v)| (b * n + i, v.clone())));
        }
    }
    let f = AbHom::from_sparse(a.clone(), target, SparseMatrix::from_columns(gens.len() * n, cols)).expect("shapes");
    let sq = f.kernel();
    let inclusion =
        AbHom::new(sq.group().clone(), a.clone(), IntMatrix::from_columns(n, sq.generators())).expect("shapes");
    InvariantSubgroup { subgroup: h.clone(), sq, inclusion }
}
