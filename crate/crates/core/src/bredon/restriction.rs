use num_bigint::BigInt;
use serde::Serialize;

use super::bar::{diagonal_module, BarComplex};
use super::{BredonError, CohomologyResult};
use crate::coeff::GModule;
use crate::groups::{family_close, Family, SubgroupEmbedding};
use crate::intlin::{AbHom, FgAbGroup, IntMatrix};

/// Status of the `H¹(H, M) = 0` hypothesis needed to compare with `H²_F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    NotNeeded,
    Holds,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelIntersection {
    #[serde(flatten)]
    pub result: CohomologyResult,
    pub hypothesis: Hypothesis,
}

impl KernelIntersection {
    /// The result may stand in for `Hⁿ_F(G, M̲)`.
    pub fn comparable(&self) -> bool {
        self.hypothesis != Hypothesis::Violated
    }
}

/// Classes in `Hⁿ(G, M)` restricting to zero in `Hⁿ(H, M)` for every `H ∈ F`.
/// For `n = 2` also reports whether `H¹(H, M) = 0` on the conjugation closure of `F`.
pub fn restriction_kernel_intersection(
    m: &GModule,
    family: &Family,
    n: usize,
    cap: usize,
) -> Result<KernelIntersection, BredonError> {
    if !(1..=2).contains(&n) {
        return Err(BredonError::DegreeOutOfRange(n, 2));
    }
    if family.group() != m.group() {
        return Err(BredonError::GroupMismatch);
    }
    let module = diagonal_module(m);
    let bar = BarComplex::new(&module, n, cap)?;
    let hg = bar.subquotient(n)?;
    let mut targets = Vec::new();
    let mut blocks: Vec<Vec<Vec<BigInt>>> = vec![Vec::new(); hg.generators().len()];
    for h in family.subgroups() {
        let emb = SubgroupEmbedding::new(h);
        let sub = BarComplex::new(&module.restrict(&emb), n, cap)?;
        let hh = sub.subquotient(n)?;
        for (i, z) in hg.generators().iter().enumerate() {
            let r = bar.restrict_cochain(n, z, h.members());
            blocks[i].push(hh.coordinates(&r).expect("restriction of a cocycle is a cocycle"));
        }
        targets.push(hh.group().clone());
    }
    let target = FgAbGroup::direct_sum(&targets);
    let cols: Vec<Vec<BigInt>> = blocks.into_iter().map(|b| b.concat()).collect();
    let res = AbHom::new(hg.group().clone(), target.clone(), IntMatrix::from_columns(target.ngens(), &cols))?;
    let group = res.kernel().group().normal_form().clone();
    let hypothesis = if n == 1 {
        Hypothesis::NotNeeded
    } else {
        let closure = family_close(family, true, false);
        let mut holds = true;
        for h in closure.subgroups() {
            let emb = SubgroupEmbedding::new(h);
            if !BarComplex::new(&module.restrict(&emb), 1, cap)?.cohomology(1)?.group.is_trivial() {
                holds = false;
                break;
            }
        }
        if holds {
            Hypothesis::Holds
        } else {
            Hypothesis::Violated
        }
    };
    Ok(KernelIntersection { result: CohomologyResult::new(n, group), hypothesis })
}
