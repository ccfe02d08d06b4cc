use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::linear::System;
use super::InterpError;
use crate::bredon::CohomologyResult;
use crate::coeff::{GModule, NormalizedModule};
use crate::groups::Family;
use crate::intlin::{FgAbGroup, JsonInt, SparseVec, Subquotient};

/// `Der_F(G, M) / PDer_F(G, M)` with representative derivations.
#[derive(Clone, Debug)]
pub struct DerivationQuotient {
    normalized: NormalizedModule,
    sq: Subquotient,
}

impl DerivationQuotient {
    pub fn group(&self) -> &FgAbGroup {
        self.sq.group()
    }

    pub fn result(&self) -> CohomologyResult {
        CohomologyResult::new(1, self.group().normal_form().clone())
    }

    /// One derivation per normal-form generator, as `D(g)` for `g = 0..|G|` in carrier coordinates.
    pub fn representatives(&self) -> Vec<FDerivationValues> {
        let nm = self.normalized.module();
        let k = nm.carrier().ngens();
        self.sq
            .generators()
            .iter()
            .map(|z| FDerivationValues {
                values: (0..nm.group().order())
                    .map(|x| self.normalized.from_normal(&z[x * k..(x + 1) * k]).into_iter().map(JsonInt).collect())
                    .collect(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FDerivationValues {
    pub values: Vec<Vec<JsonInt>>,
}

/// A derivation `D : G -> M` with, for each `H ∈ F`, an element `m_H` such that
/// `D(h) = h·m_H − m_H` on `H`.
#[derive(Clone, Debug)]
pub struct FDerivation {
    pub values: Vec<Vec<BigInt>>,
    pub witnesses: Vec<Vec<BigInt>>,
}

impl FDerivation {
    /// Checks the derivation law and finds witnesses; `None` if `values` is not an `F`-derivation.
    /// Values are in the carrier's generator coordinates.
    pub fn new(m: &GModule, family: &Family, values: Vec<Vec<BigInt>>) -> Option<Self> {
        let g = m.group();
        let a = m.carrier();
        if values.len() != g.order() {
            return None;
        }
        for x in g.elements() {
            for y in g.elements() {
                let mut rhs = m.act(x, &values[y]);
                for (r, v) in rhs.iter_mut().zip(&values[x]) {
                    *r += v;
                }
                if !a.same_element(&values[g.mul(x, y)], &rhs) {
                    return None;
                }
            }
        }
        let normalized = m.normalized();
        let nm = normalized.module();
        let witnesses = family
            .subgroups()
            .iter()
            .map(|h| {
                // unknown m with h·m − m = D(h) for h ∈ H
                let mut sys = System::new(nm, 1);
                let mut rhs = Vec::new();
                for &x in h.members() {
                    let b = sys.new_block();
                    sys.add_matrix(b, 0, nm.action(x).sparse().columns(), false);
                    sys.add_identity(b, 0, true);
                    rhs.extend(normalized.to_normal(&values[x]));
                }
                sys.solve_affine(&rhs).map(|w| normalized.from_normal(&w))
            })
            .collect::<Option<Vec<_>>>()?;
        Some(FDerivation { values, witnesses })
    }
}

/// `Der_F(G, M)`: unknowns `D(g)` and auxiliary `m_H`, constrained by the derivation
/// law on all pairs and `D(h) = h·m_H − m_H` on each `H ∈ F`; then modulo `PDer`.
pub fn f_derivation_quotient(m: &GModule, family: &Family) -> Result<DerivationQuotient, InterpError> {
    if !family.contains_trivial() {
        return Err(InterpError::FamilyMissingTrivial);
    }
    if family.group() != m.group() {
        return Err(InterpError::GroupMismatch);
    }
    let normalized = m.normalized();
    let nm = normalized.module();
    let g = nm.group();
    let n = g.order();
    let k = nm.carrier().ngens();
    let actions: Vec<Vec<SparseVec>> = g.elements().map(|x| nm.action(x).sparse().columns().to_vec()).collect();
    let mut sys = System::new(nm, n + family.len());
    for x in g.elements() {
        for y in g.elements() {
            // D(xy) − x·D(y) − D(x)
            let b = sys.new_block();
            sys.add_identity(b, g.mul(x, y), false);
            sys.add_matrix(b, y, &actions[x], true);
            sys.add_identity(b, x, true);
        }
    }
    for (i, h) in family.subgroups().iter().enumerate() {
        for &x in h.members() {
            // D(x) − x·m_H + m_H
            let b = sys.new_block();
            sys.add_identity(b, x, false);
            sys.add_matrix(b, n + i, &actions[x], true);
            sys.add_identity(b, n + i, false);
        }
    }
    let der = sys.projected_solutions(n);
    let ambient = FgAbGroup::direct_sum(&vec![nm.carrier().clone(); n]);
    let principal: Vec<SparseVec> = (0..k)
        .map(|j| {
            let mut v: SparseVec = Vec::new();
            for x in g.elements() {
                for (i, a) in &actions[x][j] {
                    v.push((x * k + i, a.clone()));
                }
                v.push((x * k + j, -num_bigint::BigInt::from(1)));
            }
            merge(v)
        })
        .collect();
    let sq = Subquotient::build(&ambient, der, &principal)?;
    Ok(DerivationQuotient { normalized, sq })
}

fn merge(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, x) in v {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w += x,
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}
