use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use super::BredonError;
use crate::coeff::OrbitModule;
use crate::intlin::{homology, AbHom, FgAbGroup, JsonInt, NormalForm, SparseMatrix, Subquotient};
use crate::orbitcat::{Chain, ChainIndexer};

/// `Hⁿ` in normal form, optionally with representative cocycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyResult {
    pub degree: usize,
    #[serde(flatten)]
    pub group: NormalForm,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cocycles: Option<Vec<Cocycle>>,
}

impl CohomologyResult {
    pub fn new(degree: usize, group: NormalForm) -> Self {
        CohomologyResult { degree, group, cocycles: None }
    }
}

/// One cocycle per normal-form generator: for every chain, in chain order, the
/// value at its start object (in carrier coordinates for fixed point functors).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cocycle {
    pub values: Vec<Vec<JsonInt>>,
}

/// `Cⁿ_F(G, M) = ⊕_{chains} M(G/H₀)`, one block per chain in the canonical order.
#[derive(Clone, Debug)]
pub struct CochainGroup {
    degree: usize,
    chains: Vec<Chain>,
    offsets: Vec<usize>,
    group: FgAbGroup,
}

impl CochainGroup {
    fn new(module: &OrbitModule, degree: usize) -> Result<Self, BredonError> {
        let chains = module.category().chains(degree)?;
        let mut offsets = Vec::with_capacity(chains.len() + 1);
        let mut moduli = Vec::new();
        offsets.push(0);
        for c in &chains {
            let v = module.value(c.start);
            moduli.extend(v.diagonal_moduli().expect("normalized values").iter().cloned());
            offsets.push(moduli.len());
        }
        Ok(CochainGroup { degree, chains, offsets, group: FgAbGroup::from_moduli(moduli) })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    /// Generator range of the block of chain `i`.
    pub fn block(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }
}

fn assemble(module: &OrbitModule, from: &CochainGroup, to: &CochainGroup) -> AbHom {
    let cat = module.category();
    let n = from.degree;
    let ix = ChainIndexer::new(cat, n);
    let entries: Vec<Vec<(usize, usize, BigInt)>> = to
        .chains
        .par_iter()
        .enumerate()
        .map(|(row_chain, c)| {
            let rows = to.block(row_chain);
            let mut out = Vec::new();
            let f = &c.morphisms;
            // 0th face: M(f₁) applied to the value at the chain starting at H₁
            let col0 = from.block(ix.index(f[0].target, &f[1..])).start;
            for (j, col) in module.map(f[0]).sparse().columns().iter().enumerate() {
                for (i, v) in col {
                    out.push((rows.start + i, col0 + j, v.clone()));
                }
            }
            let mut face = |col_chain: usize, sign: bool| {
                let cols = from.block(col_chain);
                let v = if sign { -BigInt::one() } else { BigInt::one() };
                for k in 0..rows.len() {
                    out.push((rows.start + k, cols.start + k, v.clone()));
                }
            };
            for i in 1..=n {
                let mut g = f[..i - 1].to_vec();
                g.push(cat.compose(f[i - 1], f[i]).expect("chain is composable"));
                g.extend_from_slice(&f[i + 1..]);
                face(ix.index(c.start, &g), i % 2 == 1);
            }
            face(ix.index(c.start, &f[..n]), (n + 1) % 2 == 1);
            out
        })
        .collect();
    let mut columns: Vec<Vec<(usize, BigInt)>> = vec![Vec::new(); from.group.ngens()];
    for (r, c, v) in entries.into_iter().flatten() {
        columns[c].push((r, v));
    }
    let matrix = SparseMatrix::from_columns(to.group.ngens(), columns);
    AbHom::from_sparse(from.group.clone(), to.group.clone(), matrix).expect("block shapes agree")
}

/// The standard cochain complex of an orbit module, degrees `0..=top`
/// (with `C^{top+1}` so that `H^top` is defined).
#[derive(Clone, Debug)]
pub struct BredonComplex {
    module: OrbitModule,
    cochains: Vec<CochainGroup>,
    differentials: Vec<AbHom>,
}

impl BredonComplex {
    pub fn new(module: &OrbitModule, top: usize) -> Result<Self, BredonError> {
        let module = module.normalized();
        let cochains = (0..=top + 1).map(|n| CochainGroup::new(&module, n)).collect::<Result<Vec<_>, _>>()?;
        let differentials = (0..=top).map(|n| assemble(&module, &cochains[n], &cochains[n + 1])).collect();
        Ok(BredonComplex { module, cochains, differentials })
    }

    pub fn top(&self) -> usize {
        self.differentials.len() - 1
    }

    pub fn module(&self) -> &OrbitModule {
        &self.module
    }

    pub fn cochain_group(&self, n: usize) -> &CochainGroup {
        &self.cochains[n]
    }

    /// `dⁿ : Cⁿ -> Cⁿ⁺¹`
    pub fn differential(&self, n: usize) -> &AbHom {
        &self.differentials[n]
    }

    /// Whether `d^{n+1} ∘ dⁿ = 0` for every pair held.
    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].compose(&w[0]).expect("chained").is_zero_map())
    }

    fn incoming(&self, n: usize) -> AbHom {
        if n == 0 {
            AbHom::zero(&FgAbGroup::trivial(), self.cochains[0].group())
        } else {
            self.differentials[n - 1].clone()
        }
    }

    /// `ker dⁿ / im dⁿ⁻¹` with its coordinate maps.
    pub fn subquotient(&self, n: usize) -> Result<Subquotient, BredonError> {
        if n > self.top() {
            return Err(BredonError::DegreeOutOfRange(n, self.top()));
        }
        Ok(homology(&self.incoming(n), &self.differentials[n])?)
    }

    pub fn cohomology(&self, n: usize) -> Result<CohomologyResult, BredonError> {
        Ok(CohomologyResult::new(n, self.subquotient(n)?.group().normal_form().clone()))
    }

    pub fn cohomology_with_cocycles(&self, n: usize) -> Result<CohomologyResult, BredonError> {
        let sq = self.subquotient(n)?;
        let cochains = &self.cochains[n];
        let fixed = self.module.fixed_point_data();
        let cocycles = sq
            .generators()
            .iter()
            .map(|z| {
                let values = (0..cochains.chains.len())
                    .map(|i| {
                        let block = &z[cochains.block(i)];
                        let v = match fixed {
                            Some(fd) => fd.invariants[cochains.chains[i].start].inclusion().apply(block),
                            None => block.to_vec(),
                        };
                        v.into_iter().map(JsonInt).collect()
                    })
                    .collect();
                Cocycle { values }
            })
            .collect();
        Ok(CohomologyResult { degree: n, group: sq.group().normal_form().clone(), cocycles: Some(cocycles) })
    }
}

/// `dⁿ` of the standard complex.
pub fn differential(module: &OrbitModule, n: usize) -> Result<AbHom, BredonError> {
    let module = module.normalized();
    let from = CochainGroup::new(&module, n)?;
    let to = CochainGroup::new(&module, n + 1)?;
    Ok(assemble(&module, &from, &to))
}

/// `Hⁿ_F(G, M)` as `ker dⁿ / im dⁿ⁻¹`.
pub fn bredon_cohomology(module: &OrbitModule, n: usize) -> Result<CohomologyResult, BredonError> {
    let module = module.normalized();
    let here = CochainGroup::new(&module, n)?;
    let next = CochainGroup::new(&module, n + 1)?;
    let d_in = match n {
        0 => AbHom::zero(&FgAbGroup::trivial(), here.group()),
        _ => assemble(&module, &CochainGroup::new(&module, n - 1)?, &here),
    };
    let d_out = assemble(&module, &here, &next);
    Ok(CohomologyResult::new(n, homology(&d_in, &d_out)?.group().normal_form().clone()))
}
