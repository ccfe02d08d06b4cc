//! Ordinary group cohomology from the normalized inhomogeneous bar complex.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::{BredonError, CohomologyResult};
use crate::coeff::GModule;
use crate::groups::FiniteGroup;
use crate::intlin::{homology, AbHom, FgAbGroup, SparseMatrix, Subquotient};

/// Normalized cochains `(G∖{e})ⁿ -> M`; tuple `(g₁..gₙ)` is block
/// `Σ (gᵢ − 1)(|G|−1)^{n−i}`.
#[derive(Clone, Debug)]
pub struct BarComplex {
    module: GModule,
    differentials: Vec<AbHom>,
    groups: Vec<FgAbGroup>,
}

fn tuple_count(g: &FiniteGroup, n: usize) -> Option<usize> {
    (g.order() - 1).checked_pow(n as u32)
}

fn decode(index: usize, n: usize, base: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    let mut r = index;
    for k in (0..n).rev() {
        t[k] = r % base + 1;
        r /= base;
    }
    t
}

fn encode(t: &[usize], base: usize) -> usize {
    t.iter().fold(0, |acc, &g| acc * base + (g - 1))
}

/// A module with a diagonal carrier, so cochain groups are direct sums of cyclic groups.
pub(crate) fn diagonal_module(m: &GModule) -> GModule {
    if m.carrier().diagonal_moduli().is_some() {
        m.clone()
    } else {
        m.normalized().module().clone()
    }
}

impl BarComplex {
    /// Degrees `0..=top` with `C^{top+1}`; fails if a cochain group exceeds `cap` blocks.
    pub fn new(m: &GModule, top: usize, cap: usize) -> Result<Self, BredonError> {
        let module = diagonal_module(m);
        let g = module.group().clone();
        let k = module.carrier().ngens();
        let mut groups = Vec::new();
        for n in 0..=top + 1 {
            let count = tuple_count(&g, n).filter(|&c| c <= cap).ok_or(BredonError::SizeLimit(format!(
                "bar complex of a group of order {} in degree {n} exceeds the cap {cap}",
                g.order()
            )))?;
            let moduli = module.carrier().diagonal_moduli().expect("diagonal");
            groups.push(FgAbGroup::from_moduli((0..count).flat_map(|_| moduli.iter().cloned()).collect()));
        }
        let base = g.order() - 1;
        let differentials = (0..=top)
            .map(|n| {
                let rows = tuple_count(&g, n + 1).expect("checked");
                let entries: Vec<Vec<(usize, usize, BigInt)>> = (0..rows)
                    .into_par_iter()
                    .map(|r| {
                        let t = decode(r, n + 1, base);
                        let mut out = Vec::new();
                        // g₁ · f(g₂..gₙ₊₁)
                        let c0 = encode(&t[1..], base);
                        for (j, col) in module.action(t[0]).sparse().columns().iter().enumerate() {
                            for (i, v) in col {
                                out.push((r * k + i, c0 * k + j, v.clone()));
                            }
                        }
                        let mut face = |u: &[usize], negative: bool| {
                            let c = encode(u, base);
                            let v = if negative { -BigInt::one() } else { BigInt::one() };
                            for i in 0..k {
                                out.push((r * k + i, c * k + i, v.clone()));
                            }
                        };
                        for i in 1..=n {
                            let prod = g.mul(t[i - 1], t[i]);
                            if prod != 0 {
                                let mut u = t[..i - 1].to_vec();
                                u.push(prod);
                                u.extend_from_slice(&t[i + 1..]);
                                face(&u, i % 2 == 1);
                            }
                        }
                        face(&t[..n], (n + 1) % 2 == 1);
                        out
                    })
                    .collect();
                let mut columns = vec![Vec::new(); groups[n].ngens()];
                for (r, c, v) in entries.into_iter().flatten() {
                    columns[c].push((r, v));
                }
                AbHom::from_sparse(
                    groups[n].clone(),
                    groups[n + 1].clone(),
                    SparseMatrix::from_columns(rows * k, columns),
                )
                .expect("shapes")
            })
            .collect();
        Ok(BarComplex { module, differentials, groups })
    }

    pub fn module(&self) -> &GModule {
        &self.module
    }

    pub fn cochain_group(&self, n: usize) -> &FgAbGroup {
        &self.groups[n]
    }

    pub fn differential(&self, n: usize) -> &AbHom {
        &self.differentials[n]
    }

    pub fn is_complex(&self) -> bool {
        self.differentials.windows(2).all(|w| w[1].compose(&w[0]).expect("chained").is_zero_map())
    }

    pub fn subquotient(&self, n: usize) -> Result<Subquotient, BredonError> {
        if n >= self.differentials.len() {
            return Err(BredonError::DegreeOutOfRange(n, self.differentials.len() - 1));
        }
        let d_in = match n {
            0 => AbHom::zero(&FgAbGroup::trivial(), &self.groups[0]),
            _ => self.differentials[n - 1].clone(),
        };
        Ok(homology(&d_in, &self.differentials[n])?)
    }

    pub fn cohomology(&self, n: usize) -> Result<CohomologyResult, BredonError> {
        Ok(CohomologyResult::new(n, self.subquotient(n)?.group().normal_form().clone()))
    }

    /// Restricts a degree-`n` cochain to tuples from `sub` (given as parent
    /// indices in local order), landing in the bar complex of the subgroup.
    pub(crate) fn restrict_cochain(&self, n: usize, x: &[BigInt], sub_elements: &[usize]) -> Vec<BigInt> {
        let k = self.module.carrier().ngens();
        let base = self.module.group().order() - 1;
        let sub_base = sub_elements.len() - 1;
        let count = sub_base.pow(n as u32);
        let mut out = Vec::with_capacity(count * k);
        for idx in 0..count {
            let t: Vec<usize> = decode(idx, n, sub_base).into_iter().map(|l| sub_elements[l]).collect();
            let b = encode(&t, base);
            out.extend_from_slice(&x[b * k..(b + 1) * k]);
        }
        out
    }
}

/// `Hⁿ(G, M)` from the bar complex.
pub fn bar_cohomology(m: &GModule, n: usize) -> Result<CohomologyResult, BredonError> {
    BarComplex::new(m, n, crate::orbitcat::DEFAULT_SIZE_CAP)?.cohomology(n)
}
