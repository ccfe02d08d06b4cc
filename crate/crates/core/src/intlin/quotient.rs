//! Subquotients `K / I` of a finitely generated abelian group.
//!
//! `K` is held as an echelon lattice in the chart coordinates of the ambient
//! group. The relations `I` are rewritten in a basis of `K`, unit pivots are
//! eliminated (a Tietze reduction that keeps a record of every substitution),
//! and the small remainder goes through Smith normal form. The records give
//! coordinates of any element of `K` and lifts of the normal-form generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::abgroup::FgAbGroup;
use super::hom::AbHom;
use super::lattice::{projected_kernel, EchelonLattice};
use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use super::sparse::SparseVec;
use super::IntLinError;

#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: FgAbGroup,
    kernel: EchelonLattice,
    /// Unit eliminations in kernel coordinates: `(coordinate, relation)` with `relation[coordinate] = ±1`.
    steps: Vec<(usize, SparseVec)>,
    survivors: Vec<usize>,
    /// Rows of the Smith transform kept for nontrivial factors.
    u: IntMatrix,
    moduli: Vec<BigInt>,
    lifts: Vec<Vec<BigInt>>,
    group: FgAbGroup,
}

impl Subquotient {
    /// `kernel / (span(image) + ambient relations)`, all in chart coordinates of `ambient`.
    pub(crate) fn build(ambient: &FgAbGroup, kernel: EchelonLattice, image: &[SparseVec]) -> Result<Self, IntLinError> {
        let k = kernel.rank();
        let mut rels: Vec<SparseVec> = Vec::new();
        let relators = chart_relators(ambient);
        for g in image.iter().chain(&relators) {
            let s = kernel.solve_sparse(g).ok_or(IntLinError::CompositionNonzero)?;
            if !s.is_empty() {
                rels.push(s);
            }
        }
        let (steps, rels) = tietze(rels);
        let mut eliminated = vec![false; k];
        for (r, _) in &steps {
            eliminated[*r] = true;
        }
        let survivors: Vec<usize> = (0..k).filter(|&i| !eliminated[i]).collect();
        let mut pos = vec![usize::MAX; k];
        for (p, &s) in survivors.iter().enumerate() {
            pos[s] = p;
        }
        let s = survivors.len();
        let reduced: Vec<SparseVec> =
            rels.iter().map(|r| r.iter().map(|(i, v)| (pos[*i], v.clone())).collect()).collect();
        let basis = EchelonLattice::span_sparse(s, &reduced).basis_vectors();
        let rel_matrix = IntMatrix::from_columns(s, &basis);
        let snf = smith_normal_form(&rel_matrix);
        let diag = snf.diagonal();
        let modulus = |i: usize| diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        let keep: Vec<usize> = (0..s).filter(|&i| !modulus(i).is_one()).collect();
        let u = IntMatrix::from_fn(keep.len(), s, |r, c| snf.u[(keep[r], c)].clone());
        let moduli: Vec<BigInt> = keep.iter().map(|&i| modulus(i)).collect();
        let lifts = keep
            .iter()
            .map(|&i| {
                let mut kc = vec![BigInt::zero(); k];
                for (p, &sv) in survivors.iter().enumerate() {
                    kc[sv] = snf.u_inv[(p, i)].clone();
                }
                ambient.lift_chart(&kernel.combine(&kc))
            })
            .collect();
        let group = FgAbGroup::from_moduli(moduli.clone());
        Ok(Subquotient { ambient: ambient.clone(), kernel, steps, survivors, u, moduli, lifts, group })
    }

    /// The subquotient in normal form: generator `i` has order `moduli[i]` (0 = free).
    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn ambient(&self) -> &FgAbGroup {
        &self.ambient
    }

    /// Representatives in the ambient generators of the normal-form generators.
    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.lifts
    }

    /// Whether `x` (ambient generator coordinates) lies in the numerator `K`.
    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.kernel.contains(&self.ambient.to_chart(x))
    }

    /// Coordinates of the class of `x` in the normal-form generators, reduced
    /// modulo the torsion orders; `None` when `x` is not in `K`.
    pub fn coordinates(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut y = self.kernel.solve(&self.ambient.to_chart(x))?;
        for (r, c) in &self.steps {
            if y[*r].is_zero() {
                continue;
            }
            let f = &y[*r] * &c.iter().find(|(i, _)| i == r).expect("pivot entry").1;
            for (i, v) in c {
                y[*i] -= &f * v;
            }
        }
        let ys: Vec<BigInt> = self.survivors.iter().map(|&i| y[i].clone()).collect();
        let mut z = self.u.mul_vec(&ys);
        for (v, m) in z.iter_mut().zip(&self.moduli) {
            if !m.is_zero() {
                *v = v.mod_floor(m);
            }
        }
        Some(z)
    }

    /// `x` lies in the denominator.
    pub fn is_trivial_class(&self, x: &[BigInt]) -> bool {
        self.coordinates(x).is_some_and(|z| z.iter().all(Zero::is_zero))
    }
}

fn chart_relators(g: &FgAbGroup) -> Vec<SparseVec> {
    g.moduli().iter().enumerate().filter(|(_, m)| !m.is_zero()).map(|(i, m)| vec![(i, m.clone())]).collect()
}

/// `a + f * b`, sparse.
fn axpy(a: &SparseVec, f: &BigInt, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ia = a.get(i).map_or(usize::MAX, |e| e.0);
        let jb = b.get(j).map_or(usize::MAX, |e| e.0);
        let (idx, v) = if ia < jb {
            i += 1;
            (ia, a[i - 1].1.clone())
        } else if jb < ia {
            j += 1;
            (jb, f * &b[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (ia, &a[i - 1].1 + f * &b[j - 1].1)
        };
        if !v.is_zero() {
            out.push((idx, v));
        }
    }
    out
}

/// Repeatedly removes a generator that some relation expresses through the others.
fn tietze(mut rels: Vec<SparseVec>) -> (Vec<(usize, SparseVec)>, Vec<SparseVec>) {
    let mut steps = Vec::new();
    loop {
        // shortest relation with a unit entry
        let pick = rels
            .iter()
            .enumerate()
            .filter_map(|(j, r)| r.iter().find(|(_, v)| v.abs().is_one()).map(|(i, _)| (r.len(), j, *i)))
            .min();
        let Some((_, j, r)) = pick else { break };
        let c = rels.swap_remove(j);
        let sign = c.iter().find(|(i, _)| *i == r).unwrap().1.clone();
        for other in rels.iter_mut() {
            if let Ok(p) = other.binary_search_by_key(&r, |e| e.0) {
                let f = -(&other[p].1 * &sign);
                *other = axpy(other, &f, &c);
            }
        }
        rels.retain(|v| !v.is_empty());
        steps.push((r, c));
    }
    (steps, rels)
}

/// `ker(d_out) / im(d_in)` with its coordinate maps.
pub fn homology(d_in: &AbHom, d_out: &AbHom) -> Result<Subquotient, IntLinError> {
    if d_in.target() != d_out.source() {
        return Err(IntLinError::ChainMismatch);
    }
    let b = d_out.source();
    let c = d_out.target();
    let n = b.chart_dim();
    let columns: Vec<(SparseVec, SparseVec)> = (0..n)
        .map(|j| {
            let x = b.lift_chart_sparse(&vec![(j, BigInt::one())]);
            (c.to_chart_sparse(&d_out.apply_sparse(&x)), vec![(j, BigInt::one())])
        })
        .collect();
    let kernel = projected_kernel(&columns, c.chart_dim(), c.moduli(), n);
    if chart_relators(b).iter().any(|r| kernel.solve_sparse(r).is_none()) {
        return Err(IntLinError::NotWellDefined);
    }
    let image: Vec<SparseVec> = d_in.sparse().columns().iter().map(|col| b.to_chart_sparse(col)).collect();
    Subquotient::build(b, kernel, &image)
}

/// Normal form of `ker(d_out) / im(d_in)`.
pub fn subquotient(d_in: &AbHom, d_out: &AbHom) -> Result<FgAbGroup, IntLinError> {
    Ok(homology(d_in, d_out)?.group().clone())
}
