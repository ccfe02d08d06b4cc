//! Linear systems over a diagonal module, solved with the sparse kernel routine.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::GModule;
use crate::intlin::{projected_kernel, EchelonLattice, SparseVec};

/// Columns of a system `Σ_j x_j · col_j = 0` whose rows come in blocks, one
/// block per constraint, each a copy of the module carrier.
pub(crate) struct System {
    k: usize,
    moduli: Vec<BigInt>,
    blocks: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl System {
    pub fn new(module: &GModule, vars: usize) -> Self {
        let moduli = module.carrier().diagonal_moduli().expect("diagonal carrier").to_vec();
        let k = moduli.len();
        System { k, moduli, blocks: 0, columns: vec![Vec::new(); vars * k] }
    }

    pub fn new_block(&mut self) -> usize {
        self.blocks += 1;
        self.blocks - 1
    }

    /// Adds `± x_var` into `block`.
    pub fn add_identity(&mut self, block: usize, var: usize, negative: bool) {
        let one = if negative { -BigInt::one() } else { BigInt::one() };
        for j in 0..self.k {
            self.columns[var * self.k + j].push((block * self.k + j, one.clone()));
        }
    }

    /// Adds `± A x_var` into `block`, `A` given by sparse columns.
    pub fn add_matrix(&mut self, block: usize, var: usize, a: &[SparseVec], negative: bool) {
        for (j, col) in a.iter().enumerate() {
            for (i, v) in col {
                let v = if negative { -v.clone() } else { v.clone() };
                self.columns[var * self.k + j].push((block * self.k + i, v));
            }
        }
    }

    fn row_moduli(&self) -> Vec<BigInt> {
        (0..self.blocks).flat_map(|_| self.moduli.iter().cloned()).collect()
    }

    fn merged(&self, tag: impl Fn(usize) -> Option<usize>) -> Vec<(SparseVec, SparseVec)> {
        self.columns
            .iter()
            .enumerate()
            .map(|(c, col)| {
                let mut col = col.clone();
                col.sort_by_key(|e| e.0);
                let mut merged: SparseVec = Vec::with_capacity(col.len());
                for (i, v) in col {
                    match merged.last_mut() {
                        Some((j, w)) if *j == i => *w += v,
                        _ => merged.push((i, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                (merged, tag(c).map(|t| vec![(t, BigInt::one())]).unwrap_or_default())
            })
            .collect()
    }

    /// Solutions projected onto the first `tagged_vars` variables.
    pub fn projected_solutions(&self, tagged_vars: usize) -> EchelonLattice {
        let tag_dim = tagged_vars * self.k;
        let cols = self.merged(|c| (c < tag_dim).then_some(c));
        projected_kernel(&cols, self.blocks * self.k, &self.row_moduli(), tag_dim)
    }

    /// Solves `Σ_j x_j col_j = rhs` (rhs given per row) for all variables; `None` if unsolvable.
    pub fn solve_affine(&self, rhs: &[BigInt]) -> Option<Vec<BigInt>> {
        let n = self.columns.len();
        let mut cols = self.merged(|c| Some(c + 1));
        let neg_rhs: SparseVec =
            rhs.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, -v.clone())).collect();
        cols.insert(0, (neg_rhs, vec![(0, BigInt::one())]));
        let lattice = projected_kernel(&cols, self.blocks * self.k, &self.row_moduli(), n + 1);
        let first = lattice.basis().next()?;
        if first.first() != Some(&(0, BigInt::one())) {
            return None;
        }
        let mut x = vec![BigInt::zero(); n];
        for (i, v) in first.iter().skip(1) {
            x[i - 1] = v.clone();
        }
        Some(x)
    }
}
