use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::IntMatrix;

/// Sparse vector: `(index, value)` pairs, indices strictly increasing, no zeros.
pub type SparseVec = Vec<(usize, BigInt)>;

/// Column-compressed integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, columns: (0..n).map(|i| vec![(i, BigInt::from(1))]).collect() }
    }

    /// Builds from columns; entries are sorted and merged, zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, BigInt)>>) -> Self {
        let columns = columns.into_iter().map(|c| normalize(c, rows)).collect();
        SparseMatrix { rows, columns }
    }

    pub fn from_dense(m: &IntMatrix) -> Self {
        let columns = (0..m.cols())
            .map(|j| (0..m.rows()).filter(|&i| !m[(i, j)].is_zero()).map(|i| (i, m[(i, j)].clone())).collect())
            .collect();
        SparseMatrix { rows: m.rows(), columns }
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows, self.cols());
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c {
                out[(*i, j)] = v.clone();
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols(), "vector length mismatch");
        let mut out = vec![BigInt::zero(); self.rows];
        for (x, col) in v.iter().zip(&self.columns) {
            if x.is_zero() {
                continue;
            }
            for (i, a) in col {
                out[*i] += x * a;
            }
        }
        out
    }

    pub fn mul_sparse_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = vec![BigInt::zero(); self.rows];
        for (j, x) in v {
            for (i, a) in &self.columns[*j] {
                out[*i] += x * a;
            }
        }
        dense_to_sparse(&out)
    }

    /// `self * other`
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), other.rows, "inner dimension mismatch");
        SparseMatrix { rows: self.rows, columns: other.columns.iter().map(|c| self.mul_sparse_vec(c)).collect() }
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols()), (other.rows, other.cols()), "shape mismatch");
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| {
                let mut merged: Vec<(usize, BigInt)> = a.clone();
                merged.extend(b.iter().map(|(i, v)| (*i, -v)));
                normalize(merged, self.rows)
            })
            .collect();
        SparseMatrix { rows: self.rows, columns }
    }
}

fn normalize(mut c: Vec<(usize, BigInt)>, rows: usize) -> SparseVec {
    c.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(c.len());
    for (i, v) in c {
        assert!(i < rows, "row index {i} out of range {rows}");
        match out.last_mut() {
            Some((j, w)) if *j == i => *w += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

pub fn dense_to_sparse(v: &[BigInt]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dense_round_trip_and_product() {
        let a = IntMatrix::from_i64_rows(&[vec![1, 0, 2], vec![0, -3, 0]]);
        let b = IntMatrix::from_i64_rows(&[vec![1, 1], vec![0, 2], vec![5, 0]]);
        let sa = SparseMatrix::from_dense(&a);
        assert_eq!(sa.to_dense(), a);
        assert_eq!(sa.nnz(), 3);
        assert_eq!(sa.mul(&SparseMatrix::from_dense(&b)).to_dense(), a.mul(&b));
    }

    #[test]
    fn from_columns_merges_duplicates() {
        let m = SparseMatrix::from_columns(
            2,
            vec![vec![(1, BigInt::from(2)), (0, BigInt::from(1)), (1, BigInt::from(-2))]],
        );
        assert_eq!(m.column(0), &vec![(0, BigInt::from(1))]);
    }
}
