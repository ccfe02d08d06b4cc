//! Sparse column elimination over the integers.
//!
//! [`eliminate`] walks the rows top to bottom. Columns are kept in buckets by
//! their leading row; at row `r` every column of bucket `r` is folded into a
//! single pivot with unimodular gcd steps, and the other columns move on to
//! later buckets. Pivots come out in column-echelon form. Columns whose main
//! part vanishes carry, in their tags, generators of the kernel (or of its
//! projection when the tags only record some of the variables). A row may
//! carry a modulus; the column `modulus * e_r` is injected when row `r` is
//! reached, so congruence constraints never materialise a diagonal block.

use num_bigint::BigInt;

use super::scalar::{with_fallback, Checked, Scalar};
use super::sparse::SparseVec;

pub(crate) type Sv<S> = Vec<(usize, S)>;

#[derive(Debug, Clone)]
pub(crate) struct Column<S> {
    pub main: Sv<S>,
    pub tag: Sv<S>,
}

#[derive(Debug, Clone)]
pub(crate) struct Eliminated<S> {
    /// `(pivot row, column)`, ordered by pivot row.
    pub pivots: Vec<(usize, Column<S>)>,
    /// Tags of the columns whose main part became zero.
    pub kernel: Vec<Sv<S>>,
}

/// `fa * a + fb * b`
fn lin_comb<S: Scalar>(a: &[(usize, S)], fa: &S, b: &[(usize, S)], fb: &S) -> Checked<Sv<S>> {
    let mut out = Vec::with_capacity(a.len().max(b.len()));
    let (mut i, mut j) = (0, 0);
    let fa_one = *fa == S::one();
    while i < a.len() || j < b.len() {
        let ia = a.get(i).map_or(usize::MAX, |e| e.0);
        let jb = b.get(j).map_or(usize::MAX, |e| e.0);
        let (idx, v) = if ia < jb {
            i += 1;
            (ia, if fa_one { a[i - 1].1.clone() } else { fa.mul(&a[i - 1].1)? })
        } else if jb < ia {
            j += 1;
            (jb, fb.mul(&b[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            let x = if fa_one { a[i - 1].1.clone() } else { fa.mul(&a[i - 1].1)? };
            (ia, x.add_mul(fb, &b[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((idx, v));
        }
    }
    Ok(out)
}

fn lead<S>(c: &Column<S>) -> Option<&(usize, S)> {
    c.main.first()
}

/// Makes `a` hold the gcd at its leading row `r` and `b` vanish there.
fn gcd_step<S: Scalar>(a: &mut Column<S>, b: &mut Column<S>) -> Checked<()> {
    let x = lead(a).expect("pivot has a leading entry").1.clone();
    let y = lead(b).expect("hit has a leading entry").1.clone();
    if y.mod_floor(&x).is_zero() {
        let q = y.div_floor(&x).neg()?;
        b.main = lin_comb(&b.main, &S::one(), &a.main, &q)?;
        b.tag = lin_comb(&b.tag, &S::one(), &a.tag, &q)?;
        return Ok(());
    }
    let (g, s, t) = S::ext_gcd(&x, &y)?;
    let yg = y.div_floor(&g);
    let xg = x.div_floor(&g).neg()?;
    let na = Column { main: lin_comb(&a.main, &s, &b.main, &t)?, tag: lin_comb(&a.tag, &s, &b.tag, &t)? };
    let nb = Column { main: lin_comb(&a.main, &yg, &b.main, &xg)?, tag: lin_comb(&a.tag, &yg, &b.tag, &xg)? };
    *a = na;
    *b = nb;
    Ok(())
}

/// Runs the elimination. `moduli[r]`, when nonzero, injects the column
/// `moduli[r] * e_r` (with an empty tag) as row `r` is reached.
pub(crate) fn eliminate<S: Scalar>(columns: Vec<Column<S>>, nrows: usize, moduli: &[S]) -> Checked<Eliminated<S>> {
    debug_assert!(moduli.is_empty() || moduli.len() == nrows);
    let mut buckets: Vec<Vec<Column<S>>> = (0..nrows).map(|_| Vec::new()).collect();
    let mut kernel = Vec::new();
    let park = |c: Column<S>, buckets: &mut Vec<Vec<Column<S>>>, kernel: &mut Vec<Sv<S>>| match lead(&c) {
        Some(&(r, _)) => buckets[r].push(c),
        None => {
            if !c.tag.is_empty() {
                kernel.push(c.tag)
            }
        }
    };
    for c in columns {
        park(c, &mut buckets, &mut kernel);
    }
    let mut pivots = Vec::new();
    for r in 0..nrows {
        if let Some(m) = moduli.get(r).filter(|m| !m.is_zero()) {
            buckets[r].push(Column { main: vec![(r, m.clone())], tag: Vec::new() });
        }
        let mut hits = std::mem::take(&mut buckets[r]);
        if hits.is_empty() {
            continue;
        }
        // smallest leading entry first, fewer nonzeros breaking ties
        let best = (0..hits.len())
            .min_by(|&i, &j| {
                let (a, b) = (&hits[i], &hits[j]);
                let (x, y) = (&lead(a).unwrap().1, &lead(b).unwrap().1);
                if x.abs_cmp_lt(y) {
                    std::cmp::Ordering::Less
                } else if y.abs_cmp_lt(x) {
                    std::cmp::Ordering::Greater
                } else {
                    (a.main.len() + a.tag.len()).cmp(&(b.main.len() + b.tag.len()))
                }
            })
            .unwrap();
        let mut pivot = hits.swap_remove(best);
        for mut c in hits {
            gcd_step(&mut pivot, &mut c)?;
            park(c, &mut buckets, &mut kernel);
        }
        if lead(&pivot).unwrap().1.is_negative() {
            for e in pivot.main.iter_mut().chain(pivot.tag.iter_mut()) {
                e.1 = e.1.neg()?;
            }
        }
        pivots.push((r, pivot));
    }
    Ok(Eliminated { pivots, kernel })
}

pub(crate) fn sv_to_small(v: &SparseVec) -> Checked<Sv<i64>> {
    v.iter().map(|(i, x)| Ok((*i, <i64 as Scalar>::from_big(x)?))).collect()
}

pub(crate) fn sv_to_big<S: Scalar>(v: &Sv<S>) -> SparseVec {
    v.iter().map(|(i, x)| (*i, x.to_big())).collect()
}

/// Lattice `{ tag(x) : main(x) = 0 mod moduli }` where `columns[j] = (main, tag)` is the image
/// of the `j`-th variable. Runs in machine words and retries with big integers on overflow.
pub(crate) fn projected_kernel(
    columns: &[(SparseVec, SparseVec)],
    nrows: usize,
    moduli: &[BigInt],
    tag_dim: usize,
) -> EchelonLattice {
    let gens = with_fallback(
        || {
            let cols = columns
                .iter()
                .map(|(m, t)| Ok(Column { main: sv_to_small(m)?, tag: sv_to_small(t)? }))
                .collect::<Checked<Vec<_>>>()?;
            let md = moduli.iter().map(<i64 as Scalar>::from_big).collect::<Checked<Vec<_>>>()?;
            let e = eliminate(cols, nrows, &md)?;
            Ok(e.kernel.iter().map(sv_to_big).collect::<Vec<_>>())
        },
        || {
            let cols = columns.iter().map(|(m, t)| Column { main: m.clone(), tag: t.clone() }).collect();
            eliminate::<BigInt>(cols, nrows, moduli).expect("big integers do not overflow").kernel
        },
    );
    EchelonLattice::span_sparse(tag_dim, &gens)
}

/// A sublattice of `Z^n` stored by a column-echelon basis.
#[derive(Debug, Clone, PartialEq)]
pub struct EchelonLattice {
    dim: usize,
    /// `(pivot row, basis vector)`, strictly increasing pivot rows.
    basis: Vec<(usize, SparseVec)>,
}

impl EchelonLattice {
    pub fn zero(dim: usize) -> Self {
        EchelonLattice { dim, basis: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        EchelonLattice { dim, basis: (0..dim).map(|i| (i, vec![(i, BigInt::from(1))])).collect() }
    }

    /// Lattice spanned by dense vectors of length `dim`.
    pub fn span(dim: usize, gens: &[Vec<BigInt>]) -> Self {
        let sparse: Vec<SparseVec> = gens.iter().map(|g| super::sparse::dense_to_sparse(g)).collect();
        Self::span_sparse(dim, &sparse)
    }

    pub fn span_sparse(dim: usize, gens: &[SparseVec]) -> Self {
        let basis = with_fallback(
            || {
                let cols = gens
                    .iter()
                    .map(|g| Ok(Column { main: sv_to_small(g)?, tag: Vec::new() }))
                    .collect::<Checked<Vec<_>>>()?;
                let e = eliminate(cols, dim, &[])?;
                Ok(e.pivots.into_iter().map(|(r, c)| (r, sv_to_big(&c.main))).collect())
            },
            || {
                let cols = gens.iter().map(|g| Column { main: g.clone(), tag: Vec::new() }).collect();
                let e = eliminate::<BigInt>(cols, dim, &[]).expect("big integers do not overflow");
                e.pivots.into_iter().map(|(r, c)| (r, c.main)).collect()
            },
        );
        EchelonLattice { dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.basis.iter().map(|(_, v)| v)
    }

    pub fn basis_vectors(&self) -> Vec<Vec<BigInt>> {
        self.basis().map(|v| super::sparse::sparse_to_dense(v, self.dim)).collect()
    }

    /// Integer coordinates of `v` in the basis, or `None` if `v` is not in the lattice.
    pub fn solve(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.dim, "vector length does not match lattice dimension");
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        let mut next_row = 0;
        for (r, b) in &self.basis {
            if rest[next_row..*r].iter().any(|x| !Scalar::is_zero(x)) {
                return None;
            }
            let p = &b[0].1;
            let x = &rest[*r];
            if !Scalar::is_zero(&Scalar::mod_floor(x, p)) {
                return None;
            }
            let q = Scalar::div_floor(x, p);
            if !Scalar::is_zero(&q) {
                for (i, bv) in b {
                    rest[*i] -= &q * bv;
                }
            }
            coords.push(q);
            next_row = r + 1;
        }
        if rest[next_row..].iter().any(|x| !Scalar::is_zero(x)) {
            return None;
        }
        Some(coords)
    }

    /// [`EchelonLattice::solve`] for a sparse vector; coordinates come back sparse.
    pub fn solve_sparse(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut rest: std::collections::BTreeMap<usize, BigInt> = v.iter().cloned().collect();
        let mut coords = Vec::new();
        while let Some((&r, x)) = rest.iter().next() {
            let k = self.basis.binary_search_by_key(&r, |(p, _)| *p).ok()?;
            let b = &self.basis[k].1;
            let p = &b[0].1;
            if !Scalar::is_zero(&Scalar::mod_floor(x, p)) {
                return None;
            }
            let q = Scalar::div_floor(x, p);
            for (i, bv) in b {
                let e = rest.entry(*i).or_insert_with(|| BigInt::from(0));
                *e -= &q * bv;
                if Scalar::is_zero(e) {
                    rest.remove(i);
                }
            }
            coords.push((k, q));
        }
        coords.sort_unstable_by_key(|e| e.0);
        Some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.solve(v).is_some()
    }

    /// Maps lattice coordinates back to the ambient vector.
    pub fn combine(&self, coords: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::from(0); self.dim];
        for (c, (_, b)) in coords.iter().zip(&self.basis) {
            if Scalar::is_zero(c) {
                continue;
            }
            for (i, x) in b {
                out[*i] += c * x;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn span_and_membership() {
        let l = EchelonLattice::span(3, &[big(&[2, 0, 0]), big(&[0, 3, 0]), big(&[2, 3, 0])]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&big(&[4, -3, 0])));
        assert!(!l.contains(&big(&[1, 0, 0])));
        assert!(!l.contains(&big(&[0, 0, 1])));
        let c = l.solve(&big(&[6, 9, 0])).unwrap();
        assert_eq!(l.combine(&c), big(&[6, 9, 0]));
    }

    #[test]
    fn kernel_with_moduli() {
        // x in Z^2 with x0 + x1 = 0 mod 4: spanned by (1,-1), (4,0)
        let one = BigInt::from(1);
        let cols =
            vec![(vec![(0, one.clone())], vec![(0, one.clone())]), (vec![(0, one.clone())], vec![(1, one.clone())])];
        let l = projected_kernel(&cols, 1, &[BigInt::from(4)], 2);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&big(&[1, -1])));
        assert!(l.contains(&big(&[4, 0])));
        assert!(l.contains(&big(&[2, 2])));
        assert!(!l.contains(&big(&[1, 0])));
        assert!(!l.contains(&big(&[2, 0])));
    }

    #[test]
    fn projection_of_kernel() {
        // variables (d, m) with d - 2m = 0: projection onto d is 2Z
        let cols =
            vec![(vec![(0, BigInt::from(1))], vec![(0, BigInt::from(1))]), (vec![(0, BigInt::from(-2))], vec![])];
        let l = projected_kernel(&cols, 1, &[], 1);
        assert!(l.contains(&big(&[2])));
        assert!(!l.contains(&big(&[1])));
    }
}
