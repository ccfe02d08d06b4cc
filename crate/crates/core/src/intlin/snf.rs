//! Smith normal form with minimal-absolute-value pivoting.

use num_bigint::BigInt;

use super::matrix::{IntMatrix, Mat};
use super::scalar::{with_fallback, Checked, Scalar};

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | ...`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Inverse of `u`, maintained alongside it.
    pub u_inv: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d_1, ..., d_min(m,n)`, all non-negative.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !Scalar::is_zero(*d)).count()
    }
}

pub(crate) struct SnfParts<S> {
    pub d: Mat<S>,
    pub u: Option<Mat<S>>,
    pub u_inv: Option<Mat<S>>,
    pub v: Option<Mat<S>>,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Track {
    pub u: bool,
    pub v: bool,
}

/// Computes `U * A * V = D`.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let track = Track { u: true, v: true };
    let parts = with_fallback(
        || {
            let small = Mat::<i64>::convert(a)?;
            let p = snf_generic(small, track)?;
            Ok(SnfParts {
                d: p.d.to_big(),
                u: p.u.map(|m| m.to_big()),
                u_inv: p.u_inv.map(|m| m.to_big()),
                v: p.v.map(|m| m.to_big()),
            })
        },
        || snf_generic(a.clone(), track).expect("big integer arithmetic cannot overflow"),
    );
    SmithForm {
        u: parts.u.expect("tracked"),
        d: parts.d,
        v: parts.v.expect("tracked"),
        u_inv: parts.u_inv.expect("tracked"),
    }
}

/// Only the invariant diagonal, without transforms.
pub fn smith_diagonal(a: &IntMatrix) -> Vec<BigInt> {
    let track = Track { u: false, v: false };
    let d = with_fallback(
        || {
            let small = Mat::<i64>::convert(a)?;
            Ok(snf_generic(small, track)?.d.to_big())
        },
        || snf_generic(a.clone(), track).expect("big integer arithmetic cannot overflow").d,
    );
    let k = d.rows().min(d.cols());
    (0..k).map(|i| d[(i, i)].clone()).collect()
}

struct Work<S> {
    a: Mat<S>,
    u: Option<Mat<S>>,
    u_inv: Option<Mat<S>>,
    v: Option<Mat<S>>,
}

impl<S: Scalar> Work<S> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    /// `row[dst] += f * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, f: &S) -> Checked<()> {
        self.a.add_row_multiple(dst, src, f)?;
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, f)?;
        }
        if let Some(ui) = &mut self.u_inv {
            ui.add_col_multiple(src, dst, &f.neg()?)?;
        }
        Ok(())
    }

    /// `col[dst] += f * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, f: &S) -> Checked<()> {
        self.a.add_col_multiple(dst, src, f)?;
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, f)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Checked<()> {
        self.a.negate_row(i)?;
        if let Some(u) = &mut self.u {
            u.negate_row(i)?;
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i)?;
        }
        Ok(())
    }

    fn min_abs_in(
        &self,
        rows: impl Iterator<Item = usize> + Clone,
        cols: std::ops::Range<usize>,
    ) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in rows {
            for j in cols.clone() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some(b) if !x.abs_cmp_lt(&self.a[b]) => {}
                    _ => {
                        if x.is_unit() {
                            return Some((i, j));
                        }
                        best = Some((i, j));
                    }
                }
            }
        }
        best
    }
}

pub(crate) fn snf_generic<S: Scalar>(a: Mat<S>, track: Track) -> Checked<SnfParts<S>> {
    let (m, n) = a.shape();
    let mut w = Work {
        a,
        u: track.u.then(|| Mat::identity(m)),
        u_inv: track.u.then(|| Mat::identity(m)),
        v: track.v.then(|| Mat::identity(n)),
    };
    for t in 0..m.min(n) {
        let Some((pi, pj)) = w.min_abs_in(t..m, t..n) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            let p = w.a[(t, t)].clone();
            for i in t + 1..m {
                let x = w.a[(i, t)].clone();
                if !x.is_zero() {
                    let q = x.div_floor(&p);
                    w.add_row(i, t, &q.neg()?)?;
                    if !w.a[(i, t)].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..n {
                let x = w.a[(t, j)].clone();
                if !x.is_zero() {
                    let q = x.div_floor(&p);
                    w.add_col(j, t, &q.neg()?)?;
                    if !w.a[(t, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // a remainder smaller than the pivot survived; bring it up
                let col_best = w.min_abs_in(t..m, t..t + 1);
                let row_best = w.min_abs_in(std::iter::once(t), t..n);
                let pick = match (col_best, row_best) {
                    (Some(c), Some(r)) => {
                        if w.a[r].abs_cmp_lt(&w.a[c]) {
                            r
                        } else {
                            c
                        }
                    }
                    (Some(c), None) => c,
                    (None, Some(r)) => r,
                    (None, None) => unreachable!("pivot row and column cannot both vanish"),
                };
                w.swap_rows(t, pick.0);
                w.swap_cols(t, pick.1);
                continue;
            }
            // divisibility chain
            let p = w.a[(t, t)].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.a[(i, j)].mod_floor(&p).is_zero()));
            match bad {
                Some(i) => w.add_row(t, i, &S::one())?,
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t)?;
        }
    }
    Ok(SnfParts { d: w.a, u: w.u, u_inv: w.u_inv, v: w.v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Signed};

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert!(s.u.determinant().abs().is_one());
        assert!(s.v.determinant().abs().is_one());
        assert!(s.u.mul(&s.u_inv).is_identity());
        let diag = s.diagonal();
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(Scalar::is_zero(&s.d[(i, j)]));
                }
            }
        }
        for w in diag.windows(2) {
            if !Scalar::is_zero(&w[1]) {
                assert!(!Scalar::is_zero(&w[0]));
                assert!(Scalar::is_zero(&(&w[1] % &w[0])));
            }
        }
        s
    }

    #[test]
    fn zero_one_by_one() {
        let s = check(&IntMatrix::from_i64_rows(&[vec![0]]));
        assert!(s.u.is_identity() && s.v.is_identity());
        assert_eq!(s.diagonal(), vec![BigInt::from(0)]);
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&IntMatrix::identity(3));
        assert!(s.u.is_identity() && s.v.is_identity() && s.d.is_identity());
    }

    #[test]
    fn two_by_two_example() {
        // independent route: d1 = gcd of entries = 2, d1*d2 = |det| = 8
        let a = IntMatrix::from_i64_rows(&[vec![2, 4], vec![6, 8]]);
        let s = check(&a);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(smith_diagonal(&a), s.diagonal());
    }

    #[test]
    fn big_fallback_agrees() {
        let huge = i64::MAX / 3;
        let a = IntMatrix::from_i64_rows(&[vec![huge, 7], vec![5, huge - 1]]);
        let s = check(&a);
        let det = a.determinant().abs();
        let prod: BigInt = s.diagonal().iter().product();
        assert_eq!(prod, det);
    }
}
