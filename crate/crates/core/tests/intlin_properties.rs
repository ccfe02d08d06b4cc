use bredon::intlin::{smith_normal_form, subquotient, AbHom, FgAbGroup, IntMatrix, NormalForm};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=6usize, 1..=6usize).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

/// A matrix with a permutation of its rows and one of its columns.
fn permuted() -> impl Strategy<Value = (Vec<Vec<i64>>, Vec<usize>, Vec<usize>)> {
    matrix().prop_flat_map(|rows| {
        let (r, c) = (rows.len(), rows[0].len());
        (Just(rows), Just((0..r).collect::<Vec<_>>()).prop_shuffle(), Just((0..c).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn square() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=4usize).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))
}

/// Fraction-free (Bareiss) determinant.
fn det(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| m[(i, j)].clone()).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else { return BigInt::zero() };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank over Q by fraction-free elimination.
fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pivot = a[r].clone();
        for row in a.iter_mut().skip(r + 1) {
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x = &*x * &pivot[c] - p * &f;
            }
        }
        r += 1;
    }
    r
}

fn group(rows: &[Vec<i64>]) -> FgAbGroup {
    FgAbGroup::new(rows.len(), IntMatrix::from_i64_rows(rows)).unwrap()
}

fn normal_form(rows: &[Vec<i64>]) -> NormalForm {
    group(rows).normal_form().clone()
}

proptest! {
    #[test]
    fn smith_form_identities(rows in matrix()) {
        let a = IntMatrix::from_i64_rows(&rows);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(det(&s.u).abs().is_one());
        prop_assert!(det(&s.v).abs().is_one());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let diag = s.diagonal();
        prop_assert!(diag.iter().all(|d| !d.is_negative()));
        for w in diag.windows(2) {
            // d_i | d_{i+1}, zeros last
            let divides = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            prop_assert!(divides);
        }
        prop_assert_eq!(s.rank(), rank(&rows));
    }

    #[test]
    fn invariant_factors_form_a_chain(rows in matrix()) {
        let nf = normal_form(&rows);
        prop_assert_eq!(nf.rank, rows.len() - rank(&rows));
        prop_assert!(nf.torsion.iter().all(|d| d > &BigInt::one()));
        for w in nf.torsion.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
    }

    #[test]
    fn order_is_the_determinant(rows in square()) {
        let d = det(&IntMatrix::from_i64_rows(&rows));
        let nf = normal_form(&rows);
        if d.is_zero() {
            prop_assert!(nf.rank > 0);
        } else {
            prop_assert_eq!(nf.order(), Some(d.abs()));
        }
    }

    #[test]
    fn permuting_generators_and_relators((rows, perm_rows, perm_cols) in permuted()) {
        let permuted: Vec<Vec<i64>> =
            perm_rows.iter().map(|&i| perm_cols.iter().map(|&j| rows[i][j]).collect()).collect();
        prop_assert_eq!(normal_form(&permuted), normal_form(&rows));
    }

    #[test]
    fn redundant_relator(rows in matrix(), coeffs in prop::collection::vec(-3i64..=3, 6)) {
        let nf = normal_form(&rows);
        let extended: Vec<Vec<i64>> = rows
            .iter()
            .map(|r| {
                let extra: i64 = r.iter().zip(&coeffs).map(|(a, c)| a * c).sum();
                r.iter().copied().chain([extra]).collect()
            })
            .collect();
        prop_assert_eq!(normal_form(&extended), nf);
    }

    #[test]
    fn subquotient_of_zero_maps(rows in matrix()) {
        let a = group(&rows);
        let zero_in = AbHom::zero(&FgAbGroup::trivial(), &a);
        let zero_out = AbHom::zero(&a, &FgAbGroup::trivial());
        let h = subquotient(&zero_in, &zero_out).unwrap();
        prop_assert_eq!(h.normal_form(), a.normal_form());
    }
}
