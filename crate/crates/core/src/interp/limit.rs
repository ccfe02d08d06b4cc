use crate::coeff::OrbitModule;
use crate::intlin::{AbHom, FgAbGroup, SparseMatrix};

/// `lim N`: families `(a_H)` with `N(f)(a_K) = a_H` for every `f : G/H -> G/K`.
pub fn h0_limit(n: &OrbitModule) -> FgAbGroup {
    let n = n.normalized();
    let cat = n.category();
    let source = FgAbGroup::direct_sum(n.values());
    let mut offsets = vec![0];
    for v in n.values() {
        offsets.push(offsets.last().unwrap() + v.ngens());
    }
    let mut targets = Vec::new();
    let mut columns: Vec<Vec<(usize, num_bigint::BigInt)>> = vec![Vec::new(); source.ngens()];
    let mut row = 0;
    for h in 0..cat.len() {
        for &f in cat.morphisms_from(h) {
            for (j, col) in n.map(f).sparse().columns().iter().enumerate() {
                for (i, v) in col {
                    columns[offsets[f.target] + j].push((row + i, v.clone()));
                }
            }
            for i in 0..n.value(h).ngens() {
                columns[offsets[h] + i].push((row + i, num_bigint::BigInt::from(-1)));
            }
            row += n.value(h).ngens();
            targets.push(n.value(h).clone());
        }
    }
    let target = FgAbGroup::direct_sum(&targets);
    let f = AbHom::from_sparse(source, target, SparseMatrix::from_columns(row, columns)).expect("shapes");
    f.kernel().group().clone()
}
