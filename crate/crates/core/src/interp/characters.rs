use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::groups::{Family, Subgroup, SubgroupEmbedding};
use crate::intlin::{AbHom, FgAbGroup, JsonInt, NormalForm, SparseMatrix};

/// `{f ∈ Hom(P, Q/Z) | f(H ∩ P) = 0 for all H ∈ F}`.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterGroup {
    #[serde(flatten)]
    pub group: NormalForm,
    /// Generators of `P` (indices in `G`) on which characters are evaluated.
    pub subgroup_generators: Vec<usize>,
    /// One entry per normal-form generator: `[numerator, denominator]` of its value on each subgroup generator.
    pub generators: Vec<Vec<[JsonInt; 2]>>,
}

/// Dual of `Q = P^ab / ⟨H ∩ P⟩`, presented on the elements of `P` with relators
/// `[x] + [y] − [xy]` and `[h]` for `h` in some `H ∩ P`.
pub fn character_group(p: &Subgroup, family: &Family) -> CharacterGroup {
    let emb = SubgroupEmbedding::new(p);
    let pg = emb.group();
    let n = pg.order();
    let mut rels: Vec<Vec<(usize, BigInt)>> = vec![vec![(0, BigInt::one())]];
    for x in pg.elements() {
        for y in pg.elements() {
            let mut r: Vec<(usize, BigInt)> = Vec::new();
            let xy = pg.mul(x, y);
            for (i, v) in [(x, 1), (y, 1), (xy, -1)] {
                match r.iter_mut().find(|e| e.0 == i) {
                    Some(e) => e.1 += v,
                    None => r.push((i, BigInt::from(v))),
                }
            }
            r.retain(|e| !e.1.is_zero());
            r.sort_by_key(|e| e.0);
            rels.push(r);
        }
    }
    for h in family.subgroups() {
        for &x in h.members() {
            if let Some(l) = emb.local(x) {
                rels.push(vec![(l, BigInt::one())]);
            }
        }
    }
    let free = FgAbGroup::free(n);
    let f = AbHom::from_sparse(FgAbGroup::free(rels.len()), free, SparseMatrix::from_columns(n, rels)).expect("shapes");
    let q = f.cokernel();
    let orders = q.group().diagonal_moduli().expect("normal form").to_vec();
    let subgroup_generators = p.generators();
    let coords: Vec<Vec<BigInt>> = subgroup_generators
        .iter()
        .map(|&x| {
            let mut e = vec![BigInt::zero(); n];
            e[emb.local(x).expect("member")] = BigInt::one();
            q.coordinates(&e).expect("total")
        })
        .collect();
    let generators = orders
        .iter()
        .enumerate()
        .map(|(i, d)| {
            coords
                .iter()
                .map(|c| {
                    let g = c[i].gcd(d);
                    let g = if g.is_zero() { BigInt::one() } else { g };
                    [JsonInt(&c[i] / &g), JsonInt(d / &g)]
                })
                .collect()
        })
        .collect();
    CharacterGroup { group: q.group().normal_form().clone(), subgroup_generators, generators }
}
