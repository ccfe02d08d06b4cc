use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use super::sparse::{SparseMatrix, SparseVec};
use super::IntLinError;

/// `Z^rank + Z/d_1 + ... + Z/d_k` with `d_1 | d_2 | ...` and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormalForm {
    pub rank: usize,
    #[serde(with = "big_list")]
    pub torsion: Vec<BigInt>,
}

impl NormalForm {
    pub fn trivial() -> Self {
        NormalForm { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        NormalForm { rank, torsion: Vec::new() }
    }

    /// Normal form of `Z^rank` plus cyclic factors of the given (arbitrary) orders.
    pub fn from_orders(rank: usize, orders: &[BigInt]) -> Self {
        NormalForm { rank, torsion: invariant_chain(orders) }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// The `q`-primary part of the torsion subgroup.
    pub fn primary_part(&self, q: u64) -> NormalForm {
        let q = BigInt::from(q);
        let parts: Vec<BigInt> = self
            .torsion
            .iter()
            .map(|d| {
                let mut d = d.clone();
                let mut part = BigInt::one();
                while (&d % &q).is_zero() {
                    d /= &q;
                    part *= &q;
                }
                part
            })
            .collect();
        NormalForm::from_orders(0, &parts)
    }

    /// Primes dividing the torsion orders, ascending.
    pub fn torsion_primes(&self) -> Vec<u64> {
        let Some(top) = self.torsion.last() else {
            return Vec::new();
        };
        let mut n = top.to_u64().expect("torsion exponent fits in u64");
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                out.push(p);
                while n % p == 0 {
                    n /= p;
                }
            }
            p += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Canonical divisibility chain for a product of cyclic groups of the given orders.
/// Orders `0` and `1` are ignored (callers count free summands separately).
pub(crate) fn invariant_chain(orders: &[BigInt]) -> Vec<BigInt> {
    let mut counts: std::collections::BTreeMap<BigInt, usize> = std::collections::BTreeMap::new();
    for d in orders.iter().map(|d| d.abs()).filter(|d| *d > BigInt::one()) {
        *counts.entry(d).or_default() += 1;
    }
    // Z/d splits over a coprime basis; the k-th invariant factor takes the k-th largest power of each base.
    let basis = gcd_free_basis(counts.keys().cloned().collect());
    let mut exps: Vec<Vec<u32>> = vec![Vec::new(); basis.len()];
    for (d, &c) in &counts {
        for (b, e) in basis.iter().zip(exps.iter_mut()) {
            let mut d = d.clone();
            let mut k = 0;
            while (&d % b).is_zero() {
                d /= b;
                k += 1;
            }
            if k > 0 {
                e.extend(std::iter::repeat_n(k, c));
            }
        }
    }
    let len = exps.iter().map(Vec::len).max().unwrap_or(0);
    for e in &mut exps {
        e.sort_unstable_by(|x, y| y.cmp(x));
    }
    let mut out: Vec<BigInt> = (0..len)
        .map(|k| {
            basis
                .iter()
                .zip(&exps)
                .filter(|(_, e)| k < e.len())
                .map(|(b, e)| num_traits::pow(b.clone(), e[k] as usize))
                .product()
        })
        .collect();
    out.reverse();
    out
}

/// Pairwise coprime numbers, each input a product of their powers.
fn gcd_free_basis(mut set: Vec<BigInt>) -> Vec<BigInt> {
    'outer: loop {
        set.sort();
        set.dedup();
        set.retain(|x| !x.is_one());
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                let g = set[i].gcd(&set[j]);
                if !g.is_one() {
                    let (a, b) = (&set[i] / &g, &set[j] / &g);
                    set[i] = a;
                    set[j] = b;
                    set.push(g);
                    continue 'outer;
                }
            }
        }
        return set;
    }
}

mod big_list {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{de::Error, Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Num {
        Small(u64),
        Text(String),
    }

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|x| match x.to_u64() {
                Some(n) => Num::Small(n),
                None => Num::Text(x.to_string()),
            })
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<Num>::deserialize(d)?
            .into_iter()
            .map(|n| match n {
                Num::Small(x) => Ok(BigInt::from(x)),
                Num::Text(t) => t.parse().map_err(D::Error::custom),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Presentation {
    /// One relator `m_i * e_i` per generator with `m_i != 0`.
    Diagonal(Vec<BigInt>),
    Dense(IntMatrix),
}

/// Coordinates in which membership in the relation lattice is "coordinate `i` is
/// divisible by `moduli[i]`" (a modulus of zero means the coordinate must vanish).
#[derive(Clone, Debug)]
enum Chart {
    Identity,
    Change { to: SparseMatrix, from: SparseMatrix },
}

#[derive(Debug)]
struct Normal {
    moduli: Vec<BigInt>,
    chart: Chart,
    form: NormalForm,
}

/// Finitely generated abelian group `Z^ngens / (column span of relations)`.
#[derive(Clone, Debug)]
pub struct FgAbGroup {
    ngens: usize,
    pres: Presentation,
    normal: Arc<Normal>,
}

impl PartialEq for FgAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.ngens == other.ngens && (Arc::ptr_eq(&self.normal, &other.normal) || self.pres == other.pres)
    }
}

impl Eq for FgAbGroup {}

impl FgAbGroup {
    /// Group presented by `ngens` generators and the columns of `relations` as relators.
    pub fn new(ngens: usize, relations: IntMatrix) -> Result<Self, IntLinError> {
        if relations.rows() != ngens {
            return Err(IntLinError::ShapeMismatch {
                context: "relation matrix rows must equal the number of generators",
                expected: ngens,
                found: relations.rows(),
            });
        }
        if let Some(moduli) = diagonal_moduli(&relations) {
            return Ok(Self::from_moduli(moduli));
        }
        let s = smith_normal_form(&relations);
        let diag = s.diagonal();
        let moduli_all: Vec<BigInt> = (0..ngens).map(|i| diag.get(i).cloned().unwrap_or_else(BigInt::zero)).collect();
        let keep: Vec<usize> = (0..ngens).filter(|&i| !moduli_all[i].is_one()).collect();
        let to = SparseMatrix::from_dense(&IntMatrix::from_fn(keep.len(), ngens, |r, c| s.u[(keep[r], c)].clone()));
        let from =
            SparseMatrix::from_dense(&IntMatrix::from_fn(ngens, keep.len(), |r, c| s.u_inv[(r, keep[c])].clone()));
        let moduli: Vec<BigInt> = keep.iter().map(|&i| moduli_all[i].clone()).collect();
        let form = form_of(&moduli);
        Ok(FgAbGroup {
            ngens,
            pres: Presentation::Dense(relations),
            normal: Arc::new(Normal { moduli, chart: Chart::Change { to, from }, form }),
        })
    }

    /// `Z/m_0 + Z/m_1 + ...` with one generator per entry; `0` gives a free summand.
    pub fn from_moduli(moduli: Vec<BigInt>) -> Self {
        let moduli: Vec<BigInt> = moduli.into_iter().map(|m| m.abs()).collect();
        let form = form_of(&moduli);
        FgAbGroup {
            ngens: moduli.len(),
            pres: Presentation::Diagonal(moduli.clone()),
            normal: Arc::new(Normal { moduli, chart: Chart::Identity, form }),
        }
    }

    pub fn from_moduli_u64(moduli: &[u64]) -> Self {
        Self::from_moduli(moduli.iter().map(|&m| BigInt::from(m)).collect())
    }

    pub fn trivial() -> Self {
        Self::from_moduli(Vec::new())
    }

    pub fn free(rank: usize) -> Self {
        Self::from_moduli(vec![BigInt::zero(); rank])
    }

    pub fn cyclic(n: u64) -> Self {
        Self::from_moduli(vec![BigInt::from(n)])
    }

    /// Generators in normal-form order: the torsion factors first, then the free ones.
    pub fn from_normal_form(nf: &NormalForm) -> Self {
        let mut m = nf.torsion.clone();
        m.extend(std::iter::repeat_n(BigInt::zero(), nf.rank));
        Self::from_moduli(m)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(parts: &[FgAbGroup]) -> Self {
        if parts.iter().all(|p| matches!(p.pres, Presentation::Diagonal(_))) {
            let mut m = Vec::new();
            for p in parts {
                if let Presentation::Diagonal(v) = &p.pres {
                    m.extend(v.iter().cloned());
                }
            }
            return Self::from_moduli(m);
        }
        let n: usize = parts.iter().map(|p| p.ngens).sum();
        let rels: Vec<IntMatrix> = parts.iter().map(FgAbGroup::relations).collect();
        let ncols: usize = rels.iter().map(IntMatrix::cols).sum();
        let mut out = IntMatrix::zeros(n, ncols);
        let (mut r0, mut c0) = (0, 0);
        for r in &rels {
            for i in 0..r.rows() {
                for j in 0..r.cols() {
                    out[(r0 + i, c0 + j)] = r[(i, j)].clone();
                }
            }
            r0 += r.rows();
            c0 += r.cols();
        }
        Self::new(n, out).expect("block sum is well shaped")
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Relation matrix, one column per relator.
    pub fn relations(&self) -> IntMatrix {
        match &self.pres {
            Presentation::Dense(m) => m.clone(),
            Presentation::Diagonal(moduli) => {
                let cols: Vec<usize> = (0..moduli.len()).filter(|&i| !moduli[i].is_zero()).collect();
                IntMatrix::from_fn(self.ngens, cols.len(), |i, j| {
                    if i == cols[j] {
                        moduli[i].clone()
                    } else {
                        BigInt::zero()
                    }
                })
            }
        }
    }

    /// Relators as sparse columns.
    pub fn relators(&self) -> Vec<SparseVec> {
        match &self.pres {
            Presentation::Diagonal(moduli) => {
                moduli.iter().enumerate().filter(|(_, m)| !m.is_zero()).map(|(i, m)| vec![(i, m.clone())]).collect()
            }
            Presentation::Dense(m) => SparseMatrix::from_dense(m).columns().to_vec(),
        }
    }

    pub fn normal_form(&self) -> &NormalForm {
        &self.normal.form
    }

    pub fn rank(&self) -> usize {
        self.normal.form.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.normal.form.torsion
    }

    pub fn order(&self) -> Option<BigInt> {
        self.normal.form.order()
    }

    pub fn is_finite(&self) -> bool {
        self.normal.form.is_finite()
    }

    pub fn is_trivial(&self) -> bool {
        self.normal.form.is_trivial()
    }

    /// Per-generator orders when the presentation is diagonal.
    pub fn diagonal_moduli(&self) -> Option<&[BigInt]> {
        match &self.pres {
            Presentation::Diagonal(m) => Some(m),
            Presentation::Dense(_) => None,
        }
    }

    pub(crate) fn chart_dim(&self) -> usize {
        self.normal.moduli.len()
    }

    pub(crate) fn moduli(&self) -> &[BigInt] {
        &self.normal.moduli
    }

    pub(crate) fn to_chart(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.ngens, "element has wrong number of coordinates");
        match &self.normal.chart {
            Chart::Identity => x.to_vec(),
            Chart::Change { to, .. } => to.mul_vec(x),
        }
    }

    pub(crate) fn to_chart_sparse(&self, x: &SparseVec) -> SparseVec {
        match &self.normal.chart {
            Chart::Identity => x.clone(),
            Chart::Change { to, .. } => to.mul_sparse_vec(x),
        }
    }

    pub(crate) fn lift_chart(&self, y: &[BigInt]) -> Vec<BigInt> {
        match &self.normal.chart {
            Chart::Identity => y.to_vec(),
            Chart::Change { from, .. } => from.mul_vec(y),
        }
    }

    pub(crate) fn lift_chart_sparse(&self, y: &SparseVec) -> SparseVec {
        match &self.normal.chart {
            Chart::Identity => y.clone(),
            Chart::Change { from, .. } => from.mul_sparse_vec(y),
        }
    }

    /// Canonical representative of the class of `x`, in chart coordinates.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut y = self.to_chart(x);
        for (v, m) in y.iter_mut().zip(&self.normal.moduli) {
            if !m.is_zero() {
                *v = v.mod_floor(m);
            }
        }
        y
    }

    /// Canonical representative of `x` in generator coordinates.
    pub fn canonical(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.lift_chart(&self.reduce(x))
    }

    pub fn is_zero_element(&self, x: &[BigInt]) -> bool {
        self.reduce(x).iter().all(Zero::is_zero)
    }

    pub fn same_element(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let d: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero_element(&d)
    }

    /// Every element once, in generator coordinates; `None` for infinite groups.
    /// Order is lexicographic in the canonical chart representative.
    pub fn elements(&self) -> Option<Vec<Vec<BigInt>>> {
        if !self.is_finite() {
            return None;
        }
        let ranges: Vec<u64> =
            self.normal.moduli.iter().map(|m| m.to_u64().expect("finite group of desk size")).collect();
        let mut out = Vec::new();
        let mut cur = vec![0u64; ranges.len()];
        loop {
            let y: Vec<BigInt> = cur.iter().map(|&v| BigInt::from(v)).collect();
            out.push(self.lift_chart(&y));
            let mut i = ranges.len();
            loop {
                if i == 0 {
                    return Some(out);
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < ranges[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    pub fn zero_element(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.ngens]
    }

    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        let mut v = self.zero_element();
        v[i] = BigInt::one();
        v
    }
}

fn form_of(moduli: &[BigInt]) -> NormalForm {
    let rank = moduli.iter().filter(|m| m.is_zero()).count();
    NormalForm::from_orders(rank, moduli)
}

/// Per-generator moduli when every relator touches one generator and every
/// generator appears in at most one relator.
fn diagonal_moduli(r: &IntMatrix) -> Option<Vec<BigInt>> {
    let mut moduli = vec![BigInt::zero(); r.rows()];
    let mut seen = vec![false; r.rows()];
    for j in 0..r.cols() {
        let nz: Vec<usize> = (0..r.rows()).filter(|&i| !r[(i, j)].is_zero()).collect();
        match nz.as_slice() {
            [] => {}
            [i] if !seen[*i] => {
                seen[*i] = true;
                moduli[*i] = r[(*i, j)].abs();
            }
            _ => return None,
        }
    }
    Some(moduli)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(rank: usize, t: &[u64]) -> NormalForm {
        NormalForm { rank, torsion: t.iter().map(|&d| BigInt::from(d)).collect() }
    }

    #[test]
    fn invariant_chain_combines_coprime_orders() {
        let big: Vec<BigInt> = std::iter::repeat_n(BigInt::from(2), 50_000).chain([BigInt::from(12)]).collect();
        let chain = invariant_chain(&big);
        assert_eq!(chain.len(), 50_001);
        assert_eq!(chain.last(), Some(&BigInt::from(12)));
        assert_eq!(
            invariant_chain(&[BigInt::from(4), BigInt::from(6), BigInt::from(9)]),
            vec![BigInt::from(6), BigInt::from(36)]
        );
        assert_eq!(FgAbGroup::from_moduli_u64(&[2, 3]).normal_form(), &nf(0, &[6]));
        assert_eq!(FgAbGroup::from_moduli_u64(&[4, 2, 1, 0]).normal_form(), &nf(1, &[2, 4]));
        assert_eq!(FgAbGroup::from_moduli_u64(&[6, 10]).normal_form(), &nf(0, &[2, 30]));
    }

    #[test]
    fn dense_presentation_normalizes() {
        // Z^2 / <(2,6),(4,8)> has SNF diag(2,4)
        let g = FgAbGroup::new(2, IntMatrix::from_i64_rows(&[vec![2, 4], vec![6, 8]])).unwrap();
        assert_eq!(g.normal_form(), &nf(0, &[2, 4]));
        assert_eq!(g.elements().unwrap().len(), 8);
        assert!(g.is_zero_element(&[BigInt::from(2), BigInt::from(6)]));
        assert!(!g.is_zero_element(&[BigInt::from(1), BigInt::from(0)]));
    }

    #[test]
    fn primary_parts() {
        let f = nf(0, &[6, 12]);
        assert_eq!(f.primary_part(2), nf(0, &[2, 4]));
        assert_eq!(f.primary_part(3), nf(0, &[3, 3]));
        assert_eq!(f.primary_part(5), nf(0, &[]));
        assert_eq!(f.torsion_primes(), vec![2, 3]);
        assert_eq!(f.to_string(), "Z/6 + Z/12");
        assert_eq!(nf(2, &[]).to_string(), "Z^2");
    }

    #[test]
    fn normal_form_json() {
        let s = serde_json::to_string(&nf(1, &[2, 4])).unwrap();
        assert_eq!(s, r#"{"rank":1,"torsion":[2,4]}"#);
        let back: NormalForm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, nf(1, &[2, 4]));
        assert!(serde_json::from_str::<NormalForm>(r#"{"rank":1,"torsion":[],"x":1}"#).is_err());
    }
}
