//! The orbit category `O_F(G)` and the composable chains indexing its standard resolution.
//!
//! Objects are numbered by their position in the family. A morphism
//! `G/H -> G/K` is a coset `xK` with `x⁻¹Hx ⊆ K`, stored by its least element.
//! Chains are ordered by start object, then by each morphism's `(target, coset)`.

use crate::groups::{Family, FiniteGroup, Subgroup};

/// Default bound on the number of chains in one degree.
pub const DEFAULT_SIZE_CAP: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrbitError {
    #[error("morphisms are not composable: target {0} differs from source {1}")]
    NotComposable(usize, usize),
    #[error("{count} chains in degree {degree} exceed the size cap {cap}")]
    SizeLimit { degree: usize, count: u128, cap: usize },
}

/// `G/H` with its cosets, each named by its least element.
#[derive(Clone, Debug)]
pub struct OrbitObject {
    subgroup: Subgroup,
    cosets: Vec<usize>,
}

impl OrbitObject {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn cosets(&self) -> &[usize] {
        &self.cosets
    }
}

/// The morphism `G/H -> G/K`, `gH ↦ g·rep·K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitMorphism {
    pub source: usize,
    pub target: usize,
    pub rep: usize,
}

/// `(id^{H₀}, f₁, …, f_n)`; the identity is implicit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    pub start: usize,
    pub morphisms: Vec<OrbitMorphism>,
}

impl Chain {
    pub fn degree(&self) -> usize {
        self.morphisms.len()
    }

    pub fn end(&self) -> usize {
        self.morphisms.last().map_or(self.start, |f| f.target)
    }
}

/// Canonical cosets `xK` fixed by `H`, i.e. with `x⁻¹Hx ⊆ K`, ascending.
pub fn fixed_cosets(h: &Subgroup, k: &Subgroup) -> Vec<usize> {
    let g = h.group();
    let gens = h.generators();
    k.coset_reps().into_iter().filter(|&x| gens.iter().all(|&s| k.contains(g.conj(x, s)))).collect()
}

#[derive(Clone, Debug)]
pub struct OrbitCategory {
    family: Family,
    objects: Vec<OrbitObject>,
    /// Morphisms out of each object, sorted by `(target, rep)`.
    out: Vec<Vec<OrbitMorphism>>,
    size_cap: usize,
}

impl OrbitCategory {
    pub fn new(family: &Family) -> Self {
        let subs = family.subgroups();
        let objects = subs.iter().map(|h| OrbitObject { subgroup: h.clone(), cosets: h.coset_reps() }).collect();
        let out = (0..subs.len())
            .map(|i| {
                (0..subs.len())
                    .flat_map(|j| {
                        fixed_cosets(&subs[i], &subs[j]).into_iter().map(move |rep| OrbitMorphism {
                            source: i,
                            target: j,
                            rep,
                        })
                    })
                    .collect()
            })
            .collect();
        OrbitCategory { family: family.clone(), objects, out, size_cap: DEFAULT_SIZE_CAP }
    }

    pub fn with_size_cap(mut self, cap: usize) -> Self {
        self.size_cap = cap;
        self
    }

    pub fn size_cap(&self) -> usize {
        self.size_cap
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn group(&self) -> &FiniteGroup {
        self.family.group()
    }

    pub fn objects(&self) -> &[OrbitObject] {
        &self.objects
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.objects[i].subgroup
    }

    pub fn morphisms_from(&self, h: usize) -> &[OrbitMorphism] {
        &self.out[h]
    }

    /// `Mor(G/H, G/K)`, sorted by coset.
    pub fn morphisms(&self, h: usize, k: usize) -> &[OrbitMorphism] {
        let out = &self.out[h];
        let lo = out.partition_point(|f| f.target < k);
        let hi = out.partition_point(|f| f.target <= k);
        &out[lo..hi]
    }

    pub fn identity(&self, h: usize) -> OrbitMorphism {
        OrbitMorphism { source: h, target: h, rep: 0 }
    }

    /// `g ∘ f`: for `f = xK`, `g = yL` this is `(xy)L`.
    pub fn compose(&self, f: OrbitMorphism, g: OrbitMorphism) -> Result<OrbitMorphism, OrbitError> {
        if f.target != g.source {
            return Err(OrbitError::NotComposable(f.target, g.source));
        }
        let l = &self.objects[g.target].subgroup;
        Ok(OrbitMorphism { source: f.source, target: g.target, rep: l.coset_rep(self.group().mul(f.rep, g.rep)) })
    }

    fn out_position(&self, f: &OrbitMorphism) -> usize {
        self.out[f.source].binary_search(f).expect("morphism of this category")
    }

    /// `counts[k][j]`: number of chains of degree `k` starting at object `j`, saturating.
    fn counts(&self, n: usize) -> Vec<Vec<u128>> {
        let mut counts = vec![vec![1u128; self.len()]];
        for k in 1..=n {
            let prev = &counts[k - 1];
            let row = self.out.iter().map(|o| o.iter().fold(0u128, |a, f| a.saturating_add(prev[f.target]))).collect();
            counts.push(row);
        }
        counts
    }

    /// `|Δⁿ|`, saturating at `u128::MAX`.
    pub fn chain_count(&self, n: usize) -> u128 {
        self.counts(n)[n].iter().fold(0u128, |a, &c| a.saturating_add(c))
    }

    /// Number of degree-`n` chains starting at each object.
    pub fn chain_counts_by_start(&self, n: usize) -> Vec<u128> {
        self.counts(n).swap_remove(n)
    }

    fn check_cap(&self, n: usize) -> Result<usize, OrbitError> {
        let count = self.chain_count(n);
        if count > self.size_cap as u128 {
            return Err(OrbitError::SizeLimit { degree: n, count, cap: self.size_cap });
        }
        Ok(count as usize)
    }

    /// Every degree-`n` chain in the canonical order.
    pub fn chains(&self, n: usize) -> Result<Vec<Chain>, OrbitError> {
        let total = self.check_cap(n)?;
        let mut result = Vec::with_capacity(total);
        let mut stack = Vec::with_capacity(n);
        for start in 0..self.len() {
            self.extend(start, start, n, &mut stack, &mut result);
        }
        Ok(result)
    }

    fn extend(&self, start: usize, at: usize, left: usize, stack: &mut Vec<OrbitMorphism>, out: &mut Vec<Chain>) {
        if left == 0 {
            out.push(Chain { start, morphisms: stack.clone() });
            return;
        }
        for f in &self.out[at] {
            stack.push(*f);
            self.extend(start, f.target, left - 1, stack, out);
            stack.pop();
        }
    }

    /// Position of `chain` in [`OrbitCategory::chains`] of its degree.
    pub fn chain_index(&self, chain: &Chain) -> usize {
        ChainIndexer::new(self, chain.degree()).index(chain.start, &chain.morphisms)
    }
}

/// Ranks chains of one degree without materializing them.
pub struct ChainIndexer<'a> {
    cat: &'a OrbitCategory,
    /// `skip[k][j][p]`: chains of degree `k` at `j` whose first morphism precedes `out[j][p]`.
    skip: Vec<Vec<Vec<usize>>>,
    start_offset: Vec<usize>,
}

impl<'a> ChainIndexer<'a> {
    pub fn new(cat: &'a OrbitCategory, n: usize) -> Self {
        let counts = cat.counts(n);
        let skip = (0..=n)
            .map(|k| {
                cat.out
                    .iter()
                    .map(|o| {
                        let mut acc = 0usize;
                        o.iter()
                            .map(|f| {
                                let before = acc;
                                if k > 0 {
                                    acc += counts[k - 1][f.target] as usize;
                                }
                                before
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut start_offset = Vec::with_capacity(cat.len());
        let mut acc = 0usize;
        for &c in &counts[n] {
            start_offset.push(acc);
            acc += c as usize;
        }
        ChainIndexer { cat, skip, start_offset }
    }

    pub fn index(&self, start: usize, morphisms: &[OrbitMorphism]) -> usize {
        let k = morphisms.len();
        let mut idx = self.start_offset[start];
        for (i, f) in morphisms.iter().enumerate() {
            idx += self.skip[k - i][f.source][self.cat.out_position(f)];
        }
        idx
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{subgroup_closure, Family, FiniteGroup};

    fn c2_full() -> OrbitCategory {
        OrbitCategory::new(&Family::full(&FiniteGroup::cyclic(2)))
    }

    #[test]
    fn c2_morphism_sets() {
        let cat = c2_full();
        // objects: 0 = {e}, 1 = G
        assert_eq!(cat.morphisms(0, 1).len(), 1);
        assert!(cat.morphisms(1, 0).is_empty());
        assert_eq!(cat.morphisms(0, 0).len(), 2);
        let sigma = cat.morphisms(0, 0)[1];
        let to_point = cat.compose(sigma, cat.morphisms(0, 1)[0]).unwrap();
        assert_eq!(to_point, cat.morphisms(0, 1)[0]);
        assert!(cat.compose(cat.morphisms(0, 1)[0], sigma).is_err());
    }

    #[test]
    fn s3_transposition_endomorphisms() {
        let s3 = FiniteGroup::symmetric(3);
        let t = (0..6).find(|&g| s3.element_order(g) == 2).unwrap();
        let h = subgroup_closure(&s3, &[t]).unwrap();
        assert_eq!(fixed_cosets(&h, &h), vec![0]);
    }

    #[test]
    fn c2_chain_counts() {
        let cat = c2_full();
        let counts: Vec<u128> = (0..4).map(|n| cat.chain_count(n)).collect();
        assert_eq!(counts, vec![2, 4, 8, 16]);
        assert_eq!(cat.chains(2).unwrap().len(), 8);
    }

    #[test]
    fn chains_sorted_and_indexed() {
        let cat = OrbitCategory::new(&Family::full(&FiniteGroup::symmetric(3)));
        for n in 0..3 {
            let chains = cat.chains(n).unwrap();
            assert!(chains.windows(2).all(|w| w[0] < w[1]));
            let ix = ChainIndexer::new(&cat, n);
            for (i, c) in chains.iter().enumerate() {
                assert_eq!(ix.index(c.start, &c.morphisms), i);
            }
        }
    }

    #[test]
    fn size_limit() {
        let cat = c2_full().with_size_cap(10);
        assert!(cat.chains(3).is_err());
        assert!(cat.chains(2).is_ok());
    }
}
