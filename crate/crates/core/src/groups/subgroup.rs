use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::{FiniteGroup, GroupError};

/// A subgroup, stored as the sorted list of its members.
#[derive(Clone)]
pub struct Subgroup {
    group: FiniteGroup,
    members: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

/// Smaller subgroups first, then lexicographic in the member list.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl Subgroup {
    /// Validates that `members` is a subgroup of `group`.
    pub fn new(group: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self, GroupError> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&i| i >= group.order()) {
            return Err(GroupError::BadIndex(bad));
        }
        if !set.contains(&0) {
            return Err(GroupError::NotSubgroup("missing the identity".into()));
        }
        for &a in &set {
            for &b in &set {
                if !set.contains(&group.mul(a, b)) {
                    return Err(GroupError::NotSubgroup(format!("{a}*{b} is not a member")));
                }
            }
        }
        Ok(Subgroup { group: group.clone(), members: set.into_iter().collect() })
    }

    pub(crate) fn from_sorted_unchecked(group: &FiniteGroup, members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { group: group.clone(), members }
    }

    pub fn trivial(group: &FiniteGroup) -> Self {
        Subgroup { group: group.clone(), members: vec![0] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Subgroup { group: group.clone(), members: group.elements().collect() }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.order()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.group.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&h| other.contains(h))
    }

    /// `x^-1 H x`
    pub fn conjugate(&self, x: usize) -> Subgroup {
        let mut m: Vec<usize> = self.members.iter().map(|&h| self.group.conj(x, h)).collect();
        m.sort_unstable();
        Subgroup { group: self.group.clone(), members: m }
    }

    pub fn is_normal(&self) -> bool {
        self.group.elements().all(|x| self.conjugate(x) == *self)
    }

    /// Canonical representative of the left coset `xH`: its least element.
    pub fn coset_rep(&self, x: usize) -> usize {
        self.members.iter().map(|&h| self.group.mul(x, h)).min().expect("nonempty")
    }

    /// Canonical representatives of all left cosets, ascending.
    pub fn coset_reps(&self) -> Vec<usize> {
        let mut reps: Vec<usize> = self.group.elements().map(|x| self.coset_rep(x)).collect();
        reps.sort_unstable();
        reps.dedup();
        reps
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = Subgroup::trivial(&self.group);
        for &h in &self.members {
            if !span.contains(h) {
                gens.push(h);
                span = subgroup_closure(&self.group, &gens).expect("valid indices");
            }
        }
        gens
    }

    /// The same member set viewed inside a subgroup `s` renumbered by [`SubgroupEmbedding`].
    pub fn restrict_to(&self, emb: &SubgroupEmbedding) -> Option<Subgroup> {
        let local: Option<Vec<usize>> = self.members.iter().map(|&g| emb.local(g)).collect();
        let mut local = local?;
        local.sort_unstable();
        Some(Subgroup { group: emb.group.clone(), members: local })
    }
}

/// Smallest subgroup containing `seed`.
pub fn subgroup_closure(group: &FiniteGroup, seed: &[usize]) -> Result<Subgroup, GroupError> {
    if let Some(&bad) = seed.iter().find(|&&i| i >= group.order()) {
        return Err(GroupError::BadIndex(bad));
    }
    let mut inside = vec![false; group.order()];
    inside[0] = true;
    let mut list = vec![0];
    let mut head = 0;
    while head < list.len() {
        let x = list[head];
        head += 1;
        for &s in seed {
            let y = group.mul(x, s);
            if !inside[y] {
                inside[y] = true;
                list.push(y);
            }
        }
    }
    list.sort_unstable();
    Ok(Subgroup { group: group.clone(), members: list })
}

/// Every subgroup, smallest first.
pub fn all_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    let mut queue = vec![Subgroup::trivial(group)];
    found.insert(Subgroup::trivial(group));
    while let Some(h) = queue.pop() {
        for g in group.elements() {
            if h.contains(g) {
                continue;
            }
            let mut seed = h.generators();
            seed.push(g);
            let k = subgroup_closure(group, &seed).expect("valid indices");
            if found.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    found.into_iter().collect()
}

/// Conjugacy classes of subgroups, each sorted, classes ordered by their least member.
pub fn subgroup_classes(group: &FiniteGroup) -> Vec<Vec<Subgroup>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for h in all_subgroups(group) {
        if seen.contains(&h) {
            continue;
        }
        let class: BTreeSet<Subgroup> = group.elements().map(|x| h.conjugate(x)).collect();
        seen.extend(class.iter().cloned());
        out.push(class.into_iter().collect());
    }
    out
}

/// A subgroup `S` of `G` as a group in its own right, numbered `0..|S|` in the
/// order of its members, with the maps between the numberings.
#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    group: FiniteGroup,
    to_parent: Vec<usize>,
    to_local: Vec<Option<usize>>,
}

impl SubgroupEmbedding {
    pub fn new(s: &Subgroup) -> Self {
        let g = s.group();
        let to_parent = s.members().to_vec();
        let mut to_local = vec![None; g.order()];
        for (i, &x) in to_parent.iter().enumerate() {
            to_local[x] = Some(i);
        }
        let table = to_parent
            .iter()
            .map(|&a| to_parent.iter().map(|&b| to_local[g.mul(a, b)].expect("closed")).collect())
            .collect();
        let group = FiniteGroup::from_table(table).expect("subgroup table is a group");
        SubgroupEmbedding { group, to_parent, to_local }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn parent(&self, local: usize) -> usize {
        self.to_parent[local]
    }

    pub fn local(&self, parent: usize) -> Option<usize> {
        self.to_local[parent]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(subgroup_closure(&s3, &[]).unwrap(), Subgroup::trivial(&s3));
        let t = s3.elements().find(|&g| s3.element_order(g) == 2).unwrap();
        assert_eq!(subgroup_closure(&s3, &[t]).unwrap().order(), 2);
        let all: Vec<usize> = s3.elements().collect();
        assert!(subgroup_closure(&s3, &all).unwrap().is_whole());
    }

    #[test]
    fn subgroup_counts() {
        // independent counts: S3 has 6 subgroups, D4 has 10, Q8 has 6, C2^3 has 16, A4 has 10
        assert_eq!(all_subgroups(&FiniteGroup::symmetric(3)).len(), 6);
        assert_eq!(all_subgroups(&FiniteGroup::dihedral(4)).len(), 10);
        assert_eq!(all_subgroups(&FiniteGroup::quaternion()).len(), 6);
        assert_eq!(all_subgroups(&FiniteGroup::elementary_abelian(2, 3)).len(), 16);
        assert_eq!(all_subgroups(&FiniteGroup::alternating(4)).len(), 10);
        assert_eq!(subgroup_classes(&FiniteGroup::dihedral(4)).len(), 8);
        assert_eq!(subgroup_classes(&FiniteGroup::symmetric(3)).len(), 4);
    }

    #[test]
    fn cosets_partition() {
        let g = FiniteGroup::dihedral(4);
        for h in all_subgroups(&g) {
            assert_eq!(h.coset_reps().len(), h.index());
        }
    }

    #[test]
    fn embedding_round_trip() {
        let g = FiniteGroup::symmetric(3);
        let h = all_subgroups(&g).into_iter().find(|h| h.order() == 3).unwrap();
        let e = SubgroupEmbedding::new(&h);
        assert_eq!(e.group().order(), 3);
        for i in 0..3 {
            assert_eq!(e.local(e.parent(i)), Some(i));
        }
    }
}
