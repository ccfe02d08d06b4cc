use std::collections::BTreeSet;

use serde::Serialize;

use super::subgroup::{all_subgroups, subgroup_classes, subgroup_closure};
use super::{FiniteGroup, Subgroup};

/// Closure properties of a family, as found by inspection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFlags {
    pub contains_trivial: bool,
    pub conjugation_closed: bool,
    pub subgroup_closed: bool,
}

/// A set of subgroups of one group, sorted smallest first and without duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
}

impl Family {
    pub fn new(group: &FiniteGroup, subgroups: impl IntoIterator<Item = Subgroup>) -> Self {
        let set: BTreeSet<Subgroup> = subgroups.into_iter().collect();
        assert!(set.iter().all(|h| h.group() == group), "subgroup of a different group");
        Family { group: group.clone(), subgroups: set.into_iter().collect() }
    }

    /// `{ {e} }`
    pub fn trivial_only(group: &FiniteGroup) -> Self {
        Self::new(group, [Subgroup::trivial(group)])
    }

    /// All subgroups.
    pub fn full(group: &FiniteGroup) -> Self {
        Self::new(group, all_subgroups(group))
    }

    /// All cyclic subgroups.
    pub fn cyclic(group: &FiniteGroup) -> Self {
        Self::new(group, group.elements().map(|g| subgroup_closure(group, &[g]).expect("valid")))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.subgroups.binary_search(h).is_ok()
    }

    pub fn position(&self, h: &Subgroup) -> Option<usize> {
        self.subgroups.binary_search(h).ok()
    }

    pub fn contains_trivial(&self) -> bool {
        self.subgroups.first().is_some_and(Subgroup::is_trivial)
    }

    pub fn is_conjugation_closed(&self) -> bool {
        self.subgroups.iter().all(|h| self.group.elements().all(|x| self.contains(&h.conjugate(x))))
    }

    pub fn is_subgroup_closed(&self) -> bool {
        let all = all_subgroups(&self.group);
        self.subgroups.iter().all(|h| all.iter().filter(|k| k.is_subgroup_of(h)).all(|k| self.contains(k)))
    }

    pub fn flags(&self) -> FamilyFlags {
        FamilyFlags {
            contains_trivial: self.contains_trivial(),
            conjugation_closed: self.is_conjugation_closed(),
            subgroup_closed: self.is_subgroup_closed(),
        }
    }

    /// `{ H ∩ S : H ∈ F }`
    pub fn intersect(&self, s: &Subgroup) -> Family {
        Family::new(
            &self.group,
            self.subgroups.iter().map(|h| {
                let m: Vec<usize> = h.members().iter().copied().filter(|&x| s.contains(x)).collect();
                Subgroup::from_sorted_unchecked(&self.group, m)
            }),
        )
    }
}

/// Smallest superfamily closed under the requested operations.
pub fn family_close(family: &Family, under_conjugation: bool, under_subgroups: bool) -> Family {
    let g = family.group();
    let all = if under_subgroups { all_subgroups(g) } else { Vec::new() };
    let mut set: BTreeSet<Subgroup> = family.subgroups().iter().cloned().collect();
    loop {
        let before = set.len();
        if under_conjugation {
            let conj: Vec<Subgroup> = set.iter().flat_map(|h| g.elements().map(|x| h.conjugate(x))).collect();
            set.extend(conj);
        }
        if under_subgroups {
            let subs: Vec<Subgroup> = all.iter().filter(|k| set.iter().any(|h| k.is_subgroup_of(h))).cloned().collect();
            set.extend(subs);
        }
        if set.len() == before {
            break;
        }
    }
    Family::new(g, set)
}

/// Every nonempty family closed under conjugation and taking subgroups (each contains `{e}`),
/// in a deterministic order.
pub fn closed_families(group: &FiniteGroup) -> Vec<Family> {
    let classes = subgroup_classes(group);
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&i| (classes[i][0].order(), i));
    // class i may join once every proper subgroup of its representative is present
    let needs: Vec<Vec<usize>> = order
        .iter()
        .map(|&i| {
            let rep = &classes[i][0];
            (0..classes.len()).filter(|&j| j != i && classes[j].iter().any(|k| k.is_subgroup_of(rep))).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = vec![false; classes.len()];
    fn walk(
        pos: usize,
        order: &[usize],
        needs: &[Vec<usize>],
        chosen: &mut Vec<bool>,
        classes: &[Vec<Subgroup>],
        group: &FiniteGroup,
        out: &mut Vec<Family>,
    ) {
        if pos == order.len() {
            if chosen.iter().any(|&c| c) {
                let subs = (0..classes.len()).filter(|&i| chosen[i]).flat_map(|i| classes[i].iter().cloned());
                out.push(Family::new(group, subs));
            }
            return;
        }
        let i = order[pos];
        walk(pos + 1, order, needs, chosen, classes, group, out);
        if needs[pos].iter().all(|&j| chosen[j]) {
            chosen[i] = true;
            walk(pos + 1, order, needs, chosen, classes, group, out);
            chosen[i] = false;
        }
    }
    walk(0, &order, &needs, &mut chosen, &classes, group, &mut out);
    out.sort_by(|a, b| (a.len(), a.subgroups()).cmp(&(b.len(), b.subgroups())));
    out
}
