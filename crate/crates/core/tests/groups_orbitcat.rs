use std::sync::LazyLock;

use bredon::groups::{
    all_subgroups, closed_families, family_close, fixed_point_free_prime_power_element, small_groups, subgroup_closure,
    Family, FiniteGroup, Subgroup,
};
use bredon::orbitcat::{OrbitCategory, OrbitMorphism};
use proptest::prelude::*;

static GROUPS: LazyLock<Vec<(String, FiniteGroup, Vec<Subgroup>)>> = LazyLock::new(|| {
    small_groups(12)
        .into_iter()
        .map(|(name, g)| {
            let subs = all_subgroups(&g);
            (name, g, subs)
        })
        .collect()
});

fn group_index(max_order: usize) -> impl Strategy<Value = usize> {
    let n = GROUPS.iter().filter(|(_, g, _)| g.order() <= max_order).count();
    0..n
}

/// `|(G/K)^H|` by testing `h·xK = xK` over all `x ∈ G`, `h ∈ H`.
fn fixed_coset_count(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> usize {
    let fixing =
        g.elements().filter(|&x| h.members().iter().all(|&y| k.contains(g.mul(g.inv(x), g.mul(y, x))))).count();
    fixing / k.order()
}

proptest! {
    #[test]
    fn family_close_is_monotone_and_idempotent(
        gi in group_index(12),
        mask in any::<u64>(),
        conj in any::<bool>(),
        subs in any::<bool>(),
    ) {
        let (_, g, all) = &GROUPS[gi];
        let chosen = all.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, h)| h.clone());
        let seed = Family::new(g, chosen);
        let closed = family_close(&seed, conj, subs);
        prop_assert!(seed.subgroups().iter().all(|h| closed.contains(h)));
        prop_assert_eq!(family_close(&closed, conj, subs), closed.clone());
        if conj {
            prop_assert!(closed.is_conjugation_closed());
        }
        if subs {
            prop_assert!(closed.is_subgroup_closed());
        }
    }

    #[test]
    fn subgroup_closure_is_idempotent(gi in group_index(12), seed in prop::collection::vec(0usize..12, 0..4)) {
        let (_, g, all) = &GROUPS[gi];
        let seed: Vec<usize> = seed.into_iter().map(|x| x % g.order()).collect();
        let h = subgroup_closure(g, &seed).unwrap();
        prop_assert!(seed.iter().all(|&x| h.contains(x)));
        let again = subgroup_closure(g, h.members()).unwrap();
        prop_assert_eq!(again.members(), h.members());
        prop_assert!(all.iter().any(|k| k.members() == h.members()));
    }
}

#[test]
fn morphism_counts_match_fixed_cosets() {
    for (name, g, subs) in GROUPS.iter() {
        let cat = OrbitCategory::new(&Family::new(g, subs.iter().cloned()));
        for a in 0..cat.len() {
            for b in 0..cat.len() {
                let expected = fixed_coset_count(g, cat.subgroup(a), cat.subgroup(b));
                assert_eq!(cat.morphisms(a, b).len(), expected, "{name}: objects {a}, {b}");
            }
        }
    }
}

#[test]
fn category_laws() {
    for (name, g, subs) in GROUPS.iter().filter(|(_, g, _)| g.order() <= 8) {
        let cat = OrbitCategory::new(&Family::new(g, subs.iter().cloned()));
        let all: Vec<OrbitMorphism> = (0..cat.len()).flat_map(|a| cat.morphisms_from(a).iter().copied()).collect();
        for &f in &all {
            assert_eq!(cat.compose(cat.identity(f.source), f).unwrap(), f, "{name}");
            assert_eq!(cat.compose(f, cat.identity(f.target)).unwrap(), f, "{name}");
            for &g2 in cat.morphisms_from(f.target) {
                let gf = cat.compose(f, g2).unwrap();
                assert!(cat.morphisms(gf.source, gf.target).contains(&gf), "{name}: composite is a morphism");
                for &h in cat.morphisms_from(g2.target) {
                    let left = cat.compose(gf, h).unwrap();
                    let right = cat.compose(f, cat.compose(g2, h).unwrap()).unwrap();
                    assert_eq!(left, right, "{name}: associativity");
                }
            }
        }
        let bad = OrbitMorphism { source: 0, target: 0, rep: 0 };
        if cat.len() > 1 {
            let other = cat.morphisms(0, 1).first().copied();
            if let Some(f) = other {
                assert!(cat.compose(f, bad).is_err(), "{name}: non-composable pair");
            }
        }
    }
}

#[test]
fn chain_count_recurrence() {
    for (name, g, _) in GROUPS.iter().filter(|(_, g, _)| g.order() <= 8) {
        for family in closed_families(g) {
            let cat = OrbitCategory::new(&family);
            for n in 1..=3 {
                let prev = cat.chains(n - 1).unwrap();
                let expected: usize =
                    prev.iter().map(|c| (0..cat.len()).map(|k| cat.morphisms(c.end(), k).len()).sum::<usize>()).sum();
                let chains = cat.chains(n).unwrap();
                assert_eq!(chains.len(), expected, "{name} degree {n}");
                assert_eq!(cat.chain_count(n), expected as u128, "{name} degree {n}");
                assert!(chains.windows(2).all(|w| w[0] < w[1]), "{name}: chains strictly ordered");
            }
        }
    }
}

#[test]
fn fixed_point_free_elements_exist() {
    for (name, g, subs) in GROUPS.iter() {
        for h in subs.iter().filter(|h| !h.is_whole()) {
            let x = fixed_point_free_prime_power_element(g, h).unwrap();
            let mut o = g.element_order(x);
            let p = (2..=o).find(|p| o % p == 0).unwrap();
            while o % p == 0 {
                o /= p;
            }
            assert_eq!(o, 1, "{name}: order of {x} is a prime power");
            assert_eq!(fixed_coset_count(g, &subgroup_closure(g, &[x]).unwrap(), h), 0, "{name}: {x} fixes no coset");
        }
    }
}
