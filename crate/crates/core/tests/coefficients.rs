use bredon::bredon::{bredon_cohomology, restriction_kernel_intersection, BredonComplex, Hypothesis};
use bredon::coeff::{fixed_point_functor, invariants, GModule};
use bredon::groups::{all_subgroups, closed_families, small_groups, FiniteGroup, Subgroup};
use bredon::interp::h0_limit;
use bredon::intlin::{AbHom, FgAbGroup, IntMatrix};
use bredon::orbitcat::DEFAULT_SIZE_CAP;
use num_bigint::BigInt;

/// `(Z/m)[G/K]` (`m = 0` gives `Z[G/K]`) with `G` permuting the cosets.
fn permutation_module(g: &FiniteGroup, k: &Subgroup, m: u64) -> GModule {
    let reps = k.coset_reps();
    let carrier = FgAbGroup::from_moduli_u64(&vec![m; reps.len()]);
    let matrices = g
        .elements()
        .map(|x| {
            IntMatrix::from_fn(reps.len(), reps.len(), |i, j| {
                BigInt::from((k.coset_rep(g.mul(x, reps[j])) == reps[i]) as i64)
            })
        })
        .collect();
    GModule::new(g, &carrier, matrices).unwrap()
}

/// Every permutation module over groups of order at most 8 with `|A| <= 81` or `A` free.
fn modules() -> Vec<(String, GModule)> {
    let mut out = Vec::new();
    for (name, g) in small_groups(8).into_iter().filter(|(_, g)| g.order() > 1) {
        for k in all_subgroups(&g) {
            for m in [0u64, 2, 3] {
                if m > 0 && (m as usize).pow(k.index() as u32) > 81 {
                    continue;
                }
                out.push((format!("{name} Z/{m}[G/{:?}]", k.members()), permutation_module(&g, &k, m)));
            }
        }
    }
    out
}

#[test]
fn invariants_match_brute_force() {
    for (label, m) in modules() {
        let a = m.carrier();
        let Some(elements) = a.elements() else { continue };
        for h in all_subgroups(m.group()) {
            let inv = invariants(&m, &h);
            let fixed: Vec<&Vec<BigInt>> =
                elements.iter().filter(|x| h.members().iter().all(|&y| a.same_element(&m.act(y, x), x))).collect();
            assert_eq!(inv.group().order(), Some(BigInt::from(fixed.len())), "{label} H={:?}", h.members());
            assert!(fixed.iter().all(|x| inv.contains(x)), "{label}");
            assert!(
                elements.iter().filter(|x| inv.contains(x)).count() == fixed.len(),
                "{label}: membership agrees with the fixed set"
            );
        }
    }
}

#[test]
fn invariants_are_monotone() {
    for (label, m) in modules() {
        let subs = all_subgroups(m.group());
        let invs: Vec<_> = subs.iter().map(|h| invariants(&m, h)).collect();
        for (i, small) in subs.iter().enumerate() {
            for (j, big) in subs.iter().enumerate() {
                if small.is_subgroup_of(big) {
                    assert!(invs[j].generators().iter().all(|x| invs[i].contains(x)), "{label}: {i} <= {j}");
                }
            }
        }
    }
}

#[test]
fn fixed_point_functor_laws() {
    for (label, m) in modules() {
        let g = m.group();
        for family in closed_families(g) {
            let n = fixed_point_functor(&m, &family).unwrap();
            let cat = n.category();
            let data = n.fixed_point_data().unwrap();
            for h in 0..cat.len() {
                assert!(n.map(cat.identity(h)).same_map(&AbHom::identity(n.value(h))), "{label}: identity");
                for &f in cat.morphisms_from(h) {
                    // N(xK)(m) = x·m on the underlying module
                    let lhs = data.invariants[f.source].inclusion().compose(n.map(f)).unwrap();
                    let rhs = m.action(f.rep).compose(data.invariants[f.target].inclusion()).unwrap();
                    assert!(lhs.same_map(&rhs), "{label}: N(f) is x·m for {f:?}");
                    for &f2 in cat.morphisms_from(f.target) {
                        let composite = cat.compose(f, f2).unwrap();
                        let both = n.map(f).compose(n.map(f2)).unwrap();
                        assert!(both.same_map(n.map(composite)), "{label}: functoriality");
                    }
                }
            }
        }
    }
}

#[test]
fn degree_zero_is_the_limit() {
    for (label, m) in modules().into_iter().filter(|(_, m)| m.group().order() <= 6) {
        for family in closed_families(m.group()) {
            let n = fixed_point_functor(&m, &family).unwrap();
            let h0 = bredon_cohomology(&n, 0).unwrap();
            assert_eq!(&h0.group, h0_limit(&n).normal_form(), "{label}");
        }
    }
}

#[test]
fn complexes_and_restriction_formulas() {
    for (label, m) in modules().into_iter().filter(|(_, m)| m.group().order() <= 6) {
        for family in closed_families(m.group()) {
            let n = fixed_point_functor(&m, &family).unwrap();
            let complex = BredonComplex::new(&n, 3).unwrap();
            assert!(complex.is_complex(), "{label}: d∘d = 0");
            let h1 = complex.cohomology(1).unwrap();
            let k1 = restriction_kernel_intersection(&m, &family, 1, DEFAULT_SIZE_CAP).unwrap();
            assert_eq!(k1.result.group, h1.group, "{label}: degree 1");
            let k2 = restriction_kernel_intersection(&m, &family, 2, DEFAULT_SIZE_CAP).unwrap();
            if k2.hypothesis != Hypothesis::Violated {
                assert_eq!(k2.result.group, complex.cohomology(2).unwrap().group, "{label}: degree 2");
            }
        }
    }
}
