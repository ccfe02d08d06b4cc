use super::*;
use crate::coeff::{fixed_point_functor, GModule};
use crate::groups::{subgroup_closure, Family, FiniteGroup, Subgroup};
use crate::intlin::FgAbGroup;
use crate::orbitcat::DEFAULT_SIZE_CAP;

fn z2_trivial(g: &FiniteGroup) -> GModule {
    GModule::trivial(g, &FgAbGroup::cyclic(2))
}

fn z_sign_c2() -> GModule {
    let c2 = FiniteGroup::cyclic(2);
    GModule::sign(&c2, &Subgroup::trivial(&c2)).unwrap()
}

#[test]
fn limit_examples() {
    let c2 = FiniteGroup::cyclic(2);
    let z = GModule::trivial(&c2, &FgAbGroup::free(1));
    assert_eq!(h0_limit(&fixed_point_functor(&z, &Family::full(&c2)).unwrap()).normal_form().to_string(), "Z");
    let s = fixed_point_functor(&z_sign_c2(), &Family::full(&c2)).unwrap();
    assert!(h0_limit(&s).is_trivial());
    let top = Family::new(&c2, [Subgroup::whole(&c2)]);
    let m = GModule::trivial(&c2, &FgAbGroup::cyclic(6));
    assert_eq!(h0_limit(&fixed_point_functor(&m, &top).unwrap()).normal_form().to_string(), "Z/6");
}

#[test]
fn derivation_examples() {
    let c2 = FiniteGroup::cyclic(2);
    let q = f_derivation_quotient(&z_sign_c2(), &Family::trivial_only(&c2)).unwrap();
    assert_eq!(q.group().normal_form().to_string(), "Z/2");
    let d = &q.representatives()[0];
    assert_eq!(d.values.len(), 2);
    assert!(f_derivation_quotient(&z_sign_c2(), &Family::full(&c2)).unwrap().group().is_trivial());
    let c4 = FiniteGroup::cyclic(4);
    let hom = f_derivation_quotient(&z2_trivial(&c4), &Family::trivial_only(&c4)).unwrap();
    assert_eq!(hom.group().normal_form().to_string(), "Z/2");
    let top = Family::new(&c2, [Subgroup::whole(&c2)]);
    assert_eq!(f_derivation_quotient(&z_sign_c2(), &top).unwrap_err(), InterpError::FamilyMissingTrivial);
}

#[test]
fn f_derivation_witnesses() {
    use num_bigint::BigInt;
    let c2 = FiniteGroup::cyclic(2);
    let m = z_sign_c2();
    // D(σ) = -2 = σ·1 − 1 is principal on C2
    let d = vec![vec![BigInt::from(0)], vec![BigInt::from(-2)]];
    let w = FDerivation::new(&m, &Family::full(&c2), d).unwrap();
    assert_eq!(w.witnesses[1], vec![BigInt::from(1)]);
    let d = vec![vec![BigInt::from(0)], vec![BigInt::from(1)]];
    assert!(FDerivation::new(&m, &Family::full(&c2), d.clone()).is_none());
    assert!(FDerivation::new(&m, &Family::trivial_only(&c2), d).is_some());
}

#[test]
fn splitting_examples() {
    let c2 = FiniteGroup::cyclic(2);
    assert_eq!(
        splittings_mod_conjugacy(&z2_trivial(&c2), &Family::trivial_only(&c2), DEFAULT_SIZE_CAP).unwrap().count,
        2
    );
    assert_eq!(splittings_mod_conjugacy(&z2_trivial(&c2), &Family::full(&c2), DEFAULT_SIZE_CAP).unwrap().count, 1);
    let e = FiniteGroup::trivial();
    let m = GModule::trivial(&e, &FgAbGroup::cyclic(5));
    assert_eq!(splittings_mod_conjugacy(&m, &Family::trivial_only(&e), DEFAULT_SIZE_CAP).unwrap().count, 1);
}

#[test]
fn structure_examples() {
    let c2 = FiniteGroup::cyclic(2);
    let r = enumerate_f_structures(&z2_trivial(&c2), &Family::trivial_only(&c2), DEFAULT_SIZE_CAP).unwrap();
    assert_eq!(r.count(), 2);
    assert_eq!(r.classes.iter().filter(|c| c.split).count(), 1);
    let r = enumerate_f_structures(&z2_trivial(&c2), &Family::full(&c2), DEFAULT_SIZE_CAP).unwrap();
    assert_eq!((r.count(), r.split_index), (1, 0));
    assert!(r.classes[0].split);
    let e = FiniteGroup::trivial();
    let m = GModule::trivial(&e, &FgAbGroup::cyclic(3));
    assert_eq!(enumerate_f_structures(&m, &Family::trivial_only(&e), DEFAULT_SIZE_CAP).unwrap().count(), 1);
}

/// Homomorphisms `P -> Z/N` vanishing on every `H ∩ P`, counted on generators.
fn count_characters(p: &Subgroup, family: &Family) -> usize {
    let g = p.group();
    let n = g.exponent();
    let gens = p.generators();
    let mut count = 0;
    let mut w = vec![0usize; gens.len()];
    loop {
        // value on every element by breadth-first extension
        let mut val = vec![usize::MAX; g.order()];
        val[0] = 0;
        let mut queue = vec![0];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for (k, &s) in gens.iter().enumerate() {
                let y = g.mul(s, x);
                if val[y] == usize::MAX {
                    val[y] = (val[x] + w[k]) % n;
                    queue.push(y);
                }
            }
        }
        let hom = p.members().iter().all(|&x| p.members().iter().all(|&y| val[g.mul(x, y)] == (val[x] + val[y]) % n));
        let kills =
            family.subgroups().iter().all(|h| h.members().iter().filter(|&&x| p.contains(x)).all(|&x| val[x] == 0));
        if hom && kills {
            count += 1;
        }
        let mut k = gens.len();
        loop {
            if k == 0 {
                return count;
            }
            k -= 1;
            w[k] += 1;
            if w[k] < n {
                break;
            }
            w[k] = 0;
        }
    }
}

#[test]
fn character_examples() {
    let c4 = FiniteGroup::cyclic(4);
    let c2 = subgroup_closure(&c4, &[2]).unwrap();
    let fam = Family::new(&c4, [Subgroup::trivial(&c4), c2]);
    let whole = Subgroup::whole(&c4);
    let ch = character_group(&whole, &fam);
    assert_eq!(ch.group.to_string(), "Z/2");
    assert_eq!(count_characters(&whole, &fam), 2);
    assert!(character_group(&whole, &Family::full(&c4)).group.is_trivial());
    let s3 = FiniteGroup::symmetric(3);
    let all = Subgroup::whole(&s3);
    assert_eq!(character_group(&all, &Family::trivial_only(&s3)).group.to_string(), "Z/2");
    assert_eq!(count_characters(&all, &Family::trivial_only(&s3)), 2);
}
