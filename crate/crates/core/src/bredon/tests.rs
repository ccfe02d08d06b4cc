use super::*;
use crate::coeff::{fixed_point_functor, GModule};
use crate::groups::{subgroup_closure, Family, FiniteGroup, Subgroup};
use crate::intlin::{FgAbGroup, NormalForm};
use crate::orbitcat::DEFAULT_SIZE_CAP;

fn nf(s: &str) -> String {
    s.to_string()
}

fn h(m: &GModule, f: &Family, n: usize) -> String {
    bredon_cohomology(&fixed_point_functor(m, f).unwrap(), n).unwrap().group.to_string()
}

fn z_trivial(g: &FiniteGroup) -> GModule {
    GModule::trivial(g, &FgAbGroup::free(1))
}

fn z_sign_c2() -> GModule {
    let c2 = FiniteGroup::cyclic(2);
    GModule::sign(&c2, &Subgroup::trivial(&c2)).unwrap()
}

#[test]
fn degree_zero_differential_c2() {
    let c2 = FiniteGroup::cyclic(2);
    let n = fixed_point_functor(&z_trivial(&c2), &Family::full(&c2)).unwrap();
    let d0 = differential(&n, 0).unwrap();
    assert_eq!(d0.matrix().shape(), (4, 2));
    assert_eq!(d0.kernel().group().normal_form(), &NormalForm::free(1));
}

#[test]
fn cohomology_examples() {
    let c2 = FiniteGroup::cyclic(2);
    let z = z_trivial(&c2);
    assert_eq!(h(&z, &Family::full(&c2), 0), nf("Z"));
    assert_eq!(h(&z, &Family::trivial_only(&c2), 2), nf("Z/2"));
    assert_eq!(h(&z, &Family::full(&c2), 2), nf("0"));
    assert_eq!(h(&z_sign_c2(), &Family::trivial_only(&c2), 1), nf("Z/2"));
}

#[test]
fn bar_examples() {
    let c2 = FiniteGroup::cyclic(2);
    assert_eq!(bar_cohomology(&z_trivial(&c2), 2).unwrap().group.to_string(), "Z/2");
    assert_eq!(bar_cohomology(&z_sign_c2(), 1).unwrap().group.to_string(), "Z/2");
    assert_eq!(bar_cohomology(&z_sign_c2(), 0).unwrap().group.to_string(), "0");
    let s3 = FiniteGroup::symmetric(3);
    assert_eq!(bar_cohomology(&z_trivial(&s3), 2).unwrap().group.to_string(), "Z/2");
    assert_eq!(bar_cohomology(&z_trivial(&s3), 4).unwrap().group.to_string(), "Z/6");
}

#[test]
fn complexes_square_to_zero() {
    let s3 = FiniteGroup::symmetric(3);
    let n = fixed_point_functor(&z_trivial(&s3), &Family::full(&s3)).unwrap();
    assert!(BredonComplex::new(&n, 2).unwrap().is_complex());
    assert!(BarComplex::new(&z_trivial(&s3), 3, DEFAULT_SIZE_CAP).unwrap().is_complex());
}

#[test]
fn cocycles_have_one_value_per_chain() {
    let c2 = FiniteGroup::cyclic(2);
    let n = fixed_point_functor(&z_trivial(&c2), &Family::trivial_only(&c2)).unwrap();
    let r = BredonComplex::new(&n, 2).unwrap().cohomology_with_cocycles(2).unwrap();
    let cocycles = r.cocycles.unwrap();
    assert_eq!(cocycles.len(), 1);
    assert_eq!(cocycles[0].values.len(), 4);
}

#[test]
fn kernel_intersection_examples() {
    let c4 = FiniteGroup::cyclic(4);
    let c2 = subgroup_closure(&c4, &[2]).unwrap();
    let z = z_trivial(&c4);
    let fam = Family::new(&c4, [Subgroup::trivial(&c4), c2]);
    let k = restriction_kernel_intersection(&z, &fam, 2, DEFAULT_SIZE_CAP).unwrap();
    assert_eq!(k.result.group.to_string(), "Z/2");
    assert_eq!(k.hypothesis, Hypothesis::Holds);
    let all = restriction_kernel_intersection(&z, &Family::trivial_only(&c4), 2, DEFAULT_SIZE_CAP).unwrap();
    assert_eq!(all.result.group.to_string(), "Z/4");
    let g2 = FiniteGroup::cyclic(2);
    let s = restriction_kernel_intersection(&z_sign_c2(), &Family::full(&g2), 1, DEFAULT_SIZE_CAP).unwrap();
    assert!(s.result.group.is_trivial());
}
