// Groups from tables and permutations, subgroup lattices and families.

use std::error::Error;

use bredon::groups::{all_subgroups, closed_families, family_close, subgroup_classes, Family, FiniteGroup, Subgroup};

/// Returns `(subgroups, conjugacy classes, closed families)` for `S3`, and the closure size of `{C2}`.
pub fn run_example() -> Result<(usize, usize, usize, usize), Box<dyn Error>> {
    let s3 = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]])?;
    let subs = all_subgroups(&s3);
    for h in &subs {
        println!("order {} members {:?} normal {}", h.order(), h.members(), h.is_normal());
    }
    let classes = subgroup_classes(&s3);
    let families = closed_families(&s3);
    println!("{} subgroups, {} classes, {} closed families", subs.len(), classes.len(), families.len());

    let c2 = subs.iter().find(|h| h.order() == 2).cloned().expect("a transposition subgroup");
    let seed = Family::new(&s3, [c2]);
    let closed = family_close(&seed, true, true);
    println!("closure of one C2: orders {:?}", closed.subgroups().iter().map(Subgroup::order).collect::<Vec<_>>());
    Ok((subs.len(), classes.len(), families.len(), closed.len()))
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
