// Degree 2: `F`-structures on extensions of `C2` by `Z/2`.

use std::error::Error;

use bredon::coeff::GModule;
use bredon::groups::{Family, FiniteGroup, GroupExtension, Subgroup};
use bredon::interp::{axiom_one_lifts, check_f_structure, enumerate_f_structures};
use bredon::intlin::FgAbGroup;

/// Class counts for `F = {e}` and the full family, and the number of order-2 lifts in `C4`.
pub fn run_example() -> Result<(usize, usize, usize), Box<dyn Error>> {
    let c2 = FiniteGroup::cyclic(2);
    let m = GModule::trivial(&c2, &FgAbGroup::cyclic(2));
    let trivial = enumerate_f_structures(&m, &Family::trivial_only(&c2), 200_000)?;
    let full = enumerate_f_structures(&m, &Family::full(&c2), 200_000)?;
    println!("F = {{e}}: {} classes, F full: {} classes", trivial.count(), full.count());

    // the nonsplit extension C4 has no lift of C2 that maps isomorphically
    let tables = m.tables().expect("finite module");
    let c4 = GroupExtension::from_factor_set(&c2, tables.tables(), &[0, 0, 0, 1])?;
    println!("total group of order {} abelian {}", c4.total().order(), c4.total().is_abelian());
    let lifts = axiom_one_lifts(&c4, &Subgroup::whole(&c2), tables.size());
    println!("{} lifts of C2 in C4", lifts.len());

    let split = GroupExtension::semidirect(&c2, tables.tables());
    let standard = axiom_one_lifts(&split, &Subgroup::whole(&c2), tables.size());
    let family = Family::full(&c2);
    let structure: Vec<Vec<usize>> =
        family.subgroups().iter().map(|h| if h.is_trivial() { vec![0] } else { standard[0].clone() }).collect();
    println!("standard structure valid: {:?}", check_f_structure(&split, &family, &structure));
    Ok((trivial.count(), full.count(), lifts.len()))
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
