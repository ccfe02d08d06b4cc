// `H^2_F(G; Z)` as the characters of `G` vanishing on every member of `F`.

use std::error::Error;

use bredon::bredon::bredon_cohomology;
use bredon::coeff::{fixed_point_functor, GModule};
use bredon::groups::{closed_families, FiniteGroup, Subgroup};
use bredon::interp::character_group;
use bredon::intlin::FgAbGroup;

/// `(characters, H^2_F)` for each closed family of `D4`.
pub fn run_example() -> Result<Vec<(String, String)>, Box<dyn Error>> {
    let d4 = FiniteGroup::dihedral(4);
    let z = GModule::trivial(&d4, &FgAbGroup::free(1));
    let mut out = Vec::new();
    for f in closed_families(&d4) {
        let ch = character_group(&Subgroup::whole(&d4), &f);
        let h2 = bredon_cohomology(&fixed_point_functor(&z, &f)?, 2)?.group;
        let orders: Vec<usize> = f.subgroups().iter().map(Subgroup::order).collect();
        println!("F orders {orders:?}: characters {}, H^2_F {h2}", ch.group);
        out.push((ch.group.to_string(), h2.to_string()));
    }
    Ok(out)
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
