// Bredon cohomology `H^n_F(G; M)` for `C2` with trivial integer coefficients.

use std::error::Error;

use bredon::bredon::{bredon_cohomology, BredonComplex};
use bredon::coeff::{fixed_point_functor, GModule};
use bredon::groups::{Family, FiniteGroup};
use bredon::intlin::FgAbGroup;

/// `H^0..H^2` for `F = {e}` and for the full family.
pub fn run_example() -> Result<(Vec<String>, Vec<String>), Box<dyn Error>> {
    let c2 = FiniteGroup::cyclic(2);
    let z = GModule::trivial(&c2, &FgAbGroup::free(1));
    let mut out = Vec::new();
    for family in [Family::trivial_only(&c2), Family::full(&c2)] {
        let n = fixed_point_functor(&z, &family)?;
        let groups: Vec<String> =
            (0..=2).map(|k| bredon_cohomology(&n, k).map(|r| r.group.to_string())).collect::<Result<_, _>>()?;
        println!("|F| = {}: {groups:?}", family.len());
        out.push(groups);
    }

    // representative cocycle of H^2 over F = {e}
    let n = fixed_point_functor(&z, &Family::trivial_only(&c2))?;
    let complex = BredonComplex::new(&n, 2)?;
    assert!(complex.is_complex());
    let h2 = complex.cohomology_with_cocycles(2)?;
    println!("{}", serde_json::to_string(&h2)?);
    let full = out.pop().expect("two families");
    Ok((out.pop().expect("two families"), full))
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
