// Fixed point functors: `G/H ↦ M^H` for the regular representation of `C2 × C2`.

use std::error::Error;

use bredon::coeff::{fixed_point_functor, invariants, restrict_module, GModule};
use bredon::groups::{Family, FiniteGroup, Subgroup};
use bredon::intlin::{FgAbGroup, IntMatrix, NormalForm};
use num_bigint::BigInt;

/// Ranks of `M^H` over the full family.
pub fn run_example() -> Result<Vec<NormalForm>, Box<dyn Error>> {
    let g = FiniteGroup::elementary_abelian(2, 2);
    let n = g.order();
    let mats = g.elements().map(|a| IntMatrix::from_fn(n, n, |i, j| BigInt::from((g.mul(a, j) == i) as i64))).collect();
    let m = GModule::new(&g, &FgAbGroup::free(n), mats)?;

    let full = Family::full(&g);
    let fixed = fixed_point_functor(&m, &full)?;
    fixed.validate()?;
    let values: Vec<NormalForm> = fixed.values().iter().map(|v| v.normal_form().clone()).collect();
    for (h, v) in full.subgroups().iter().zip(&values) {
        println!("M^{:?} = {v}", h.members());
    }

    let inv = invariants(&m, &Subgroup::whole(&g));
    println!("norm element {:?}", inv.generators());

    let c2 = full.subgroups()[1].clone();
    let restricted = restrict_module(&fixed, &c2)?;
    println!("restricted to {:?}: {} objects", c2.members(), restricted.category().len());
    Ok(values)
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
