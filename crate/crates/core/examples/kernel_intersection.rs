// `H^n_F` as the common kernel of restrictions `H^n(G) -> H^n(H)`, `H ∈ F`.

use std::error::Error;

use bredon::bredon::{bredon_cohomology, restriction_kernel_intersection, Hypothesis};
use bredon::coeff::{fixed_point_functor, GModule};
use bredon::groups::{subgroup_closure, Family, FiniteGroup, Subgroup};
use bredon::intlin::FgAbGroup;

/// `(kernel, H^2_F, hypothesis)` for `C4`, `Z` trivial and `F = {1, C2}`.
pub fn run_example() -> Result<(String, String, Hypothesis), Box<dyn Error>> {
    let c4 = FiniteGroup::cyclic(4);
    let f = Family::new(&c4, [Subgroup::trivial(&c4), subgroup_closure(&c4, &[2])?]);
    let z = GModule::trivial(&c4, &FgAbGroup::free(1));
    let k1 = restriction_kernel_intersection(&z, &f, 1, 200_000)?;
    let k2 = restriction_kernel_intersection(&z, &f, 2, 200_000)?;
    let h2 = bredon_cohomology(&fixed_point_functor(&z, &f)?, 2)?.group;
    println!("n=1 kernel {}, n=2 kernel {} ({:?}), H^2_F {h2}", k1.result.group, k2.result.group, k2.hypothesis);
    Ok((k2.result.group.to_string(), h2.to_string(), k2.hypothesis))
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
