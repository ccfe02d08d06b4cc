// Degree 0 and 1: the limit of a fixed point functor, `F`-derivations and splittings.

use std::error::Error;

use bredon::coeff::{fixed_point_functor, GModule};
use bredon::groups::{Family, FiniteGroup, Subgroup};
use bredon::interp::{f_derivation_quotient, h0_limit, splittings_mod_conjugacy};
use bredon::intlin::FgAbGroup;

/// `(H^0, Der_F/PDer, splitting classes)` for `C2` acting trivially on `Z/2`, `F = {e}`.
pub fn run_example() -> Result<(String, String, usize), Box<dyn Error>> {
    let c2 = FiniteGroup::cyclic(2);
    let m = GModule::trivial(&c2, &FgAbGroup::cyclic(2));
    let f = Family::trivial_only(&c2);
    let h0 = h0_limit(&fixed_point_functor(&m, &f)?);
    let q = f_derivation_quotient(&m, &f)?;
    for d in q.representatives() {
        println!("derivation {}", serde_json::to_string(&d)?);
    }
    let s = splittings_mod_conjugacy(&m, &f, 200_000)?;
    println!("H^0 {}, Der_F/PDer {}, {} splittings", h0.normal_form(), q.group().normal_form(), s.count);

    let sign = GModule::sign(&c2, &Subgroup::trivial(&c2))?;
    println!("sign action, full family: {}", f_derivation_quotient(&sign, &Family::full(&c2))?.group().normal_form());
    Ok((h0.normal_form().to_string(), q.group().normal_form().to_string(), s.count))
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
