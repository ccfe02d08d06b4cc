// Ordinary cohomology from the normalized bar complex, compared with Bredon over `{e}`.

use std::error::Error;

use bredon::bredon::{bar_cohomology, bredon_cohomology};
use bredon::coeff::{fixed_point_functor, GModule};
use bredon::groups::{Family, FiniteGroup};
use bredon::intlin::FgAbGroup;

/// `H^n(S3; Z)` for `n = 0..=4`.
pub fn run_example() -> Result<Vec<String>, Box<dyn Error>> {
    let s3 = FiniteGroup::symmetric(3);
    let z = GModule::trivial(&s3, &FgAbGroup::free(1));
    let fixed = fixed_point_functor(&z, &Family::trivial_only(&s3))?;
    let mut out = Vec::new();
    for n in 0..=4 {
        let bar = bar_cohomology(&z, n)?.group;
        if n <= 3 {
            assert_eq!(bredon_cohomology(&fixed, n)?.group, bar);
        }
        println!("H^{n}(S3; Z) = {bar}");
        out.push(bar.to_string());
    }
    Ok(out)
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
