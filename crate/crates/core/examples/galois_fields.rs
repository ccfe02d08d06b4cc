// Bredon-Galois cohomology of `GF(16) / GF(2)`.

use std::error::Error;

use bredon::galoisff::{brauer_intersection, bredon_hilbert90, odd_vanishing_check, FiniteFieldExtension};
use bredon::groups::closed_families;

/// `(H^1, H^2, H^3)` per closed family of `Gal = C4`.
pub fn run_example() -> Result<Vec<[String; 3]>, Box<dyn Error>> {
    let ext = FiniteFieldExtension::new(2, 4, 1)?;
    println!("units {} acted on by C{}", ext.units().carrier().normal_form(), ext.group().order());
    let mut out = Vec::new();
    for f in closed_families(ext.group()).into_iter().filter(|f| f.contains_trivial()) {
        let h1 = bredon_hilbert90(&ext, &f)?.group;
        let h2 = brauer_intersection(&ext, &f)?.group;
        let odd = odd_vanishing_check(&ext, &f, 1)?;
        println!("|F| = {}: H^1 {h1}, H^2 {h2}, H^3 {} (vanishes {})", f.len(), odd.result.group, odd.vanishes());
        out.push([h1.to_string(), h2.to_string(), odd.result.group.to_string()]);
    }
    Ok(out)
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
