// The orbit category of `C4` relative to all subgroups.

use std::error::Error;

use bredon::groups::{Family, FiniteGroup};
use bredon::orbitcat::OrbitCategory;

/// Chain counts in degrees 0..=3.
pub fn run_example() -> Result<Vec<u128>, Box<dyn Error>> {
    let c4 = FiniteGroup::cyclic(4);
    let cat = OrbitCategory::new(&Family::full(&c4));
    for h in 0..cat.len() {
        for k in 0..cat.len() {
            let reps: Vec<usize> = cat.morphisms(h, k).iter().map(|f| f.rep).collect();
            if !reps.is_empty() {
                println!("G/{} -> G/{}: {:?}", cat.subgroup(h).order(), cat.subgroup(k).order(), reps);
            }
        }
    }
    let counts: Vec<u128> = (0..4).map(|n| cat.chain_count(n)).collect();
    println!("chains by degree {counts:?}");
    let chains = cat.chains(2)?;
    assert!(chains.iter().enumerate().all(|(i, c)| cat.chain_index(c) == i));
    Ok(counts)
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
