// Smith normal form, abelian group normal forms and a homology computation.
//
// Run with `cargo run --example smith_normal_form`.

use std::error::Error;

use bredon::intlin::{homology, smith_normal_form, AbHom, FgAbGroup, IntMatrix, NormalForm};
use num_bigint::BigInt;

pub fn run_example() -> Result<Vec<NormalForm>, Box<dyn Error>> {
    let a = IntMatrix::from_i64_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let s = smith_normal_form(&a);
    assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
    println!("diagonal {:?}", s.diagonal());

    // coker(a) = Z^3 / columns
    let z3 = FgAbGroup::free(3);
    let coker = AbHom::new(z3.clone(), z3.clone(), a)?.cokernel();
    println!("Z^3 / A = {}", coker.group().normal_form());

    // Z --x2--> Z --0--> Z, homology at the middle
    let z = FgAbGroup::free(1);
    let two = AbHom::new(z.clone(), z.clone(), IntMatrix::from_i64_rows(&[vec![2]]))?;
    let h = homology(&two, &AbHom::zero(&z, &z))?;
    println!("ker 0 / im 2 = {}, class of 3 is {:?}", h.group().normal_form(), h.coordinates(&[BigInt::from(3)]));

    let mixed = FgAbGroup::from_moduli_u64(&[4, 6, 0]);
    println!("Z/4 + Z/6 + Z = {}", mixed.normal_form());
    Ok(vec![coker.group().normal_form().clone(), h.group().normal_form().clone(), mixed.normal_form().clone()])
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}
