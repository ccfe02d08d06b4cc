use super::{FiniteGroup, GroupError, Subgroup};

/// True iff `f` is a homomorphism `source -> target`.
pub fn is_homomorphism(f: &[usize], source: &FiniteGroup, target: &FiniteGroup) -> bool {
    f.len() == source.order()
        && f.iter().all(|&y| y < target.order())
        && source.elements().all(|x| source.elements().all(|y| f[source.mul(x, y)] == target.mul(f[x], f[y])))
}

fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|p| n.is_multiple_of(*p)).expect("n has a prime factor");
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// Least element of prime-power order that fixes no coset of `h`.
pub fn fixed_point_free_prime_power_element(group: &FiniteGroup, h: &Subgroup) -> Result<usize, GroupError> {
    if h.is_whole() {
        return Err(GroupError::SingletonAction);
    }
    let reps = h.coset_reps();
    group
        .elements()
        .filter(|&g| is_prime_power(group.element_order(g)))
        .find(|&g| reps.iter().all(|&x| !h.contains(group.conj(x, g))))
        .ok_or(GroupError::NotFound)
}
