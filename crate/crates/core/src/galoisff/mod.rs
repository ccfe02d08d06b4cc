//! Finite Galois extensions `GF(p^n) / GF(p^d)` as Bredon coefficient systems.
//!
//! Only the unit group matters: `GF(p^n)^×` is cyclic of order `p^n − 1`, and
//! the Galois group `C_{n/d}` is generated by `x ↦ x^{p^d}`, which is
//! multiplication by `p^d` on `Z/(p^n − 1)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bredon::{bredon_cohomology, BredonError, CohomologyResult};
use crate::coeff::{fixed_point_functor, CoeffError, GModule};
use crate::groups::{closed_families, Family, FiniteGroup};
use crate::intlin::{FgAbGroup, IntMatrix, NormalForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaloisError {
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("the family must contain the trivial subgroup")]
    FamilyMissingTrivial,
    #[error("the family must be closed under conjugation and subgroups")]
    FamilyNotClosed,
    #[error(transparent)]
    Bredon(#[from] BredonError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

#[derive(Clone, Debug)]
pub struct FiniteFieldExtension {
    p: u64,
    n: u32,
    d: u32,
    units: GModule,
}

impl FiniteFieldExtension {
    pub fn new(p: u64, n: u32, d: u32) -> Result<Self, GaloisError> {
        if !is_prime(p) {
            return Err(GaloisError::BadParameters(format!("{p} is not prime")));
        }
        if d == 0 || !n.is_multiple_of(d) {
            return Err(GaloisError::BadParameters(format!("{d} does not divide {n}")));
        }
        let order = p
            .checked_pow(n)
            .filter(|q| *q <= i64::MAX as u64)
            .ok_or_else(|| GaloisError::BadParameters(format!("{p}^{n} is too large")))?
            - 1;
        let group = FiniteGroup::cyclic((n / d) as usize);
        let carrier = FgAbGroup::cyclic(order);
        let units = if n == d {
            GModule::trivial(&group, &carrier)
        } else {
            let frob = p.pow(d) % order;
            let m = IntMatrix::from_i64_rows(&[vec![frob as i64]]);
            GModule::from_generators(&group, &carrier, &[1], &[m])?
        };
        Ok(FiniteFieldExtension { p, n, d, units })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// `Gal(GF(p^n)/GF(p^d))`, cyclic of order `n/d`; element `1` is the Frobenius `x ↦ x^{p^d}`.
    pub fn group(&self) -> &FiniteGroup {
        self.units.group()
    }

    pub fn units(&self) -> &GModule {
        &self.units
    }

    /// `H^k_F(G, E^×)` over the fixed point functor.
    pub fn cohomology(&self, family: &Family, k: usize) -> Result<CohomologyResult, GaloisError> {
        if family.group() != self.group() {
            return Err(GaloisError::Bredon(BredonError::GroupMismatch));
        }
        if !family.contains_trivial() {
            return Err(GaloisError::FamilyMissingTrivial);
        }
        let n = fixed_point_functor(&self.units, family)?;
        Ok(bredon_cohomology(&n, k)?)
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|i| i * i <= p).all(|i| !p.is_multiple_of(i))
}

pub fn units_gmodule(p: u64, n: u32, d: u32) -> Result<GModule, GaloisError> {
    Ok(FiniteFieldExtension::new(p, n, d)?.units)
}

/// `H¹_F(G, E^×)`, which vanishes for every family containing `{e}`.
pub fn bredon_hilbert90(ext: &FiniteFieldExtension, family: &Family) -> Result<CohomologyResult, GaloisError> {
    ext.cohomology(family, 1)
}

/// `H²_F(G, E^×) ≅ ∩_{H∈F} Br(E^H/K)`, zero for finite fields.
pub fn brauer_intersection(ext: &FiniteFieldExtension, family: &Family) -> Result<CohomologyResult, GaloisError> {
    ext.cohomology(family, 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimaryPart {
    pub prime: u64,
    #[serde(flatten)]
    pub group: NormalForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddVanishing {
    #[serde(flatten)]
    pub result: CohomologyResult,
    /// One entry per prime dividing `|G|`.
    pub primary_parts: Vec<PrimaryPart>,
}

impl OddVanishing {
    pub fn vanishes(&self) -> bool {
        self.primary_parts.iter().all(|p| p.group.is_trivial())
    }
}

/// Primary parts of `H^{2k+1}_F` at the primes dividing `|G|`.
pub fn odd_vanishing_check(ext: &FiniteFieldExtension, family: &Family, k: usize) -> Result<OddVanishing, GaloisError> {
    if !(family.is_conjugation_closed() && family.is_subgroup_closed()) {
        return Err(GaloisError::FamilyNotClosed);
    }
    let result = ext.cohomology(family, 2 * k + 1)?;
    let primary_parts = prime_factors(ext.group().order() as u64)
        .into_iter()
        .map(|q| PrimaryPart { prime: q, group: result.group.primary_part(q) })
        .collect();
    Ok(OddVanishing { result, primary_parts })
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a finite normal form into its primary parts, ascending by prime.
pub fn primary_decomposition(nf: &NormalForm) -> Vec<PrimaryPart> {
    nf.torsion_primes().into_iter().map(|q| PrimaryPart { prime: q, group: nf.primary_part(q) }).collect()
}

/// Reassembles primary parts into a normal form.
pub fn recombine(parts: &[PrimaryPart]) -> NormalForm {
    let pieces: Vec<FgAbGroup> = parts.iter().map(|p| FgAbGroup::from_normal_form(&p.group)).collect();
    FgAbGroup::direct_sum(&pieces).normal_form().clone()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GridEntry {
    pub p: u64,
    pub n: u32,
    pub d: u32,
    /// Subgroup orders of the family members.
    pub family: Vec<usize>,
    pub h1: NormalForm,
    pub h2: NormalForm,
    pub h3: NormalForm,
}

impl GridEntry {
    pub fn all_zero(&self) -> bool {
        self.h1.is_trivial() && self.h2.is_trivial() && self.h3.is_trivial()
    }
}

/// `H¹, H², H³` for every `p` in `primes`, `n ≤ max_n`, `d | n` and closed family containing `{e}`.
pub fn galois_grid(primes: &[u64], max_n: u32) -> Result<Vec<GridEntry>, GaloisError> {
    let mut jobs = Vec::new();
    for &p in primes {
        for n in 1..=max_n {
            for d in (1..=n).filter(|d| n % d == 0) {
                let ext = FiniteFieldExtension::new(p, n, d)?;
                for f in closed_families(ext.group()).into_iter().filter(Family::contains_trivial) {
                    jobs.push((ext.clone(), f));
                }
            }
        }
    }
    jobs.par_iter()
        .map(|(ext, f)| {
            let h = |k| ext.cohomology(f, k).map(|r| r.group);
            Ok(GridEntry {
                p: ext.p,
                n: ext.n,
                d: ext.d,
                family: f.subgroups().iter().map(|s| s.order()).collect(),
                h1: h(1)?,
                h2: h(2)?,
                h3: h(3)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    /// Smallest power of `x` equal to one modulo `m`.
    fn multiplicative_order(x: &BigInt, m: &BigInt) -> usize {
        let mut y = x.clone() % m;
        let mut k = 1;
        while y != BigInt::from(1) % m {
            y = y * x % m;
            k += 1;
        }
        k
    }

    #[test]
    fn units_examples() {
        let m = units_gmodule(2, 2, 1).unwrap();
        assert_eq!(m.carrier().normal_form().to_string(), "Z/3");
        assert_eq!(m.act(1, &[BigInt::from(1)]), vec![BigInt::from(2)]);
        let m = units_gmodule(3, 2, 1).unwrap();
        assert_eq!(m.carrier().normal_form().to_string(), "Z/8");
        assert_eq!(m.act(1, &[BigInt::from(1)]), vec![BigInt::from(3)]);
        let m = units_gmodule(5, 3, 3).unwrap();
        assert_eq!(m.group().order(), 1);
        assert!(matches!(units_gmodule(4, 2, 1), Err(GaloisError::BadParameters(_))));
        assert!(matches!(units_gmodule(2, 3, 2), Err(GaloisError::BadParameters(_))));
    }

    #[test]
    fn frobenius_has_order_n_over_d() {
        for (p, n, d) in [(2u64, 4u32, 1u32), (3, 4, 2), (2, 3, 1), (3, 3, 1)] {
            let m = BigInt::from(p.pow(n) - 1);
            assert_eq!(multiplicative_order(&BigInt::from(p.pow(d)), &m), (n / d) as usize);
        }
    }

    #[test]
    fn lemma_examples() {
        let ext = FiniteFieldExtension::new(2, 2, 1).unwrap();
        let g = ext.group().clone();
        assert!(bredon_hilbert90(&ext, &Family::full(&g)).unwrap().group.is_trivial());
        assert!(brauer_intersection(&ext, &Family::trivial_only(&g)).unwrap().group.is_trivial());
        let odd = odd_vanishing_check(&ext, &Family::trivial_only(&g), 1).unwrap();
        assert!(odd.result.group.is_trivial() && odd.vanishes());
        let ext = FiniteFieldExtension::new(3, 2, 1).unwrap();
        assert!(bredon_hilbert90(&ext, &Family::trivial_only(ext.group())).unwrap().group.is_trivial());
        let ext = FiniteFieldExtension::new(2, 4, 1).unwrap();
        let full = Family::full(ext.group());
        assert!(brauer_intersection(&ext, &full).unwrap().group.is_trivial());
        let odd = odd_vanishing_check(&ext, &full, 1).unwrap();
        assert_eq!(odd.primary_parts.len(), 1);
        assert!(odd.result.group.is_trivial());
    }

    #[test]
    fn family_checks() {
        let ext = FiniteFieldExtension::new(2, 2, 1).unwrap();
        let top = Family::new(ext.group(), [crate::groups::Subgroup::whole(ext.group())]);
        assert_eq!(bredon_hilbert90(&ext, &top).unwrap_err(), GaloisError::FamilyMissingTrivial);
    }

    #[test]
    fn primary_parts_recombine() {
        let nf = FgAbGroup::from_moduli_u64(&[12, 18, 0]).normal_form().clone();
        let finite = NormalForm::from_orders(0, &nf.torsion);
        let parts = primary_decomposition(&finite);
        assert_eq!(parts.iter().map(|p| p.prime).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(recombine(&parts), finite);
    }
}
