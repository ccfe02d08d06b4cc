use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use super::finite::{check_count, derivations, finite, for_each_word};
use super::splittings::{conjugate_set, conjugate_to_lifts};
use super::InterpError;
use crate::coeff::GModule;
use crate::groups::{subgroup_closure, Family, FiniteGroup, GroupExtension, ModuleTables, Subgroup};

/// An extension `Γ` given by a normalized factor set, and subgroups `Γ_H` (one per
/// member of the family, as sorted element lists of `Γ`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FStructureWitness {
    /// `c[x*|G| + y]` as a module element index.
    pub factor_set: Vec<usize>,
    pub lifts: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FStructureClass {
    pub witness: FStructureWitness,
    pub split: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub classes: Vec<FStructureClass>,
    /// Position of the class of the standard split structure `({0}, H)` on `M ⋊ G`.
    pub split_index: usize,
    /// Number of classes of normalized factor sets, i.e. `|H²(G, M)|`.
    pub extension_classes: usize,
}

impl StructureReport {
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AxiomViolation {
    #[error("Γ_H for family member {0} does not map isomorphically onto H")]
    NotIsomorphic(usize),
    #[error("no lift y of {x} conjugates Γ_H (member {h}) into Γ_K (member {k})")]
    NoConjugatingLift { h: usize, k: usize, x: usize },
    #[error("expected one lift per family member")]
    WrongCount,
}

/// Axiom (i): `Γ_H` is a subgroup of `Γ` and `π` maps it bijectively onto `H`.
pub fn satisfies_axiom_one(ext: &GroupExtension, h: &Subgroup, lift: &[usize]) -> bool {
    let t = ext.total();
    if lift.len() != h.order() {
        return false;
    }
    let mut proj: Vec<usize> = lift.iter().map(|&z| ext.project(z)).collect();
    proj.sort_unstable();
    if proj != h.members() {
        return false;
    }
    let set: BTreeSet<usize> = lift.iter().copied().collect();
    lift.iter().all(|&a| lift.iter().all(|&b| set.contains(&t.mul(a, b))))
}

/// Axiom (ii) for one ordered pair: whenever `x⁻¹Hx ⊆ K`, some `y ∈ π⁻¹(x)` has `y⁻¹Γ_H y ⊆ Γ_K`.
fn pair_ok(ext: &GroupExtension, h: &Subgroup, k: &Subgroup, gh: &[usize], gk: &[usize]) -> Option<usize> {
    let g = ext.quotient();
    let t = ext.total();
    let gens: Vec<usize> = h.generators();
    for x in g.elements() {
        if !gens.iter().all(|&s| k.contains(g.conj(x, s))) {
            continue;
        }
        let found = ext.fibre(x).into_iter().any(|y| gh.iter().all(|&z| gk.binary_search(&t.conj(y, z)).is_ok()));
        if !found {
            return Some(x);
        }
    }
    None
}

/// Checks both axioms of an `F`-structure.
pub fn check_f_structure(ext: &GroupExtension, family: &Family, lifts: &[Vec<usize>]) -> Result<(), AxiomViolation> {
    let subs = family.subgroups();
    if lifts.len() != subs.len() {
        return Err(AxiomViolation::WrongCount);
    }
    for (i, (h, l)) in subs.iter().zip(lifts).enumerate() {
        if !satisfies_axiom_one(ext, h, l) {
            return Err(AxiomViolation::NotIsomorphic(i));
        }
    }
    for (i, h) in subs.iter().enumerate() {
        for (j, k) in subs.iter().enumerate() {
            if let Some(x) = pair_ok(ext, h, k, &lifts[i], &lifts[j]) {
                return Err(AxiomViolation::NoConjugatingLift { h: i, k: j, x });
            }
        }
    }
    Ok(())
}

/// Every subgroup of `Γ` satisfying axiom (i) over `H`, as sorted member lists.
pub fn axiom_one_lifts(ext: &GroupExtension, h: &Subgroup, m_size: usize) -> Vec<Vec<usize>> {
    let gens = h.generators();
    let mut out = BTreeSet::new();
    for_each_word(m_size, gens.len(), |w| {
        let seed: Vec<usize> = gens.iter().zip(w).map(|(&x, &m)| ext.element(m, x)).collect();
        let s = subgroup_closure(ext.total(), &seed).expect("valid indices");
        if satisfies_axiom_one(ext, h, s.members()) {
            out.insert(s.members().to_vec());
        }
    });
    out.into_iter().collect()
}

/// Normalized 2-cocycles, as full `|G|×|G|` tables, in lexicographic order.
fn cocycles(g: &FiniteGroup, t: &ModuleTables, cap: usize) -> Result<Vec<Vec<usize>>, InterpError> {
    let n = g.order();
    let free = (n - 1) * (n - 1);
    check_count(t.size(), free, cap, "normalized factor sets")?;
    let mut out = Vec::new();
    for_each_word(t.size(), free, |w| {
        let mut c = vec![0; n * n];
        for x in 1..n {
            for y in 1..n {
                c[x * n + y] = w[(x - 1) * (n - 1) + (y - 1)];
            }
        }
        if is_cocycle(g, t, &c) {
            out.push(c);
        }
    });
    Ok(out)
}

fn is_cocycle(g: &FiniteGroup, t: &ModuleTables, c: &[usize]) -> bool {
    let n = g.order();
    // x·c(y,z) + c(x,yz) = c(xy,z) + c(x,y)
    (1..n).all(|x| {
        (1..n).all(|y| {
            (1..n).all(|z| {
                t.add[t.act[x][c[y * n + z]]][c[x * n + g.mul(y, z)]] == t.add[c[g.mul(x, y) * n + z]][c[x * n + y]]
            })
        })
    })
}

/// Representatives (lexicographically least) of the classes of normalized cocycles modulo coboundaries.
fn cohomology_classes(g: &FiniteGroup, t: &ModuleTables, cap: usize) -> Result<Vec<Vec<usize>>, InterpError> {
    let n = g.order();
    check_count(t.size(), n - 1, cap, "normalized 1-cochains")?;
    let mut boundaries = BTreeSet::new();
    for_each_word(t.size(), n - 1, |w| {
        let b = |x: usize| if x == 0 { 0 } else { w[x - 1] };
        let mut d = vec![0; n * n];
        for x in g.elements() {
            for y in g.elements() {
                // x·b(y) − b(xy) + b(x)
                d[x * n + y] = t.sub(t.add[t.act[x][b(y)]][b(x)], b(g.mul(x, y)));
            }
        }
        boundaries.insert(d);
    });
    let mut seen = BTreeSet::new();
    let mut reps = Vec::new();
    for c in cocycles(g, t, cap)? {
        if seen.contains(&c) {
            continue;
        }
        for d in &boundaries {
            seen.insert(c.iter().zip(d).map(|(&a, &b)| t.add[a][b]).collect::<Vec<_>>());
        }
        reps.push(c);
    }
    Ok(reps)
}

/// All collections `{Γ_H}` on one extension satisfying both axioms, by backtracking.
fn structures_on(
    ext: &GroupExtension,
    family: &Family,
    m_size: usize,
    cap: usize,
) -> Result<Vec<Vec<Vec<usize>>>, InterpError> {
    let subs = family.subgroups();
    let candidates: Vec<Vec<Vec<usize>>> = subs.iter().map(|h| axiom_one_lifts(ext, h, m_size)).collect();
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    fn go(
        ext: &GroupExtension,
        subs: &[Subgroup],
        cands: &[Vec<Vec<usize>>],
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
        cap: usize,
    ) -> bool {
        let i = current.len();
        if i == subs.len() {
            out.push(current.clone());
            return out.len() <= cap;
        }
        for l in &cands[i] {
            let ok = (0..=i).all(|j| {
                let lj = if j == i { l } else { &current[j] };
                pair_ok(ext, &subs[i], &subs[j], l, lj).is_none() && pair_ok(ext, &subs[j], &subs[i], lj, l).is_none()
            });
            if ok {
                current.push(l.clone());
                let more = go(ext, subs, cands, current, out, cap);
                current.pop();
                if !more {
                    return false;
                }
            }
        }
        true
    }
    if !go(ext, subs, &candidates, &mut current, &mut out, cap) {
        return Err(InterpError::SizeLimit(format!("more than {cap} F-structures on one extension")));
    }
    Ok(out)
}

/// Orbit representative under `θ_b` (for derivations `b`) and per-member conjugation by `M`.
fn canonical(ext: &GroupExtension, t: &ModuleTables, z1: &[Vec<usize>], lifts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = ext.quotient().order();
    z1.iter()
        .map(|b| {
            lifts
                .iter()
                .map(|l| {
                    // θ_b(m, x) = (m + b(x), x) in the factor-set numbering m·|G| + x
                    let moved: Vec<usize> = l.iter().map(|&z| t.add[z / n][b[z % n]] * n + z % n).collect();
                    (0..t.size()).map(|m| conjugate_set(ext, &moved, m)).min().expect("M is nonempty")
                })
                .collect::<Vec<_>>()
        })
        .min()
        .expect("zero derivation")
}

fn is_split(
    ext: &GroupExtension,
    t: &ModuleTables,
    family: &Family,
    lifts: &[Vec<usize>],
    cap: usize,
) -> Result<bool, InterpError> {
    let g = ext.quotient();
    let gens = Subgroup::whole(g).generators();
    check_count(t.size(), gens.len(), cap, "sections")?;
    let mut split = false;
    for_each_word(t.size(), gens.len(), |w| {
        if split {
            return;
        }
        let seed: Vec<(usize, usize)> = gens.iter().zip(w).map(|(&x, &m)| (x, ext.element(m, x))).collect();
        if let Some(s) = extend_section(ext, &seed) {
            split = conjugate_to_lifts(ext, t.size(), family, &s, lifts);
        }
    });
    Ok(split)
}

/// A homomorphic section determined by its values on generators, if one exists.
fn extend_section(ext: &GroupExtension, seed: &[(usize, usize)]) -> Option<Vec<usize>> {
    let g = ext.quotient();
    let tt = ext.total();
    let mut s = vec![usize::MAX; g.order()];
    s[0] = 0;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &(gen, v) in seed {
            let y = g.mul(gen, x);
            if s[y] == usize::MAX {
                s[y] = tt.mul(v, s[x]);
                queue.push(y);
            }
        }
    }
    crate::groups::is_homomorphism(&s, g, tt).then_some(s)
}

/// Equivalence classes of `F`-structures on `(G, M)`: factor sets are enumerated
/// and grouped into cohomology classes, each class representative is built as
/// `Γ = M × G`, its collections `{Γ_H}` found by search, and collections are
/// identified under automorphisms over `id_M`, `id_G` and conjugation by `M`.
pub fn enumerate_f_structures(m: &GModule, family: &Family, cap: usize) -> Result<StructureReport, InterpError> {
    if !family.contains_trivial() {
        return Err(InterpError::FamilyMissingTrivial);
    }
    if family.group() != m.group() {
        return Err(InterpError::GroupMismatch);
    }
    let fm = finite(m)?;
    let t = fm.tables();
    let g = m.group();
    let z1 = derivations(g, t, cap)?;
    let reps = cohomology_classes(g, t, cap)?;
    let per_class: Vec<Result<Vec<FStructureClass>, InterpError>> = reps
        .par_iter()
        .map(|c| {
            let ext = GroupExtension::from_factor_set(g, t, c).expect("normalized cocycle");
            let mut canon: Vec<Vec<Vec<usize>>> =
                structures_on(&ext, family, t.size(), cap)?.iter().map(|s| canonical(&ext, t, &z1, s)).collect();
            canon.sort();
            canon.dedup();
            canon
                .into_iter()
                .map(|lifts| {
                    let split = is_split(&ext, t, family, &lifts, cap)?;
                    Ok(FStructureClass { witness: FStructureWitness { factor_set: c.clone(), lifts }, split })
                })
                .collect()
        })
        .collect();
    let mut classes = Vec::new();
    for r in per_class {
        classes.extend(r?);
    }
    let zero = vec![0; g.order() * g.order()];
    let ext0 = GroupExtension::from_factor_set(g, t, &zero).expect("zero factor set");
    let standard: Vec<Vec<usize>> =
        family.subgroups().iter().map(|h| h.members().iter().map(|&x| ext0.element(0, x)).collect()).collect();
    let standard = canonical(&ext0, t, &z1, &standard);
    let split_index = classes
        .iter()
        .position(|c| c.witness.factor_set == zero && c.witness.lifts == standard)
        .expect("the standard split structure satisfies both axioms");
    Ok(StructureReport { classes, split_index, extension_classes: reps.len() })
}
