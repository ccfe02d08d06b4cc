//! Built-in verification suites, one check per acceptance criterion.
//!
//! Each check records its computed values in `evidence`; reruns and different
//! thread counts must reproduce it byte for byte.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::CliError;
use crate::bredon::{restriction_kernel_intersection, BarComplex, BredonComplex};
use crate::coeff::{fixed_point_functor, GModule};
use crate::galoisff::{galois_grid, primary_decomposition, recombine};
use crate::groups::{
    all_subgroups, closed_families, fixed_point_free_prime_power_element, named_group, small_groups, Family,
    FiniteGroup, Subgroup,
};
use crate::interp::{character_group, enumerate_f_structures, splittings_mod_conjugacy};
use crate::intlin::{smith_normal_form, FgAbGroup, IntMatrix, NormalForm};
use crate::orbitcat::{OrbitCategory, DEFAULT_SIZE_CAP};

pub const SUITES: [&str; 6] = ["oracle", "characters", "structures", "galois", "properties", "all"];

/// Number of random matrices in the Smith normal form check.
pub const SNF_SAMPLES: usize = 1000;
pub const SNF_SEED: u64 = 0x5eed_0001;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub criterion: u8,
    pub name: &'static str,
    pub pass: bool,
    pub cases: usize,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub millis: u128,
    #[serde(skip)]
    pub evidence: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckOutcome>,
}

/// Collects case results for one criterion.
struct Tally {
    criterion: u8,
    name: &'static str,
    start: Instant,
    cases: usize,
    failures: Vec<String>,
    evidence: Vec<String>,
}

impl Tally {
    fn new(criterion: u8, name: &'static str) -> Self {
        Tally { criterion, name, start: Instant::now(), cases: 0, failures: Vec::new(), evidence: Vec::new() }
    }

    fn case(&mut self, ok: bool, evidence: String) {
        self.cases += 1;
        if !ok {
            self.failures.push(evidence.clone());
        }
        self.evidence.push(evidence);
    }

    fn error(&mut self, context: String, e: impl std::fmt::Display) {
        self.case(false, format!("{context}: error {e}"));
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            criterion: self.criterion,
            name: self.name,
            pass: self.failures.is_empty() && self.cases > 0,
            cases: self.cases,
            failures: self.failures,
            millis: self.start.elapsed().as_millis(),
            evidence: self.evidence,
        }
    }
}

pub fn run_suite(name: &str) -> Result<CheckReport, CliError> {
    let checks = match name {
        "oracle" => vec![oracle_agreement()],
        "characters" => vec![character_formula()],
        "structures" => vec![structure_bijection(), splitting_classes(), kernel_intersections()],
        "galois" => vec![hilbert90(), brauer_and_odd_vanishing()],
        "properties" => vec![properties(), fixed_point_free()],
        "all" => {
            let mut v = Vec::new();
            for s in &SUITES[..5] {
                v.extend(run_suite(s)?.checks);
            }
            v.sort_by_key(|c| c.criterion);
            v
        }
        other => return Err(CliError::Validation(format!("unknown suite {other:?}; expected one of {SUITES:?}"))),
    };
    Ok(CheckReport { suite: name.to_string(), pass: checks.iter().all(|c| c.pass), checks })
}

fn catalogue(name: &str) -> FiniteGroup {
    named_group(name).expect("catalogue group")
}

fn z(rank: usize) -> FgAbGroup {
    FgAbGroup::free(rank)
}

/// Sign modules `Z` with kernel each index-two subgroup.
fn sign_modules(g: &FiniteGroup) -> Vec<(String, GModule)> {
    all_subgroups(g)
        .into_iter()
        .filter(|h| h.index() == 2)
        .map(|h| (format!("Z sign ker {:?}", h.members()), GModule::sign(g, &h).expect("index two")))
        .collect()
}

pub fn oracle_configurations() -> Vec<(String, GModule)> {
    let mut out = Vec::new();
    for name in ["C2", "C3", "C4", "C2xC2", "S3"] {
        let g = catalogue(name);
        let mut mods = vec![
            ("Z".to_string(), GModule::trivial(&g, &z(1))),
            ("Z/2".to_string(), GModule::trivial(&g, &FgAbGroup::cyclic(2))),
            ("Z/4".to_string(), GModule::trivial(&g, &FgAbGroup::cyclic(4))),
        ];
        mods.extend(sign_modules(&g));
        out.extend(mods.into_iter().map(|(m, module)| (format!("{name} {m}"), module)));
    }
    out
}

/// Criterion 1: Bredon cohomology over `{e}` agrees with the bar complex in degrees 0..=3.
pub fn oracle_agreement() -> CheckOutcome {
    let mut t = Tally::new(1, "oracle agreement");
    let rows: Vec<_> = oracle_configurations()
        .par_iter()
        .map(|(label, m)| {
            let fam = Family::trivial_only(m.group());
            let run = || -> Result<Vec<(NormalForm, NormalForm)>, String> {
                let n = fixed_point_functor(m, &fam).map_err(|e| e.to_string())?;
                let bredon = BredonComplex::new(&n, 3).map_err(|e| e.to_string())?;
                let bar = BarComplex::new(m, 3, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?;
                (0..=3)
                    .map(|k| {
                        let a = bredon.cohomology(k).map_err(|e| e.to_string())?.group;
                        let b = bar.cohomology(k).map_err(|e| e.to_string())?.group;
                        Ok((a, b))
                    })
                    .collect()
            };
            (label.clone(), run())
        })
        .collect();
    for (label, r) in rows {
        match r {
            Ok(pairs) => {
                for (k, (a, b)) in pairs.into_iter().enumerate() {
                    t.case(a == b, format!("{label} H^{k}: bredon {a}, bar {b}"));
                }
            }
            Err(e) => t.error(label, e),
        }
    }
    t.finish()
}

/// Criterion 2: `H²_F(G, Z)` is the character group of `G` vanishing on `F`.
pub fn character_formula() -> CheckOutcome {
    let mut t = Tally::new(2, "character formula");
    let jobs: Vec<(String, Family)> = small_groups(8)
        .into_iter()
        .flat_map(|(name, g)| closed_families(&g).into_iter().map(move |f| (name.clone(), f)))
        .collect();
    let rows: Vec<_> = jobs
        .par_iter()
        .map(|(name, f)| {
            let g = f.group();
            let orders: Vec<usize> = f.subgroups().iter().map(Subgroup::order).collect();
            let label = format!("{name} F{orders:?}");
            let h2 = fixed_point_functor(&GModule::trivial(g, &z(1)), f)
                .map_err(|e| e.to_string())
                .and_then(|n| crate::bredon::bredon_cohomology(&n, 2).map_err(|e| e.to_string()));
            let ch = character_group(&Subgroup::whole(g), f).group;
            (label, h2.map(|r| r.group), ch)
        })
        .collect();
    for (label, h2, ch) in rows {
        match h2 {
            Ok(h2) => t.case(h2 == ch, format!("{label}: H2 {h2}, characters {ch}")),
            Err(e) => t.error(label, e),
        }
    }
    t.finish()
}

/// Every family of `g` containing `{e}`, closed or not.
pub fn families_with_trivial(g: &FiniteGroup) -> Vec<Family> {
    let others: Vec<Subgroup> = all_subgroups(g).into_iter().filter(|s| !s.is_trivial()).collect();
    (0..1usize << others.len())
        .map(|mask| {
            let mut subs = vec![Subgroup::trivial(g)];
            subs.extend(others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| s.clone()));
            Family::new(g, subs)
        })
        .collect()
}

pub fn structure_configurations() -> Vec<(String, GModule)> {
    let c2 = catalogue("C2");
    let minus = IntMatrix::from_i64_rows(&[vec![-1]]);
    vec![
        ("C2 Z/2".into(), GModule::trivial(&c2, &FgAbGroup::cyclic(2))),
        ("C2 Z/3".into(), GModule::trivial(&c2, &FgAbGroup::cyclic(3))),
        ("C2 Z/3 by -1".into(), GModule::from_generators(&c2, &FgAbGroup::cyclic(3), &[1], &[minus]).expect("action")),
        ("C3 Z/3".into(), GModule::trivial(&catalogue("C3"), &FgAbGroup::cyclic(3))),
        ("C2xC2 Z/2".into(), GModule::trivial(&catalogue("C2xC2"), &FgAbGroup::cyclic(2))),
    ]
}

fn structure_jobs() -> Vec<(String, GModule, Family)> {
    let mut jobs = Vec::new();
    for (label, m) in structure_configurations() {
        for f in families_with_trivial(m.group()) {
            let orders: Vec<Vec<usize>> = f.subgroups().iter().map(|s| s.members().to_vec()).collect();
            jobs.push((format!("{label} F{orders:?}"), m.clone(), f));
        }
    }
    jobs
}

fn bredon_degree(m: &GModule, f: &Family, k: usize) -> Result<NormalForm, String> {
    let n = fixed_point_functor(m, f).map_err(|e| e.to_string())?;
    Ok(crate::bredon::bredon_cohomology(&n, k).map_err(|e| e.to_string())?.group)
}

fn order_of(nf: &NormalForm) -> Option<usize> {
    nf.order().and_then(|o| usize::try_from(o).ok())
}

/// Criterion 3: `F`-structure classes are in bijection with `H²_F`, the split one with zero.
pub fn structure_bijection() -> CheckOutcome {
    let mut t = Tally::new(3, "F-structure bijection");
    let rows: Vec<_> = structure_jobs()
        .par_iter()
        .map(|(label, m, f)| {
            let run = || -> Result<(bool, String), String> {
                let h2 = bredon_degree(m, f, 2)?;
                let r = enumerate_f_structures(m, f, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?;
                let split: Vec<usize> = (0..r.count()).filter(|&i| r.classes[i].split).collect();
                let zero = r.classes[r.split_index].witness.factor_set.iter().all(|&c| c == 0);
                let ok = Some(r.count()) == order_of(&h2) && split == [r.split_index] && zero;
                Ok((ok, format!("{label}: classes {}, H2 {h2}, split {split:?}", r.count())))
            };
            (label.clone(), run())
        })
        .collect();
    for (label, r) in rows {
        match r {
            Ok((ok, ev)) => t.case(ok, ev),
            Err(e) => t.error(label, e),
        }
    }
    t.finish()
}

/// Criterion 4: splittings up to `M`-conjugacy are counted by `H¹_F`.
pub fn splitting_classes() -> CheckOutcome {
    let mut t = Tally::new(4, "splitting classes");
    let rows: Vec<_> = structure_jobs()
        .par_iter()
        .map(|(label, m, f)| {
            let run = || -> Result<(bool, String), String> {
                let h1 = bredon_degree(m, f, 1)?;
                let s = splittings_mod_conjugacy(m, f, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?;
                Ok((Some(s.count) == order_of(&h1), format!("{label}: splittings {}, H1 {h1}", s.count)))
            };
            (label.clone(), run())
        })
        .collect();
    for (label, r) in rows {
        match r {
            Ok((ok, ev)) => t.case(ok, ev),
            Err(e) => t.error(label, e),
        }
    }
    t.finish()
}

/// Criterion 5: restriction-kernel intersections give `H¹_F`, and `H²_F` under the hypothesis.
pub fn kernel_intersections() -> CheckOutcome {
    let mut t = Tally::new(5, "kernel intersections");
    let rows: Vec<_> = structure_jobs()
        .par_iter()
        .map(|(label, m, f)| {
            let run = || -> Result<Vec<(bool, String)>, String> {
                let mut out = Vec::new();
                let h1 = bredon_degree(m, f, 1)?;
                let k1 = restriction_kernel_intersection(m, f, 1, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?;
                out.push((k1.result.group == h1, format!("{label}: H1 {h1}, kernel {}", k1.result.group)));
                let k2 = restriction_kernel_intersection(m, f, 2, DEFAULT_SIZE_CAP).map_err(|e| e.to_string())?;
                if k2.comparable() {
                    let h2 = bredon_degree(m, f, 2)?;
                    out.push((k2.result.group == h2, format!("{label}: H2 {h2}, kernel {}", k2.result.group)));
                }
                Ok(out)
            };
            (label.clone(), run())
        })
        .collect();
    for (label, r) in rows {
        match r {
            Ok(cases) => cases.into_iter().for_each(|(ok, ev)| t.case(ok, ev)),
            Err(e) => t.error(label, e),
        }
    }
    t.finish()
}

fn grid_check(criterion: u8, name: &'static str, test: impl Fn(&crate::galoisff::GridEntry) -> bool) -> CheckOutcome {
    let mut t = Tally::new(criterion, name);
    match galois_grid(&[2, 3], 4) {
        Ok(grid) => {
            for e in grid {
                let ev =
                    format!("p={} n={} d={} F{:?}: H1 {}, H2 {}, H3 {}", e.p, e.n, e.d, e.family, e.h1, e.h2, e.h3);
                t.case(test(&e), ev);
            }
        }
        Err(e) => t.error("galois grid".into(), e),
    }
    t.finish()
}

/// Criterion 6: `H¹_F(Gal, E^×) = 0`.
pub fn hilbert90() -> CheckOutcome {
    grid_check(6, "Bredon Hilbert 90", |e| e.h1.is_trivial())
}

/// Criterion 7: `H²_F` and `H³_F` vanish, every primary part included.
pub fn brauer_and_odd_vanishing() -> CheckOutcome {
    grid_check(7, "Brauer intersection and odd vanishing", |e| {
        let parts = primary_decomposition(&e.h3);
        e.h2.is_trivial()
            && e.h3.is_trivial()
            && parts.iter().all(|p| p.group.is_trivial())
            && recombine(&parts) == e.h3
    })
}

/// `|{x ∈ G : x⁻¹Hx ⊆ K}| / |K|`, counted directly.
fn fixed_coset_count(g: &FiniteGroup, h: &Subgroup, k: &Subgroup) -> usize {
    let good = g.elements().filter(|&x| h.members().iter().all(|&y| k.contains(g.mul(g.mul(g.inv(x), y), x)))).count();
    good / k.order()
}

/// Regular representation `Z[G]`, `g·e_x = e_{gx}`.
fn regular_module(g: &FiniteGroup) -> GModule {
    let n = g.order();
    let mats = g.elements().map(|a| IntMatrix::from_fn(n, n, |i, j| BigInt::from((g.mul(a, j) == i) as i64))).collect();
    GModule::new(g, &z(n), mats).expect("regular representation")
}

/// `N(f)(m) = x·m` on every generator, with `x` the representative of `f`.
fn fixed_point_maps_agree(n: &crate::coeff::OrbitModule) -> bool {
    let data = n.fixed_point_data().expect("fixed point functor");
    let cat = n.category();
    (0..cat.len()).all(|h| {
        cat.morphisms_from(h).iter().all(|&f| {
            let (src, tgt) = (&data.invariants[f.source], &data.invariants[f.target]);
            tgt.generators().iter().enumerate().all(|(j, v)| {
                let mut e = vec![BigInt::zero(); tgt.group().ngens()];
                e[j] = BigInt::one();
                let w = src.inclusion().apply(&n.map(f).apply(&e));
                data.module.carrier().same_element(&w, &data.module.act(f.rep, v))
            })
        })
    })
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
    IntMatrix::from_fn(r, c, |_, _| BigInt::from(rng.gen_range(-9i64..=9)))
}

fn snf_identities(a: &IntMatrix) -> bool {
    let s = smith_normal_form(a);
    let unimodular = |m: &IntMatrix| m.determinant().abs().is_one();
    let diag = s.diagonal();
    let off_diagonal_zero = (0..s.d.rows()).all(|i| (0..s.d.cols()).all(|j| i == j || s.d[(i, j)].is_zero()));
    let chain = diag.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() });
    s.u.mul(a).mul(&s.v) == s.d
        && unimodular(&s.u)
        && unimodular(&s.v)
        && s.u.mul(&s.u_inv).is_identity()
        && off_diagonal_zero
        && diag.iter().all(|d| !d.is_negative())
        && chain
}

/// Criterion 8: complexes square to zero, morphism counts, functoriality, Smith normal form.
pub fn properties() -> CheckOutcome {
    let mut t = Tally::new(8, "property suites");
    // d∘d = 0
    let mut configs: Vec<(String, GModule, Family)> = Vec::new();
    for (name, g) in small_groups(8) {
        let mut mods = vec![
            ("Z".to_string(), GModule::trivial(&g, &z(1))),
            ("Z/2".to_string(), GModule::trivial(&g, &FgAbGroup::cyclic(2))),
        ];
        mods.extend(sign_modules(&g));
        let fams = if g.order() <= 6 { closed_families(&g) } else { vec![Family::trivial_only(&g), Family::full(&g)] };
        for (mname, m) in mods {
            for f in &fams {
                let orders: Vec<usize> = f.subgroups().iter().map(Subgroup::order).collect();
                configs.push((format!("{name} {mname} F{orders:?}"), m.clone(), f.clone()));
            }
        }
    }
    let rows: Vec<_> = configs
        .par_iter()
        .map(|(label, m, f)| {
            let ok = fixed_point_functor(m, f)
                .map_err(|e| e.to_string())
                .and_then(|n| BredonComplex::new(&n, 3).map_err(|e| e.to_string()))
                .map(|c| c.is_complex());
            (label.clone(), ok)
        })
        .collect();
    for (label, ok) in rows {
        match ok {
            Ok(ok) => t.case(ok, format!("d∘d=0 {label}")),
            Err(e) => t.error(label, e),
        }
    }
    for (label, m) in oracle_configurations() {
        match BarComplex::new(&m, 3, DEFAULT_SIZE_CAP) {
            Ok(b) => t.case(b.is_complex(), format!("bar d∘d=0 {label}")),
            Err(e) => t.error(label, e),
        }
    }
    // morphism counts
    for (name, g) in small_groups(12) {
        let cat = OrbitCategory::new(&Family::full(&g));
        let mut ok = true;
        for h in 0..cat.len() {
            for k in 0..cat.len() {
                ok &= cat.morphisms(h, k).len() == fixed_coset_count(&g, cat.subgroup(h), cat.subgroup(k));
            }
        }
        t.case(ok, format!("Mor counts {name}: {} objects", cat.len()));
    }
    // functoriality of fixed point functors
    for (name, g) in small_groups(8) {
        let mut mods = vec![GModule::trivial(&g, &FgAbGroup::cyclic(4)), regular_module(&g)];
        mods.extend(sign_modules(&g).into_iter().map(|(_, m)| m));
        for (i, m) in mods.iter().enumerate() {
            let ok = fixed_point_functor(m, &Family::full(&g))
                .map(|n| n.validate().is_ok() && fixed_point_maps_agree(&n))
                .unwrap_or(false);
            t.case(ok, format!("functoriality {name} module {i}"));
        }
    }
    // Smith normal form
    let mut rng = ChaCha8Rng::seed_from_u64(SNF_SEED);
    let mut bad = 0;
    for _ in 0..SNF_SAMPLES {
        let a = random_matrix(&mut rng);
        if !snf_identities(&a) {
            bad += 1;
        }
    }
    t.case(bad == 0, format!("SNF identities on {SNF_SAMPLES} random matrices: {bad} failures"));
    t.finish()
}

/// Criterion 9: a prime-power element without fixed points on every `G/H`, `H` proper.
pub fn fixed_point_free() -> CheckOutcome {
    let mut t = Tally::new(9, "fixed-point-free elements");
    for (name, g) in small_groups(12) {
        for h in all_subgroups(&g).into_iter().filter(|h| !h.is_whole()) {
            let label = format!("{name} H{:?}", h.members());
            match fixed_point_free_prime_power_element(&g, &h) {
                Ok(x) => {
                    let o = g.element_order(x);
                    let prime_power = o > 1 && {
                        let p = (2..=o).find(|p| o % p == 0).expect("divisor");
                        let mut r = o;
                        while r % p == 0 {
                            r /= p;
                        }
                        r == 1
                    };
                    let free = g.elements().all(|y| !h.contains(g.mul(g.mul(g.inv(y), x), y)));
                    t.case(prime_power && free, format!("{label}: element {x} of order {o}"));
                }
                Err(e) => t.error(label, e),
            }
        }
    }
    t.finish()
}

/// All nine criteria in order.
pub fn all_checks() -> Vec<CheckOutcome> {
    run_suite("all").expect("known suite").checks
}
