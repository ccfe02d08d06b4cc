use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use super::io::{load_family, load_group, load_module, parse_degrees, parse_elements, FamilyFile};
use super::suites::run_suite;
use super::{Cli, CliError, Command, Outcome};
use crate::bredon::{BarComplex, BredonComplex, CohomologyResult};
use crate::coeff::{fixed_point_functor_on, GModule, OrbitModule};
use crate::galoisff::{primary_decomposition, FiniteFieldExtension, PrimaryPart};
use crate::groups::{family_close, subgroup_closure, Family, FiniteGroup, Subgroup};
use crate::interp::{
    character_group, enumerate_f_structures, f_derivation_quotient, h0_limit, splittings_mod_conjugacy, CharacterGroup,
    FDerivationValues, FStructureClass,
};
use crate::intlin::{AbHom, JsonInt, NormalForm};
use crate::orbitcat::OrbitCategory;

#[derive(Serialize, Debug, Clone)]
struct CrossCheck {
    name: &'static str,
    degree: usize,
    expected: NormalForm,
    pass: bool,
}

#[derive(Serialize)]
struct ResultsDoc {
    results: Vec<CohomologyResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<CrossCheck>,
}

#[derive(Serialize)]
struct StructuresDoc {
    classes: usize,
    split_index: usize,
    h2_order: Option<JsonInt>,
    extension_classes: usize,
    witnesses: Vec<FStructureClass>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<CrossCheck>,
}

#[derive(Serialize)]
struct DerivationsDoc {
    #[serde(flatten)]
    group: NormalForm,
    representatives: Vec<FDerivationValues>,
    #[serde(skip_serializing_if = "Option::is_none")]
    splittings: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<CrossCheck>,
}

#[derive(Serialize)]
struct CharactersDoc {
    #[serde(flatten)]
    characters: CharacterGroup,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<CrossCheck>,
}

#[derive(Serialize)]
struct PrimaryParts {
    degree: usize,
    parts: Vec<PrimaryPart>,
}

#[derive(Serialize)]
struct GaloisDoc {
    p: u64,
    n: u32,
    d: u32,
    family: Vec<Vec<usize>>,
    results: Vec<CohomologyResult>,
    primary_parts: Vec<PrimaryParts>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    checks: Vec<CrossCheck>,
}

fn document<T: Serialize>(value: &T, checks: &[CrossCheck]) -> Result<Outcome, CliError> {
    let document = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    Ok(Outcome { document, pass: checks.iter().all(|c| c.pass), timings: Vec::new() })
}

fn fixed_point(m: &GModule, family: &Family, cap: usize) -> Result<OrbitModule, CliError> {
    Ok(fixed_point_functor_on(m, Arc::new(OrbitCategory::new(family).with_size_cap(cap)))?)
}

fn is_trivial_integers(m: &GModule) -> bool {
    *m.carrier().normal_form() == NormalForm::free(1)
        && m.group().elements().all(|g| m.action(g).same_map(&AbHom::identity(m.carrier())))
}

fn cross(name: &'static str, degree: usize, expected: NormalForm, got: &NormalForm) -> CrossCheck {
    let pass = &expected == got;
    CrossCheck { name, degree, expected, pass }
}

pub(super) fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let cap = cli.size_cap;
    match &cli.command {
        Command::Cohomology { group, family, module, degrees, cocycles } => {
            let g = load_group(&group.group)?;
            let f = load_family(&g, family)?;
            let m = load_module(&g, module)?;
            let degrees = parse_degrees(degrees)?;
            let Some(&top) = degrees.iter().max() else {
                return document(&ResultsDoc { results: Vec::new(), checks: Vec::new() }, &[]);
            };
            let n = fixed_point(&m, &f, cap)?;
            let complex = BredonComplex::new(&n, top)?;
            let results = degrees
                .iter()
                .map(|&k| if *cocycles { complex.cohomology_with_cocycles(k) } else { complex.cohomology(k) })
                .collect::<Result<Vec<_>, _>>()?;
            let checks = if cli.check { cohomology_checks(&m, &f, &n, &results, cap)? } else { Vec::new() };
            document(&ResultsDoc { results, checks: checks.clone() }, &checks)
        }
        Command::Oracle { group, module, degrees } => {
            let g = load_group(&group.group)?;
            let m = load_module(&g, module)?;
            let degrees = parse_degrees(degrees)?;
            let Some(&top) = degrees.iter().max() else {
                return document(&ResultsDoc { results: Vec::new(), checks: Vec::new() }, &[]);
            };
            let bar = BarComplex::new(&m, top, cap)?;
            let results = degrees.iter().map(|&k| bar.cohomology(k)).collect::<Result<Vec<_>, _>>()?;
            let mut checks = Vec::new();
            if cli.check {
                let n = fixed_point(&m, &Family::trivial_only(&g), cap)?;
                let complex = BredonComplex::new(&n, top)?;
                for r in &results {
                    let b = complex.cohomology(r.degree)?.group;
                    checks.push(cross("bredon-trivial-family", r.degree, b, &r.group));
                }
            }
            document(&ResultsDoc { results, checks: checks.clone() }, &checks)
        }
        Command::Structures { group, family, module } => {
            let g = load_group(&group.group)?;
            let f = load_family(&g, family)?;
            let m = load_module(&g, module)?;
            let report = enumerate_f_structures(&m, &f, cap)?;
            let h2 = BredonComplex::new(&fixed_point(&m, &f, cap)?, 2)?.cohomology(2)?.group;
            let mut checks = Vec::new();
            if cli.check {
                let pass = h2.order() == Some(BigInt::from(report.count()));
                checks.push(CrossCheck { name: "classes-equal-h2-order", degree: 2, expected: h2.clone(), pass });
            }
            let doc = StructuresDoc {
                classes: report.count(),
                split_index: report.split_index,
                h2_order: h2.order().map(JsonInt),
                extension_classes: report.extension_classes,
                witnesses: report.classes,
                checks: checks.clone(),
            };
            document(&doc, &checks)
        }
        Command::Derivations { group, family, module } => {
            let g = load_group(&group.group)?;
            let f = load_family(&g, family)?;
            let m = load_module(&g, module)?;
            let q = f_derivation_quotient(&m, &f)?;
            let splittings = match m.carrier().is_finite() {
                true => Some(splittings_mod_conjugacy(&m, &f, cap)?.count),
                false => None,
            };
            let group_nf = q.group().normal_form().clone();
            let mut checks = Vec::new();
            if cli.check {
                let h1 = BredonComplex::new(&fixed_point(&m, &f, cap)?, 1)?.cohomology(1)?.group;
                checks.push(cross("bredon-h1", 1, h1.clone(), &group_nf));
                if let Some(s) = splittings {
                    let pass = h1.order() == Some(BigInt::from(s));
                    checks.push(CrossCheck { name: "splittings-equal-h1-order", degree: 1, expected: h1, pass });
                }
            }
            let doc = DerivationsDoc { group: group_nf, representatives: q.representatives(), splittings, checks };
            document(&doc, &doc.checks)
        }
        Command::Characters { group, family, subgroup } => {
            let g = load_group(&group.group)?;
            let f = load_family(&g, family)?;
            let p = match subgroup {
                Some(s) => subgroup_closure(&g, &parse_elements(s)?)
                    .map_err(|e| CliError::Validation(format!("subgroup: {e}")))?,
                None => Subgroup::whole(&g),
            };
            let characters = character_group(&p, &f);
            let mut checks = Vec::new();
            if cli.check && p.is_whole() && f.is_conjugation_closed() && f.is_subgroup_closed() && !f.is_empty() {
                let m = GModule::trivial(&g, &crate::intlin::FgAbGroup::free(1));
                let h2 = BredonComplex::new(&fixed_point(&m, &f, cap)?, 2)?.cohomology(2)?.group;
                checks.push(cross("bredon-h2-integers", 2, h2, &characters.group));
            }
            document(&CharactersDoc { characters, checks: checks.clone() }, &checks)
        }
        Command::Galois { p, n, d, family, degrees } => {
            let ext = FiniteFieldExtension::new(*p, *n, *d)?;
            let f = load_family(ext.group(), family)?;
            let results =
                parse_degrees(degrees)?.into_iter().map(|k| ext.cohomology(&f, k)).collect::<Result<Vec<_>, _>>()?;
            let primary_parts = results
                .iter()
                .filter(|r| r.group.is_finite())
                .map(|r| PrimaryParts { degree: r.degree, parts: primary_decomposition(&r.group) })
                .collect();
            let checks: Vec<CrossCheck> = match cli.check {
                true => results
                    .iter()
                    .filter(|r| r.degree >= 1)
                    .map(|r| cross("finite-field-vanishing", r.degree, NormalForm::trivial(), &r.group))
                    .collect(),
                false => Vec::new(),
            };
            let doc = GaloisDoc {
                p: *p,
                n: *n,
                d: *d,
                family: f.subgroups().iter().map(|s| s.members().to_vec()).collect(),
                results,
                primary_parts,
                checks,
            };
            document(&doc, &doc.checks)
        }
        Command::FamilyClose { group, family, conjugation, subgroups } => {
            let g = load_group(&group.group)?;
            let f = family_close(&load_family(&g, family)?, *conjugation, *subgroups);
            document(&FamilyFile::from_family(&f), &[])
        }
        Command::Check { suite } => {
            let report = run_suite(suite)?;
            let document = serde_json::to_string_pretty(&report).map_err(|e| CliError::Internal(e.to_string()))?;
            let timings = report
                .checks
                .iter()
                .map(|c| format!("criterion {} {}: {} ms", c.criterion, c.name, c.millis))
                .collect();
            Ok(Outcome { document, pass: report.pass, timings })
        }
    }
}

/// Degree 0 against the limit, 1 against `F`-derivations, 2 against characters for
/// trivial `Z` on a closed family, and every degree against the bar complex when `F = {e}`.
fn cohomology_checks(
    m: &GModule,
    f: &Family,
    n: &OrbitModule,
    results: &[CohomologyResult],
    cap: usize,
) -> Result<Vec<CrossCheck>, CliError> {
    let g: &FiniteGroup = m.group();
    let mut checks = Vec::new();
    let trivial_only = f.len() == 1 && f.contains_trivial();
    let bar = match (trivial_only, results.iter().map(|r| r.degree).max()) {
        (true, Some(top)) => Some(BarComplex::new(m, top, cap)?),
        _ => None,
    };
    for r in results {
        match r.degree {
            0 => checks.push(cross("limit", 0, h0_limit(n).normal_form().clone(), &r.group)),
            1 if f.contains_trivial() => {
                let q = f_derivation_quotient(m, f)?;
                checks.push(cross("f-derivations", 1, q.group().normal_form().clone(), &r.group));
            }
            2 if is_trivial_integers(m) && f.is_conjugation_closed() && f.is_subgroup_closed() && !f.is_empty() => {
                let ch = character_group(&Subgroup::whole(g), f).group;
                checks.push(cross("characters", 2, ch, &r.group));
            }
            _ => {}
        }
        if let Some(bar) = &bar {
            checks.push(cross("bar-oracle", r.degree, bar.cohomology(r.degree)?.group, &r.group));
        }
    }
    Ok(checks)
}
