//! Input files. Every format is strict: unknown keys are rejected.
//!
//! * group: `{"order": n, "table": [[..]]}` or `{"degree": k, "generators": [[perm], ..]}`
//! * family: `{"subgroups": [[members], ..], "close_conjugation": b, "close_subgroups": b}`,
//!   or one of the shorthands `trivial-only`, `full`, `cyclic`
//! * module: `{"rank": r, "torsion": [..], "action": {"generators": [..], "matrices": [[[..]], ..]}}`;
//!   carrier generators are the `rank` free ones followed by one per torsion entry, and an
//!   empty generator list means the trivial action

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::coeff::GModule;
use crate::groups::{family_close, named_group, Family, FiniteGroup, Subgroup};
use crate::intlin::{FgAbGroup, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableGroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermutationGroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub subgroups: Vec<Vec<usize>>,
    #[serde(default)]
    pub close_conjugation: bool,
    #[serde(default)]
    pub close_subgroups: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub generators: Vec<usize>,
    pub matrices: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub rank: usize,
    #[serde(default)]
    pub torsion: Vec<u64>,
    pub action: ActionFile,
}

fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {what} file {}: {e}", path.display())))?;
    parse_json(&text, what)
}

fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Validation(format!("{what}: {e}")))
}

fn invalid(what: &str) -> impl Fn(crate::groups::GroupError) -> CliError + '_ {
    move |e| CliError::Validation(format!("{what}: {e}"))
}

pub fn parse_group(text: &str) -> Result<FiniteGroup, CliError> {
    let value: serde_json::Value = parse_json(text, "group")?;
    if value.get("table").is_some() {
        let f: TableGroupFile =
            serde_json::from_value(value).map_err(|e| CliError::Validation(format!("group: {e}")))?;
        if f.table.len() != f.order {
            return Err(CliError::Validation(format!("group: order {} but {} table rows", f.order, f.table.len())));
        }
        FiniteGroup::from_table(f.table).map_err(invalid("group"))
    } else if value.get("generators").is_some() {
        let f: PermutationGroupFile =
            serde_json::from_value(value).map_err(|e| CliError::Validation(format!("group: {e}")))?;
        FiniteGroup::from_permutations(f.degree, &f.generators).map_err(invalid("group"))
    } else {
        Err(CliError::Validation("group: expected keys order+table or degree+generators".into()))
    }
}

/// A group file, or a catalogue name such as `C4`, `S3`, `C2xC2` when no such file exists.
pub fn load_group(arg: &str) -> Result<FiniteGroup, CliError> {
    let path = Path::new(arg);
    if path.exists() {
        let text =
            fs::read_to_string(path).map_err(|e| CliError::Validation(format!("cannot read group file {arg}: {e}")))?;
        return parse_group(&text);
    }
    named_group(arg).ok_or_else(|| CliError::Validation(format!("no group file or catalogue group named {arg}")))
}

pub fn family_from_file(group: &FiniteGroup, f: &FamilyFile) -> Result<Family, CliError> {
    let subgroups = f
        .subgroups
        .iter()
        .map(|s| Subgroup::new(group, s.iter().copied()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(invalid("family"))?;
    Ok(family_close(&Family::new(group, subgroups), f.close_conjugation, f.close_subgroups))
}

/// A shorthand or a family file.
pub fn load_family(group: &FiniteGroup, arg: &str) -> Result<Family, CliError> {
    match arg {
        "trivial-only" => Ok(Family::trivial_only(group)),
        "full" => Ok(Family::full(group)),
        "cyclic" => Ok(Family::cyclic(group)),
        _ => family_from_file(group, &read_json(Path::new(arg), "family")?),
    }
}

pub fn module_from_file(group: &FiniteGroup, f: &ModuleFile) -> Result<GModule, CliError> {
    if let Some(t) = f.torsion.iter().find(|&&t| t < 2) {
        return Err(CliError::Validation(format!("module: torsion order {t} must be at least 2")));
    }
    let mut moduli = vec![0u64; f.rank];
    moduli.extend(&f.torsion);
    let carrier = FgAbGroup::from_moduli_u64(&moduli);
    let k = moduli.len();
    if f.action.generators.is_empty() && f.action.matrices.is_empty() {
        return Ok(GModule::trivial(group, &carrier));
    }
    if let Some(&g) = f.action.generators.iter().find(|&&g| g >= group.order()) {
        return Err(CliError::Validation(format!("module: generator {g} is not a group element")));
    }
    let mut mats = Vec::new();
    for (i, m) in f.action.matrices.iter().enumerate() {
        if m.len() != k || m.iter().any(|r| r.len() != k) {
            return Err(CliError::Validation(format!("module: matrix {i} must be {k}x{k}")));
        }
        mats.push(IntMatrix::from_i64_rows(m));
    }
    GModule::from_generators(group, &carrier, &f.action.generators, &mats)
        .map_err(|e| CliError::Validation(format!("module: {e}")))
}

pub fn load_module(group: &FiniteGroup, path: &str) -> Result<GModule, CliError> {
    module_from_file(group, &read_json(Path::new(path), "module")?)
}

/// `a..b` or `a..=b` (both inclusive), or a single degree. `a > b` is the empty range.
pub fn parse_degrees(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Validation(format!("degrees: cannot parse {s:?}, expected a..b"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

/// Comma-separated element indices.
pub fn parse_elements(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| CliError::Validation(format!("not an element index: {t:?}"))))
        .collect()
}

impl FamilyFile {
    pub fn from_family(family: &Family) -> Self {
        FamilyFile {
            subgroups: family.subgroups().iter().map(|s| s.members().to_vec()).collect(),
            close_conjugation: false,
            close_subgroups: false,
        }
    }
}
