use serde::Serialize;

use super::finite::{derivations, finite};
use super::InterpError;
use crate::coeff::GModule;
use crate::groups::{is_homomorphism, Family, GroupExtension};

/// Splittings of the standard split structure on `M ⋊ G` up to `M`-conjugacy.
#[derive(Clone, Debug, Serialize)]
pub struct SplittingClasses {
    pub count: usize,
    /// Least member of each class, as `s(g)` for `g = 0..|G|` (indices into `M ⋊ G`).
    pub representatives: Vec<Vec<usize>>,
}

/// `m⁻¹ X m` for `m` in the image of `M`, as a sorted member list.
pub(crate) fn conjugate_set(ext: &GroupExtension, set: &[usize], m: usize) -> Vec<usize> {
    let t = ext.total();
    let e = ext.embed(m);
    let mut out: Vec<usize> = set.iter().map(|&z| t.mul(t.mul(t.inv(e), z), e)).collect();
    out.sort_unstable();
    out
}

/// Some `m ∈ M` with `s(H) = m⁻¹ Γ_H m` for every `H`, found independently per `H`.
pub(crate) fn conjugate_to_lifts(
    ext: &GroupExtension,
    m_size: usize,
    family: &Family,
    s: &[usize],
    lifts: &[Vec<usize>],
) -> bool {
    family.subgroups().iter().zip(lifts).all(|(h, gh)| {
        let mut image: Vec<usize> = h.members().iter().map(|&x| s[x]).collect();
        image.sort_unstable();
        (0..m_size).any(|m| conjugate_set(ext, gh, m) == image)
    })
}

/// Enumerates all homomorphic sections `s : G -> M ⋊ G`, keeps those with
/// `s(H)` conjugate by `M` to `({0}, H)` for every `H ∈ F`, and groups them
/// into `M`-conjugacy classes.
pub fn splittings_mod_conjugacy(m: &GModule, family: &Family, cap: usize) -> Result<SplittingClasses, InterpError> {
    if !family.contains_trivial() {
        return Err(InterpError::FamilyMissingTrivial);
    }
    if family.group() != m.group() {
        return Err(InterpError::GroupMismatch);
    }
    let fm = finite(m)?;
    let t = fm.tables();
    let g = m.group();
    let ext = GroupExtension::semidirect(g, t);
    let standard: Vec<Vec<usize>> =
        family.subgroups().iter().map(|h| h.members().iter().map(|&x| ext.element(0, x)).collect()).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for d in derivations(g, t, cap)? {
        let s: Vec<usize> = g.elements().map(|x| ext.element(d[x], x)).collect();
        debug_assert!(is_homomorphism(&s, g, ext.total()));
        if !conjugate_to_lifts(&ext, t.size(), family, &s, &standard) {
            continue;
        }
        let canon = (0..t.size())
            .map(|mm| {
                let e = ext.embed(mm);
                let tt = ext.total();
                s.iter().map(|&z| tt.mul(tt.mul(tt.inv(e), z), e)).collect::<Vec<_>>()
            })
            .min()
            .expect("M is nonempty");
        classes.push(canon);
    }
    classes.sort();
    classes.dedup();
    Ok(SplittingClasses { count: classes.len(), representatives: classes })
}
