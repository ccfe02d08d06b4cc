use std::sync::Arc;

use num_bigint::BigInt;

use super::{invariants, CoeffError, GModule, InvariantSubgroup};
use crate::groups::{Family, Subgroup, SubgroupEmbedding};
use crate::intlin::{hom_well_defined, homology, AbHom, FgAbGroup, IntMatrix};
use crate::orbitcat::{OrbitCategory, OrbitMorphism};

/// A contravariant functor `O_F(G) -> Ab`: a group per object and, for every
/// morphism `G/H -> G/K`, a map `N(G/K) -> N(G/H)`.
#[derive(Clone, Debug)]
pub struct OrbitModule {
    category: Arc<OrbitCategory>,
    values: Vec<FgAbGroup>,
    /// Indexed like [`OrbitCategory::morphisms_from`].
    maps: Vec<Vec<AbHom>>,
    fixed: Option<Arc<FixedPointData>>,
}

/// The `G`-module and invariant subgroups behind a fixed point functor.
#[derive(Clone, Debug)]
pub struct FixedPointData {
    pub module: GModule,
    pub invariants: Vec<InvariantSubgroup>,
}

impl OrbitModule {
    /// `map(f)` is the matrix of `N(f)` in the generators of the values; functoriality is checked.
    pub fn new(
        category: Arc<OrbitCategory>,
        values: Vec<FgAbGroup>,
        mut map: impl FnMut(OrbitMorphism) -> IntMatrix,
    ) -> Result<Self, CoeffError> {
        if values.len() != category.len() {
            return Err(CoeffError::WrongValueCount { expected: category.len(), found: values.len() });
        }
        let maps = (0..category.len())
            .map(|h| {
                category
                    .morphisms_from(h)
                    .iter()
                    .map(|&f| {
                        AbHom::new(values[f.target].clone(), values[f.source].clone(), map(f)).map_err(CoeffError::from)
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let module = OrbitModule { category, values, maps, fixed: None };
        module.validate()?;
        Ok(module)
    }

    /// Identity and composition laws on every morphism and composable pair.
    pub fn validate(&self) -> Result<(), CoeffError> {
        let cat = &self.category;
        for h in 0..cat.len() {
            if !self.map(cat.identity(h)).same_map(&AbHom::identity(&self.values[h])) {
                return Err(CoeffError::FunctorialityViolation(format!("identity of object {h}")));
            }
            for &f in cat.morphisms_from(h) {
                if !hom_well_defined(self.map(f)) {
                    return Err(CoeffError::FunctorialityViolation(format!("map of {f:?} is not well defined")));
                }
                for &g in cat.morphisms_from(f.target) {
                    let gf = cat.compose(f, g).expect("composable");
                    let expect = self.map(f).compose(self.map(g)).expect("chained");
                    if !self.map(gf).same_map(&expect) {
                        return Err(CoeffError::FunctorialityViolation(format!("{f:?} then {g:?}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn category(&self) -> &Arc<OrbitCategory> {
        &self.category
    }

    pub fn family(&self) -> &Family {
        self.category.family()
    }

    /// `N(G/H)` for object `h`.
    pub fn value(&self, h: usize) -> &FgAbGroup {
        &self.values[h]
    }

    pub fn values(&self) -> &[FgAbGroup] {
        &self.values
    }

    /// `N(f) : N(G/K) -> N(G/H)` for `f : G/H -> G/K`.
    pub fn map(&self, f: OrbitMorphism) -> &AbHom {
        let out = self.category.morphisms_from(f.source);
        let pos = out.binary_search(&f).expect("morphism of this category");
        &self.maps[f.source][pos]
    }

    /// An isomorphic module whose values are in normal form (diagonal presentations).
    pub fn normalized(&self) -> OrbitModule {
        if self.values.iter().all(|v| v.diagonal_moduli().is_some()) {
            return self.clone();
        }
        let trivial = FgAbGroup::trivial();
        let isos: Vec<_> = self
            .values
            .iter()
            .map(|v| homology(&AbHom::zero(&trivial, v), &AbHom::zero(v, &trivial)).expect("identity subquotient"))
            .collect();
        let values: Vec<FgAbGroup> = isos.iter().map(|i| i.group().clone()).collect();
        OrbitModule::new(self.category.clone(), values, |f| {
            let (src, tgt) = (&isos[f.source], &isos[f.target]);
            let cols: Vec<Vec<BigInt>> =
                tgt.generators().iter().map(|l| src.coordinates(&self.map(f).apply(l)).expect("total")).collect();
            IntMatrix::from_columns(src.group().ngens(), &cols)
        })
        .expect("isomorphic to a functor")
    }

    /// Present when this is a fixed point functor.
    pub fn fixed_point_data(&self) -> Option<&FixedPointData> {
        self.fixed.as_deref()
    }
}

/// `G/H ↦ M^H`, with `xK` acting by `m ↦ x·m`.
pub fn fixed_point_functor(m: &GModule, family: &Family) -> Result<OrbitModule, CoeffError> {
    fixed_point_functor_on(m, Arc::new(OrbitCategory::new(family)))
}

/// As [`fixed_point_functor`] over an existing category (for a custom size cap).
pub fn fixed_point_functor_on(m: &GModule, category: Arc<OrbitCategory>) -> Result<OrbitModule, CoeffError> {
    if category.group() != m.group() {
        return Err(CoeffError::GroupMismatch);
    }
    let inv: Vec<InvariantSubgroup> = category.family().subgroups().iter().map(|h| invariants(m, h)).collect();
    let values: Vec<FgAbGroup> = inv.iter().map(|i| i.group().clone()).collect();
    let mut missing = None;
    let mut module = OrbitModule::new(category, values, |f| {
        let (src, tgt) = (&inv[f.source], &inv[f.target]);
        let cols: Vec<Vec<BigInt>> = tgt
            .generators()
            .iter()
            .map(|l| {
                src.coordinates(&m.act(f.rep, l)).unwrap_or_else(|| {
                    missing = Some(f);
                    vec![BigInt::from(0); src.group().ngens()]
                })
            })
            .collect();
        IntMatrix::from_columns(src.group().ngens(), &cols)
    })?;
    if let Some(f) = missing {
        return Err(CoeffError::FunctorialityViolation(format!("{f:?} does not land in the fixed points")));
    }
    module.fixed = Some(Arc::new(FixedPointData { module: m.clone(), invariants: inv }));
    Ok(module)
}

/// `N` restricted to `O_{F∩S}(S)`, with `S` renumbered as in [`SubgroupEmbedding`].
/// Every `H ∩ S` must itself lie in `F`, so that the value there is defined.
pub fn restrict_module(n: &OrbitModule, s: &Subgroup) -> Result<OrbitModule, CoeffError> {
    let family = n.family();
    let emb = SubgroupEmbedding::new(s);
    let local = Family::new(
        emb.group(),
        family.intersect(s).subgroups().iter().map(|h| h.restrict_to(&emb).expect("inside S")),
    );
    let parent_pos: Vec<usize> = local
        .subgroups()
        .iter()
        .map(|l| {
            let h =
                Subgroup::new(family.group(), l.members().iter().map(|&x| emb.parent(x))).expect("image of a subgroup");
            family.position(&h).ok_or(CoeffError::NotRestrictable)
        })
        .collect::<Result<_, _>>()?;
    let category = Arc::new(OrbitCategory::new(&local).with_size_cap(n.category().size_cap()));
    let values = parent_pos.iter().map(|&p| n.value(p).clone()).collect();
    let parent_cat = n.category().clone();
    let mut module = OrbitModule::new(category, values, |f| {
        let (src, tgt) = (parent_pos[f.source], parent_pos[f.target]);
        let rep = parent_cat.subgroup(tgt).coset_rep(emb.parent(f.rep));
        n.map(OrbitMorphism { source: src, target: tgt, rep }).matrix()
    })?;
    if let Some(fixed) = n.fixed_point_data() {
        module.fixed = Some(Arc::new(FixedPointData {
            module: fixed.module.restrict(&emb),
            invariants: parent_pos.iter().map(|&p| fixed.invariants[p].clone()).collect(),
        }));
    }
    Ok(module)
}
