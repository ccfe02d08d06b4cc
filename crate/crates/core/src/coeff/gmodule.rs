use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::CoeffError;
use crate::groups::{FiniteGroup, ModuleTables, Subgroup, SubgroupEmbedding};
use crate::intlin::{hom_well_defined, homology, AbHom, FgAbGroup, IntMatrix, SparseMatrix, Subquotient};

/// A finitely generated abelian group with a left action of a finite group,
/// stored as one automorphism per group element.
#[derive(Clone, Debug)]
pub struct GModule {
    group: FiniteGroup,
    carrier: FgAbGroup,
    action: Arc<Vec<AbHom>>,
}

impl GModule {
    /// One matrix per group element, validated as an action.
    pub fn new(group: &FiniteGroup, carrier: &FgAbGroup, matrices: Vec<IntMatrix>) -> Result<Self, CoeffError> {
        if matrices.len() != group.order() {
            return Err(CoeffError::WrongMatrixCount { expected: group.order(), found: matrices.len() });
        }
        let action = matrices
            .into_iter()
            .map(|m| AbHom::new(carrier.clone(), carrier.clone(), m))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_homs(group, carrier, action)
    }

    fn from_homs(group: &FiniteGroup, carrier: &FgAbGroup, action: Vec<AbHom>) -> Result<Self, CoeffError> {
        for (g, a) in action.iter().enumerate() {
            if !hom_well_defined(a) {
                return Err(CoeffError::NotWellDefined(g));
            }
        }
        if !action[0].same_map(&AbHom::identity(carrier)) {
            return Err(CoeffError::IdentityActsNontrivially);
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = action[g].compose(&action[h]).expect("same carrier");
                if !gh.same_map(&action[group.mul(g, h)]) {
                    return Err(CoeffError::NotAnAction(g, h));
                }
            }
        }
        Ok(GModule { group: group.clone(), carrier: carrier.clone(), action: Arc::new(action) })
    }

    /// Action given on group generators; the rest is generated and then validated.
    pub fn from_generators(
        group: &FiniteGroup,
        carrier: &FgAbGroup,
        generators: &[usize],
        matrices: &[IntMatrix],
    ) -> Result<Self, CoeffError> {
        if generators.len() != matrices.len() {
            return Err(CoeffError::WrongMatrixCount { expected: generators.len(), found: matrices.len() });
        }
        let gens: Vec<AbHom> = matrices
            .iter()
            .map(|m| AbHom::new(carrier.clone(), carrier.clone(), m.clone()))
            .collect::<Result<_, _>>()?;
        let mut action: Vec<Option<AbHom>> = vec![None; group.order()];
        action[0] = Some(AbHom::identity(carrier));
        let mut queue = vec![0];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (&s, a) in generators.iter().zip(&gens) {
                let y = group.mul(s, x);
                if action[y].is_none() {
                    let prev = action[x].as_ref().expect("reached");
                    action[y] = Some(a.compose(prev).expect("same carrier"));
                    queue.push(y);
                }
            }
        }
        let action: Option<Vec<AbHom>> = action.into_iter().collect();
        let action = action.ok_or(CoeffError::GeneratorsDoNotGenerate)?;
        Self::from_homs(group, carrier, action)
    }

    /// Every element acts as the identity.
    pub fn trivial(group: &FiniteGroup, carrier: &FgAbGroup) -> Self {
        let id = AbHom::identity(carrier);
        GModule { group: group.clone(), carrier: carrier.clone(), action: Arc::new(vec![id; group.order()]) }
    }

    /// `Z` with elements outside the index-2 subgroup `kernel` acting by `-1`.
    pub fn sign(group: &FiniteGroup, kernel: &Subgroup) -> Result<Self, CoeffError> {
        if kernel.index() != 2 {
            return Err(CoeffError::NotIndexTwo);
        }
        let z = FgAbGroup::free(1);
        let matrices = group
            .elements()
            .map(|g| IntMatrix::from_i64_rows(&[vec![if kernel.contains(g) { 1 } else { -1 }]]))
            .collect();
        Self::new(group, &z, matrices)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn carrier(&self) -> &FgAbGroup {
        &self.carrier
    }

    pub fn action(&self, g: usize) -> &AbHom {
        &self.action[g]
    }

    /// `g·x` in generator coordinates.
    pub fn act(&self, g: usize, x: &[BigInt]) -> Vec<BigInt> {
        self.action[g].apply(x)
    }

    /// The module viewed over a subgroup, numbered as in `emb`.
    pub fn restrict(&self, emb: &SubgroupEmbedding) -> GModule {
        let action = emb.group().elements().map(|l| self.action[emb.parent(l)].clone()).collect();
        GModule { group: emb.group().clone(), carrier: self.carrier.clone(), action: Arc::new(action) }
    }

    /// An isomorphic module on the normal-form carrier `Z/d₁ + … + Z^r`.
    pub fn normalized(&self) -> NormalizedModule {
        let trivial = FgAbGroup::trivial();
        let iso = homology(&AbHom::zero(&trivial, &self.carrier), &AbHom::zero(&self.carrier, &trivial))
            .expect("identity subquotient");
        let normal = iso.group().clone();
        let action = self
            .action
            .iter()
            .map(|a| {
                let cols: Vec<Vec<BigInt>> =
                    iso.generators().iter().map(|l| iso.coordinates(&a.apply(l)).expect("total")).collect();
                AbHom::from_sparse(
                    normal.clone(),
                    normal.clone(),
                    SparseMatrix::from_dense(&IntMatrix::from_columns(normal.ngens(), &cols)),
                )
                .expect("square")
            })
            .collect();
        let module = GModule { group: self.group.clone(), carrier: normal, action: Arc::new(action) };
        NormalizedModule { module, iso }
    }

    /// Index tables of a finite module, elements numbered by their normal-form
    /// coordinates in mixed radix; `None` if the carrier is infinite.
    pub fn tables(&self) -> Option<FiniteModule> {
        FiniteModule::new(self)
    }
}

/// A module moved to its normal-form carrier, with the isomorphism back.
#[derive(Clone, Debug)]
pub struct NormalizedModule {
    module: GModule,
    iso: Subquotient,
}

impl NormalizedModule {
    pub fn module(&self) -> &GModule {
        &self.module
    }

    /// Original coordinates to normal-form coordinates.
    pub fn to_normal(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.iso.coordinates(x).expect("total")
    }

    /// Normal-form coordinates to original coordinates.
    pub fn from_normal(&self, y: &[BigInt]) -> Vec<BigInt> {
        let n = self.module.carrier.ngens();
        let mut x = vec![BigInt::zero(); self.iso.ambient().ngens()];
        for (j, c) in y.iter().enumerate().take(n) {
            for (xi, li) in x.iter_mut().zip(&self.iso.generators()[j]) {
                *xi += c * li;
            }
        }
        x
    }
}

/// A finite module as index tables over its elements.
#[derive(Clone, Debug)]
pub struct FiniteModule {
    normalized: NormalizedModule,
    radix: Vec<usize>,
    tables: ModuleTables,
}

impl FiniteModule {
    fn new(m: &GModule) -> Option<Self> {
        if !m.carrier.is_finite() {
            return None;
        }
        let normalized = m.normalized();
        let nm = normalized.module();
        let radix: Vec<usize> = nm
            .carrier
            .diagonal_moduli()
            .expect("normal form is diagonal")
            .iter()
            .map(|d| d.to_usize().expect("small"))
            .collect();
        let size: usize = radix.iter().product();
        let mut fm = FiniteModule {
            normalized: normalized.clone(),
            radix,
            tables: ModuleTables { add: Vec::new(), act: Vec::new() },
        };
        let elems: Vec<Vec<BigInt>> = (0..size).map(|i| fm.coords(i)).collect();
        let add = (0..size)
            .map(|a| {
                (0..size)
                    .map(|b| fm.index(&elems[a].iter().zip(&elems[b]).map(|(x, y)| x + y).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let act = nm.group.elements().map(|g| (0..size).map(|a| fm.index(&nm.act(g, &elems[a]))).collect()).collect();
        fm.tables = ModuleTables { add, act };
        Some(fm)
    }

    pub fn tables(&self) -> &ModuleTables {
        &self.tables
    }

    pub fn size(&self) -> usize {
        self.tables.size()
    }

    pub fn normalized(&self) -> &NormalizedModule {
        &self.normalized
    }

    /// Normal-form coordinates of element `i`.
    pub fn coords(&self, mut i: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.radix.len()];
        for k in (0..self.radix.len()).rev() {
            out[k] = BigInt::from(i % self.radix[k]);
            i /= self.radix[k];
        }
        out
    }

    /// Index of the element with normal-form coordinates `y` (any representative).
    pub fn index(&self, y: &[BigInt]) -> usize {
        y.iter().zip(&self.radix).fold(0, |acc, (v, &r)| {
            let r_big = BigInt::from(r);
            acc * r + num_integer::Integer::mod_floor(v, &r_big).to_usize().expect("reduced")
        })
    }

    /// Index of an element given in the original carrier's coordinates.
    pub fn index_of(&self, x: &[BigInt]) -> usize {
        self.index(&self.normalized.to_normal(x))
    }

    /// Original carrier coordinates of element `i`.
    pub fn element(&self, i: usize) -> Vec<BigInt> {
        self.normalized.from_normal(&self.coords(i))
    }
}
