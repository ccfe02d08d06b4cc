use super::search::is_homomorphism;
use super::{FiniteGroup, GroupError};

/// A finite `G`-module written out as index tables; element `0` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleTables {
    /// `add[a][b]` is the index of `a + b`.
    pub add: Vec<Vec<usize>>,
    /// `act[g][m]` is the index of `g·m`.
    pub act: Vec<Vec<usize>>,
}

impl ModuleTables {
    pub fn size(&self) -> usize {
        self.add.len()
    }

    pub fn neg(&self, a: usize) -> usize {
        self.add[a].iter().position(|&s| s == 0).expect("abelian group has negatives")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add[a][self.neg(b)]
    }
}

/// `0 -> M -> Γ -> G -> 1` with `M` abelian.
#[derive(Clone, Debug)]
pub struct GroupExtension {
    total: FiniteGroup,
    quotient: FiniteGroup,
    kernel: Vec<usize>,
    projection: Vec<usize>,
    section: Vec<usize>,
}

impl GroupExtension {
    /// Checks exactness and that conjugation in `Γ` induces the given action on `M`.
    pub fn new(
        total: FiniteGroup,
        quotient: FiniteGroup,
        kernel: Vec<usize>,
        projection: Vec<usize>,
        module: &ModuleTables,
    ) -> Result<Self, GroupError> {
        let m_group = FiniteGroup::from_table(module.add.clone())?;
        if !is_homomorphism(&projection, &total, &quotient) {
            return Err(GroupError::BadExtension("projection is not a homomorphism".into()));
        }
        if !is_homomorphism(&kernel, &m_group, &total) {
            return Err(GroupError::BadExtension("kernel embedding is not a homomorphism".into()));
        }
        let mut hit = vec![false; total.order()];
        for &k in &kernel {
            if std::mem::replace(&mut hit[k], true) {
                return Err(GroupError::BadExtension("kernel embedding is not injective".into()));
            }
        }
        if total.elements().any(|z| (projection[z] == 0) != hit[z]) {
            return Err(GroupError::BadExtension("image of M differs from the kernel of the projection".into()));
        }
        let mut section = vec![usize::MAX; quotient.order()];
        for z in total.elements().rev() {
            section[projection[z]] = z;
        }
        if section.contains(&usize::MAX) {
            return Err(GroupError::BadExtension("projection is not surjective".into()));
        }
        let ext = GroupExtension { total, quotient, kernel, projection, section };
        for z in ext.total.elements() {
            for m in 0..module.size() {
                let c = ext.total.mul(ext.total.mul(z, ext.kernel[m]), ext.total.inv(z));
                if c != ext.kernel[module.act[ext.projection[z]][m]] {
                    return Err(GroupError::BadExtension("conjugation does not induce the module action".into()));
                }
            }
        }
        Ok(ext)
    }

    /// `Γ = M × G` with `(m,x)(n,y) = (m + x·n + c(x,y), xy)`; `(m, x)` is stored at `m*|G| + x`.
    /// `c` is indexed `c[x*|G| + y]`. Fails unless `c` is a normalized 2-cocycle.
    pub fn from_factor_set(g: &FiniteGroup, module: &ModuleTables, c: &[usize]) -> Result<Self, GroupError> {
        let (n, k) = (g.order(), module.size());
        if c.len() != n * n || c.iter().any(|&v| v >= k) {
            return Err(GroupError::BadExtension("factor set has wrong shape".into()));
        }
        let table: Vec<Vec<usize>> = (0..k * n)
            .map(|a| {
                let (m, x) = (a / n, a % n);
                (0..k * n)
                    .map(|b| {
                        let (p, y) = (b / n, b % n);
                        let s = module.add[module.add[m][module.act[x][p]]][c[x * n + y]];
                        s * n + g.mul(x, y)
                    })
                    .collect()
            })
            .collect();
        let total = FiniteGroup::from_table(table)
            .map_err(|e| GroupError::BadExtension(format!("factor set is not a normalized cocycle: {e}")))?;
        let kernel = (0..k).map(|m| m * n).collect();
        let projection = (0..k * n).map(|a| a % n).collect();
        Self::new(total, g.clone(), kernel, projection, module)
    }

    /// The standard split extension `M ⋊ G`.
    pub fn semidirect(g: &FiniteGroup, module: &ModuleTables) -> Self {
        Self::from_factor_set(g, module, &vec![0; g.order() * g.order()]).expect("zero factor set")
    }

    pub fn total(&self) -> &FiniteGroup {
        &self.total
    }

    pub fn quotient(&self) -> &FiniteGroup {
        &self.quotient
    }

    /// Image of module element `m` in `Γ`.
    pub fn embed(&self, m: usize) -> usize {
        self.kernel[m]
    }

    pub fn project(&self, z: usize) -> usize {
        self.projection[z]
    }

    /// `m · s(x)` where `s` picks the least element of each fibre.
    pub fn element(&self, m: usize, x: usize) -> usize {
        self.total.mul(self.kernel[m], self.section[x])
    }

    /// All `z` with `π(z) = x`.
    pub fn fibre(&self, x: usize) -> Vec<usize> {
        (0..self.kernel.len()).map(|m| self.element(m, x)).collect()
    }
}
