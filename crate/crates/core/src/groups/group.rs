use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::GroupError;

#[derive(PartialEq, Eq, Hash)]
struct Table {
    n: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

/// Finite group on `0..n` given by its Cayley table; `0` is the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    t: Arc<Table>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order())
    }
}

impl FiniteGroup {
    /// Validates that `table` is a group law with identity `0`.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        if let Some(row) = table.iter().position(|r| r.len() != n) {
            return Err(GroupError::InvalidTable(format!("row {row} has wrong length")));
        }
        if let Some(&bad) = table.iter().flatten().find(|&&v| v >= n) {
            return Err(GroupError::InvalidTable(format!("entry {bad} out of range")));
        }
        if (0..n).any(|a| table[0][a] != a || table[a][0] != a) {
            return Err(GroupError::InvalidTable("element 0 is not a two-sided identity".into()));
        }
        let mut inv = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0) {
                Some(b) if table[b][a] == 0 => inv[a] = b,
                _ => return Err(GroupError::InvalidTable(format!("element {a} has no inverse"))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::InvalidTable(format!("not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { t: Arc::new(Table { n, mul: table.into_iter().flatten().collect(), inv }) })
    }

    /// Group generated by permutations of `0..degree`. Products compose as
    /// functions, `(a*b)(i) = a(b(i))`. Elements are numbered in breadth-first
    /// order from the identity, multiplying by generators on the right.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self, GroupError> {
        for g in generators {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
                return Err(GroupError::BadPermutation(format!("{g:?} is not a permutation of 0..{degree}")));
            }
        }
        let (elems, _) = perm_closure(degree, generators);
        let index: HashMap<&Vec<usize>, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let table = elems.iter().map(|a| elems.iter().map(|b| index[&compose(a, b)]).collect()).collect();
        Self::from_table(table)
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs positive order");
        Self::from_table((0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()).expect("cyclic table")
    }

    /// `a x b`, with `(i, j)` stored at `i * |b| + j`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let table = (0..na * nb)
            .map(|x| (0..na * nb).map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb)).collect())
            .collect();
        Self::from_table(table).expect("product of groups")
    }

    /// Dihedral group of order `2m`: `r^k s^e` stored at `k + m*e`.
    pub fn dihedral(m: usize) -> Self {
        assert!(m >= 1);
        let idx = |k: usize, e: usize| k % m + m * (e % 2);
        let table = (0..2 * m)
            .map(|x| {
                let (a, e) = (x % m, x / m);
                (0..2 * m)
                    .map(|y| {
                        let (b, f) = (y % m, y / m);
                        let k = if e == 0 { a + b } else { a + m - b };
                        idx(k, e + f)
                    })
                    .collect()
            })
            .collect();
        Self::from_table(table).expect("dihedral table")
    }

    /// Dicyclic group of order `4n` (`n = 2` is the quaternion group):
    /// `a^{2n} = 1`, `b^2 = a^n`, `b^-1 a b = a^-1`; `a^k b^e` stored at `k + 2n*e`.
    pub fn dicyclic(n: usize) -> Self {
        assert!(n >= 1);
        let m = 2 * n;
        let table = (0..2 * m)
            .map(|x| {
                let (k, e) = (x % m, x / m);
                (0..2 * m)
                    .map(|y| {
                        let (l, f) = (y % m, y / m);
                        match (e, f) {
                            (0, _) => (k + l) % m + m * f,
                            (_, 0) => (k + m - l) % m + m,
                            _ => (k + m - l + n) % m,
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_table(table).expect("dicyclic table")
    }

    pub fn quaternion() -> Self {
        Self::dicyclic(2)
    }

    pub fn symmetric(k: usize) -> Self {
        if k <= 1 {
            return Self::trivial();
        }
        let mut t: Vec<usize> = (0..k).collect();
        t.swap(0, 1);
        let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
        Self::from_permutations(k, &[t, cycle]).expect("symmetric group")
    }

    pub fn alternating(k: usize) -> Self {
        if k <= 2 {
            return Self::trivial();
        }
        // 3-cycles (0 1 i) generate
        let gens: Vec<Vec<usize>> = (2..k)
            .map(|i| {
                let mut p: Vec<usize> = (0..k).collect();
                p[0] = 1;
                p[1] = i;
                p[i] = 0;
                p
            })
            .collect();
        Self::from_permutations(k, &gens).expect("alternating group")
    }

    pub fn elementary_abelian(p: usize, rank: usize) -> Self {
        (0..rank).fold(Self::trivial(), |acc, _| Self::direct_product(&acc, &Self::cyclic(p)))
    }

    pub fn order(&self) -> usize {
        self.t.n
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.t.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.t.mul[a * self.t.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.t.inv[a]
    }

    /// `x^-1 h x`
    pub fn conj(&self, x: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(x), h), x)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.t.mul.chunks(self.t.n).map(<[usize]>::to_vec).collect()
    }

    /// Greatest common exponent: lcm of the element orders.
    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn perm_closure(degree: usize, gens: &[Vec<usize>]) -> (Vec<Vec<usize>>, HashMap<Vec<usize>, usize>) {
    let id: Vec<usize> = (0..degree).collect();
    let mut elems = vec![id.clone()];
    let mut index = HashMap::from([(id, 0)]);
    let mut head = 0;
    while head < elems.len() {
        let cur = elems[head].clone();
        head += 1;
        for g in gens {
            let next = compose(&cur, g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elems.len());
                elems.push(next);
            }
        }
    }
    (elems, index)
}

/// Every group of order at most `max_order` (up to isomorphism), for `max_order <= 15`,
/// with a short name. Larger bounds are rejected.
pub fn small_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    assert!(max_order <= 15, "catalogue covers orders up to 15");
    let c = FiniteGroup::cyclic;
    let x = FiniteGroup::direct_product;
    type Entry<'a> = (&'static str, Box<dyn Fn() -> FiniteGroup + 'a>);
    let all: Vec<Entry<'_>> = vec![
        ("C1", Box::new(|| c(1))),
        ("C2", Box::new(|| c(2))),
        ("C3", Box::new(|| c(3))),
        ("C4", Box::new(|| c(4))),
        ("C2xC2", Box::new(|| x(&c(2), &c(2)))),
        ("C5", Box::new(|| c(5))),
        ("C6", Box::new(|| c(6))),
        ("S3", Box::new(|| FiniteGroup::symmetric(3))),
        ("C7", Box::new(|| c(7))),
        ("C8", Box::new(|| c(8))),
        ("C4xC2", Box::new(|| x(&c(4), &c(2)))),
        ("C2xC2xC2", Box::new(|| FiniteGroup::elementary_abelian(2, 3))),
        ("D4", Box::new(|| FiniteGroup::dihedral(4))),
        ("Q8", Box::new(FiniteGroup::quaternion)),
        ("C9", Box::new(|| c(9))),
        ("C3xC3", Box::new(|| x(&c(3), &c(3)))),
        ("C10", Box::new(|| c(10))),
        ("D5", Box::new(|| FiniteGroup::dihedral(5))),
        ("C11", Box::new(|| c(11))),
        ("C12", Box::new(|| c(12))),
        ("C6xC2", Box::new(|| x(&c(6), &c(2)))),
        ("A4", Box::new(|| FiniteGroup::alternating(4))),
        ("D6", Box::new(|| FiniteGroup::dihedral(6))),
        ("Dic3", Box::new(|| FiniteGroup::dicyclic(3))),
        ("C13", Box::new(|| c(13))),
        ("C14", Box::new(|| c(14))),
        ("D7", Box::new(|| FiniteGroup::dihedral(7))),
        ("C15", Box::new(|| c(15))),
    ];
    all.into_iter().map(|(name, f)| (name.to_string(), f())).filter(|(_, g)| g.order() <= max_order).collect()
}

/// Looks up a catalogue group by name (case-insensitive), also accepting `Sn`, `An`, `Dn`, `Cn`.
pub fn named_group(name: &str) -> Option<FiniteGroup> {
    let lower = name.to_ascii_lowercase();
    let num = |s: &str| s.parse::<usize>().ok().filter(|&n| (1..=64).contains(&n));
    if let Some(g) = small_groups(15).into_iter().find(|(n, _)| n.eq_ignore_ascii_case(name)) {
        return Some(g.1);
    }
    let (head, tail) = lower.split_at(1);
    match head {
        "c" => num(tail).map(FiniteGroup::cyclic),
        "d" => num(tail).filter(|&m| 2 * m <= 64).map(FiniteGroup::dihedral),
        "s" => num(tail).filter(|&k| k <= 4).map(FiniteGroup::symmetric),
        "a" => num(tail).filter(|&k| k <= 5).map(FiniteGroup::alternating),
        _ => None,
    }
}
