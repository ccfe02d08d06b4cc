//! Brute-force enumeration over finite modules held as index tables.

use super::InterpError;
use crate::coeff::{FiniteModule, GModule};
use crate::groups::{FiniteGroup, ModuleTables};

pub(crate) fn finite(m: &GModule) -> Result<FiniteModule, InterpError> {
    m.tables().ok_or(InterpError::InfiniteModule)
}

pub(crate) fn check_count(q: usize, exponent: usize, cap: usize, what: &str) -> Result<(), InterpError> {
    match q.checked_pow(exponent as u32) {
        Some(c) if c <= cap => Ok(()),
        _ => Err(InterpError::SizeLimit(format!("{what}: {q}^{exponent} candidates exceed the cap {cap}"))),
    }
}

/// Calls `f` on every vector in `0..q` of length `len`, in lexicographic order.
pub(crate) fn for_each_word(q: usize, len: usize, mut f: impl FnMut(&[usize])) {
    let mut w = vec![0; len];
    loop {
        f(&w);
        let mut i = len;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            w[i] += 1;
            if w[i] < q {
                break;
            }
            w[i] = 0;
        }
    }
}

/// Every derivation `G -> M` (crossed homomorphism), as `D[g]` element indices, ascending.
pub(crate) fn derivations(g: &FiniteGroup, t: &ModuleTables, cap: usize) -> Result<Vec<Vec<usize>>, InterpError> {
    let gens = crate::groups::Subgroup::whole(g).generators();
    check_count(t.size(), gens.len(), cap, "derivations")?;
    let mut out = Vec::new();
    for_each_word(t.size(), gens.len(), |w| {
        if let Some(d) = extend_derivation(g, t, &gens, w) {
            out.push(d);
        }
    });
    out.sort();
    Ok(out)
}

/// `D(s·x) = D(s) + s·D(x)` from generator values, then the full law is checked.
fn extend_derivation(g: &FiniteGroup, t: &ModuleTables, gens: &[usize], vals: &[usize]) -> Option<Vec<usize>> {
    let mut d = vec![usize::MAX; g.order()];
    d[0] = 0;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &v) in gens.iter().zip(vals) {
            let y = g.mul(s, x);
            if d[y] == usize::MAX {
                d[y] = t.add[v][t.act[s][d[x]]];
                queue.push(y);
            }
        }
    }
    is_derivation(g, t, &d).then_some(d)
}

pub(crate) fn is_derivation(g: &FiniteGroup, t: &ModuleTables, d: &[usize]) -> bool {
    g.elements().all(|x| g.elements().all(|y| d[g.mul(x, y)] == t.add[d[x]][t.act[x][d[y]]]))
}
