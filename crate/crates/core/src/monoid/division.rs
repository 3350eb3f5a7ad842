//! Division of ordered monoids and the `T_q` pattern search.

use super::{Element, FiniteMonoid, OrderedMonoid};
use crate::error::{Error, Result};

/// Upper bound on the number of generator-preimage tuples `divides` will try.
pub const DIVISION_WORK_CAP: usize = 10_000_000;

/// `n ≺ m`: the letters of `n` are sent to `preimages` in `m`; the submonoid
/// they generate maps onto `n` through `map`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionCertificate {
    pub preimages: Vec<(char, Element)>,
    /// `(element of m, element of n)` for every element of the submonoid, in BFS order.
    pub map: Vec<(Element, Element)>,
}

impl DivisionCertificate {
    /// Re-checks the certificate from scratch.
    pub fn verify(&self, n: &OrderedMonoid, m: &OrderedMonoid) -> bool {
        let mut phi = vec![None; m.size()];
        for &(x, y) in &self.map {
            if x >= m.size() || y >= n.size() || phi[x].is_some() {
                return false;
            }
            phi[x] = Some(y);
        }
        let sub: Vec<Element> = self.map.iter().map(|&(x, _)| x).collect();
        let closed = sub
            .iter()
            .all(|&x| sub.iter().all(|&y| phi[m.monoid.mul(x, y)].is_some()));
        if !closed || phi[m.monoid.identity()] != Some(n.monoid.identity()) {
            return false;
        }
        let mut hit = vec![false; n.size()];
        for &(x, y) in &self.map {
            hit[y] = true;
            for &(x2, y2) in &self.map {
                if phi[m.monoid.mul(x, x2)] != Some(n.monoid.mul(y, y2)) {
                    return false;
                }
                if m.leq(x, x2) && !n.leq(y, y2) {
                    return false;
                }
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// Decides whether `n` divides `m` as ordered monoids.
///
/// A division factors through the submonoid generated by preimages of the
/// generators of `n`, so trying every tuple of preimages is exhaustive. When
/// `n` has no generators, all of its elements play that role.
pub fn divides(n: &OrderedMonoid, m: &OrderedMonoid) -> Result<Option<DivisionCertificate>> {
    let targets: Vec<(char, Element)> = if n.monoid.generators().is_empty() {
        n.monoid.elements().map(|x| ('?', x)).collect()
    } else {
        n.monoid.generators().to_vec()
    };
    let k = targets.len();
    let size = m.size();
    let work = (0..k).try_fold(1usize, |acc, _| acc.checked_mul(size));
    match work {
        Some(w) if w <= DIVISION_WORK_CAP => {}
        _ => {
            return Err(Error::SizeCap {
                what: "division search",
                needed: work.unwrap_or(usize::MAX),
                cap: DIVISION_WORK_CAP,
            })
        }
    }
    let mut tuple = vec![0; k];
    let mut phi = vec![usize::MAX; size];
    let mut visited = Vec::with_capacity(size);
    loop {
        if let Some(map) = try_tuple(n, m, &targets, &tuple, &mut phi, &mut visited) {
            let preimages = targets
                .iter()
                .zip(&tuple)
                .map(|(&(c, _), &g)| (c, g))
                .collect();
            return Ok(Some(DivisionCertificate { preimages, map }));
        }
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < size {
                break;
            }
            tuple[i] = 0;
        }
    }
}

fn try_tuple(
    n: &OrderedMonoid,
    m: &OrderedMonoid,
    targets: &[(char, Element)],
    tuple: &[Element],
    phi: &mut [Element],
    visited: &mut Vec<Element>,
) -> Option<Vec<(Element, Element)>> {
    for &x in visited.iter() {
        phi[x] = usize::MAX;
    }
    visited.clear();
    let (mm, nm) = (&m.monoid, &n.monoid);
    phi[mm.identity()] = nm.identity();
    visited.push(mm.identity());
    let mut i = 0;
    while i < visited.len() {
        let x = visited[i];
        let y = phi[x];
        for (&g, &(_, h)) in tuple.iter().zip(targets) {
            let (x2, y2) = (mm.mul(x, g), nm.mul(y, h));
            if phi[x2] == usize::MAX {
                phi[x2] = y2;
                visited.push(x2);
            } else if phi[x2] != y2 {
                return None;
            }
        }
        i += 1;
    }
    for &x in visited.iter() {
        for &x2 in visited.iter() {
            if m.leq(x, x2) && !n.leq(phi[x], phi[x2]) {
                return None;
            }
        }
    }
    Some(visited.iter().map(|&x| (x, phi[x])).collect())
}

/// Idempotents `e, f` and `q > 1` with `(ef)^q e = e` and `(ef)^r e ≠ e` for `0 < r < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TqWitness {
    pub q: usize,
    pub e: Element,
    pub f: Element,
}

/// First idempotent pair (in index order) exhibiting the `T_q` pattern.
pub fn find_tq(m: &FiniteMonoid) -> Option<TqWitness> {
    let idempotents = m.idempotents();
    for &e in &idempotents {
        for &f in &idempotents {
            let ef = m.mul(e, f);
            let mut x = e;
            for i in 1..=m.size() {
                x = m.mul(ef, x);
                if x == e {
                    if i > 1 {
                        return Some(TqWitness { q: i, e, f });
                    }
                    break;
                }
            }
        }
    }
    None
}
