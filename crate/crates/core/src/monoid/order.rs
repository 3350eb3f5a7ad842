//! Stable orders, order ideals and the syntactic ordered monoid.

use super::transition::{transition_monoid, TransitionMonoid};
use super::{Element, FiniteMonoid};
use crate::automata::Dfa;
use crate::error::{Error, Result};

/// A partial order on monoid elements, stored as a dense relation matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableOrder {
    size: usize,
    leq: Vec<bool>,
}

impl StableOrder {
    /// Equality, the only stable order a group admits.
    pub fn equality(size: usize) -> Self {
        let mut leq = vec![false; size * size];
        for x in 0..size {
            leq[x * size + x] = true;
        }
        StableOrder { size, leq }
    }

    /// Builds an order from an explicit relation and validates it against `m`.
    pub fn from_relation(m: &FiniteMonoid, leq: Vec<Vec<bool>>) -> Result<Self> {
        let size = m.size();
        if leq.len() != size || leq.iter().any(|r| r.len() != size) {
            return Err(Error::Precondition(
                "order dimensions do not match the monoid".into(),
            ));
        }
        let order = StableOrder {
            size,
            leq: leq.into_iter().flatten().collect(),
        };
        if let Some(problem) = order.violation(m) {
            return Err(Error::Precondition(problem));
        }
        Ok(order)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.leq[x * self.size + y]
    }

    pub fn is_equality(&self) -> bool {
        (0..self.size).all(|x| (0..self.size).all(|y| self.leq(x, y) == (x == y)))
    }

    /// Describes the first failed order axiom, or `None` if the relation is a
    /// stable partial order on `m`.
    pub fn violation(&self, m: &FiniteMonoid) -> Option<String> {
        let n = self.size;
        if n != m.size() {
            return Some("order dimensions do not match the monoid".into());
        }
        for x in 0..n {
            if !self.leq(x, x) {
                return Some(format!("not reflexive at {x}"));
            }
            for y in 0..n {
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    return Some(format!("not antisymmetric at ({x}, {y})"));
                }
                if !self.leq(x, y) {
                    continue;
                }
                for z in 0..n {
                    if self.leq(y, z) && !self.leq(x, z) {
                        return Some(format!("not transitive at ({x}, {y}, {z})"));
                    }
                    if !self.leq(m.mul(z, x), m.mul(z, y)) || !self.leq(m.mul(x, z), m.mul(y, z)) {
                        return Some(format!("not stable at ({x}, {y}) with {z}"));
                    }
                }
            }
        }
        None
    }

    pub fn rows(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.size).map(<[bool]>::to_vec).collect()
    }
}

/// A finite monoid with a stable order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedMonoid {
    pub monoid: FiniteMonoid,
    pub order: StableOrder,
}

impl OrderedMonoid {
    pub fn new(monoid: FiniteMonoid, order: StableOrder) -> Result<Self> {
        if let Some(problem) = order.violation(&monoid) {
            return Err(Error::Precondition(problem));
        }
        Ok(OrderedMonoid { monoid, order })
    }

    /// The monoid with the equality order.
    pub fn unordered(monoid: FiniteMonoid) -> Self {
        let order = StableOrder::equality(monoid.size());
        OrderedMonoid { monoid, order }
    }

    pub fn leq(&self, x: Element, y: Element) -> bool {
        self.order.leq(x, y)
    }

    pub fn size(&self) -> usize {
        self.monoid.size()
    }

    /// Evaluates a word or ω-term over the generator letters.
    pub fn eval(&self, term: &str) -> Result<Element> {
        let t: super::Term = term.parse()?;
        t.eval(&self.monoid, &mut |c| self.monoid.generator(c))
    }

    pub fn serialize(&self) -> String {
        self.monoid.serialize(Some(&self.order))
    }
}

/// A downward-closed set of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderIdeal {
    members: Vec<bool>,
    generators: Vec<Element>,
}

impl OrderIdeal {
    /// The ideal whose members are exactly `members`; fails unless the set is
    /// downward closed. Its generating set is the set of maximal members.
    pub fn from_members(m: &OrderedMonoid, members: Vec<bool>) -> Result<Self> {
        let n = m.size();
        for x in 0..n {
            for y in 0..n {
                if members[y] && m.leq(x, y) && !members[x] {
                    return Err(Error::Precondition(format!(
                        "set is not downward closed: {x} <= {y}"
                    )));
                }
            }
        }
        let generators = (0..n)
            .filter(|&x| members[x] && (0..n).all(|y| y == x || !members[y] || !m.leq(x, y)))
            .collect();
        Ok(OrderIdeal {
            members,
            generators,
        })
    }

    pub fn contains(&self, x: Element) -> bool {
        self.members[x]
    }

    pub fn members(&self) -> Vec<Element> {
        (0..self.members.len())
            .filter(|&x| self.members[x])
            .collect()
    }

    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every order ideal of `m` (all downward-closed subsets). Exponential;
    /// intended for monoids of a handful of elements.
    pub fn all(m: &OrderedMonoid) -> Vec<OrderIdeal> {
        let n = m.size();
        assert!(n <= 20, "enumerating ideals of a {n}-element monoid");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let members: Vec<bool> = (0..n).map(|x| mask >> x & 1 == 1).collect();
            if let Ok(ideal) = OrderIdeal::from_members(m, members) {
                out.push(ideal);
            }
        }
        out
    }
}

/// Downward closure of `gens`.
pub fn ideal_generated(m: &OrderedMonoid, gens: &[Element]) -> OrderIdeal {
    let n = m.size();
    let members = (0..n).map(|x| gens.iter().any(|&g| m.leq(x, g))).collect();
    let mut generators: Vec<Element> = gens.to_vec();
    generators.sort_unstable();
    generators.dedup();
    OrderIdeal {
        members,
        generators,
    }
}

/// The order `x ≤ y ⟺ ∀p,q: p·y·q ∈ F ⟹ p·x·q ∈ F`, evaluated by brute force
/// over all element contexts.
pub fn context_order(m: &FiniteMonoid, accepting: &[bool]) -> StableOrder {
    let n = m.size();
    // contexts(x)[p*n+q] = p·x·q ∈ F
    let contexts: Vec<Vec<bool>> = m
        .elements()
        .map(|x| {
            let mut row = Vec::with_capacity(n * n);
            for p in m.elements() {
                let px = m.mul(p, x);
                for q in m.elements() {
                    row.push(accepting[m.mul(px, q)]);
                }
            }
            row
        })
        .collect();
    let mut leq = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            leq[x * n + y] = contexts[y]
                .iter()
                .zip(&contexts[x])
                .all(|(&in_y, &in_x)| !in_y || in_x);
        }
    }
    StableOrder { size: n, leq }
}

/// Everything derived from a language's minimal automaton.
#[derive(Debug, Clone)]
pub struct Syntactic {
    pub ordered: OrderedMonoid,
    /// Accepting set `F = Φ(L)`, an order ideal.
    pub accepting: OrderIdeal,
    pub minimal: Dfa,
    /// `maps[x]`: the state transformation realizing element `x` on `minimal`.
    pub maps: Vec<Vec<usize>>,
}

impl Syntactic {
    pub fn monoid(&self) -> &FiniteMonoid {
        &self.ordered.monoid
    }
}

/// Minimizes `d`, takes the transition monoid and equips it with the syntactic order.
///
/// Every state of the minimal automaton is reachable, so quantifying over left
/// contexts amounts to quantifying over states. The order is therefore read off
/// the language-inclusion preorder on states: `x ≤ y` iff for every state `s`,
/// `L(s·y) ⊆ L(s·x)`.
pub fn syntactic_ordered_monoid(d: &Dfa, cap: usize) -> Result<Syntactic> {
    let minimal = d.minimize();
    let TransitionMonoid { monoid, maps } = transition_monoid(&minimal, cap)?;
    let states = minimal.state_count();
    let included = state_inclusion(&minimal);
    let n = monoid.size();
    let mut leq = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            leq[x * n + y] = (0..states).all(|s| included[maps[y][s] * states + maps[x][s]]);
        }
    }
    let order = StableOrder { size: n, leq };
    let accepting: Vec<bool> = maps
        .iter()
        .map(|m| minimal.is_accepting(m[minimal.initial()]))
        .collect();
    let ordered = OrderedMonoid { monoid, order };
    let accepting = OrderIdeal::from_members(&ordered, accepting)?;
    Ok(Syntactic {
        ordered,
        accepting,
        minimal,
        maps,
    })
}

/// `included[p*n + q]` iff `L(p) ⊆ L(q)`; greatest fixpoint on state pairs.
fn state_inclusion(d: &Dfa) -> Vec<bool> {
    let n = d.state_count();
    let mut inc: Vec<bool> = (0..n * n)
        .map(|i| !d.is_accepting(i / n) || d.is_accepting(i % n))
        .collect();
    loop {
        let mut changed = false;
        for i in 0..n * n {
            if !inc[i] {
                continue;
            }
            let (p, q) = (i / n, i % n);
            if (0..d.alphabet().len()).any(|a| !inc[d.step(p, a) * n + d.step(q, a)]) {
                inc[i] = false;
                changed = true;
            }
        }
        if !changed {
            return inc;
        }
    }
}
