//! Finite monoids given by multiplication tables, optionally ordered.

mod division;
mod format;
mod order;
mod properties;
mod quotient;
mod subgroups;
mod term;
mod transition;

pub use division::{divides, find_tq, DivisionCertificate, TqWitness, DIVISION_WORK_CAP};
pub use order::{
    context_order, ideal_generated, syntactic_ordered_monoid, OrderIdeal, OrderedMonoid,
    StableOrder, Syntactic,
};
pub use properties::{
    check_property, satisfies_identity, IdentityCheck, IdentityMode, Property, PropertyCheck,
};
pub use quotient::commutative_quotient;
pub use subgroups::{maximal_subgroups, Subgroup};
pub use term::{Exponent, Term};
pub use transition::{transition_monoid, TransitionMonoid, DEFAULT_ELEMENT_CAP};

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// Elements are indices `0..size`.
pub type Element = usize;

/// A finite monoid stored as a full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    identity: Element,
    table: Vec<Element>,
    names: Vec<String>,
    generators: Vec<(char, Element)>,
}

impl FiniteMonoid {
    /// Builds a monoid from a table, checking closure, the identity law and
    /// associativity. When `generators` is non-empty every element must be a
    /// product of generators and names are recomputed as shortlex-least words;
    /// otherwise elements are named `#i`.
    pub fn from_table(
        table: Vec<Vec<Element>>,
        identity: Element,
        generators: Vec<(char, Element)>,
    ) -> Result<Self> {
        let size = table.len();
        if size == 0 {
            return Err(Error::Precondition(
                "a monoid needs at least one element".into(),
            ));
        }
        if identity >= size {
            return Err(Error::Precondition(format!(
                "identity {identity} out of range"
            )));
        }
        let mut flat = Vec::with_capacity(size * size);
        for (x, row) in table.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Precondition(format!(
                    "table row {x} has {} entries",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= size) {
                return Err(Error::Precondition(format!(
                    "table entry {bad} out of range"
                )));
            }
            flat.extend_from_slice(row);
        }
        for &(c, g) in &generators {
            if g >= size {
                return Err(Error::Precondition(format!(
                    "generator {c} maps out of range"
                )));
            }
        }
        let mut m = FiniteMonoid {
            size,
            identity,
            table: flat,
            names: (0..size).map(|i| format!("#{i}")).collect(),
            generators,
        };
        for x in 0..size {
            if m.mul(identity, x) != x || m.mul(x, identity) != x {
                return Err(Error::Precondition(format!("identity law fails at {x}")));
            }
        }
        if let Some((x, y, z)) = m.associativity_counterexample() {
            return Err(Error::Precondition(format!(
                "associativity fails at ({x}, {y}, {z})"
            )));
        }
        if !m.generators.is_empty() {
            m.names = m.shortlex_names().ok_or_else(|| {
                Error::Precondition("generators do not generate the monoid".into())
            })?;
        }
        Ok(m)
    }

    /// Assembles a monoid from trusted parts (used by the closure algorithms).
    pub(crate) fn from_parts(
        table: Vec<Element>,
        identity: Element,
        names: Vec<String>,
        generators: Vec<(char, Element)>,
    ) -> Self {
        let size = names.len();
        debug_assert_eq!(table.len(), size * size);
        FiniteMonoid {
            size,
            identity,
            table,
            names,
            generators,
        }
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        Self::from_parts(vec![0], 0, vec![String::new()], Vec::new())
    }

    /// `Z_n` under addition, generated by `1` under the letter `g`.
    pub fn cyclic_group(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x + y) % n))
            .collect();
        let names = (0..n).map(|k| "g".repeat(k)).collect();
        let generators = if n > 1 { vec![('g', 1)] } else { Vec::new() };
        Self::from_parts(table, 0, names, generators)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.size
    }

    #[inline]
    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.table[x * self.size + y]
    }

    pub fn product(&self, xs: impl IntoIterator<Item = Element>) -> Element {
        xs.into_iter()
            .fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn pow(&self, x: Element, k: usize) -> Element {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    pub fn is_idempotent(&self, x: Element) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<Element> {
        self.elements().filter(|&x| self.is_idempotent(x)).collect()
    }

    /// Canonical name: the shortlex-least generator word, `""` for the identity.
    pub fn name(&self, x: Element) -> &str {
        &self.names[x]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_named(&self, name: &str) -> Option<Element> {
        self.names.iter().position(|n| n == name)
    }

    pub fn generators(&self) -> &[(char, Element)] {
        &self.generators
    }

    pub fn generator(&self, c: char) -> Result<Element> {
        self.generators
            .iter()
            .find(|(g, _)| *g == c)
            .map(|&(_, e)| e)
            .ok_or(Error::UnknownLetter(c))
    }

    pub fn generator_letters(&self) -> Vec<char> {
        self.generators.iter().map(|&(c, _)| c).collect()
    }

    /// Evaluates a word over the generator letters; ε is skipped.
    pub fn eval_str(&self, word: &str) -> Result<Element> {
        let mut acc = self.identity;
        for c in word.chars() {
            if c == crate::word::EPSILON {
                continue;
            }
            acc = self.mul(acc, self.generator(c)?);
        }
        Ok(acc)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_counterexample().is_none()
    }

    pub fn commutativity_counterexample(&self) -> Option<(Element, Element)> {
        for x in self.elements() {
            for y in x + 1..self.size {
                if self.mul(x, y) != self.mul(y, x) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn associativity_counterexample(&self) -> Option<(Element, Element, Element)> {
        for x in self.elements() {
            for y in self.elements() {
                let xy = self.mul(x, y);
                for z in self.elements() {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// Smallest `(index, period)` with `x^index = x^(index + period)`, `index ≥ 1`.
    pub fn index_period(&self, x: Element) -> (usize, usize) {
        let mut seen = HashMap::new();
        let mut p = x;
        let mut k = 1;
        loop {
            if let Some(&first) = seen.get(&p) {
                return (first, k - first);
            }
            seen.insert(p, k);
            p = self.mul(p, x);
            k += 1;
        }
    }

    /// Least `k ≥ 1` such that `x^k` is idempotent for every element.
    pub fn exponent(&self) -> usize {
        let mut lcm = 1usize;
        let mut max_index = 1usize;
        for x in self.elements() {
            let (i, p) = self.index_period(x);
            lcm = lcm / gcd(lcm, p) * p;
            max_index = max_index.max(i);
        }
        max_index.div_ceil(lcm) * lcm
    }

    /// `x^ω` for the monoid exponent ω.
    pub fn omega_power(&self, x: Element) -> Element {
        self.pow(x, self.exponent())
    }

    /// Submonoid generated by `gens`, in BFS order from the identity.
    pub fn submonoid(&self, gens: &[Element]) -> Vec<Element> {
        let mut seen = vec![false; self.size];
        let mut order = vec![self.identity];
        seen[self.identity] = true;
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
            i += 1;
        }
        order
    }

    /// Shortlex-least generator words for every element, if the generators
    /// generate the whole monoid.
    fn shortlex_names(&self) -> Option<Vec<String>> {
        let mut gens = self.generators.clone();
        gens.sort_by_key(|&(c, _)| c);
        let mut names: Vec<Option<String>> = vec![None; self.size];
        names[self.identity] = Some(String::new());
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &(c, g) in &gens {
                let y = self.mul(x, g);
                if names[y].is_none() {
                    let mut w = names[x].clone().unwrap();
                    w.push(c);
                    names[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        names.into_iter().collect()
    }

    /// Isomorphism test for monoids generated by the same letters: the
    /// letter-preserving correspondence must be a bijective morphism.
    pub fn isomorphic_by_generators(&self, other: &FiniteMonoid) -> bool {
        if self.size != other.size || self.generator_letters() != other.generator_letters() {
            return false;
        }
        let mut fwd = vec![usize::MAX; self.size];
        let mut bwd = vec![usize::MAX; other.size];
        fwd[self.identity] = other.identity;
        bwd[other.identity] = self.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (&(_, g), &(_, h)) in self.generators.iter().zip(&other.generators) {
                let (y, z) = (self.mul(x, g), other.mul(fwd[x], h));
                match (fwd[y], bwd[z]) {
                    (usize::MAX, usize::MAX) => {
                        fwd[y] = z;
                        bwd[z] = y;
                        queue.push_back(y);
                    }
                    (a, b) if a == z && b == y => {}
                    _ => return false,
                }
            }
        }
        fwd.iter().all(|&v| v != usize::MAX)
    }

    /// Parses a monoid document; the order defaults to equality.
    pub fn parse(text: &str) -> Result<OrderedMonoid> {
        format::parse(text)
    }

    /// Serializes as a monoid document; `order` is written when given.
    pub fn serialize(&self, order: Option<&StableOrder>) -> String {
        format::serialize(self, order)
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An element map between two finite monoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidMorphism {
    pub map: Vec<Element>,
    pub target_size: usize,
}

impl MonoidMorphism {
    pub fn apply(&self, x: Element) -> Element {
        self.map[x]
    }

    /// Identity-preserving and product-preserving.
    pub fn is_morphism(&self, source: &FiniteMonoid, target: &FiniteMonoid) -> bool {
        self.map.len() == source.size()
            && self.map[source.identity()] == target.identity()
            && source.elements().all(|x| {
                source
                    .elements()
                    .all(|y| self.map[source.mul(x, y)] == target.mul(self.map[x], self.map[y]))
            })
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_size];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn preserves_order(&self, source: &StableOrder, target: &StableOrder) -> bool {
        let n = self.map.len();
        (0..n).all(|x| (0..n).all(|y| !source.leq(x, y) || target.leq(self.map[x], self.map[y])))
    }
}
