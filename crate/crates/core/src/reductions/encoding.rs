//! Encoding ordered-monoid instances as language instances.
//!
//! Every element `m` is spelled by its shortlex-least word `w_m`, padded with
//! ε to a common width. For each pair `s ≰ t` a separating context `(p, q)`
//! is stored; membership of a product `x` in `⟨i_1, …, i_k⟩` is then decided
//! by the constant-size family of language instances `p·x·q`.

use std::collections::HashMap;

use super::Instance;
use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::monoid::{
    syntactic_ordered_monoid, Element, OrderIdeal, OrderedMonoid, DEFAULT_ELEMENT_CAP,
};
use crate::word::PaddedWord;

/// A context `(left, right)` separating `lesser ≰ greater`:
/// `left·greater·right ∈ L` while `left·lesser·right ∉ L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessEntry {
    pub lesser: Element,
    pub greater: Element,
    pub context: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WitnessTable {
    pub entries: Vec<WitnessEntry>,
    /// Distinct contexts, in order of first use.
    pub contexts: Vec<(PaddedWord, PaddedWord)>,
}

impl WitnessTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Checks every entry against the automaton, given the element words.
    pub fn replays(&self, d: &Dfa, words: &[PaddedWord]) -> Result<bool> {
        for e in &self.entries {
            let (p, q) = &self.contexts[e.context];
            let wrap = |x: Element| {
                let mut w = p.clone();
                w.extend_from(&words[x]);
                w.extend_from(q);
                w
            };
            if !d.accepts(&wrap(e.greater))? || d.accepts(&wrap(e.lesser))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The words, witness table and state maps tying a monoid to its language.
#[derive(Debug, Clone)]
pub struct MonoidEncoding {
    pub monoid: OrderedMonoid,
    pub dfa: Dfa,
    /// `words[x]` spells element `x`, padded to `width`.
    pub words: Vec<PaddedWord>,
    pub width: usize,
    pub table: WitnessTable,
    maps: Vec<Vec<usize>>,
    context_maps: Vec<(Vec<usize>, Vec<usize>)>,
}

/// Language instances for one product, one per stored context, and the verdict.
#[derive(Debug, Clone)]
pub struct EncodedInstance {
    pub instances: Vec<Instance>,
    pub memberships: Vec<bool>,
    pub verdict: bool,
}

fn compose(first: &[usize], then: &[usize]) -> Vec<usize> {
    first.iter().map(|&s| then[s]).collect()
}

/// Builds the encoding, first checking that `m` is the syntactic ordered
/// monoid of `L(d)` up to the letter-preserving isomorphism.
pub fn monoid_encoding(m: &OrderedMonoid, d: &Dfa) -> Result<MonoidEncoding> {
    let syn = syntactic_ordered_monoid(d, DEFAULT_ELEMENT_CAP)?;
    let sm = syn.monoid();
    if !m.monoid.isomorphic_by_generators(sm) {
        return Err(Error::Mismatch(format!(
            "monoid of size {} is not the transition monoid of the minimal automaton (size {})",
            m.size(),
            sm.size()
        )));
    }
    // shortlex names correspond under the isomorphism
    let phi: Vec<Element> = m
        .monoid
        .elements()
        .map(|x| {
            sm.element_named(m.monoid.name(x))
                .expect("isomorphic monoids share names")
        })
        .collect();
    for x in m.monoid.elements() {
        for y in m.monoid.elements() {
            if m.leq(x, y) != syn.ordered.leq(phi[x], phi[y]) {
                return Err(Error::Mismatch(format!(
                    "order differs on ({}, {})",
                    m.monoid.name(x),
                    m.monoid.name(y)
                )));
            }
        }
    }
    let mm = &m.monoid;
    let accepting: Vec<bool> = phi.iter().map(|&x| syn.accepting.contains(x)).collect();
    let width = mm
        .names()
        .iter()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(0);
    let word = |x: Element| PaddedWord::from(mm.name(x)).padded_to(width);
    let mut table = WitnessTable::default();
    let mut seen: HashMap<(Element, Element), usize> = HashMap::new();
    for s in mm.elements() {
        for t in mm.elements() {
            if m.leq(s, t) {
                continue;
            }
            let context = mm
                .elements()
                .flat_map(|p| mm.elements().map(move |q| (p, q)))
                .find(|&(p, q)| {
                    accepting[mm.product([p, t, q])] && !accepting[mm.product([p, s, q])]
                })
                .expect("s ≰ t has a separating context");
            let next = seen.len();
            let index = *seen.entry(context).or_insert(next);
            if index == table.contexts.len() {
                table.contexts.push((word(context.0), word(context.1)));
            }
            table.entries.push(WitnessEntry {
                lesser: s,
                greater: t,
                context: index,
            });
        }
    }
    let mut contexts: Vec<(Element, Element)> = vec![(0, 0); seen.len()];
    for (&c, &i) in &seen {
        contexts[i] = c;
    }
    let maps: Vec<Vec<usize>> = phi.iter().map(|&x| syn.maps[x].clone()).collect();
    let context_maps = contexts
        .iter()
        .map(|&(p, q)| (maps[p].clone(), maps[q].clone()))
        .collect();
    Ok(MonoidEncoding {
        monoid: m.clone(),
        dfa: syn.minimal,
        words: mm.elements().map(word).collect(),
        width,
        table,
        maps,
        context_maps,
    })
}

impl MonoidEncoding {
    /// One language instance per context: Alice holds `p` and the odd-position
    /// words followed by `q`; Bob holds ε-blocks around the even positions.
    pub fn instances(&self, product: &[Element]) -> Result<Vec<Instance>> {
        if product.is_empty() || product.len() % 2 != 0 {
            return Err(Error::Precondition(
                "instances need an even, positive length".into(),
            ));
        }
        if let Some(&x) = product.iter().find(|&&x| x >= self.monoid.size()) {
            return Err(Error::OutOfDomain(format!("no element {x}")));
        }
        let blank = PaddedWord::padding(self.width);
        Ok(self
            .table
            .contexts
            .iter()
            .map(|(p, q)| {
                let mut alice = vec![p.clone()];
                let mut bob = vec![blank.clone()];
                for pair in product.chunks(2) {
                    alice.push(self.words[pair[0]].clone());
                    bob.push(self.words[pair[1]].clone());
                }
                alice.push(q.clone());
                bob.push(blank.clone());
                Instance { alice, bob }
            })
            .collect())
    }

    /// State map of the concatenated element words.
    pub fn middle_map(&self, product: &[Element]) -> Vec<usize> {
        product.iter().fold(
            (0..self.dfa.state_count()).collect(),
            |acc: Vec<usize>, &x| compose(&acc, &self.maps[x]),
        )
    }

    fn member_with(&self, map: &[usize], c: usize) -> bool {
        let (p, q) = &self.context_maps[c];
        self.dfa.is_accepting(q[map[p[self.dfa.initial()]]])
    }

    /// The decision rule from context memberships alone: some generator `g`
    /// of the ideal satisfies `p·g·q ∈ L ⟹ p·x·q ∈ L` for every context.
    pub fn recipe(&self, ideal: &OrderIdeal, memberships: &[bool]) -> bool {
        ideal.generators().iter().any(|&g| {
            (0..self.table.contexts.len())
                .all(|c| !self.member_with(&self.maps[g], c) || memberships[c])
        })
    }

    /// [`recipe`](Self::recipe) applied to the memberships implied by a middle state map.
    pub fn recipe_for_map(&self, ideal: &OrderIdeal, map: &[usize]) -> bool {
        let memberships: Vec<bool> = (0..self.table.contexts.len())
            .map(|c| self.member_with(map, c))
            .collect();
        self.recipe(ideal, &memberships)
    }
}

/// Encodes one product instance and decides it by running the automaton on
/// every context instance.
pub fn encode_monoid_as_language(
    m: &OrderedMonoid,
    ideal: &OrderIdeal,
    d: &Dfa,
    product: &[Element],
) -> Result<(EncodedInstance, WitnessTable)> {
    let enc = monoid_encoding(m, d)?;
    let instances = enc.instances(product)?;
    let memberships = instances
        .iter()
        .map(|i| enc.dfa.accepts(&i.word()))
        .collect::<Result<Vec<bool>>>()?;
    let verdict = enc.recipe(ideal, &memberships);
    Ok((
        EncodedInstance {
            instances,
            memberships,
            verdict,
        },
        enc.table,
    ))
}
