//! Closure of a set of state transformations under composition.

use std::collections::HashMap;

use super::{Element, FiniteMonoid};
use crate::automata::Dfa;
use crate::error::{Error, Result};

/// Default bound on the number of distinct transformations.
pub const DEFAULT_ELEMENT_CAP: usize = 5000;

/// A monoid of state maps together with the map realizing each element.
#[derive(Debug, Clone)]
pub struct TransitionMonoid {
    pub monoid: FiniteMonoid,
    /// `maps[x][q]`: state reached from `q` by (any word naming) `x`.
    pub maps: Vec<Vec<usize>>,
}

impl TransitionMonoid {
    /// Closes the letter transformations under composition. Words act on the
    /// right: the product `xy` applies `x` first. Elements are discovered in
    /// shortlex order of their names.
    pub fn generate(letters: &[char], generators: &[Vec<usize>], cap: usize) -> Result<Self> {
        let states = generators.first().map_or(0, Vec::len);
        let identity: Vec<usize> = (0..states).collect();
        let mut index: HashMap<Vec<usize>, Element> = HashMap::from([(identity.clone(), 0)]);
        let mut maps = vec![identity];
        let mut names = vec![String::new()];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut right: Vec<Vec<Element>> = Vec::new();
        // letters are visited in alphabetical order so names come out shortlex-least
        let mut order: Vec<usize> = (0..letters.len()).collect();
        order.sort_by_key(|&i| letters[i]);
        let mut i = 0;
        while i < maps.len() {
            let mut row = vec![0; letters.len()];
            for &g in &order {
                let next: Vec<usize> = maps[i].iter().map(|&q| generators[g][q]).collect();
                let id = match index.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = maps.len();
                        if id >= cap {
                            return Err(Error::SizeCap {
                                what: "transition monoid",
                                needed: id + 1,
                                cap,
                            });
                        }
                        index.insert(next.clone(), id);
                        maps.push(next);
                        let mut name = names[i].clone();
                        name.push(letters[g]);
                        names.push(name);
                        let mut w = words[i].clone();
                        w.push(g);
                        words.push(w);
                        id
                    }
                };
                row[g] = id;
            }
            right.push(row);
            i += 1;
        }
        let size = maps.len();
        let mut table = Vec::with_capacity(size * size);
        for x in 0..size {
            for w in &words {
                table.push(w.iter().fold(x, |acc, &g| right[acc][g]));
            }
        }
        let gens = letters
            .iter()
            .enumerate()
            .map(|(g, &c)| (c, right[0][g]))
            .collect();
        Ok(TransitionMonoid {
            monoid: FiniteMonoid::from_parts(table, 0, names, gens),
            maps,
        })
    }

    /// The element realized by a state map, if any.
    pub fn element_of_map(&self, map: &[usize]) -> Option<Element> {
        self.maps.iter().position(|m| m == map)
    }
}

/// The transition monoid of `d`; its generator map sends each letter to its
/// transformation.
pub fn transition_monoid(d: &Dfa, cap: usize) -> Result<TransitionMonoid> {
    let gens: Vec<Vec<usize>> = (0..d.alphabet().len())
        .map(|a| d.letter_map(a).to_vec())
        .collect();
    if gens.is_empty() {
        return Ok(TransitionMonoid {
            monoid: FiniteMonoid::trivial(),
            maps: vec![(0..d.state_count()).collect()],
        });
    }
    TransitionMonoid::generate(d.alphabet(), &gens, cap)
}
