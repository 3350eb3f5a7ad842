//! Bounded search for a local reduction from PDISJ to `L5` whose blocks are
//! `U, U, U, v` on inputs `00, 01, 10, 11`, with `U ∈ {(abab)^k, (baba)^k}`
//! and `v` obeying the constraints that would make the reduction valid:
//! (i) `v` and `U` agree in every commutative quotient, and
//! (ii) `eval(U v U) ≰ eval(U)`.
//!
//! Matrix entries are single symbols of `{ε, a, b}`. Row `z` holds
//! `a(z)_1 b(z)_1 … a(z)_s b(z)_s`, so the four block words are read off
//! alternating columns of the two rows.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::automata::{builtin_language, Dfa};
use crate::error::{Error, Result};
use crate::monoid::{
    commutative_quotient, syntactic_ordered_monoid, MonoidMorphism, Syntactic, DEFAULT_ELEMENT_CAP,
};
use crate::word::EPSILON;

pub const MAX_S_MAX: usize = 3;
/// Idempotent bases of `u^ω` in the `L5` monoid.
pub const L5_BASES: [&str; 2] = ["abab", "baba"];
const EXHAUSTIVE_S_MAX: usize = 1;
const SYMBOLS: [char; 3] = [EPSILON, 'a', 'b'];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchMode {
    /// Letter balance fixes `v`'s letter counts; a column-by-column search
    /// then decides whether some matrix realizes `(U, v)`.
    #[serde(rename = "PRUNED")]
    Pruned,
    /// Every matrix over `{ε, a, b}` of width `4·s_max` is checked.
    #[serde(rename = "EXHAUSTIVE")]
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchStatus {
    #[serde(rename = "NONE_FOUND")]
    NoneFound,
    #[serde(rename = "FOUND")]
    Found,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonexistenceReport {
    pub status: SearchStatus,
    pub s_max: usize,
    /// Columns per player per input bit.
    pub width: usize,
    pub mode: SearchMode,
    /// Whether constraint (ii) was dropped.
    pub relaxed: bool,
    pub u_candidates: Vec<String>,
    /// Distinct `v` satisfying the active constraints that were examined.
    pub v_candidates: usize,
    /// Transition maps on `L5` (states `1..5`) of those `v`.
    pub v_classes: Vec<String>,
    /// Realizable `(U, v)` pairs.
    pub solutions: Vec<[String; 2]>,
    /// The first realizing matrix, rows written as slash-separated symbols.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example: Option<[String; 2]>,
    /// Search nodes (pruned) or matrices (exhaustive) visited.
    pub visited: u64,
}

impl NonexistenceReport {
    pub fn serialize(&self) -> String {
        toml::to_string(self).expect("report serializes")
    }
}

struct Constraints {
    l5: Dfa,
    syn: Syntactic,
    quotient: MonoidMorphism,
    relaxed: bool,
}

impl Constraints {
    fn new(relaxed: bool) -> Result<Self> {
        let l5 = builtin_language("L5")?;
        let syn = syntactic_ordered_monoid(&l5, DEFAULT_ELEMENT_CAP)?;
        let (_, quotient) = commutative_quotient(syn.monoid());
        Ok(Constraints {
            l5,
            syn,
            quotient,
            relaxed,
        })
    }

    fn admits(&self, u: &str, v: &str) -> Result<bool> {
        let m = self.syn.monoid();
        let (eu, ev) = (m.eval_str(u)?, m.eval_str(v)?);
        if self.quotient.apply(eu) != self.quotient.apply(ev) {
            return Ok(false);
        }
        Ok(self.relaxed || !self.syn.ordered.leq(m.product([eu, ev, eu]), eu))
    }

    fn class(&self, v: &str) -> Result<String> {
        let map = self.l5.word_map(v)?;
        Ok(map
            .iter()
            .enumerate()
            .map(|(s, t)| format!("{}→{}", s + 1, t + 1))
            .collect::<Vec<_>>()
            .join(" "))
    }
}

fn u_candidates(s_max: usize) -> Vec<String> {
    (1..=s_max)
        .flat_map(|k| L5_BASES.iter().map(move |b| b.repeat(k)))
        .collect()
}

fn show_row(row: &[char]) -> String {
    row.iter()
        .map(char::to_string)
        .collect::<Vec<_>>()
        .join("/")
}

/// Words over `{a, b}` with the given letter counts, in lexicographic order.
fn balanced_words(a: usize, b: usize) -> Vec<String> {
    if a + b == 0 {
        return vec![String::new()];
    }
    let mut out = Vec::new();
    if a > 0 {
        out.extend(
            balanced_words(a - 1, b)
                .into_iter()
                .map(|w| format!("a{w}")),
        );
    }
    if b > 0 {
        out.extend(
            balanced_words(a, b - 1)
                .into_iter()
                .map(|w| format!("b{w}")),
        );
    }
    out
}

/// Searches matrices of `columns` columns column by column over progress
/// in the four block words; returns a realizing matrix and the node count.
fn realize(u: &[char], v: &[char], columns: usize) -> (Option<[Vec<char>; 2]>, u64) {
    type State = [u8; 4];
    let goal: State = [u.len() as u8, u.len() as u8, u.len() as u8, v.len() as u8];
    let advance = |pos: u8, target: &[char], c: char| -> Option<u8> {
        if c == EPSILON {
            Some(pos)
        } else if target.get(pos as usize) == Some(&c) {
            Some(pos + 1)
        } else {
            None
        }
    };
    // layers[j][state] = (previous state, column symbols)
    let mut layers: Vec<HashMap<State, (State, char, char)>> = Vec::new();
    let mut frontier = vec![[0u8; 4]];
    let mut visited = 1u64;
    let mut end = None;
    if frontier[0] == goal {
        end = Some((0, goal));
    }
    for j in 0..columns {
        if end.is_some() {
            break;
        }
        let mut layer: HashMap<State, (State, char, char)> = HashMap::new();
        for &st in &frontier {
            for c0 in SYMBOLS {
                for c1 in SYMBOLS {
                    // even columns are Alice's: block 01 reads row 0, block 10 reads row 1
                    let (x01, x10) = if j % 2 == 0 { (c0, c1) } else { (c1, c0) };
                    let next = (|| {
                        Some([
                            advance(st[0], u, c0)?,
                            advance(st[1], u, x01)?,
                            advance(st[2], u, x10)?,
                            advance(st[3], v, c1)?,
                        ])
                    })();
                    if let Some(n) = next {
                        layer.entry(n).or_insert((st, c0, c1));
                    }
                }
            }
        }
        visited += layer.len() as u64;
        if layer.contains_key(&goal) {
            end = Some((j + 1, goal));
        }
        let mut states: Vec<State> = layer.keys().copied().collect();
        states.sort_unstable();
        frontier = states;
        layers.push(layer);
    }
    let Some((len, mut st)) = end else {
        return (None, visited);
    };
    let mut rows = [vec![EPSILON; columns], vec![EPSILON; columns]];
    for j in (0..len).rev() {
        let (prev, c0, c1) = layers[j][&st];
        rows[0][j] = c0;
        rows[1][j] = c1;
        st = prev;
    }
    (Some(rows), visited)
}

/// Looks for matrices of width `4·s_max` realizing the block shape under the
/// constraints; `relaxed` drops (ii).
pub fn search_local_reduction_nonexistence(
    s_max: usize,
    mode: SearchMode,
    relaxed: bool,
) -> Result<NonexistenceReport> {
    if s_max == 0 || s_max > MAX_S_MAX {
        return Err(Error::SizeCap {
            what: "non-existence search s_max",
            needed: s_max,
            cap: MAX_S_MAX,
        });
    }
    if mode == SearchMode::Exhaustive && s_max > EXHAUSTIVE_S_MAX {
        return Err(Error::SizeCap {
            what: "exhaustive non-existence search s_max",
            needed: s_max,
            cap: EXHAUSTIVE_S_MAX,
        });
    }
    let constraints = Constraints::new(relaxed)?;
    let width = 4 * s_max;
    let columns = 2 * width;
    let us = u_candidates(s_max);
    let mut report = NonexistenceReport {
        status: SearchStatus::NoneFound,
        s_max,
        width,
        mode,
        relaxed,
        u_candidates: us.clone(),
        v_candidates: 0,
        v_classes: Vec::new(),
        solutions: Vec::new(),
        example: None,
        visited: 0,
    };
    let mut classes = BTreeSet::new();
    let mut solutions = BTreeSet::new();
    match mode {
        SearchMode::Pruned => {
            for u in &us {
                let uc: Vec<char> = u.chars().collect();
                let count = |c: char| uc.iter().filter(|&&x| x == c).count();
                // rows and the two crossed readings contain the same letters,
                // so |v|_a + |U|_a = 2|U|_a and likewise for b
                for v in balanced_words(count('a'), count('b')) {
                    if !constraints.admits(u, &v)? {
                        continue;
                    }
                    report.v_candidates += 1;
                    classes.insert(constraints.class(&v)?);
                    let vc: Vec<char> = v.chars().collect();
                    let (found, visited) = realize(&uc, &vc, columns);
                    report.visited += visited;
                    if let Some(rows) = found {
                        if report.example.is_none() {
                            report.example = Some([show_row(&rows[0]), show_row(&rows[1])]);
                        }
                        solutions.insert([u.clone(), v]);
                    }
                }
            }
        }
        SearchMode::Exhaustive => {
            let rows: Vec<Vec<char>> = (0..3usize.pow(columns as u32))
                .map(|mut code| {
                    (0..columns)
                        .map(|_| {
                            let c = SYMBOLS[code % 3];
                            code /= 3;
                            c
                        })
                        .collect()
                })
                .collect();
            let letters = |w: &mut dyn Iterator<Item = char>| -> String {
                w.filter(|&c| c != EPSILON).collect()
            };
            let mut admitted: HashMap<(String, String), bool> = HashMap::new();
            for r0 in &rows {
                let w00 = letters(&mut r0.iter().copied());
                if !us.contains(&w00) {
                    report.visited += rows.len() as u64;
                    continue;
                }
                for r1 in &rows {
                    report.visited += 1;
                    let pick = |first: &[char], second: &[char]| {
                        letters(&mut (0..columns).map(|j| {
                            if j % 2 == 0 {
                                first[j]
                            } else {
                                second[j]
                            }
                        }))
                    };
                    if pick(r0, r1) != w00 || pick(r1, r0) != w00 {
                        continue;
                    }
                    let v = letters(&mut r1.iter().copied());
                    let key = (w00.clone(), v.clone());
                    let ok = match admitted.get(&key) {
                        Some(&ok) => ok,
                        None => {
                            let ok = constraints.admits(&w00, &v)?;
                            if ok {
                                report.v_candidates += 1;
                                classes.insert(constraints.class(&v)?);
                            }
                            admitted.insert(key, ok);
                            ok
                        }
                    };
                    if ok {
                        if report.example.is_none() {
                            report.example = Some([show_row(r0), show_row(r1)]);
                        }
                        solutions.insert([w00.clone(), v]);
                    }
                }
            }
        }
    }
    report.v_classes = classes.into_iter().collect();
    report.solutions = solutions.into_iter().collect();
    if !report.solutions.is_empty() {
        report.status = SearchStatus::Found;
    }
    Ok(report)
}
