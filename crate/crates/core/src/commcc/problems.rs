//! Matrices of regular languages and ordered monoids.

use super::{CommFunction, Value};
use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::monoid::{Element, OrderIdeal, OrderedMonoid};
use crate::word::{show_word, PaddedWord, EPSILON};

/// Most rows (or columns) a language or monoid problem may have.
pub const PROBLEM_CELL_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Player {
    Alice,
    Bob,
}

fn tuples<T: Clone>(symbols: &[T], len: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                symbols.iter().map(move |s| {
                    let mut t = t.clone();
                    t.push(s.clone());
                    t
                })
            })
            .collect();
    }
    out
}

fn check_size(what: &'static str, base: usize, len: usize) -> Result<()> {
    let needed = (0..len).try_fold(1usize, |acc, _| acc.checked_mul(base));
    match needed {
        Some(k) if k <= PROBLEM_CELL_CAP => Ok(()),
        _ => Err(Error::SizeCap {
            what,
            needed: needed.unwrap_or(usize::MAX),
            cap: PROBLEM_CELL_CAP,
        }),
    }
}

fn alternating(n: usize) -> Vec<Player> {
    (0..2 * n)
        .map(|i| {
            if i % 2 == 0 {
                Player::Alice
            } else {
                Player::Bob
            }
        })
        .collect()
}

/// Membership in `L(d)` of words `a_1 b_1 … a_n b_n` over `Σ ∪ {ε}`, Alice
/// holding the `a_i` and Bob the `b_i`.
pub fn language_problem(d: &Dfa, n: usize) -> Result<CommFunction> {
    if n == 0 {
        return Err(Error::Precondition(
            "instance length must be positive".into(),
        ));
    }
    language_problem_with_owners(d, &alternating(n))
}

/// Like [`language_problem`] with an arbitrary assignment of positions to players.
pub fn language_problem_with_owners(d: &Dfa, owners: &[Player]) -> Result<CommFunction> {
    let mut symbols = vec![EPSILON];
    symbols.extend_from_slice(d.alphabet());
    let alice = owners.iter().filter(|&&p| p == Player::Alice).count();
    let bob = owners.len() - alice;
    if alice == 0 || bob == 0 {
        return Err(Error::Precondition("each player needs a position".into()));
    }
    check_size("language problem rows", symbols.len(), alice.max(bob))?;
    let rows = tuples(&symbols, alice);
    let cols = tuples(&symbols, bob);
    let label = |t: &Vec<char>| PaddedWord::new(t.clone()).to_string();
    let mut values = Vec::with_capacity(rows.len() * cols.len());
    let mut word = Vec::with_capacity(owners.len());
    for r in &rows {
        for c in &cols {
            word.clear();
            let (mut i, mut j) = (0, 0);
            for p in owners {
                match p {
                    Player::Alice => {
                        word.push(r[i]);
                        i += 1;
                    }
                    Player::Bob => {
                        word.push(c[j]);
                        j += 1;
                    }
                }
            }
            let end = d.run_from(d.initial(), word.iter().copied())?;
            values.push(Some(d.is_accepting(end)));
        }
    }
    CommFunction::new(
        "language",
        owners.len() / 2,
        None,
        rows.iter().map(label).collect(),
        cols.iter().map(label).collect(),
        values,
    )
}

/// Membership in `ideal` of `m_1 m_2 … m_{2n}`, Alice holding the odd slots.
pub fn monoid_problem(m: &OrderedMonoid, ideal: &OrderIdeal, n: usize) -> Result<CommFunction> {
    if n == 0 {
        return Err(Error::Precondition(
            "instance length must be positive".into(),
        ));
    }
    let mm = &m.monoid;
    check_size("monoid problem rows", mm.size(), n)?;
    let elements: Vec<Element> = mm.elements().collect();
    let side = tuples(&elements, n);
    let label = |t: &Vec<Element>| {
        t.iter()
            .map(|&x| show_word(mm.name(x)))
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut values: Vec<Value> = Vec::with_capacity(side.len() * side.len());
    for r in &side {
        for c in &side {
            let p = r
                .iter()
                .zip(c)
                .fold(mm.identity(), |acc, (&a, &b)| mm.mul(mm.mul(acc, a), b));
            values.push(Some(ideal.contains(p)));
        }
    }
    let labels: Vec<String> = side.iter().map(label).collect();
    CommFunction::new("monoid", n, None, labels.clone(), labels, values)
}
