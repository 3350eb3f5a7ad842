//! Complete deterministic finite automata: validation, simulation,
//! minimization and the built-in example languages.

mod builtin;
mod format;
mod minimize;

pub use builtin::{builtin_language, BUILTIN_LANGUAGES};

use crate::error::{Error, Result};
use crate::word::{PaddedWord, EPSILON};

/// A complete DFA. States are `0..state_count`; `transitions[letter][state]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Vec<char>,
    initial: usize,
    accepting: Vec<bool>,
    transitions: Vec<Vec<usize>>,
}

impl Dfa {
    /// Builds and validates a DFA. `transitions[i]` lists the successor of every
    /// state under `alphabet[i]`.
    pub fn new(
        alphabet: Vec<char>,
        state_count: usize,
        initial: usize,
        accepting: &[usize],
        transitions: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let invalid = |field: &str, message: String| Error::InvalidDfa {
            field: field.to_string(),
            message,
        };
        if state_count == 0 {
            return Err(invalid("states", "at least one state is required".into()));
        }
        for (i, &c) in alphabet.iter().enumerate() {
            if c == EPSILON {
                return Err(invalid(
                    "alphabet",
                    format!("the padding letter {EPSILON} is reserved"),
                ));
            }
            if c.is_whitespace() || c == ',' {
                return Err(invalid("alphabet", format!("letter {c:?} is not allowed")));
            }
            if alphabet[..i].contains(&c) {
                return Err(invalid("alphabet", format!("duplicate letter {c:?}")));
            }
        }
        if initial >= state_count {
            return Err(invalid(
                "initial",
                format!("state {initial} out of range 0..{state_count}"),
            ));
        }
        let mut acc = vec![false; state_count];
        for &q in accepting {
            if q >= state_count {
                return Err(invalid(
                    "accepting",
                    format!("state {q} out of range 0..{state_count}"),
                ));
            }
            acc[q] = true;
        }
        if transitions.len() != alphabet.len() {
            return Err(invalid(
                "transitions",
                format!("{} rows for {} letters", transitions.len(), alphabet.len()),
            ));
        }
        for (row, &c) in transitions.iter().zip(&alphabet) {
            let field = format!("transitions.{c}");
            if row.len() != state_count {
                return Err(invalid(
                    &field,
                    format!(
                        "non-total transition: {} entries for {} states (missing state {})",
                        row.len(),
                        state_count,
                        row.len().min(state_count)
                    ),
                ));
            }
            if let Some((q, &t)) = row.iter().enumerate().find(|(_, &t)| t >= state_count) {
                return Err(invalid(
                    &field,
                    format!("state {q} maps to {t}, out of range 0..{state_count}"),
                ));
            }
        }
        Ok(Dfa {
            alphabet,
            initial,
            accepting: acc,
            transitions,
        })
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.accepting.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.state_count())
            .filter(|&q| self.accepting[q])
            .collect()
    }

    pub fn letter_index(&self, c: char) -> Result<usize> {
        self.alphabet
            .iter()
            .position(|&a| a == c)
            .ok_or(Error::UnknownLetter(c))
    }

    /// Successor of `state` under the letter with index `letter`.
    pub fn step(&self, state: usize, letter: usize) -> usize {
        self.transitions[letter][state]
    }

    /// Row of successors for one letter.
    pub fn letter_map(&self, letter: usize) -> &[usize] {
        &self.transitions[letter]
    }

    /// Runs `symbols` from `state`, skipping ε.
    pub fn run_from(&self, state: usize, symbols: impl IntoIterator<Item = char>) -> Result<usize> {
        let mut q = state;
        for c in symbols {
            if c == EPSILON {
                continue;
            }
            q = self.step(q, self.letter_index(c)?);
        }
        Ok(q)
    }

    pub fn accepts(&self, word: &PaddedWord) -> Result<bool> {
        let q = self.run_from(self.initial, word.symbols().iter().copied())?;
        Ok(self.accepting[q])
    }

    /// Convenience form of [`Dfa::accepts`] for plain strings.
    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        let q = self.run_from(self.initial, word.chars())?;
        Ok(self.accepting[q])
    }

    /// The state map induced by `word`: entry `q` is the state reached from `q`.
    pub fn word_map(&self, word: &str) -> Result<Vec<usize>> {
        (0..self.state_count())
            .map(|q| self.run_from(q, word.chars()))
            .collect()
    }

    /// Same transitions, complemented accepting set.
    pub fn complement(&self) -> Dfa {
        Dfa {
            accepting: self.accepting.iter().map(|a| !a).collect(),
            ..self.clone()
        }
    }

    /// Product automaton accepting the intersection (when `union` is false) or
    /// the union of the two languages. Both operands must share an alphabet.
    pub fn product(&self, other: &Dfa, union: bool) -> Result<Dfa> {
        if self.alphabet != other.alphabet {
            return Err(Error::Precondition(
                "product automata need identical alphabets".into(),
            ));
        }
        let n2 = other.state_count();
        let states = self.state_count() * n2;
        let pair = |p: usize, q: usize| p * n2 + q;
        let transitions = (0..self.alphabet.len())
            .map(|a| {
                (0..states)
                    .map(|s| pair(self.step(s / n2, a), other.step(s % n2, a)))
                    .collect()
            })
            .collect();
        let accepting: Vec<usize> = (0..states)
            .filter(|&s| {
                let (x, y) = (self.accepting[s / n2], other.accepting[s % n2]);
                if union {
                    x || y
                } else {
                    x && y
                }
            })
            .collect();
        Dfa::new(
            self.alphabet.clone(),
            states,
            pair(self.initial, other.initial),
            &accepting,
            transitions,
        )
    }

    /// Language-equivalent DFA with the fewest states, numbered in BFS order
    /// from the initial state over the alphabet order.
    pub fn minimize(&self) -> Dfa {
        minimize::moore(self)
    }

    /// Renumbers the reachable part in BFS order. Unreachable states are dropped.
    pub fn canonical(&self) -> Dfa {
        minimize::bfs_renumber(self, &(0..self.state_count()).collect::<Vec<_>>())
    }

    /// True when the two automata are identical after canonical renumbering.
    pub fn isomorphic(&self, other: &Dfa) -> bool {
        self.canonical() == other.canonical()
    }

    /// Parses the DFA document format.
    pub fn parse(text: &str) -> Result<Dfa> {
        format::parse(text)
    }

    /// Canonical serialization; `Dfa::parse(&d.serialize()) == Ok(d)`.
    pub fn serialize(&self) -> String {
        format::serialize(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l5() -> Dfa {
        builtin_language("L5").unwrap()
    }

    #[test]
    fn full_language_single_state() {
        let d = Dfa::new(vec!['a'], 1, 0, &[0], vec![vec![0]]).unwrap();
        for w in ["", "a", "aaaa"] {
            assert!(d.accepts_str(w).unwrap());
        }
    }

    #[test]
    fn epsilon_only_word_tests_initial_state() {
        let d = l5();
        let w: PaddedWord = "εεε".parse().unwrap();
        assert_eq!(d.accepts(&w).unwrap(), d.is_accepting(d.initial()));
    }

    #[test]
    fn unknown_letter_is_an_error() {
        assert_eq!(l5().accepts_str("abc"), Err(Error::UnknownLetter('c')));
    }

    #[test]
    fn reserved_epsilon_rejected() {
        let err = Dfa::new(vec!['a', EPSILON], 1, 0, &[], vec![vec![0], vec![0]]).unwrap_err();
        assert!(matches!(err, Error::InvalidDfa { ref field, .. } if field == "alphabet"));
    }

    #[test]
    fn out_of_range_targets_rejected() {
        let err = Dfa::new(vec!['a'], 2, 0, &[1], vec![vec![0, 2]]).unwrap_err();
        assert!(err.to_string().contains("transitions.a"), "{err}");
        assert!(Dfa::new(vec!['a'], 2, 2, &[], vec![vec![0, 1]]).is_err());
        assert!(Dfa::new(vec!['a'], 2, 0, &[5], vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn uaa_separates_abab_from_bbaa() {
        let d = l5();
        assert!(d.accepts_str("ababaa").unwrap());
        assert!(!d.accepts_str("bbaaaa").unwrap());
    }

    #[test]
    fn complement_flips_membership() {
        let d = builtin_language("U_MINUS_LANG").unwrap();
        let c = d.complement();
        for w in ["", "a", "aa", "abaab", "bab"] {
            assert_ne!(d.accepts_str(w).unwrap(), c.accepts_str(w).unwrap());
        }
    }
}
