//! Words over a finite alphabet, optionally padded with the empty letter.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The reserved padding letter. It never belongs to an alphabet and is skipped on evaluation.
pub const EPSILON: char = 'ε';

/// A sequence over `Σ ∪ {ε}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PaddedWord(Vec<char>);

impl PaddedWord {
    pub fn new(symbols: Vec<char>) -> Self {
        PaddedWord(symbols)
    }

    pub fn empty() -> Self {
        PaddedWord(Vec::new())
    }

    /// `len` copies of ε.
    pub fn padding(len: usize) -> Self {
        PaddedWord(vec![EPSILON; len])
    }

    /// Every symbol, ε included.
    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    /// The letters that survive evaluation.
    pub fn letters(&self) -> impl Iterator<Item = char> + '_ {
        self.0.iter().copied().filter(|&c| c != EPSILON)
    }

    /// The underlying word with all padding removed.
    pub fn unpadded(&self) -> String {
        self.letters().collect()
    }

    /// Number of symbols, padding included.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, c: char) {
        self.0.push(c);
    }

    pub fn extend_from(&mut self, other: &PaddedWord) {
        self.0.extend_from_slice(&other.0);
    }

    /// Right-pads with ε up to `len` symbols.
    pub fn padded_to(&self, len: usize) -> PaddedWord {
        let mut out = self.0.clone();
        while out.len() < len {
            out.push(EPSILON);
        }
        PaddedWord(out)
    }

    /// Interleaves two equal-length padded words letter by letter: `a₁b₁a₂b₂…`.
    pub fn interleave(alice: &PaddedWord, bob: &PaddedWord) -> Result<PaddedWord> {
        if alice.len() != bob.len() {
            return Err(Error::Precondition(format!(
                "interleaved words must have equal length ({} vs {})",
                alice.len(),
                bob.len()
            )));
        }
        let mut out = Vec::with_capacity(alice.len() * 2);
        for (&a, &b) in alice.0.iter().zip(&bob.0) {
            out.push(a);
            out.push(b);
        }
        Ok(PaddedWord(out))
    }
}

impl fmt::Display for PaddedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "{EPSILON}");
        }
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for PaddedWord {
    type Err = Error;

    /// `"ε"` and `""` both denote the empty word.
    fn from_str(s: &str) -> Result<Self> {
        if s.chars().any(char::is_whitespace) {
            return Err(Error::Parse(format!("word {s:?} contains whitespace")));
        }
        Ok(PaddedWord(s.chars().collect()))
    }
}

impl From<&str> for PaddedWord {
    fn from(s: &str) -> Self {
        PaddedWord(s.chars().collect())
    }
}

/// Renders an unpadded word, using ε for the empty word.
pub fn show_word(w: &str) -> String {
    if w.is_empty() {
        EPSILON.to_string()
    } else {
        w.to_string()
    }
}

/// All words over `alphabet` of length exactly `len`, in lexicographic order
/// with respect to the alphabet order.
pub fn words_of_length(alphabet: &[char], len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                alphabet.iter().map(move |&c| {
                    let mut w = prefix.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// All words of length `0..=max_len` in shortlex order.
pub fn shortlex_up_to(alphabet: &[char], max_len: usize) -> Vec<String> {
    (0..=max_len)
        .flat_map(|len| words_of_length(alphabet, len))
        .collect()
}
