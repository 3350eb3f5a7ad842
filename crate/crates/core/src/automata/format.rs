//! The DFA document format (a small TOML dialect).
//!
//! ```toml
//! alphabet = ["a", "b"]
//! states = 3
//! initial = 0
//! accepting = [0]
//!
//! [transitions]
//! "a" = [1, 2, 2]
//! "b" = [2, 0, 2]
//! ```

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Deserialize;

use super::Dfa;
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDfa {
    alphabet: Vec<String>,
    states: i64,
    initial: i64,
    accepting: Vec<i64>,
    transitions: BTreeMap<String, Vec<i64>>,
}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::InvalidDfa {
        field: field.into(),
        message: message.into(),
    }
}

fn index(field: &str, v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| invalid(field, format!("negative index {v}")))
}

pub(super) fn parse(text: &str) -> Result<Dfa> {
    let raw: RawDfa = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut alphabet = Vec::with_capacity(raw.alphabet.len());
    for (i, s) in raw.alphabet.iter().enumerate() {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => alphabet.push(c),
            _ => {
                return Err(invalid(
                    format!("alphabet[{i}]"),
                    format!("{s:?} is not a single character"),
                ))
            }
        }
    }
    let states = index("states", raw.states)?;
    let initial = index("initial", raw.initial)?;
    let accepting = raw
        .accepting
        .iter()
        .enumerate()
        .map(|(i, &q)| index(&format!("accepting[{i}]"), q))
        .collect::<Result<Vec<_>>>()?;
    for key in raw.transitions.keys() {
        if !raw.alphabet.contains(key) {
            return Err(invalid(
                format!("transitions.{key}"),
                "letter is not in the alphabet",
            ));
        }
    }
    let mut transitions = Vec::with_capacity(alphabet.len());
    for (s, c) in raw.alphabet.iter().zip(&alphabet) {
        let field = format!("transitions.{c}");
        let row = raw
            .transitions
            .get(s)
            .ok_or_else(|| invalid(&field, "non-total transition: letter has no row"))?;
        transitions.push(
            row.iter()
                .enumerate()
                .map(|(q, &t)| index(&format!("{field}[{q}]"), t))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Dfa::new(alphabet, states, initial, &accepting, transitions)
}

fn join(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().collect::<Vec<_>>().join(", ")
}

pub(super) fn serialize(d: &Dfa) -> String {
    let mut out = String::new();
    let letters = join(d.alphabet.iter().map(|c| format!("{:?}", c.to_string())));
    writeln!(out, "alphabet = [{letters}]").unwrap();
    writeln!(out, "states = {}", d.state_count()).unwrap();
    writeln!(out, "initial = {}", d.initial).unwrap();
    writeln!(
        out,
        "accepting = [{}]",
        join(d.accepting_states().iter().map(usize::to_string))
    )
    .unwrap();
    out.push_str("\n[transitions]\n");
    for (c, row) in d.alphabet.iter().zip(&d.transitions) {
        writeln!(
            out,
            "{:?} = [{}]",
            c.to_string(),
            join(row.iter().map(usize::to_string))
        )
        .unwrap();
    }
    out
}
