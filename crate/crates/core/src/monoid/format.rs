//! The monoid document format.
//!
//! ```toml
//! size = 2
//! identity = 0
//! names = ["", "t"]
//! generators = { t = 1 }
//! table = [
//!   [0, 1],
//!   [1, 0],
//! ]
//! order = [
//!   [1, 0],
//!   [0, 1],
//! ]
//! ```

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Deserialize;

use super::{FiniteMonoid, OrderedMonoid, StableOrder};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMonoid {
    size: usize,
    identity: usize,
    table: Vec<Vec<usize>>,
    #[serde(default)]
    names: Option<Vec<String>>,
    #[serde(default)]
    generators: BTreeMap<String, usize>,
    #[serde(default)]
    order: Option<Vec<Vec<u8>>>,
}

pub(super) fn parse(text: &str) -> Result<OrderedMonoid> {
    let raw: RawMonoid = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if raw.table.len() != raw.size {
        return Err(Error::Parse(format!(
            "size is {} but the table has {} rows",
            raw.size,
            raw.table.len()
        )));
    }
    let mut generators = Vec::new();
    for (key, &g) in &raw.generators {
        let mut chars = key.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => generators.push((c, g)),
            _ => {
                return Err(Error::Parse(format!(
                    "generator {key:?} is not a single letter"
                )))
            }
        }
    }
    let mut monoid = FiniteMonoid::from_table(raw.table, raw.identity, generators)?;
    if let Some(names) = raw.names {
        if names.len() != raw.size {
            return Err(Error::Parse("names must list one word per element".into()));
        }
        if monoid.generators().is_empty() {
            monoid.names = names;
        } else if names != monoid.names {
            return Err(Error::Parse(
                "names are not the shortlex-least generator words".into(),
            ));
        }
    }
    let order = match raw.order {
        None => StableOrder::equality(raw.size),
        Some(rows) => {
            let rows = rows
                .into_iter()
                .map(|r| r.into_iter().map(|b| b != 0).collect())
                .collect();
            StableOrder::from_relation(&monoid, rows)?
        }
    };
    OrderedMonoid::new(monoid, order)
}

fn grid<T>(out: &mut String, key: &str, rows: impl Iterator<Item = Vec<T>>)
where
    T: ToString,
{
    writeln!(out, "{key} = [").unwrap();
    for row in rows {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        writeln!(out, "  [{}],", cells.join(", ")).unwrap();
    }
    out.push_str("]\n");
}

pub(super) fn serialize(m: &FiniteMonoid, order: Option<&StableOrder>) -> String {
    let mut out = String::new();
    writeln!(out, "size = {}", m.size()).unwrap();
    writeln!(out, "identity = {}", m.identity()).unwrap();
    let names: Vec<String> = m.names().iter().map(|n| format!("{n:?}")).collect();
    writeln!(out, "names = [{}]", names.join(", ")).unwrap();
    let mut gens = m.generators().to_vec();
    gens.sort_unstable();
    let gens: Vec<String> = gens
        .iter()
        .map(|(c, g)| format!("{:?} = {g}", c.to_string()))
        .collect();
    writeln!(out, "generators = {{ {} }}", gens.join(", ")).unwrap();
    grid(
        &mut out,
        "table",
        m.elements()
            .map(|x| m.elements().map(|y| m.mul(x, y)).collect()),
    );
    if let Some(order) = order {
        grid(
            &mut out,
            "order",
            order
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(u8::from).collect()),
        );
    }
    out
}
