//! Exact communication-complexity oracles for small explicit functions.
//!
//! Functions are materialized as matrices over {0, 1, undefined}. Undefined
//! cells are promise-excluded inputs and act as wildcards inside rectangles.

mod cover;
mod fooling;
mod measure;
mod problems;
mod protocol;
mod reduced;

pub use cover::{min_cover, min_disjoint_cover, Cover, MAX_RECTANGLES};
pub use fooling::max_fooling_set;
pub use measure::{max_rectangle_measure, RectangleMeasure};
pub use problems::{
    language_problem, language_problem_with_owners, monoid_problem, Player, PROBLEM_CELL_CAP,
};
pub use protocol::{exact_deterministic_cc, simulate_cover_protocol, ProtocolTree, Simulation};
pub use reduced::Reduced;

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};

/// A cell value: `Some(z)` for a defined output, `None` outside the promise.
pub type Value = Option<bool>;

/// Largest `n` for which built-in functions are materialized.
pub const MAX_BUILTIN_N: usize = 12;

/// Built-in function names; `IP_q` is spelled `IP` with a `q` parameter.
pub const BUILTIN_FUNCTIONS: [&str; 8] = [
    "EQ",
    "NEQ",
    "LT",
    "DISJ",
    "PDISJ",
    "IP",
    "PIP2",
    "PIP2_PAPER_LITERAL",
];

/// The two readings of the promise inner-product function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pip2Variant {
    /// Promise on 0-inputs only, exactly as first stated.
    PaperLiteral,
    /// Prefix requirements swapped and imposed on both output classes.
    OracleConsistent,
}

/// Rows and columns of a rectangle, as sorted index lists.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rectangle {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Rectangle {
    pub fn new(mut rows: Vec<usize>, mut cols: Vec<usize>) -> Self {
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        Rectangle { rows, cols }
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.rows.binary_search(&r).is_ok() && self.cols.binary_search(&c).is_ok()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .flat_map(move |&r| self.cols.iter().map(move |&c| (r, c)))
    }

    pub fn area(&self) -> usize {
        self.rows.len() * self.cols.len()
    }
}

/// Formats sorted indices as ranges, for example `0-3,5`.
pub fn format_ranges(indices: &[usize]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < indices.len() {
        let start = indices[i];
        let mut j = i;
        while j + 1 < indices.len() && indices[j + 1] == indices[j] + 1 {
            j += 1;
        }
        if !out.is_empty() {
            out.push(',');
        }
        if j == i {
            write!(out, "{start}").unwrap();
        } else {
            write!(out, "{start}-{}", indices[j]).unwrap();
        }
        i = j + 1;
    }
    out
}

/// A two-party function given by its full matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommFunction {
    pub name: String,
    pub n: usize,
    pub q: Option<usize>,
    rows: Vec<String>,
    cols: Vec<String>,
    values: Vec<Value>,
}

impl CommFunction {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        q: Option<usize>,
        rows: Vec<String>,
        cols: Vec<String>,
        values: Vec<Value>,
    ) -> Result<Self> {
        if rows.is_empty() || cols.is_empty() || values.len() != rows.len() * cols.len() {
            return Err(Error::Precondition(
                "matrix dimensions do not match the labels".into(),
            ));
        }
        for labels in [&rows, &cols] {
            let distinct: HashSet<&String> = labels.iter().collect();
            if distinct.len() != labels.len() {
                return Err(Error::Precondition("labels must be distinct".into()));
            }
        }
        if values.iter().all(Option::is_none) {
            return Err(Error::Precondition("no defined cell".into()));
        }
        Ok(CommFunction {
            name: name.into(),
            n,
            q,
            rows,
            cols,
            values,
        })
    }

    /// Builds a function on `n`-bit inputs; bit strings are indexed with `x_1`
    /// as the most significant bit.
    pub fn from_bits(
        name: impl Into<String>,
        n: usize,
        q: Option<usize>,
        f: impl Fn(&[bool], &[bool]) -> Value,
    ) -> Result<Self> {
        if n == 0 || n > MAX_BUILTIN_N {
            return Err(Error::SizeCap {
                what: "input length",
                needed: n,
                cap: MAX_BUILTIN_N,
            });
        }
        let size = 1usize << n;
        let bits = |i: usize| -> Vec<bool> { (0..n).map(|j| i >> (n - 1 - j) & 1 == 1).collect() };
        let labels: Vec<String> = (0..size)
            .map(|i| bits(i).iter().map(|&b| if b { '1' } else { '0' }).collect())
            .collect();
        let all_bits: Vec<Vec<bool>> = (0..size).map(bits).collect();
        let mut values = Vec::with_capacity(size * size);
        for x in &all_bits {
            for y in &all_bits {
                values.push(f(x, y));
            }
        }
        CommFunction::new(name, n, q, labels.clone(), labels, values)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[String] {
        &self.cols
    }

    #[inline]
    pub fn value(&self, r: usize, c: usize) -> Value {
        self.values[r * self.cols.len() + c]
    }

    pub fn row_index(&self, label: &str) -> Option<usize> {
        self.rows.iter().position(|l| l == label)
    }

    pub fn col_index(&self, label: &str) -> Option<usize> {
        self.cols.iter().position(|l| l == label)
    }

    /// Cells with value `z`, row-major.
    pub fn cells(&self, z: bool) -> impl Iterator<Item = (usize, usize)> + '_ {
        let w = self.cols.len();
        self.values
            .iter()
            .enumerate()
            .filter(move |(_, v)| **v == Some(z))
            .map(move |(i, _)| (i / w, i % w))
    }

    pub fn count(&self, z: bool) -> usize {
        self.values.iter().filter(|v| **v == Some(z)).count()
    }

    pub fn has_undefined(&self) -> bool {
        self.values.iter().any(Option::is_none)
    }

    /// A copy with the given cells moved outside the promise.
    pub fn with_undefined(&self, cells: &[(usize, usize)]) -> Result<Self> {
        let mut values = self.values.clone();
        for &(r, c) in cells {
            values[r * self.cols.len() + c] = None;
        }
        CommFunction::new(
            self.name.clone(),
            self.n,
            self.q,
            self.rows.clone(),
            self.cols.clone(),
            values,
        )
    }

    /// `Some(z)` if every defined cell of the rectangle equals `z`; an
    /// all-undefined rectangle reports `default`.
    pub fn monochromatic_color(&self, rect: &Rectangle, default: bool) -> Option<bool> {
        let mut seen = [false; 2];
        for (r, c) in rect.cells() {
            if let Some(z) = self.value(r, c) {
                seen[usize::from(z)] = true;
            }
        }
        match seen {
            [true, true] => None,
            [false, true] => Some(true),
            [true, false] => Some(false),
            [false, false] => Some(default),
        }
    }

    pub fn serialize(&self) -> String {
        let quote = |s: &String| format!("{s:?}");
        let mut out = String::new();
        writeln!(out, "name = {:?}", self.name).unwrap();
        writeln!(out, "n = {}", self.n).unwrap();
        if let Some(q) = self.q {
            writeln!(out, "q = {q}").unwrap();
        }
        let rows: Vec<String> = self.rows.iter().map(quote).collect();
        let cols: Vec<String> = self.cols.iter().map(quote).collect();
        writeln!(out, "rows = [{}]", rows.join(", ")).unwrap();
        writeln!(out, "cols = [{}]", cols.join(", ")).unwrap();
        out.push_str("matrix = [\n");
        for r in 0..self.rows.len() {
            let line: String = (0..self.cols.len())
                .map(|c| match self.value(r, c) {
                    Some(true) => '1',
                    Some(false) => '0',
                    None => '*',
                })
                .collect();
            writeln!(out, "  \"{line}\",").unwrap();
        }
        out.push_str("]\n");
        out
    }
}

fn count_and(x: &[bool], y: &[bool]) -> usize {
    x.iter().zip(y).filter(|(a, b)| **a && **b).count()
}

fn as_int(bits: &[bool]) -> usize {
    bits.iter().fold(0, |acc, &b| acc << 1 | usize::from(b))
}

fn pip2_value(variant: Pip2Variant, x: &[bool], y: &[bool]) -> Value {
    let value = count_and(x, y) % 2 == 0;
    if variant == Pip2Variant::PaperLiteral && value {
        return Some(true);
    }
    let mut common = 0;
    for (&a, &b) in x.iter().zip(y) {
        let prefix_ip = common % 2 == 0;
        let ok = match (variant, a, b) {
            (Pip2Variant::PaperLiteral, false, true) => !prefix_ip,
            (Pip2Variant::PaperLiteral, true, false) => prefix_ip,
            (Pip2Variant::OracleConsistent, false, true) => prefix_ip,
            (Pip2Variant::OracleConsistent, true, false) => !prefix_ip,
            _ => true,
        };
        if !ok {
            return None;
        }
        common += usize::from(a && b);
    }
    Some(value)
}

/// Promise inner product mod 2. `IP_2` of a prefix is 1 exactly when the
/// prefix has an even number of common ones.
pub fn pip2(n: usize, variant: Pip2Variant) -> Result<CommFunction> {
    BuiltinKind::Pip2(variant).matrix(n)
}

/// The built-in functions, evaluable pointwise on bit strings of any length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinKind {
    Eq,
    Neq,
    Lt,
    Disj,
    Pdisj,
    Ip(usize),
    Pip2(Pip2Variant),
}

impl BuiltinKind {
    /// Resolves a name; `q` is used by `IP` and defaults to 2.
    pub fn parse(name: &str, q: Option<usize>) -> Result<Self> {
        let upper = name.to_ascii_uppercase();
        Ok(match upper.as_str() {
            "EQ" => BuiltinKind::Eq,
            "NEQ" => BuiltinKind::Neq,
            "LT" => BuiltinKind::Lt,
            "DISJ" => BuiltinKind::Disj,
            "PDISJ" => BuiltinKind::Pdisj,
            "PIP2" | "PIP_2" => BuiltinKind::Pip2(Pip2Variant::OracleConsistent),
            "PIP2_PAPER_LITERAL" | "PIP_2_PAPER_LITERAL" => {
                BuiltinKind::Pip2(Pip2Variant::PaperLiteral)
            }
            _ => {
                let q = match upper.strip_prefix("IP") {
                    Some("") => q.unwrap_or(2),
                    Some(rest) => rest
                        .trim_start_matches('_')
                        .parse()
                        .map_err(|_| unknown_function(name))?,
                    None => return Err(unknown_function(name)),
                };
                if q < 2 {
                    return Err(Error::Precondition("IP_q needs q ≥ 2".into()));
                }
                BuiltinKind::Ip(q)
            }
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            BuiltinKind::Eq => "EQ",
            BuiltinKind::Neq => "NEQ",
            BuiltinKind::Lt => "LT",
            BuiltinKind::Disj => "DISJ",
            BuiltinKind::Pdisj => "PDISJ",
            BuiltinKind::Ip(_) => "IP",
            BuiltinKind::Pip2(Pip2Variant::OracleConsistent) => "PIP2",
            BuiltinKind::Pip2(Pip2Variant::PaperLiteral) => "PIP2_PAPER_LITERAL",
        }
    }

    pub fn q(self) -> Option<usize> {
        match self {
            BuiltinKind::Ip(q) => Some(q),
            BuiltinKind::Pip2(_) => Some(2),
            _ => None,
        }
    }

    /// Value on one input pair; `None` outside the promise.
    pub fn value(self, x: &[bool], y: &[bool]) -> Value {
        match self {
            BuiltinKind::Eq => Some(x == y),
            BuiltinKind::Neq => Some(x != y),
            BuiltinKind::Lt => Some(as_int(x) <= as_int(y)),
            BuiltinKind::Disj => Some(count_and(x, y) == 0),
            BuiltinKind::Pdisj => match count_and(x, y) {
                0 => Some(true),
                1 => Some(false),
                _ => None,
            },
            BuiltinKind::Ip(q) => Some(count_and(x, y) % q == 0),
            BuiltinKind::Pip2(variant) => pip2_value(variant, x, y),
        }
    }

    pub fn matrix(self, n: usize) -> Result<CommFunction> {
        CommFunction::from_bits(self.name(), n, self.q(), move |x, y| self.value(x, y))
    }
}

/// Looks up a built-in function; `q` is required for `IP` and defaults to 2.
pub fn builtin_function(name: &str, n: usize, q: Option<usize>) -> Result<CommFunction> {
    BuiltinKind::parse(name, q)?.matrix(n)
}

fn unknown_function(name: &str) -> Error {
    Error::UnknownBuiltin {
        kind: "function",
        name: name.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(f: &CommFunction) -> Vec<Vec<Value>> {
        (0..f.row_count())
            .map(|r| (0..f.col_count()).map(|c| f.value(r, c)).collect())
            .collect()
    }

    #[test]
    fn eq_and_disj_at_n1() {
        let eq = builtin_function("EQ", 1, None).unwrap();
        assert_eq!(
            matrix(&eq),
            vec![vec![Some(true), Some(false)], vec![Some(false), Some(true)]]
        );
        let disj = builtin_function("DISJ", 1, None).unwrap();
        assert_eq!(
            matrix(&disj),
            vec![vec![Some(true), Some(true)], vec![Some(true), Some(false)]]
        );
    }

    #[test]
    fn pdisj_n2_has_one_undefined_cell() {
        let f = builtin_function("PDISJ", 2, None).unwrap();
        let undefined: Vec<(usize, usize)> = (0..4)
            .flat_map(|r| (0..4).map(move |c| (r, c)))
            .filter(|&(r, c)| f.value(r, c).is_none())
            .collect();
        assert_eq!(undefined, vec![(3, 3)]);
        assert_eq!(f.row_labels()[3], "11");
    }

    #[test]
    fn bit_order_is_msb_first() {
        let lt = builtin_function("LT", 2, None).unwrap();
        // x = 10 (2) and y = 01 (1): 2 ≤ 1 is false
        assert_eq!(lt.value(2, 1), Some(false));
        assert_eq!(lt.value(1, 2), Some(true));
    }

    #[test]
    fn ip_parameter_spellings() {
        let a = builtin_function("IP", 2, Some(3)).unwrap();
        let b = builtin_function("IP_3", 2, None).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.q, Some(3));
        assert!(builtin_function("IP", 2, Some(1)).is_err());
        assert!(builtin_function("XOR", 2, None).is_err());
        assert!(builtin_function("EQ", 13, None).is_err());
        assert!(builtin_function("EQ", 0, None).is_err());
    }

    #[test]
    fn disj_one_mass_is_three_to_the_n() {
        for n in 1..=8 {
            let f = builtin_function("DISJ", n, None).unwrap();
            assert_eq!(f.count(true), 3usize.pow(n as u32));
        }
    }

    /// Independent restatement of both promise readings, straight from the
    /// prefix conditions.
    fn pip2_oracle(x: &[bool], y: &[bool], literal: bool) -> Value {
        let total = (0..x.len()).filter(|&i| x[i] && y[i]).count();
        let value = total % 2 == 0;
        if literal && value {
            return Some(true);
        }
        for i in 0..x.len() {
            let prefix_even = (0..i).filter(|&j| x[j] && y[j]).count() % 2 == 0;
            let violated = match (x[i], y[i], literal) {
                (false, true, true) => prefix_even,
                (true, false, true) => !prefix_even,
                (false, true, false) => !prefix_even,
                (true, false, false) => prefix_even,
                _ => false,
            };
            if violated {
                return None;
            }
        }
        Some(value)
    }

    #[test]
    fn pip2_variants_match_prefix_conditions() {
        for n in 1..=4 {
            for (variant, literal) in [
                (Pip2Variant::PaperLiteral, true),
                (Pip2Variant::OracleConsistent, false),
            ] {
                let f = pip2(n, variant).unwrap();
                for r in 0..f.row_count() {
                    for c in 0..f.col_count() {
                        let bits = |s: &str| s.chars().map(|ch| ch == '1').collect::<Vec<_>>();
                        let x = bits(&f.row_labels()[r]);
                        let y = bits(&f.col_labels()[c]);
                        assert_eq!(f.value(r, c), pip2_oracle(&x, &y, literal));
                    }
                }
            }
        }
    }

    #[test]
    fn monochromatic_color_conventions() {
        let eq = builtin_function("EQ", 1, None).unwrap();
        assert_eq!(
            eq.monochromatic_color(&Rectangle::new(vec![0], vec![0]), false),
            Some(true)
        );
        assert_eq!(
            eq.monochromatic_color(&Rectangle::new(vec![0, 1], vec![0, 1]), true),
            None
        );
        let p = builtin_function("PDISJ", 2, None).unwrap();
        let r = Rectangle::new(vec![3], vec![3]);
        assert_eq!(p.monochromatic_color(&r, false), Some(false));
        assert_eq!(p.monochromatic_color(&r, true), Some(true));
    }

    #[test]
    fn serialization_uses_star_for_undefined() {
        let text = builtin_function("PDISJ", 1, None).unwrap().serialize();
        assert!(text.contains("\"11\""));
        assert!(text.contains("\"10\""));
        let f = builtin_function("PDISJ", 2, None).unwrap().serialize();
        assert!(f.ends_with("  \"100*\",\n]\n"));
    }

    #[test]
    fn ranges() {
        assert_eq!(format_ranges(&[0, 1, 2, 3, 5, 7, 8]), "0-3,5,7-8");
        assert_eq!(format_ranges(&[]), "");
    }
}
