//! Row/column deduplication and maximal monochromatic rectangles.
//!
//! Identical rows (or columns) can always be given identical treatment by a
//! cover, a partition, a protocol or a fooling set, so every oracle works on
//! the deduplicated matrix and expands its answer afterwards.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;

use super::{CommFunction, Rectangle, Value};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Reduced {
    /// Original rows represented by each reduced row.
    pub row_groups: Vec<Vec<usize>>,
    pub col_groups: Vec<Vec<usize>>,
    values: Vec<Value>,
}

fn group<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<Vec<usize>> {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.enumerate() {
        let g = *index.entry(k).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(i);
    }
    groups
}

impl Reduced {
    pub fn new(f: &CommFunction) -> Self {
        let row_groups = group((0..f.row_count()).map(|r| {
            (0..f.col_count())
                .map(|c| f.value(r, c))
                .collect::<Vec<_>>()
        }));
        let col_groups = group((0..f.col_count()).map(|c| {
            (0..f.row_count())
                .map(|r| f.value(r, c))
                .collect::<Vec<_>>()
        }));
        let values = row_groups
            .iter()
            .flat_map(|rg| col_groups.iter().map(move |cg| f.value(rg[0], cg[0])))
            .collect();
        Reduced {
            row_groups,
            col_groups,
            values,
        }
    }

    pub fn rows(&self) -> usize {
        self.row_groups.len()
    }

    pub fn cols(&self) -> usize {
        self.col_groups.len()
    }

    #[inline]
    pub fn value(&self, r: usize, c: usize) -> Value {
        self.values[r * self.col_groups.len() + c]
    }

    /// Whether a `z`-rectangle may contain cell `(r, c)`.
    #[inline]
    pub fn allowed(&self, r: usize, c: usize, z: bool) -> bool {
        self.value(r, c) != Some(!z)
    }

    /// Same grouping with every cell value replaced.
    pub(crate) fn fill(&self, value: impl Fn(usize, usize) -> Value) -> Reduced {
        let values = (0..self.rows())
            .flat_map(|r| (0..self.cols()).map(move |c| (r, c)))
            .map(|(r, c)| value(r, c))
            .collect();
        Reduced {
            row_groups: self.row_groups.clone(),
            col_groups: self.col_groups.clone(),
            values,
        }
    }

    /// Maps reduced row and column indices back to an original rectangle.
    pub fn expand(
        &self,
        rows: impl IntoIterator<Item = usize>,
        cols: impl IntoIterator<Item = usize>,
    ) -> Rectangle {
        Rectangle::new(
            rows.into_iter()
                .flat_map(|r| self.row_groups[r].iter().copied())
                .collect(),
            cols.into_iter()
                .flat_map(|c| self.col_groups[c].iter().copied())
                .collect(),
        )
    }

    /// All inclusion-maximal `z`-rectangles containing at least one `z`-cell,
    /// as (rows, cols) bitsets in a canonical order.
    pub fn maximal_rectangles(
        &self,
        z: bool,
        cap: usize,
    ) -> Result<Vec<(FixedBitSet, FixedBitSet)>> {
        let (nr, nc) = (self.rows(), self.cols());
        let allowed_cols: Vec<FixedBitSet> = (0..nr)
            .map(|r| {
                let mut s = FixedBitSet::with_capacity(nc);
                for c in 0..nc {
                    s.set(c, self.allowed(r, c, z));
                }
                s
            })
            .collect();
        // closed column sets are exactly the intersections of row neighbourhoods
        let mut closed: HashSet<FixedBitSet> = HashSet::new();
        for a in &allowed_cols {
            let mut fresh = vec![a.clone()];
            for t in &closed {
                let mut i = t.clone();
                i.intersect_with(a);
                fresh.push(i);
            }
            closed.extend(fresh);
            if closed.len() > cap {
                return Err(Error::SizeCap {
                    what: "maximal rectangles",
                    needed: closed.len(),
                    cap,
                });
            }
        }
        let mut out = Vec::new();
        for cols in closed {
            if cols.is_clear() {
                continue;
            }
            let mut rows = FixedBitSet::with_capacity(nr);
            for (r, a) in allowed_cols.iter().enumerate() {
                if cols.is_subset(a) {
                    rows.insert(r);
                }
            }
            let has_z = rows
                .ones()
                .any(|r| cols.ones().any(|c| self.value(r, c) == Some(z)));
            if has_z {
                out.push((rows, cols));
            }
        }
        out.sort_by(|a, b| {
            let key = |x: &(FixedBitSet, FixedBitSet)| {
                (
                    x.0.ones().collect::<Vec<_>>(),
                    x.1.ones().collect::<Vec<_>>(),
                )
            };
            key(a).cmp(&key(b))
        });
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commcc::builtin_function;

    #[test]
    fn duplicates_collapse() {
        let f = builtin_function("EQ", 2, None).unwrap();
        let r = Reduced::new(&f);
        assert_eq!((r.rows(), r.cols()), (4, 4));
        let labels = |k: usize| (0..k).map(|i| i.to_string()).collect::<Vec<_>>();
        let v = |b: u8| Some(b == 1);
        let g = CommFunction::new(
            "g",
            1,
            None,
            labels(3),
            labels(2),
            vec![v(1), v(0), v(1), v(0), v(0), v(1)],
        )
        .unwrap();
        let r = Reduced::new(&g);
        assert_eq!(r.row_groups, vec![vec![0, 1], vec![2]]);
        assert_eq!(r.col_groups, vec![vec![0], vec![1]]);
        assert_eq!(r.expand([0], [1]), Rectangle::new(vec![0, 1], vec![1]));
    }

    /// Brute force: every rectangle that is z-monochromatic, contains a
    /// z-cell, and cannot be extended by a row or a column.
    fn brute_maximal(red: &Reduced, z: bool) -> Vec<(Vec<usize>, Vec<usize>)> {
        let (nr, nc) = (red.rows(), red.cols());
        let ok = |rs: u32, cs: u32| {
            (0..nr).filter(|r| rs >> r & 1 == 1).all(|r| {
                (0..nc)
                    .filter(|c| cs >> c & 1 == 1)
                    .all(|c| red.allowed(r, c, z))
            })
        };
        let mut out = Vec::new();
        for rs in 1u32..1 << nr {
            for cs in 1u32..1 << nc {
                if !ok(rs, cs) {
                    continue;
                }
                let extendable = (0..nr).any(|r| rs >> r & 1 == 0 && ok(rs | 1 << r, cs))
                    || (0..nc).any(|c| cs >> c & 1 == 0 && ok(rs, cs | 1 << c));
                let has_z = (0..nr).any(|r| {
                    rs >> r & 1 == 1
                        && (0..nc).any(|c| cs >> c & 1 == 1 && red.value(r, c) == Some(z))
                });
                if !extendable && has_z {
                    let bits = |m: u32, k: usize| (0..k).filter(|i| m >> i & 1 == 1).collect();
                    out.push((bits(rs, nr), bits(cs, nc)));
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn maximal_rectangles_match_brute_force() {
        for (name, n) in [
            ("EQ", 2),
            ("LT", 2),
            ("DISJ", 2),
            ("PDISJ", 2),
            ("PIP2", 2),
            ("IP", 2),
        ] {
            let red = Reduced::new(&builtin_function(name, n, None).unwrap());
            for z in [false, true] {
                let got: Vec<(Vec<usize>, Vec<usize>)> = red
                    .maximal_rectangles(z, 1 << 20)
                    .unwrap()
                    .into_iter()
                    .map(|(r, c)| (r.ones().collect(), c.ones().collect()))
                    .collect();
                assert_eq!(got, brute_maximal(&red, z), "{name} z={z}");
            }
        }
    }
}
