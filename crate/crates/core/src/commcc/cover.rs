//! Minimum monochromatic covers and partitions.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::protocol::exact_tree_on;
use super::reduced::Reduced;
use super::{CommFunction, Rectangle};
use crate::error::{Error, Result};

/// Cap on the number of maximal rectangles enumerated for one color.
pub const MAX_RECTANGLES: usize = 1 << 18;
/// Largest reduced side length accepted by the partition search.
pub const MAX_PARTITION_SIDE: usize = 16;

/// A list of colored rectangles over the original rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub rectangles: Vec<(bool, Rectangle)>,
}

impl Cover {
    pub fn len(&self) -> usize {
        self.rectangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rectangles.is_empty()
    }

    fn monochromatic(f: &CommFunction, z: bool, rect: &Rectangle) -> bool {
        rect.cells().all(|(r, c)| f.value(r, c) != Some(!z))
    }

    /// Every `z`-cell covered by some `z`-rectangle, and no rectangle holds a
    /// defined `(1-z)`-cell.
    pub fn is_valid_cover(&self, f: &CommFunction, z: bool) -> bool {
        self.rectangles
            .iter()
            .all(|(c, rect)| *c == z && Self::monochromatic(f, z, rect))
            && f.cells(z)
                .all(|(r, c)| self.rectangles.iter().any(|(_, rect)| rect.contains(r, c)))
    }

    /// Pairwise disjoint monochromatic rectangles covering every defined cell.
    pub fn is_valid_partition(&self, f: &CommFunction) -> bool {
        let mut owner = vec![false; f.row_count() * f.col_count()];
        for (z, rect) in &self.rectangles {
            if !Self::monochromatic(f, *z, rect) {
                return false;
            }
            for (r, c) in rect.cells() {
                if r >= f.row_count() || c >= f.col_count() {
                    return false;
                }
                let i = r * f.col_count() + c;
                if owner[i] {
                    return false;
                }
                owner[i] = true;
            }
        }
        (0..f.row_count()).all(|r| {
            (0..f.col_count()).all(|c| f.value(r, c).is_none() || owner[r * f.col_count() + c])
        })
    }

    /// The rectangle containing a cell, with its color.
    pub fn locate(&self, r: usize, c: usize) -> Option<&(bool, Rectangle)> {
        self.rectangles.iter().find(|(_, rect)| rect.contains(r, c))
    }
}

/// Exact minimum number of `z`-monochromatic rectangles covering all `z`-cells.
pub fn min_cover(f: &CommFunction, z: bool) -> Result<(usize, Cover)> {
    let red = Reduced::new(f);
    let cells: Vec<(usize, usize)> = (0..red.rows())
        .flat_map(|r| (0..red.cols()).map(move |c| (r, c)))
        .filter(|&(r, c)| red.value(r, c) == Some(z))
        .collect();
    if cells.is_empty() {
        return Err(Error::Precondition(format!(
            "no {}-cells to cover",
            u8::from(z)
        )));
    }
    let rects = red.maximal_rectangles(z, MAX_RECTANGLES)?;
    let sets: Vec<FixedBitSet> = rects
        .iter()
        .map(|(rows, cols)| {
            let mut s = FixedBitSet::with_capacity(cells.len());
            for (i, &(r, c)) in cells.iter().enumerate() {
                if rows.contains(r) && cols.contains(c) {
                    s.insert(i);
                }
            }
            s
        })
        .collect();
    let chosen = set_cover(&sets, cells.len());
    let rectangles = chosen
        .into_iter()
        .map(|i| (z, red.expand(rects[i].0.ones(), rects[i].1.ones())))
        .collect::<Vec<_>>();
    Ok((rectangles.len(), Cover { rectangles }))
}

fn gain(set: &FixedBitSet, uncovered: &FixedBitSet) -> usize {
    set.intersection_count(uncovered)
}

fn greedy_cover(sets: &[FixedBitSet], universe: usize) -> Vec<usize> {
    let mut uncovered = FixedBitSet::with_capacity(universe);
    uncovered.insert_range(..);
    let mut chosen = Vec::new();
    while !uncovered.is_clear() {
        let best = (0..sets.len())
            .max_by_key(|&i| (gain(&sets[i], &uncovered), std::cmp::Reverse(i)))
            .expect("every cell lies in a maximal rectangle");
        uncovered.difference_with(&sets[best]);
        chosen.push(best);
    }
    chosen
}

struct CoverSearch<'a> {
    sets: &'a [FixedBitSet],
    containing: Vec<Vec<usize>>,
    best: Vec<usize>,
}

impl CoverSearch<'_> {
    fn go(&mut self, uncovered: &FixedBitSet, chosen: &mut Vec<usize>) {
        let Some(_) = uncovered.ones().next() else {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        };
        let left = uncovered.count_ones(..);
        let max_gain = self
            .sets
            .iter()
            .map(|s| gain(s, uncovered))
            .max()
            .unwrap_or(0);
        if max_gain == 0 || chosen.len() + left.div_ceil(max_gain) >= self.best.len() {
            return;
        }
        // branch on the cell with the fewest candidate rectangles
        let cell = uncovered
            .ones()
            .min_by_key(|&i| (self.containing[i].len(), i))
            .expect("nonempty");
        let mut options = self.containing[cell].clone();
        options.sort_by_key(|&i| (std::cmp::Reverse(gain(&self.sets[i], uncovered)), i));
        for i in options {
            let mut next = uncovered.clone();
            next.difference_with(&self.sets[i]);
            chosen.push(i);
            self.go(&next, chosen);
            chosen.pop();
        }
    }
}

/// Minimum set cover by branch and bound with a greedy incumbent; returns
/// chosen indices in ascending order.
fn set_cover(sets: &[FixedBitSet], universe: usize) -> Vec<usize> {
    let mut containing = vec![Vec::new(); universe];
    for (i, s) in sets.iter().enumerate() {
        for c in s.ones() {
            containing[c].push(i);
        }
    }
    let mut search = CoverSearch {
        sets,
        containing,
        best: greedy_cover(sets, universe),
    };
    let mut all = FixedBitSet::with_capacity(universe);
    all.insert_range(..);
    search.go(&all, &mut Vec::new());
    let mut best = search.best;
    best.sort_unstable();
    best
}

/// Cell set of a reduced matrix with at most 16 × 16 cells.
type Cells = [u64; 4];

fn bit(cells: &Cells, i: usize) -> bool {
    cells[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(cells: &mut Cells, i: usize) {
    cells[i / 64] |= 1 << (i % 64);
}

struct PartitionSearch<'a> {
    red: &'a Reduced,
    /// Only cells of these colors must be covered.
    colors: &'a [bool],
    /// True when no cell is undefined, so the rank bound is valid.
    rank_bound: bool,
    failed: HashMap<Cells, usize>,
}

impl PartitionSearch<'_> {
    fn idx(&self, r: usize, c: usize) -> usize {
        r * self.red.cols() + c
    }

    fn needs_cover(&self, r: usize, c: usize) -> bool {
        self.red
            .value(r, c)
            .is_some_and(|z| self.colors.contains(&z))
    }

    fn first_open(&self, occ: &Cells) -> Option<(usize, usize)> {
        (0..self.red.rows())
            .flat_map(|r| (0..self.red.cols()).map(move |c| (r, c)))
            .find(|&(r, c)| self.needs_cover(r, c) && !bit(occ, self.idx(r, c)))
    }

    fn free(&self, occ: &Cells, r: usize, c: usize, z: bool) -> bool {
        !bit(occ, self.idx(r, c)) && self.red.allowed(r, c, z)
    }

    fn lower_bound(&self, occ: &Cells) -> usize {
        if self.rank_bound {
            return self
                .colors
                .iter()
                .map(|&z| {
                    let rows: Vec<Vec<i128>> = (0..self.red.rows())
                        .map(|r| {
                            (0..self.red.cols())
                                .map(|c| {
                                    i128::from(
                                        self.red.value(r, c) == Some(z)
                                            && !bit(occ, self.idx(r, c)),
                                    )
                                })
                                .collect()
                        })
                        .collect();
                    rank(rows)
                })
                .sum();
        }
        // cells no two of which fit in one rectangle
        let open: Vec<(usize, usize)> = (0..self.red.rows())
            .flat_map(|r| (0..self.red.cols()).map(move |c| (r, c)))
            .filter(|&(r, c)| self.needs_cover(r, c) && !bit(occ, self.idx(r, c)))
            .collect();
        let mut picked: Vec<(usize, usize)> = Vec::new();
        for &(r, c) in &open {
            let z = self.red.value(r, c).expect("defined");
            let independent = picked.iter().all(|&(r2, c2)| {
                self.red.value(r2, c2) != Some(z)
                    || !(self.free(occ, r, c2, z) && self.free(occ, r2, c, z))
            });
            if independent {
                picked.push((r, c));
            }
        }
        picked.len()
    }

    /// Rectangles through the open cell `(r, c)`, largest first.
    fn candidates(&self, occ: &Cells, r: usize, c: usize) -> Vec<(u32, u32)> {
        let z = self.red.value(r, c).expect("defined");
        let (nr, nc) = (self.red.rows(), self.red.cols());
        let row_cols: Vec<usize> = (0..nc)
            .filter(|&c2| c2 != c && self.free(occ, r, c2, z))
            .collect();
        let mut out = Vec::new();
        for tmask in 0u32..1 << row_cols.len() {
            let mut cols = 1u32 << c;
            for (k, &c2) in row_cols.iter().enumerate() {
                if tmask >> k & 1 == 1 {
                    cols |= 1 << c2;
                }
            }
            let other_rows: Vec<usize> = (0..nr)
                .filter(|&r2| {
                    r2 != r && (0..nc).all(|c2| cols >> c2 & 1 == 0 || self.free(occ, r2, c2, z))
                })
                .collect();
            for smask in 0u32..1 << other_rows.len() {
                let mut rows = 1u32 << r;
                for (k, &r2) in other_rows.iter().enumerate() {
                    if smask >> k & 1 == 1 {
                        rows |= 1 << r2;
                    }
                }
                out.push((rows, cols));
            }
        }
        out.sort_by_key(|&(rows, cols)| {
            (
                std::cmp::Reverse(rows.count_ones() * cols.count_ones()),
                rows,
                cols,
            )
        });
        out
    }

    fn place(&self, occ: &Cells, rows: u32, cols: u32) -> Cells {
        let mut next = *occ;
        for r in (0..self.red.rows()).filter(|r| rows >> r & 1 == 1) {
            for c in (0..self.red.cols()).filter(|c| cols >> c & 1 == 1) {
                set_bit(&mut next, self.idx(r, c));
            }
        }
        next
    }

    /// Finishes the partition within `budget` rectangles, pushing them to `out`.
    fn solve(&mut self, occ: &Cells, budget: usize, out: &mut Vec<(bool, u32, u32)>) -> bool {
        let Some((r, c)) = self.first_open(occ) else {
            return true;
        };
        if budget == 0 || self.failed.get(occ).is_some_and(|&b| b >= budget) {
            return false;
        }
        if self.lower_bound(occ) > budget {
            self.failed.insert(*occ, budget);
            return false;
        }
        let z = self.red.value(r, c).expect("defined");
        for (rows, cols) in self.candidates(occ, r, c) {
            let next = self.place(occ, rows, cols);
            out.push((z, rows, cols));
            if self.solve(&next, budget - 1, out) {
                return true;
            }
            out.pop();
        }
        let entry = self.failed.entry(*occ).or_insert(0);
        *entry = (*entry).max(budget);
        false
    }

    fn minimum(&mut self, upper: usize) -> Vec<(bool, u32, u32)> {
        let start = [0; 4];
        let lower = self.lower_bound(&start);
        for budget in lower..upper {
            let mut out = Vec::new();
            if self.solve(&start, budget, &mut out) {
                return out;
            }
        }
        let mut out = Vec::new();
        assert!(
            self.solve(&start, upper, &mut out),
            "upper bound must be attainable"
        );
        out
    }
}

/// Most candidate rectangles precomputed by the table-driven partition search.
const MAX_PARTITION_CANDIDATES: usize = 1 << 18;

fn overlap(a: &Cells, b: &Cells) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

fn union(a: &Cells, b: &Cells) -> Cells {
    std::array::from_fn(|i| a[i] | b[i])
}

struct Candidate {
    color: bool,
    rows: u32,
    cols: u32,
    mask: Cells,
}

/// Partition search over a precomputed list of every admissible rectangle,
/// branching on the open cell with the fewest compatible rectangles.
struct TableSearch<'a> {
    base: PartitionSearch<'a>,
    candidates: Vec<Candidate>,
    /// Candidate indices containing each cell, largest first.
    containing: Vec<Vec<usize>>,
    targets: Vec<usize>,
}

impl<'a> TableSearch<'a> {
    fn new(base: PartitionSearch<'a>) -> Option<Self> {
        let red = base.red;
        let (nr, nc) = (red.rows(), red.cols());
        let mut candidates = Vec::new();
        for &z in base.colors {
            for cols in 1u32..1 << nc {
                let fits: Vec<usize> = (0..nr)
                    .filter(|&r| (0..nc).all(|c| cols >> c & 1 == 0 || red.allowed(r, c, z)))
                    .collect();
                for smask in 1u32..1 << fits.len() {
                    let rows = fits
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| smask >> k & 1 == 1)
                        .fold(0u32, |m, (_, &r)| m | 1 << r);
                    let mask = base.place(&[0; 4], rows, cols);
                    let has_z =
                        (0..nr * nc).any(|i| bit(&mask, i) && red.value(i / nc, i % nc) == Some(z));
                    if has_z {
                        candidates.push(Candidate {
                            color: z,
                            rows,
                            cols,
                            mask,
                        });
                        if candidates.len() > MAX_PARTITION_CANDIDATES {
                            return None;
                        }
                    }
                }
            }
        }
        let area = |c: &Candidate| c.rows.count_ones() * c.cols.count_ones();
        let mut containing = vec![Vec::new(); nr * nc];
        for (k, cand) in candidates.iter().enumerate() {
            for (i, list) in containing.iter_mut().enumerate() {
                if bit(&cand.mask, i) {
                    list.push(k);
                }
            }
        }
        for list in &mut containing {
            list.sort_by_key(|&k| (std::cmp::Reverse(area(&candidates[k])), k));
        }
        let targets = (0..nr * nc)
            .filter(|&i| base.needs_cover(i / nc, i % nc))
            .collect();
        Some(TableSearch {
            base,
            candidates,
            containing,
            targets,
        })
    }

    fn solve(&mut self, occ: &Cells, budget: usize, out: &mut Vec<(bool, u32, u32)>) -> bool {
        let open: Vec<usize> = self
            .targets
            .iter()
            .copied()
            .filter(|&i| !bit(occ, i))
            .collect();
        if open.is_empty() {
            return true;
        }
        if budget == 0 || self.base.failed.get(occ).is_some_and(|&b| b >= budget) {
            return false;
        }
        let mut options: Vec<(usize, Vec<usize>, Cells)> = Vec::with_capacity(open.len());
        for &i in &open {
            let compatible: Vec<usize> = self.containing[i]
                .iter()
                .copied()
                .filter(|&k| !overlap(&self.candidates[k].mask, occ))
                .collect();
            if compatible.is_empty() {
                self.base.failed.insert(*occ, usize::MAX);
                return false;
            }
            let reach = compatible
                .iter()
                .fold([0; 4], |u, &k| union(&u, &self.candidates[k].mask));
            options.push((i, compatible, reach));
        }
        options.sort_by_key(|(i, list, _)| (list.len(), *i));
        // open cells no two of which share a compatible rectangle
        let mut blocked = [0u64; 4];
        let mut packing = 0;
        for (i, _, reach) in &options {
            if !bit(&blocked, *i) {
                packing += 1;
                blocked = union(&blocked, reach);
            }
        }
        let lower = if self.base.rank_bound {
            packing.max(self.base.lower_bound(occ))
        } else {
            packing
        };
        if lower > budget {
            self.base.failed.insert(*occ, budget);
            return false;
        }
        let (_, branch, _) = options.swap_remove(0);
        for k in branch {
            let next = union(occ, &self.candidates[k].mask);
            let cand = &self.candidates[k];
            out.push((cand.color, cand.rows, cand.cols));
            if self.solve(&next, budget - 1, out) {
                return true;
            }
            out.pop();
        }
        let entry = self.base.failed.entry(*occ).or_insert(0);
        *entry = (*entry).max(budget);
        false
    }

    fn minimum(&mut self, upper: usize) -> Vec<(bool, u32, u32)> {
        let start = [0; 4];
        for budget in 0..=upper {
            let mut out = Vec::new();
            if self.solve(&start, budget, &mut out) {
                return out;
            }
        }
        unreachable!("upper bound must be attainable")
    }
}

/// Real rank by fraction-free elimination.
fn rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                m[r][c] = (m[r][c] * m[rank][col] - m[rank][c] * m[r][col]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    rank
}

/// Most undefined cells for which every split of them between the colors is tried.
const MAX_ASSIGNED_UNDEFINED: usize = 12;

fn solve_partition(
    red: &Reduced,
    colors: &[bool],
    rank_bound: bool,
    upper: usize,
) -> Vec<(bool, u32, u32)> {
    let search = |red| PartitionSearch {
        red,
        colors,
        rank_bound,
        failed: HashMap::new(),
    };
    match TableSearch::new(search(red)) {
        Some(mut table) => table.minimum(upper),
        None => search(red).minimum(upper),
    }
}

/// Partition of the `z`-cells of a fully defined matrix.
fn color_partition(red: &Reduced, z: bool) -> Vec<(bool, u32, u32)> {
    solve_partition(red, &[z], true, greedy_partition(red, &[z]))
}

fn color_rank(red: &Reduced, z: bool) -> usize {
    let rows = (0..red.rows())
        .map(|r| {
            (0..red.cols())
                .map(|c| i128::from(red.value(r, c) == Some(z)))
                .collect()
        })
        .collect();
    rank(rows)
}

/// Exact minimum partition of the defined cells into monochromatic rectangles.
///
/// Without undefined cells the two colors are partitioned independently and
/// the real rank of the uncovered cells bounds the search. With a few
/// undefined cells, each way of handing them to color 0, color 1 or neither
/// yields two independent problems, visited in order of their rank bound.
/// Otherwise both colors are searched jointly with a packing bound.
pub fn min_disjoint_cover(f: &CommFunction) -> Result<(usize, Cover)> {
    let red = Reduced::new(f);
    let side = red.rows().max(red.cols());
    if side > MAX_PARTITION_SIDE {
        return Err(Error::SizeCap {
            what: "partition search side",
            needed: side,
            cap: MAX_PARTITION_SIDE,
        });
    }
    let undefined: Vec<(usize, usize)> = (0..red.rows())
        .flat_map(|r| (0..red.cols()).map(move |c| (r, c)))
        .filter(|&(r, c)| red.value(r, c).is_none())
        .collect();
    let parts = if undefined.is_empty() {
        let mut parts = color_partition(&red, false);
        parts.extend(color_partition(&red, true));
        parts
    } else if undefined.len() <= MAX_ASSIGNED_UNDEFINED {
        assigned_partition(&red, &undefined)
    } else {
        // a protocol tree gives a partition; so does the greedy search
        let both = [false, true];
        let greedy = greedy_partition(&red, &both);
        let upper = exact_tree_on(&red).map_or(greedy, |t| {
            greedy.min(t.leaf_colors().into_iter().filter(Option::is_some).count())
        });
        solve_partition(&red, &both, false, upper)
    };
    let bits = |mask: u32, k: usize| (0..k).filter(move |i| mask >> i & 1 == 1);
    let mut rectangles: Vec<(bool, Rectangle)> = parts
        .into_iter()
        .map(|(z, rows, cols)| {
            (
                z,
                red.expand(bits(rows, red.rows()), bits(cols, red.cols())),
            )
        })
        .collect();
    rectangles.sort();
    Ok((rectangles.len(), Cover { rectangles }))
}

fn assigned_partition(red: &Reduced, undefined: &[(usize, usize)]) -> Vec<(bool, u32, u32)> {
    let k = undefined.len();
    // the matrix seen by color z when the cells in `mask` are handed to it;
    // every other undefined cell is forbidden
    let view = |z: bool, mask: u32| {
        red.fill(|r, c| match red.value(r, c) {
            Some(v) => Some(v),
            None => {
                let i = undefined
                    .iter()
                    .position(|&u| u == (r, c))
                    .expect("undefined cell");
                Some(if mask >> i & 1 == 1 { z } else { !z })
            }
        })
    };
    let bounds: [Vec<usize>; 2] =
        [false, true].map(|z| (0u32..1 << k).map(|m| color_rank(&view(z, m), z)).collect());
    let mut splits: Vec<(usize, u32, u32)> = Vec::new();
    for a in 0u32..1 << k {
        let rest = !a & ((1 << k) - 1);
        let mut b = rest;
        loop {
            splits.push((bounds[0][a as usize] + bounds[1][b as usize], a, b));
            if b == 0 {
                break;
            }
            b = (b - 1) & rest;
        }
    }
    splits.sort_unstable();
    let mut memo: [HashMap<u32, Vec<(bool, u32, u32)>>; 2] = Default::default();
    let mut best: Option<Vec<(bool, u32, u32)>> = None;
    for (lower, a, b) in splits {
        if best.as_ref().is_some_and(|p| lower >= p.len()) {
            break;
        }
        let mut parts = Vec::new();
        for (z, mask) in [(false, a), (true, b)] {
            let solved = memo[usize::from(z)]
                .entry(mask)
                .or_insert_with(|| color_partition(&view(z, mask), z));
            parts.extend(solved.iter().copied());
        }
        if best.as_ref().is_none_or(|p| parts.len() < p.len()) {
            best = Some(parts);
        }
    }
    best.expect("at least one split")
}

fn greedy_partition(red: &Reduced, colors: &[bool]) -> usize {
    let mut search = PartitionSearch {
        red,
        colors,
        rank_bound: false,
        failed: HashMap::new(),
    };
    let mut occ = [0; 4];
    let mut count = 0;
    while let Some((r, c)) = search.first_open(&occ) {
        let (rows, cols) = search.candidates(&occ, r, c)[0];
        occ = search.place(&occ, rows, cols);
        count += 1;
    }
    search.failed.clear();
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commcc::builtin_function;

    #[test]
    fn eq_cover_is_two_to_the_n() {
        for n in 1..=3 {
            let f = builtin_function("EQ", n, None).unwrap();
            let c = min_cover(&f, true).unwrap().1;
            assert_eq!(c.len(), 1 << n);
            assert!(c.is_valid_cover(&f, true));
        }
    }

    #[test]
    fn all_ones_needs_one() {
        let f = builtin_function("DISJ", 1, None)
            .unwrap()
            .with_undefined(&[(1, 1)])
            .unwrap();
        assert_eq!(min_cover(&f, true).unwrap().0, 1);
        assert!(min_cover(&f, false).is_err());
        assert_eq!(min_disjoint_cover(&f).unwrap().0, 1);
    }

    #[test]
    fn neq_cover_at_most_2n() {
        let f = builtin_function("NEQ", 2, None).unwrap();
        let c = min_cover(&f, true).unwrap().1;
        assert!(c.len() <= 4);
        assert!(c.is_valid_cover(&f, true));
    }

    #[test]
    fn eq_partitions() {
        let f1 = builtin_function("EQ", 1, None).unwrap();
        let p = min_disjoint_cover(&f1).unwrap().1;
        assert_eq!(p.len(), 4);
        assert!(p.is_valid_partition(&f1));
        let f2 = builtin_function("EQ", 2, None).unwrap();
        let p = min_disjoint_cover(&f2).unwrap().1;
        assert!(p.len() >= 5);
        assert!(p.is_valid_partition(&f2));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(vec![vec![1, 1], vec![1, 1]]), 1);
        assert_eq!(rank(vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]), 3);
        assert_eq!(rank(vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]]), 2);
    }

    /// Brute-force partition number for matrices with at most 4 reduced cells per side.
    fn brute_partition(f: &CommFunction) -> usize {
        let red = Reduced::new(f);
        let (nr, nc) = (red.rows(), red.cols());
        let mut rects: Vec<(bool, u32, u32)> = Vec::new();
        for rows in 1u32..1 << nr {
            for cols in 1u32..1 << nc {
                for z in [false, true] {
                    let cells = (0..nr).filter(|r| rows >> r & 1 == 1).flat_map(|r| {
                        (0..nc)
                            .filter(move |c| cols >> c & 1 == 1)
                            .map(move |c| (r, c))
                    });
                    let vals: Vec<_> = cells.map(|(r, c)| red.value(r, c)).collect();
                    if vals.iter().all(|v| *v != Some(!z)) && vals.contains(&Some(z)) {
                        rects.push((z, rows, cols));
                    }
                }
            }
        }
        let cell_mask = |rows: u32, cols: u32| -> u32 {
            let mut m = 0;
            for r in 0..nr {
                for c in 0..nc {
                    if rows >> r & 1 == 1 && cols >> c & 1 == 1 {
                        m |= 1 << (r * nc + c);
                    }
                }
            }
            m
        };
        let defined: u32 = (0..nr * nc)
            .filter(|&i| red.value(i / nc, i % nc).is_some())
            .fold(0, |m, i| m | 1 << i);
        // BFS over used-cell masks
        let mut best = vec![usize::MAX; 1 << (nr * nc)];
        best[0] = 0;
        let mut answer = usize::MAX;
        for mask in 0u32..1 << (nr * nc) {
            let d = best[mask as usize];
            if d == usize::MAX {
                continue;
            }
            if mask & defined == defined {
                answer = answer.min(d);
            }
            for &(_, rows, cols) in &rects {
                let m = cell_mask(rows, cols);
                if m & mask == 0 {
                    let next = (mask | m) as usize;
                    best[next] = best[next].min(d + 1);
                }
            }
        }
        answer
    }

    #[test]
    fn partition_matches_brute_force_on_small_matrices() {
        for (name, n) in [
            ("EQ", 1),
            ("EQ", 2),
            ("LT", 2),
            ("DISJ", 2),
            ("PDISJ", 2),
            ("PIP2", 2),
            ("PIP2_PAPER_LITERAL", 2),
            ("IP", 2),
        ] {
            let f = builtin_function(name, n, None).unwrap();
            let p = min_disjoint_cover(&f).unwrap().1;
            assert!(p.is_valid_partition(&f), "{name}");
            assert_eq!(p.len(), brute_partition(&f), "{name}");
        }
    }

    /// Brute-force cover number over all rectangles.
    fn brute_cover(f: &CommFunction, z: bool) -> usize {
        let (nr, nc) = (f.row_count(), f.col_count());
        let cells: Vec<(usize, usize)> = f.cells(z).collect();
        let mut rect_masks = Vec::new();
        for rows in 1u32..1 << nr {
            for cols in 1u32..1 << nc {
                let ok = (0..nr).filter(|r| rows >> r & 1 == 1).all(|r| {
                    (0..nc)
                        .filter(|c| cols >> c & 1 == 1)
                        .all(|c| f.value(r, c) != Some(!z))
                });
                if ok {
                    let m: u64 = cells
                        .iter()
                        .enumerate()
                        .filter(|(_, &(r, c))| rows >> r & 1 == 1 && cols >> c & 1 == 1)
                        .fold(0, |m, (i, _)| m | 1 << i);
                    rect_masks.push(m);
                }
            }
        }
        let full: u64 = (1u64 << cells.len()) - 1;
        let mut reach = std::collections::HashSet::from([0u64]);
        for k in 1.. {
            let next: std::collections::HashSet<u64> = reach
                .iter()
                .flat_map(|&m| rect_masks.iter().map(move |&r| m | r))
                .collect();
            if next.contains(&full) {
                return k;
            }
            reach = next;
        }
        unreachable!()
    }

    #[test]
    fn cover_matches_brute_force_on_small_matrices() {
        for (name, n) in [
            ("EQ", 2),
            ("NEQ", 2),
            ("LT", 2),
            ("DISJ", 2),
            ("PDISJ", 2),
            ("PIP2", 2),
        ] {
            let f = builtin_function(name, n, None).unwrap();
            for z in [false, true] {
                if f.count(z) == 0 {
                    continue;
                }
                let c = min_cover(&f, z).unwrap().1;
                assert!(c.is_valid_cover(&f, z));
                assert_eq!(c.len(), brute_cover(&f, z), "{name} z={z}");
            }
        }
    }
}
