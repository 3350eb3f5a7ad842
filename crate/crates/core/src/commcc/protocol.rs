//! Exact deterministic complexity and the cover-based protocol.

use super::cover::Cover;
use super::problems::Player;
use super::reduced::Reduced;
use super::{CommFunction, Rectangle};
use crate::error::{Error, Result};

/// Largest reduced side length for the exact protocol search.
pub const MAX_PROTOCOL_SIDE: usize = 8;

/// A deterministic protocol. Each internal node splits the current rectangle
/// by one player's input; leaves are monochromatic up to undefined cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProtocolTree {
    Leaf {
        rect: Rectangle,
        /// `None` only when every cell of the leaf is undefined.
        color: Option<bool>,
    },
    Node {
        speaker: Player,
        rect: Rectangle,
        children: Box<[ProtocolTree; 2]>,
    },
}

impl ProtocolTree {
    pub fn rect(&self) -> &Rectangle {
        match self {
            ProtocolTree::Leaf { rect, .. } | ProtocolTree::Node { rect, .. } => rect,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            ProtocolTree::Leaf { .. } => 0,
            ProtocolTree::Node { children, .. } => 1 + children[0].depth().max(children[1].depth()),
        }
    }

    pub fn leaves(&self) -> Vec<(&Rectangle, Option<bool>)> {
        match self {
            ProtocolTree::Leaf { rect, color } => vec![(rect, *color)],
            ProtocolTree::Node { children, .. } => {
                let mut out = children[0].leaves();
                out.extend(children[1].leaves());
                out
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves().len()
    }

    pub(crate) fn leaf_colors(&self) -> Vec<Option<bool>> {
        self.leaves().into_iter().map(|(_, c)| c).collect()
    }

    /// Leaves are monochromatic and every child splits its parent.
    pub fn is_valid_for(&self, f: &CommFunction) -> bool {
        match self {
            ProtocolTree::Leaf { rect, color } => {
                let defined: Vec<bool> = rect.cells().filter_map(|(r, c)| f.value(r, c)).collect();
                match color {
                    Some(z) => defined.iter().all(|v| v == z),
                    None => defined.is_empty(),
                }
            }
            ProtocolTree::Node {
                speaker,
                rect,
                children,
            } => {
                let (a, b) = (children[0].rect(), children[1].rect());
                let split = match speaker {
                    Player::Alice => {
                        a.cols == rect.cols
                            && b.cols == rect.cols
                            && !a.rows.is_empty()
                            && !b.rows.is_empty()
                            && merge(&a.rows, &b.rows) == rect.rows
                    }
                    Player::Bob => {
                        a.rows == rect.rows
                            && b.rows == rect.rows
                            && !a.cols.is_empty()
                            && !b.cols.is_empty()
                            && merge(&a.cols, &b.cols) == rect.cols
                    }
                };
                split && children.iter().all(|c| c.is_valid_for(f))
            }
        }
    }

    /// Leaf reached on input `(r, c)`.
    pub fn run(&self, r: usize, c: usize) -> Option<&ProtocolTree> {
        match self {
            ProtocolTree::Leaf { rect, .. } => rect.contains(r, c).then_some(self),
            ProtocolTree::Node { children, .. } => children.iter().find_map(|t| t.run(r, c)),
        }
    }
}

fn merge(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    let len = v.len();
    v.dedup();
    if v.len() != len {
        v.clear();
    }
    v
}

const UNKNOWN: u8 = u8::MAX;

struct Exact<'a> {
    red: &'a Reduced,
    ones: Vec<u32>,
    zeros: Vec<u32>,
    nc: usize,
    memo: Vec<u8>,
}

impl Exact<'_> {
    fn color(&self, rows: u32, cols: u32) -> Result<Option<bool>, ()> {
        let (mut any1, mut any0) = (false, false);
        for r in (0..self.red.rows()).filter(|r| rows >> r & 1 == 1) {
            any1 |= self.ones[r] & cols != 0;
            any0 |= self.zeros[r] & cols != 0;
        }
        match (any0, any1) {
            (true, true) => Err(()),
            (false, true) => Ok(Some(true)),
            (true, false) => Ok(Some(false)),
            (false, false) => Ok(None),
        }
    }

    /// Nonempty proper splits `(part, rest)` with the lowest element in `part`.
    fn splits(mask: u32) -> impl Iterator<Item = (u32, u32)> {
        let low = mask & mask.wrapping_neg();
        let others = mask & !low;
        // enumerate submasks of `others`, excluding all of them
        let mut sub = others;
        let mut done = others == 0;
        std::iter::from_fn(move || {
            while !done {
                let part = low | sub;
                if sub == 0 {
                    done = true;
                } else {
                    sub = (sub - 1) & others;
                }
                if part != mask {
                    return Some((part, mask & !part));
                }
            }
            None
        })
    }

    fn cost(&mut self, rows: u32, cols: u32) -> u8 {
        let key = (rows as usize) << self.nc | cols as usize;
        if self.memo[key] != UNKNOWN {
            return self.memo[key];
        }
        let value = if self.color(rows, cols).is_ok() {
            0
        } else {
            let mut best = u8::MAX - 1;
            for (a, b) in Self::splits(rows) {
                if best <= 1 {
                    break;
                }
                let ca = self.cost(a, cols);
                if ca + 1 >= best {
                    continue;
                }
                best = best.min(1 + ca.max(self.cost(b, cols)));
            }
            for (a, b) in Self::splits(cols) {
                if best <= 1 {
                    break;
                }
                let ca = self.cost(rows, a);
                if ca + 1 >= best {
                    continue;
                }
                best = best.min(1 + ca.max(self.cost(rows, b)));
            }
            best
        };
        self.memo[key] = value;
        value
    }

    fn tree(&mut self, rows: u32, cols: u32) -> ProtocolTree {
        let bits = |m: u32, k: usize| (0..k).filter(move |i| m >> i & 1 == 1);
        let rect = self
            .red
            .expand(bits(rows, self.red.rows()), bits(cols, self.nc));
        let target = self.cost(rows, cols);
        if target == 0 {
            let color = self.color(rows, cols).expect("monochromatic");
            return ProtocolTree::Leaf { rect, color };
        }
        for (a, b) in Self::splits(rows) {
            if 1 + self.cost(a, cols).max(self.cost(b, cols)) == target {
                return ProtocolTree::Node {
                    speaker: Player::Alice,
                    rect,
                    children: Box::new([self.tree(a, cols), self.tree(b, cols)]),
                };
            }
        }
        for (a, b) in Self::splits(cols) {
            if 1 + self.cost(rows, a).max(self.cost(rows, b)) == target {
                return ProtocolTree::Node {
                    speaker: Player::Bob,
                    rect,
                    children: Box::new([self.tree(rows, a), self.tree(rows, b)]),
                };
            }
        }
        unreachable!("an optimal split exists")
    }
}

pub(crate) fn exact_tree_on(red: &Reduced) -> Result<ProtocolTree> {
    let (nr, nc) = (red.rows(), red.cols());
    let side = nr.max(nc);
    if side > MAX_PROTOCOL_SIDE {
        return Err(Error::SizeCap {
            what: "protocol search side",
            needed: side,
            cap: MAX_PROTOCOL_SIDE,
        });
    }
    let mask_of = |r: usize, z: bool| {
        (0..nc)
            .filter(|&c| red.value(r, c) == Some(z))
            .fold(0u32, |m, c| m | 1 << c)
    };
    let mut exact = Exact {
        red,
        ones: (0..nr).map(|r| mask_of(r, true)).collect(),
        zeros: (0..nr).map(|r| mask_of(r, false)).collect(),
        nc,
        memo: vec![UNKNOWN; 1 << (nr + nc)],
    };
    Ok(exact.tree((1 << nr) - 1, (1 << nc) - 1))
}

/// Minimum worst-case number of bits exchanged by a deterministic protocol,
/// counted as the depth of an optimal protocol tree, together with that tree.
pub fn exact_deterministic_cc(f: &CommFunction) -> Result<(usize, ProtocolTree)> {
    let tree = exact_tree_on(&Reduced::new(f))?;
    Ok((tree.depth(), tree))
}

/// Outcome of one run of the cover-based protocol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Simulation {
    pub answer: bool,
    pub rounds: usize,
    pub bits: usize,
}

fn ceil_log2(k: usize) -> usize {
    k.next_power_of_two().trailing_zeros() as usize
}

fn overlaps(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => return true,
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    false
}

/// Live rectangles met by the first 1-rectangle through `me` that meets at
/// most half of them.
fn shrink<'a>(
    ones: &[&Rectangle],
    live: &[&'a Rectangle],
    me: usize,
    side: fn(&Rectangle) -> &[usize],
) -> Option<Vec<&'a Rectangle>> {
    ones.iter().filter(|r| side(r).contains(&me)).find_map(|r| {
        let met: Vec<&Rectangle> = live
            .iter()
            .copied()
            .filter(|l| overlaps(side(l), side(r)))
            .collect();
        (2 * met.len() <= live.len()).then_some(met)
    })
}

/// Runs the round protocol driven by a disjoint cover on input `(x, y)`.
///
/// Each round the speaker names a 1-rectangle through their input whose
/// rows (or columns) meet at most half of the live 0-rectangles, which then
/// shrink to those met. A round costs the rectangle index plus two control bits.
pub fn simulate_cover_protocol(
    f: &CommFunction,
    cover: &Cover,
    x: usize,
    y: usize,
) -> Result<Simulation> {
    if !cover.is_valid_partition(f) {
        return Err(Error::InvalidCover(
            "not a monochromatic partition of the defined cells".into(),
        ));
    }
    if x >= f.row_count() || y >= f.col_count() {
        return Err(Error::OutOfDomain(format!(
            "input ({x}, {y}) outside the matrix"
        )));
    }
    let ones: Vec<&Rectangle> = cover
        .rectangles
        .iter()
        .filter(|(z, _)| *z)
        .map(|(_, r)| r)
        .collect();
    let mut live: Vec<&Rectangle> = cover
        .rectangles
        .iter()
        .filter(|(z, _)| !*z)
        .map(|(_, r)| r)
        .collect();
    let per_round = ceil_log2(cover.len()) + 2;
    let mut rounds = 0;
    let answer = loop {
        rounds += 1;
        if live.is_empty() {
            break true;
        }
        if let Some(next) = shrink(&ones, &live, x, |r| &r.rows) {
            live = next;
        } else if let Some(next) = shrink(&ones, &live, y, |r| &r.cols) {
            live = next;
        } else {
            break false;
        }
    };
    Ok(Simulation {
        answer,
        rounds,
        bits: rounds * per_round,
    })
}
