//! Maximum fooling sets by exact clique search.

use fixedbitset::FixedBitSet;

use super::reduced::Reduced;
use super::CommFunction;

/// A largest set of `z`-cells, any two of which cannot share a
/// `z`-monochromatic rectangle. A pair is fooling when one of its two cross
/// cells is a defined `(1-z)`-cell; undefined cells are wildcards, which keeps
/// the set a lower bound on every `z`-cover. Cells are returned row-major.
pub fn max_fooling_set(f: &CommFunction, z: bool) -> Vec<(usize, usize)> {
    let red = Reduced::new(f);
    let cells: Vec<(usize, usize)> = (0..red.rows())
        .flat_map(|r| (0..red.cols()).map(move |c| (r, c)))
        .filter(|&(r, c)| red.value(r, c) == Some(z))
        .collect();
    let k = cells.len();
    let adj: Vec<FixedBitSet> = cells
        .iter()
        .map(|&(r1, c1)| {
            let mut s = FixedBitSet::with_capacity(k);
            for (j, &(r2, c2)) in cells.iter().enumerate() {
                if red.value(r1, c2) == Some(!z) || red.value(r2, c1) == Some(!z) {
                    s.insert(j);
                }
            }
            s
        })
        .collect();
    let mut clique = Clique {
        adj: &adj,
        best: Vec::new(),
    };
    let mut all = FixedBitSet::with_capacity(k);
    all.insert_range(..);
    clique.expand(&mut Vec::new(), all);
    let mut out: Vec<(usize, usize)> = clique
        .best
        .into_iter()
        .map(|i| {
            let (r, c) = cells[i];
            (red.row_groups[r][0], red.col_groups[c][0])
        })
        .collect();
    out.sort_unstable();
    out
}

struct Clique<'a> {
    adj: &'a [FixedBitSet],
    best: Vec<usize>,
}

impl Clique<'_> {
    /// Greedy coloring of the candidates; returns them in color order with
    /// the color count of each prefix, which bounds any clique inside it.
    fn color_order(&self, cand: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut left = cand.clone();
        let mut order = Vec::new();
        let mut color = 0;
        while !left.is_clear() {
            color += 1;
            let mut open = left.clone();
            while let Some(v) = open.ones().next() {
                open.set(v, false);
                open.difference_with(&self.adj[v]);
                left.set(v, false);
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut cand: FixedBitSet) {
        let order = self.color_order(&cand);
        for &(v, bound) in order.iter().rev() {
            if current.len() + bound <= self.best.len() {
                return;
            }
            current.push(v);
            let mut next = cand.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            cand.set(v, false);
        }
    }
}
