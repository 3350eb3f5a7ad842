//! Rectangle measures and the largest monochromatic mass.

use num_rational::Ratio;

use super::reduced::Reduced;
use super::{CommFunction, Rectangle};
use crate::error::{Error, Result};

pub type Weight = Ratio<u64>;

/// A non-negative rational weight on every cell of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectangleMeasure {
    cols: usize,
    weights: Vec<Weight>,
}

impl RectangleMeasure {
    pub fn new(f: &CommFunction, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != f.row_count() * f.col_count() {
            return Err(Error::Precondition(
                "one weight per cell is required".into(),
            ));
        }
        Ok(RectangleMeasure {
            cols: f.col_count(),
            weights,
        })
    }

    /// Weight one on each `z`-cell.
    pub fn indicator(f: &CommFunction, z: bool) -> Self {
        Self::from_fn(f, |r, c| {
            Weight::from_integer(u64::from(f.value(r, c) == Some(z)))
        })
    }

    /// Weight `w` on a single cell.
    pub fn point(f: &CommFunction, cell: (usize, usize), w: Weight) -> Self {
        Self::from_fn(f, |r, c| {
            if (r, c) == cell {
                w
            } else {
                Weight::from_integer(0)
            }
        })
    }

    pub fn from_fn(f: &CommFunction, w: impl Fn(usize, usize) -> Weight) -> Self {
        RectangleMeasure {
            cols: f.col_count(),
            weights: (0..f.row_count())
                .flat_map(|r| (0..f.col_count()).map(move |c| (r, c)))
                .map(|(r, c)| w(r, c))
                .collect(),
        }
    }

    pub fn weight(&self, r: usize, c: usize) -> Weight {
        self.weights[r * self.cols + c]
    }

    pub fn total(&self) -> Weight {
        self.weights.iter().sum()
    }

    pub fn mass(&self, rect: &Rectangle) -> Weight {
        rect.cells().map(|(r, c)| self.weight(r, c)).sum()
    }

    /// Total weight carried by the `z`-cells.
    pub fn mass_of(&self, f: &CommFunction, z: bool) -> Weight {
        f.cells(z).map(|(r, c)| self.weight(r, c)).sum()
    }
}

/// Largest mass of a `z`-monochromatic rectangle, with a rectangle attaining it.
/// Weights are non-negative, so the search runs over maximal rectangles.
pub fn max_rectangle_measure(
    f: &CommFunction,
    z: bool,
    mu: &RectangleMeasure,
) -> Result<(Weight, Option<Rectangle>)> {
    if mu.weights.len() != f.row_count() * f.col_count() || mu.cols != f.col_count() {
        return Err(Error::Precondition(
            "measure does not fit the matrix".into(),
        ));
    }
    let red = Reduced::new(f);
    let mut best: (Weight, Option<Rectangle>) = (Weight::from_integer(0), None);
    for (rows, cols) in red.maximal_rectangles(z, super::MAX_RECTANGLES)? {
        let rect = red.expand(rows.ones(), cols.ones());
        let m = mu.mass(&rect);
        if best.1.is_none() || m > best.0 {
            best = (m, Some(rect));
        }
    }
    Ok(best)
}
