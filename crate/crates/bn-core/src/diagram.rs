//! The skew diagram attached to a zero-`rho` instance, plus box geometry.
//!
//! Rows are numbered 1..=r+1 from the top; columns from 1, with the bottom
//! row always starting in column 1. Row `i` is padded by `alpha_{r+1-i}` on
//! the left and `beta_{i-1}` on the right of the width-`g-d+r` rectangle, so
//! the left boundary climbs with `alpha` read bottom-up and the right
//! boundary descends with `beta` read top-down.

use thiserror::Error;

use crate::params::BrillNoetherParams;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("rho = {rho}, expected 0")]
    RhoNonzero { rho: i64 },
    #[error("diagram has no boxes")]
    Empty,
}

/// A box position; `row` counts from 1 at the top, `col` from 1 at the
/// leftmost column of the bottom row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxCoord {
    pub row: u32,
    pub col: u32,
}

impl BoxCoord {
    pub fn new(row: u32, col: u32) -> Self {
        Self { row, col }
    }

    /// Manhattan distance: adjacent boxes are at distance 1.
    pub fn distance(self, other: BoxCoord) -> u32 {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col)
    }
}

/// The occupied columns of one row: `start..start + len - 1` inclusive.
/// `len == 0` marks a permitted empty row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowInterval {
    pub start: u32,
    pub len: u32,
}

impl RowInterval {
    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Last occupied column; `None` for an empty row.
    pub fn end(self) -> Option<u32> {
        (self.len > 0).then(|| self.start + self.len - 1)
    }

    pub fn contains(self, col: u32) -> bool {
        col >= self.start && col < self.start + self.len
    }
}

/// Aggregate geometry used by the few-mover construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramStats {
    /// Number of boxes in column 1.
    pub first_col_len: u32,
    /// Number of boxes in row 1.
    pub first_row_len: u32,
    /// Distance from the lower-left box to the upper-right box.
    pub corner_distance: u32,
    /// Maximum distance over all box pairs.
    pub max_distance: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewDiagram {
    rows: Vec<RowInterval>,
    width: u32,
    /// Row-major box list; fixed reference order for tableau storage.
    boxes: Vec<BoxCoord>,
    /// Positions into `boxes` listed column by column, top to bottom.
    col_major: Vec<u32>,
}

impl SkewDiagram {
    /// Builds the diagram for a validated instance; rejects `rho != 0`.
    pub fn build(params: &BrillNoetherParams) -> Result<Self, DiagramError> {
        let rho = params.rho();
        if rho != 0 {
            return Err(DiagramError::RhoNonzero { rho });
        }
        let r = params.r() as usize;
        let w = params.width();
        let alpha = params.alpha();
        let beta = params.beta();
        let alpha0 = alpha.get(0);

        let rows: Vec<RowInterval> = (0..=r)
            .map(|i| {
                let left_pad = alpha.get(r - i);
                RowInterval {
                    start: alpha0 - left_pad + 1,
                    len: w + beta.get(i) + left_pad,
                }
            })
            .collect();

        // Valid skew shape: both boundaries are nonincreasing top to bottom.
        debug_assert!(rows.windows(2).all(|p| p[1].start <= p[0].start));
        debug_assert!(rows
            .windows(2)
            .all(|p| p[1].start + p[1].len <= p[0].start + p[0].len));

        let boxes: Vec<BoxCoord> = rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| {
                (row.start..row.start + row.len).map(move |col| BoxCoord::new(i as u32 + 1, col))
            })
            .collect();
        assert_eq!(boxes.len() as u32, params.g(), "box count must equal g");

        let mut col_major: Vec<u32> = (0..boxes.len() as u32).collect();
        col_major.sort_by_key(|&p| {
            let b = boxes[p as usize];
            (b.col, b.row)
        });

        Ok(Self {
            rows,
            width: w,
            boxes,
            col_major,
        })
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Row interval for 1-based row `i`.
    pub fn row(&self, i: u32) -> RowInterval {
        self.rows[(i - 1) as usize]
    }

    pub fn rows(&self) -> &[RowInterval] {
        &self.rows
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn box_count(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    /// Boxes in row-major order (the storage order for tableau entries).
    pub fn boxes(&self) -> &[BoxCoord] {
        &self.boxes
    }

    /// Positions into [`SkewDiagram::boxes`] in column-major reading order:
    /// columns left to right, each column top to bottom.
    pub fn col_major_positions(&self) -> &[u32] {
        &self.col_major
    }

    pub fn contains(&self, b: BoxCoord) -> bool {
        b.row >= 1 && b.row as usize <= self.rows.len() && self.row(b.row).contains(b.col)
    }

    /// Row-major position of a box, if present.
    pub fn position_of(&self, b: BoxCoord) -> Option<usize> {
        if !self.contains(b) {
            return None;
        }
        let mut pos = 0usize;
        for (i, row) in self.rows.iter().enumerate() {
            if (i as u32 + 1) == b.row {
                return Some(pos + (b.col - row.start) as usize);
            }
            pos += row.len as usize;
        }
        None
    }

    /// Outer and inner partitions `(lambda, mu)` with row `i` occupying
    /// columns `mu_i + 1 ..= lambda_i`.
    pub fn outer_inner(&self) -> (Vec<u32>, Vec<u32>) {
        let lambda = self.rows.iter().map(|r| r.start + r.len - 1).collect();
        let mu = self.rows.iter().map(|r| r.start - 1).collect();
        (lambda, mu)
    }

    /// First-column length, first-row length, corner distance, and maximum
    /// pairwise distance.
    ///
    /// The corner distance is taken between the leftmost box of the lowest
    /// nonempty row and the rightmost box of the highest nonempty row. When
    /// both extreme rows are nonempty this is checked against the closed-form
    /// value `(rows - 1) + (end of row 1) - 1`.
    pub fn stats(&self) -> Result<DiagramStats, DiagramError> {
        if self.boxes.is_empty() {
            return Err(DiagramError::Empty);
        }
        let first_col_len = self.boxes.iter().filter(|b| b.col == 1).count() as u32;
        let first_row_len = self.rows[0].len;

        let top = self
            .rows
            .iter()
            .enumerate()
            .find(|(_, r)| !r.is_empty())
            .map(|(i, r)| BoxCoord::new(i as u32 + 1, r.end().unwrap()))
            .unwrap();
        let bottom = self
            .rows
            .iter()
            .enumerate()
            .rev()
            .find(|(_, r)| !r.is_empty())
            .map(|(i, r)| BoxCoord::new(i as u32 + 1, r.start))
            .unwrap();
        let corner_distance = bottom.distance(top);

        if !self.rows[0].is_empty() && !self.rows[self.rows.len() - 1].is_empty() {
            let formula = (self.rows.len() as u32 - 1) + self.rows[0].end().unwrap() - 1;
            assert_eq!(
                corner_distance, formula,
                "corner scan disagrees with the closed form"
            );
        }

        let mut max_distance = 0;
        for (i, &a) in self.boxes.iter().enumerate() {
            for &b in &self.boxes[i + 1..] {
                max_distance = max_distance.max(a.distance(b));
            }
        }

        Ok(DiagramStats {
            first_col_len,
            first_row_len,
            corner_distance,
            max_distance,
        })
    }
}
