//! Standard fillings of a skew diagram: representation, canonical ordering,
//! and exhaustive enumeration with the determinant count as a cross-check.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigUint;
use thiserror::Error;

use crate::counting::count_skew;
use crate::diagram::{BoxCoord, SkewDiagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("tableaux have different shapes ({left} vs {right} boxes)")]
    ShapeMismatch { left: usize, right: usize },
    #[error("{count} tableaux exceed the enumeration bound {bound}")]
    TooManyTableaux { count: BigUint, bound: usize },
}

/// A standard filling: entries `1..=g` stored in the diagram's row-major box
/// order, strictly increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    entries: Vec<u32>,
}

impl StandardTableau {
    /// Wraps row-major entries after checking standardness against `diag`.
    pub fn try_from_entries(diag: &SkewDiagram, entries: Vec<u32>) -> Option<StandardTableau> {
        let t = StandardTableau { entries };
        t.is_standard(diag).then_some(t)
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn entry_at(&self, diag: &SkewDiagram, b: BoxCoord) -> Option<u32> {
        diag.position_of(b).map(|p| self.entries[p])
    }

    /// Box holding entry `k`.
    pub fn position_of(&self, diag: &SkewDiagram, k: u32) -> Option<BoxCoord> {
        self.entries
            .iter()
            .position(|&e| e == k)
            .map(|p| diag.boxes()[p])
    }

    /// Row contents as `(start column, entries)` pairs, top to bottom,
    /// skipping empty rows.
    pub fn rows<'a>(&'a self, diag: &SkewDiagram) -> Vec<(u32, &'a [u32])> {
        let mut out = Vec::with_capacity(diag.num_rows());
        let mut pos = 0usize;
        for row in diag.rows() {
            if row.is_empty() {
                continue;
            }
            let len = row.len as usize;
            out.push((row.start, &self.entries[pos..pos + len]));
            pos += len;
        }
        out
    }

    /// Checks strict increase along rows and down columns of `diag`.
    pub fn is_standard(&self, diag: &SkewDiagram) -> bool {
        if self.entries.len() != diag.box_count() {
            return false;
        }
        let mut seen = vec![false; self.entries.len()];
        for &e in &self.entries {
            if e == 0 || e as usize > self.entries.len() || seen[e as usize - 1] {
                return false;
            }
            seen[e as usize - 1] = true;
        }
        for (p, &b) in diag.boxes().iter().enumerate() {
            let left = BoxCoord::new(b.row, b.col.wrapping_sub(1));
            if let Some(q) = diag.position_of(left) {
                if self.entries[q] >= self.entries[p] {
                    return false;
                }
            }
            let up = BoxCoord::new(b.row.wrapping_sub(1), b.col);
            if let Some(q) = diag.position_of(up) {
                if self.entries[q] >= self.entries[p] {
                    return false;
                }
            }
        }
        true
    }

    /// The column-major reading word used by the canonical order.
    pub fn column_word(&self, diag: &SkewDiagram) -> Vec<u32> {
        diag.col_major_positions()
            .iter()
            .map(|&p| self.entries[p as usize])
            .collect()
    }

    /// Returns a copy with entries `t` and `t + 1` exchanged.
    pub fn with_swapped(&self, t: u32) -> StandardTableau {
        let entries = self
            .entries
            .iter()
            .map(|&e| {
                if e == t {
                    t + 1
                } else if e == t + 1 {
                    t
                } else {
                    e
                }
            })
            .collect();
        StandardTableau { entries }
    }
}

fn cmp_words(diag: &SkewDiagram, a: &StandardTableau, b: &StandardTableau) -> Ordering {
    for &p in diag.col_major_positions() {
        let ord = a.entries[p as usize].cmp(&b.entries[p as usize]);
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

/// Compares column-major reading words lexicographically.
pub fn canonical_compare(
    diag: &SkewDiagram,
    a: &StandardTableau,
    b: &StandardTableau,
) -> Result<Ordering, TableauError> {
    if a.entries.len() != b.entries.len() || a.entries.len() != diag.box_count() {
        return Err(TableauError::ShapeMismatch {
            left: a.entries.len(),
            right: b.entries.len(),
        });
    }
    Ok(cmp_words(diag, a, b))
}

/// The filling with `1..=g` written down successive columns; minimal in the
/// canonical order.
pub fn min_tableau(diag: &SkewDiagram) -> StandardTableau {
    let mut entries = vec![0u32; diag.box_count()];
    for (k, &p) in diag.col_major_positions().iter().enumerate() {
        entries[p as usize] = k as u32 + 1;
    }
    let t = StandardTableau { entries };
    debug_assert!(t.is_standard(diag));
    t
}

/// The filling with `1..=g` written along successive rows; maximal in the
/// canonical order.
pub fn max_tableau(diag: &SkewDiagram) -> StandardTableau {
    let entries = (1..=diag.box_count() as u32).collect();
    let t = StandardTableau { entries };
    debug_assert!(t.is_standard(diag));
    t
}

/// Every standard filling of one diagram, sorted canonically, with reverse
/// lookup from filling to index.
#[derive(Debug, Clone)]
pub struct TableauSet {
    diagram: SkewDiagram,
    tableaux: Vec<StandardTableau>,
    index: HashMap<StandardTableau, usize>,
}

impl TableauSet {
    /// Enumerates all standard fillings by backtracking over placements of
    /// `1..=g`, refusing instances whose determinant count exceeds `bound`.
    ///
    /// The enumerated total is asserted against the determinant count, and
    /// the canonical extremes against the direct column/row fillings.
    pub fn enumerate(diag: &SkewDiagram, bound: usize) -> Result<Self, TableauError> {
        let expected = count_skew(diag);
        if expected > BigUint::from(bound) {
            return Err(TableauError::TooManyTableaux {
                count: expected,
                bound,
            });
        }

        let n = diag.box_count();
        // Row-major predecessor positions inside the shape.
        let left: Vec<Option<usize>> = diag
            .boxes()
            .iter()
            .map(|&b| diag.position_of(BoxCoord::new(b.row, b.col.wrapping_sub(1))))
            .collect();
        let up: Vec<Option<usize>> = diag
            .boxes()
            .iter()
            .map(|&b| diag.position_of(BoxCoord::new(b.row.wrapping_sub(1), b.col)))
            .collect();

        let mut tableaux = Vec::new();
        let mut entries = vec![0u32; n];
        let mut filled = vec![false; n];
        fill(
            1,
            n,
            &left,
            &up,
            &mut entries,
            &mut filled,
            &mut tableaux,
        );

        assert_eq!(
            BigUint::from(tableaux.len()),
            expected,
            "enumeration disagrees with the determinant count"
        );

        tableaux.sort_by(|a, b| cmp_words(diag, a, b));
        if n > 0 {
            assert_eq!(tableaux[0], min_tableau(diag));
            assert_eq!(tableaux[tableaux.len() - 1], max_tableau(diag));
        }

        let index = tableaux
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        Ok(Self {
            diagram: diag.clone(),
            tableaux,
            index,
        })
    }

    pub fn diagram(&self) -> &SkewDiagram {
        &self.diagram
    }

    pub fn len(&self) -> usize {
        self.tableaux.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tableaux.is_empty()
    }

    pub fn get(&self, i: usize) -> &StandardTableau {
        &self.tableaux[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &StandardTableau> {
        self.tableaux.iter()
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.index.get(t).copied()
    }
}

fn fill(
    k: u32,
    n: usize,
    left: &[Option<usize>],
    up: &[Option<usize>],
    entries: &mut Vec<u32>,
    filled: &mut Vec<bool>,
    out: &mut Vec<StandardTableau>,
) {
    if k as usize > n {
        out.push(StandardTableau {
            entries: entries.clone(),
        });
        return;
    }
    for p in 0..n {
        if filled[p] {
            continue;
        }
        let ready = left[p].map_or(true, |q| filled[q]) && up[p].map_or(true, |q| filled[q]);
        if !ready {
            continue;
        }
        entries[p] = k;
        filled[p] = true;
        fill(k + 1, n, left, up, entries, filled, out);
        filled[p] = false;
        entries[p] = 0;
    }
}
