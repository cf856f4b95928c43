//! Sparse matrices with exact entries.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

use super::{Coefficient, RingSpec};

/// A sparse `rows x cols` matrix; absent entries are zero.
///
/// Entries live in a `BTreeMap` keyed by `(row, col)` so iteration order, and
/// therefore every downstream computation, is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    ring: RingSpec,
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Coefficient>,
}

impl SparseMatrix {
    pub fn zero(ring: RingSpec, rows: usize, cols: usize) -> Self {
        SparseMatrix {
            ring,
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn set(&mut self, row: usize, col: usize, value: Coefficient) -> Result<()> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::IndexOutOfRange(format!(
                "entry ({row}, {col}) outside {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if value.ring() != self.ring {
            return Err(Error::RingMismatch(self.ring, value.ring()));
        }
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    /// Add `value` into the entry at `(row, col)`.
    pub fn add_to(&mut self, row: usize, col: usize, value: &Coefficient) -> Result<()> {
        let current = self
            .entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| Coefficient::zero(self.ring));
        self.set(row, col, current.add(value))
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Coefficient> {
        self.entries.get(&(row, col))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Coefficient)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Column `c` as (row, value) pairs.
    pub fn column(&self, c: usize) -> Vec<(usize, Coefficient)> {
        self.entries
            .iter()
            .filter(|((_, col), _)| *col == c)
            .map(|(&(r, _), v)| (r, v.clone()))
            .collect()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zero(self.ring, self.cols, self.rows);
        for (r, c, v) in self.entries() {
            out.entries.insert((c, r), v.clone());
        }
        out
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ring != rhs.ring {
            return Err(Error::RingMismatch(self.ring, rhs.ring));
        }
        if self.cols != rhs.rows {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        // Row-indexed view of rhs for the inner loop.
        let mut rhs_rows: BTreeMap<usize, Vec<(usize, &Coefficient)>> = BTreeMap::new();
        for (r, c, v) in rhs.entries() {
            rhs_rows.entry(r).or_default().push((c, v));
        }
        let mut out = SparseMatrix::zero(self.ring, self.rows, rhs.cols);
        for (r, k, a) in self.entries() {
            if let Some(row) = rhs_rows.get(&k) {
                for (c, b) in row {
                    out.add_to(r, *c, &a.mul(b))?;
                }
            }
        }
        Ok(out)
    }

    /// The same matrix with all entries lifted into the fraction field.
    pub fn into_fraction_field(&self) -> SparseMatrix {
        let ring = self.ring.fraction_field();
        let mut out = SparseMatrix::zero(ring, self.rows, self.cols);
        for (r, c, v) in self.entries() {
            out.entries
                .insert((r, c), v.clone().into_fraction_field());
        }
        out
    }
}
