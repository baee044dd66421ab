//! Row echelon form for sparse vectors over a field.

use std::collections::BTreeMap;

use super::field::Field;

/// Sparse row, sorted by column, no zero entries.
pub type SparseRow<E> = Vec<(usize, E)>;

/// Rows in semi-echelon form: each stored row is monic at its leading column
/// and no two rows share a leading column.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F: Field> {
    field: F,
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow<F::Elem>>,
}

impl<F: Field> SparseEchelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        SparseEchelon {
            field,
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.pivots.len() == self.ncols
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Reduce until the leading column is not a pivot column (or the row vanishes).
    pub fn reduce(&self, mut row: SparseRow<F::Elem>) -> SparseRow<F::Elem> {
        row.retain(|(_, c)| !self.field.is_zero(c));
        row.sort_by_key(|(c, _)| *c);
        while let Some((col, coef)) = row.first().cloned() {
            match self.pivots.get(&col) {
                Some(pivot) => {
                    let factor = self.field.neg(&coef);
                    row = axpy(&self.field, &row, pivot, &factor);
                }
                None => break,
            }
        }
        row
    }

    pub fn contains(&self, row: SparseRow<F::Elem>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Add a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: SparseRow<F::Elem>) -> bool {
        let reduced = self.reduce(row);
        let Some((col, lead)) = reduced.first().cloned() else {
            return false;
        };
        debug_assert!(col < self.ncols);
        let inv = self.field.inv(&lead).expect("nonzero lead");
        let monic = reduced
            .into_iter()
            .map(|(c, x)| (c, self.field.mul(&x, &inv)))
            .collect();
        self.pivots.insert(col, monic);
        true
    }
}

// a + s * b
fn axpy<F: Field>(field: &F, a: &SparseRow<F::Elem>, b: &SparseRow<F::Elem>, s: &F::Elem) -> SparseRow<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, field.mul(&b[j].1, s)));
            j += 1;
        } else {
            let c = field.add(&a[i].1, &field.mul(&b[j].1, s));
            if !field.is_zero(&c) {
                out.push((a[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
