//! Sparse rank computation over GF(p).

use std::collections::HashMap;

use crate::algebra::PrimeField;

/// Row-major sparse matrix; each row holds `(column, value)` with distinct
/// columns and nonzero values.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    pub ncols: usize,
    pub rows: Vec<Vec<(usize, u32)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new() }
    }

    pub fn push_row(&mut self, mut row: Vec<(usize, u32)>) {
        row.retain(|&(_, v)| v != 0);
        row.sort_unstable_by_key(|&(c, _)| c);
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(row.iter().all(|&(c, _)| c < self.ncols));
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }
}

/// `row - c * pivot`, both sorted by column.
fn axpy(field: &PrimeField, row: &[(usize, u32)], c: u32, pivot: &[(usize, u32)]) -> Vec<(usize, u32)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i == row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i]);
            i += 1;
        } else if take_piv {
            out.push((pivot[j].0, field.neg(field.mul(c, pivot[j].1))));
            j += 1;
        } else {
            let v = field.sub(row[i].1, field.mul(c, pivot[j].1));
            if v != 0 {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over GF(p). Rows are inserted sparsest first; each is reduced by
/// the existing pivots on its leading column until it either vanishes or
/// opens a new pivot.
pub fn rank(field: &PrimeField, m: &SparseMatrix) -> usize {
    let mut order: Vec<usize> = (0..m.nrows()).collect();
    order.sort_by_key(|&i| (m.rows[i].len(), i));
    let mut pivots: HashMap<usize, Vec<(usize, u32)>> = HashMap::new();
    for i in order {
        let mut row = m.rows[i].clone();
        while let Some(&(c, v)) = row.first() {
            match pivots.get(&c) {
                Some(p) => row = axpy(field, &row, v, p),
                None => {
                    let inv = field.inv(v);
                    for e in row.iter_mut() {
                        e.1 = field.mul(e.1, inv);
                    }
                    pivots.insert(c, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}
