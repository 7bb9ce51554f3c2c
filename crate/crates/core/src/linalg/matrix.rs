//! Sparse column-major matrices with exact rank computations.

use std::collections::HashMap;

use super::scalar::{Field, IntegralDomain};
use crate::error::Result;

/// Sparse matrix; each column holds `(row, value)` pairs sorted by row with no
/// stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: Vec<Vec<(usize, T)>>,
}

/// Outcome of [`rank_kernel`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankKernel {
    pub rank: usize,
    pub kernel_dim: usize,
}

impl<T> ExactMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols: (0..cols).map(|_| Vec::new()).collect() }
    }

    /// Builds from columns; entries for which `is_zero` holds are dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, T)>>, is_zero: impl Fn(&T) -> bool) -> Self {
        let cols = columns
            .into_iter()
            .map(|mut c| {
                c.retain(|(r, v)| {
                    assert!(*r < rows, "row index {r} out of bounds ({rows})");
                    !is_zero(v)
                });
                c.sort_by_key(|(r, _)| *r);
                c
            })
            .collect();
        ExactMatrix { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, T)] {
        &self.cols[j]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[(usize, T)]> {
        self.cols.iter().map(Vec::as_slice)
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&T> {
        self.cols[col].binary_search_by_key(&row, |(r, _)| *r).ok().map(|i| &self.cols[col][i].1)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Applies `f` entrywise, dropping results that are zero.
    pub fn map<U>(&self, f: impl Fn(&T) -> U, is_zero: impl Fn(&U) -> bool) -> ExactMatrix<U> {
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(r, v)| (*r, f(v))).filter(|(_, v)| !is_zero(v)).collect())
            .collect();
        ExactMatrix { rows: self.rows, cols }
    }

    pub fn try_map<U>(&self, f: impl Fn(&T) -> Result<U>, is_zero: impl Fn(&U) -> bool) -> Result<ExactMatrix<U>> {
        let mut cols = Vec::with_capacity(self.cols.len());
        for c in &self.cols {
            let mut out = Vec::with_capacity(c.len());
            for (r, v) in c {
                let u = f(v)?;
                if !is_zero(&u) {
                    out.push((*r, u));
                }
            }
            cols.push(out);
        }
        Ok(ExactMatrix { rows: self.rows, cols })
    }

    /// Row-major dense copy with `None` for zeros.
    pub fn to_dense(&self) -> Vec<Vec<Option<T>>>
    where
        T: Clone,
    {
        let mut out = vec![vec![None; self.cols.len()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c {
                out[*i][j] = Some(v.clone());
            }
        }
        out
    }
}

/// Exact rank and nullity over a field by column elimination.
pub fn rank_kernel<F: Field>(m: &ExactMatrix<F>) -> RankKernel {
    // pivot row -> reduced column whose lowest entry sits in that row
    let mut pivots: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
    let mut rank = 0;
    for col in &m.cols {
        let mut c = col.clone();
        while let Some((low, lv)) = c.last().cloned() {
            match pivots.get(&low) {
                Some(p) => {
                    let pl = &p.last().expect("pivot columns are nonempty").1;
                    let factor = lv.mul(&pl.inv());
                    c = axpy(&c, &factor, p);
                }
                None => {
                    pivots.insert(low, c);
                    rank += 1;
                    break;
                }
            }
        }
    }
    RankKernel { rank, kernel_dim: m.ncols() - rank }
}

/// `c - factor * p` for sorted sparse vectors.
fn axpy<F: Field>(c: &[(usize, F)], factor: &F, p: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(c.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < c.len() || j < p.len() {
        let take_c = j >= p.len() || (i < c.len() && c[i].0 < p[j].0);
        let take_p = i >= c.len() || (j < p.len() && p[j].0 < c[i].0);
        if take_c {
            out.push(c[i].clone());
            i += 1;
        } else if take_p {
            out.push((p[j].0, factor.mul(&p[j].1).neg()));
            j += 1;
        } else {
            let v = c[i].1.sub(&factor.mul(&p[j].1));
            if !v.is_zero() {
                out.push((c[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over the fraction field of an integral domain by fraction-free
/// (Bareiss) elimination with full pivoting. Every division is exact.
pub fn bareiss_rank<D: IntegralDomain>(m: &ExactMatrix<D>) -> Result<usize> {
    let mut a = m.to_dense();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut prev: Option<D> = None;
    let mut rank = 0;
    for k in 0..rows.min(cols) {
        let found = (k..cols).find_map(|j| (k..rows).find(|&i| a[i][j].is_some()).map(|i| (i, j)));
        let Some((pi, pj)) = found else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        let pivot = a[k][k].clone().expect("pivot is nonzero");
        for i in k + 1..rows {
            let aik = a[i][k].take();
            for j in k + 1..cols {
                let left = a[i][j].as_ref().map(|v| pivot.mul(v));
                let right = match (&aik, &a[k][j]) {
                    (Some(x), Some(y)) => Some(x.mul(y)),
                    _ => None,
                };
                let num = match (left, right) {
                    (Some(l), Some(r)) => Some(l.sub(&r)),
                    (Some(l), None) => Some(l),
                    (None, Some(r)) => Some(r.neg()),
                    (None, None) => None,
                };
                a[i][j] = match num {
                    Some(v) if !v.is_zero() => Some(match &prev {
                        Some(p) => v.exact_div(p)?,
                        None => v,
                    }),
                    _ => None,
                };
            }
        }
        prev = Some(pivot);
        rank += 1;
    }
    Ok(rank)
}
