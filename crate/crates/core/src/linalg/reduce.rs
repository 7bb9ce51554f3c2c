//! Standard left-to-right persistence column reduction.

use std::collections::HashMap;

use num_rational::BigRational;

use super::scalar::{rational, Field, FieldKind, Fp};
use crate::error::{Error, Result};

/// One boundary column: the dimension of its cell and the signed boundary
/// entries `(row, coefficient)` referring to earlier columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryColumn {
    pub dim: usize,
    pub entries: Vec<(usize, i64)>,
}

/// Persistence pairing produced by [`persistence_reduce`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pairing {
    /// `(creator, destroyer)` column indices.
    pub pairs: Vec<(usize, usize)>,
    /// Creators never destroyed, in column order.
    pub unpaired: Vec<usize>,
}

/// Reduces the filtered boundary matrix over `field` and returns the standard
/// persistence pairing. Columns must be in a filtration-compatible order: every
/// boundary entry refers to an earlier column of dimension one less.
pub fn persistence_reduce(columns: &[BoundaryColumn], field: FieldKind) -> Result<Pairing> {
    match field {
        FieldKind::Prime(p) => reduce_with(columns, |v| Fp::new(v, p)),
        FieldKind::Rational => reduce_with::<BigRational>(columns, rational),
    }
}

fn reduce_with<F: Field>(columns: &[BoundaryColumn], embed: impl Fn(i64) -> F) -> Result<Pairing> {
    for (j, c) in columns.iter().enumerate() {
        for &(r, _) in &c.entries {
            if r >= j || columns[r].dim + 1 != c.dim {
                return Err(Error::OrderViolation { column: j, row: r });
            }
        }
    }
    let mut low_owner: HashMap<usize, usize> = HashMap::new();
    let mut reduced: Vec<Vec<(usize, F)>> = Vec::with_capacity(columns.len());
    let mut destroyed = vec![false; columns.len()];
    let mut pairs = Vec::new();
    for (j, c) in columns.iter().enumerate() {
        let mut col: Vec<(usize, F)> = c
            .entries
            .iter()
            .map(|&(r, v)| (r, embed(v)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        col.sort_by_key(|(r, _)| *r);
        while let Some((low, lv)) = col.last().cloned() {
            match low_owner.get(&low) {
                Some(&k) => {
                    let other = &reduced[k];
                    let factor = lv.mul(&other.last().expect("owner column is nonzero").1.inv());
                    col = subtract_scaled(&col, &factor, other);
                }
                None => break,
            }
        }
        if let Some(&(low, _)) = col.last() {
            low_owner.insert(low, j);
            destroyed[low] = true;
            pairs.push((low, j));
        }
        reduced.push(col);
    }
    let unpaired = (0..columns.len()).filter(|&j| reduced[j].is_empty() && !destroyed[j]).collect();
    pairs.sort_unstable();
    Ok(Pairing { pairs, unpaired })
}

fn subtract_scaled<F: Field>(c: &[(usize, F)], factor: &F, p: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut acc: std::collections::BTreeMap<usize, F> = c.iter().cloned().collect();
    for (r, v) in p {
        let d = factor.mul(v);
        let e = match acc.remove(r) {
            Some(e) => e.sub(&d),
            None => d.neg(),
        };
        if !e.is_zero() {
            acc.insert(*r, e);
        }
    }
    acc.into_iter().collect()
}
