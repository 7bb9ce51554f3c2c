//! Classical simplicial chain complexes and Betti numbers over a field.

use num_rational::BigRational;

use crate::complex::{Face, SimplicialComplex};
use crate::linalg::scalar::rational;
use crate::linalg::{rank_kernel, ExactMatrix, FieldKind, Fp};

/// Matrix of `δ_k : C_k → C_{k-1}` in the canonical bases, with entry
/// `(-1)^u` for removing the `u`-th smallest vertex (`u` from 1).
///
/// In reduced mode `δ_0` maps every vertex to `-∅`; otherwise `δ_0` has no
/// rows.
pub fn boundary_matrix(k: &SimplicialComplex, dim: isize, reduced: bool) -> ExactMatrix<i64> {
    let cols = if dim == -1 && !reduced { Vec::new() } else { k.faces_of_dim(dim) };
    if dim <= 0 {
        let has_rows = dim == 0 && reduced;
        let rows = usize::from(has_rows);
        let columns = if has_rows { cols.iter().map(|_| vec![(0, -1)]).collect() } else { vec![Vec::new(); cols.len()] };
        return ExactMatrix::from_columns(rows, columns, |v| *v == 0);
    }
    let rows = k.faces_of_dim(dim - 1);
    let index = face_index(&rows);
    let columns = cols
        .iter()
        .map(|sigma| {
            sigma
                .facets()
                .enumerate()
                .map(|(pos, tau)| (index(&tau), if pos % 2 == 0 { -1 } else { 1 }))
                .collect()
        })
        .collect();
    ExactMatrix::from_columns(rows.len(), columns, |v| *v == 0)
}

/// Lookup closure from a face to its position in a canonical basis.
pub(crate) fn face_index(basis: &[Face]) -> impl Fn(&Face) -> usize + '_ {
    let map: std::collections::HashMap<&Face, usize> = basis.iter().enumerate().map(|(i, f)| (f, i)).collect();
    move |f| *map.get(f).expect("boundary face belongs to the complex")
}

/// Rank of an integer matrix over the chosen field.
pub fn rank_over(m: &ExactMatrix<i64>, field: FieldKind) -> usize {
    match field {
        FieldKind::Rational => rank_kernel(&m.map(|v| rational(*v), |v: &BigRational| crate::linalg::Field::is_zero(v))).rank,
        FieldKind::Prime(p) => rank_kernel(&m.map(|v| Fp::new(*v, p), |v: &Fp| crate::linalg::Field::is_zero(v))).rank,
    }
}

/// Betti numbers indexed by dimension; reduced vectors start at dimension -1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiVector {
    reduced: bool,
    values: Vec<usize>,
}

impl BettiVector {
    pub fn new(reduced: bool, values: Vec<usize>) -> Self {
        BettiVector { reduced, values }
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn lowest_dim(&self) -> isize {
        if self.reduced {
            -1
        } else {
            0
        }
    }

    /// `b_k`, zero outside the stored range.
    pub fn get(&self, k: isize) -> usize {
        let i = k - self.lowest_dim();
        if i < 0 {
            return 0;
        }
        self.values.get(i as usize).copied().unwrap_or(0)
    }

    /// Values from [`BettiVector::lowest_dim`] upward.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Highest dimension stored.
    pub fn top_dim(&self) -> isize {
        self.lowest_dim() + self.values.len() as isize - 1
    }
}

/// `b_k = dim C_k - rank δ_k - rank δ_{k+1}` for `k` up to `max_dim`.
pub fn betti_numbers(k: &SimplicialComplex, field: FieldKind, reduced: bool, max_dim: isize) -> BettiVector {
    let lo: isize = if reduced { -1 } else { 0 };
    let ranks: Vec<usize> = (lo..=max_dim + 1).map(|d| rank_over(&boundary_matrix(k, d, reduced), field)).collect();
    let values = (lo..=max_dim)
        .map(|d| {
            let i = (d - lo) as usize;
            let cells = if d == -1 { usize::from(reduced) } else { k.faces_of_dim(d).len() };
            cells - ranks[i] - ranks[i + 1]
        })
        .collect();
    BettiVector { reduced, values }
}
