//! Incremental row echelon form on sparse rows.
//!
//! Rows are kept with a leading 1 at a distinct pivot column. Insertion fully
//! reduces the incoming vector against every pivot, so membership tests are
//! exact. [`Echelon::into_rref`] back-substitutes to the unique reduced form.

use std::collections::BTreeMap;

use super::field::{Field, Scalar};

/// Sorted `(column, value)` pairs with no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

const NO_PIVOT: usize = usize::MAX;

pub fn sparse_from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse(field: Field, len: usize, v: &SparseVec) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(field); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Adds `coeff * src` into an accumulator.
pub fn axpy_into(acc: &mut BTreeMap<usize, Scalar>, coeff: &Scalar, src: &[(usize, Scalar)]) {
    for (c, y) in src {
        let t = coeff * y;
        match acc.get_mut(c) {
            Some(slot) => {
                let s = &*slot + &t;
                if s.is_zero() {
                    acc.remove(c);
                } else {
                    *slot = s;
                }
            }
            None => {
                if !t.is_zero() {
                    acc.insert(*c, t);
                }
            }
        }
    }
}

pub fn scale_sparse(coeff: &Scalar, v: &SparseVec) -> SparseVec {
    if coeff.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(c, x)| (*c, coeff * x)).collect()
}

#[derive(Debug, Clone)]
pub struct Echelon {
    field: Field,
    ambient: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, ambient: usize) -> Self {
        Echelon {
            field,
            ambient,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ambient],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows in insertion order; each has a leading 1 at its pivot.
    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_PIVOT
    }

    /// Residual of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut work: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut out = Vec::new();
        while let Some((c, x)) = work.pop_first() {
            let r = self.pivot_row[c];
            if r == NO_PIVOT {
                out.push((c, x));
            } else {
                let row = &self.rows[r];
                let neg = -&x;
                axpy_into(&mut work, &neg, &row[1..]);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let residual = self.reduce(v);
        self.push_residual(residual)
    }

    fn push_residual(&mut self, residual: SparseVec) -> bool {
        let Some((pivot, lead)) = residual.first().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading entry");
        let row = scale_sparse(&inv, &residual);
        self.pivot_row[pivot] = self.rows.len();
        self.rows.push(row);
        true
    }

    /// Adds a row that already has a leading 1 at a fresh pivot column.
    /// Used when rows are known to be independent by construction.
    pub fn push_normalized(&mut self, row: SparseVec) {
        let (pivot, lead) = row.first().expect("nonempty row");
        debug_assert!(lead.is_one());
        debug_assert_eq!(self.pivot_row[*pivot], NO_PIVOT);
        self.pivot_row[*pivot] = self.rows.len();
        self.rows.push(row);
    }

    /// Reduced row echelon rows, sorted by pivot column.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let Echelon {
            rows, pivot_row, ..
        } = self;
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&r| rows[r][0].0);
        let mut done: Vec<Option<SparseVec>> = vec![None; rows.len()];
        // Largest pivot first: every pivot column to the right of a row's own
        // pivot is then already owned by a fully reduced row.
        for &r in order.iter().rev() {
            let row = &rows[r];
            let mut work: BTreeMap<usize, Scalar> = row[1..].iter().cloned().collect();
            let mut out = vec![row[0].clone()];
            while let Some((c, x)) = work.pop_first() {
                let pr = pivot_row[c];
                if pr == NO_PIVOT {
                    out.push((c, x));
                } else {
                    let reduced = done[pr].as_ref().expect("larger pivots reduced first");
                    let neg = -&x;
                    axpy_into(&mut work, &neg, &reduced[1..]);
                }
            }
            done[r] = Some(out);
        }
        order
            .into_iter()
            .map(|r| done[r].take().expect("all rows reduced"))
            .collect()
    }
}
