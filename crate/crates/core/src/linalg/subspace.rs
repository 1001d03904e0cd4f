//! Subspaces of a coordinate space in canonical (reduced row echelon) form.
//!
//! Canonicity makes set equality coincide with structural equality, which is
//! what the duality and golden-file checks rely on.

use super::echelon::{Echelon, SparseVec};
use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    /// Reduced row echelon basis, sorted by pivot column.
    rows: Vec<SparseVec>,
}

/// Projection onto a complement coordinate system and its right inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientData {
    pub proj: Matrix,
    pub section: Matrix,
    /// Non-pivot columns, in order; quotient coordinate `k` is column `free[k]`.
    pub free: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            rows: (0..ambient_dim).map(|i| vec![(i, Scalar::one(field))]).collect(),
        }
    }

    /// Span of sparse vectors.
    pub fn span<'a, I>(field: Field, ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        let mut e = Echelon::new(field, ambient_dim);
        for v in vectors {
            e.insert(v);
        }
        Self::from_echelon(e)
    }

    pub fn from_echelon(e: Echelon) -> Self {
        let field = e.field();
        let ambient_dim = e.ambient();
        Subspace {
            field,
            ambient_dim,
            rows: e.into_rref(),
        }
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        let rows = m.sparse_rows();
        Self::span(m.field(), m.cols(), rows.iter())
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix) -> Self {
        let cols = m.sparse_columns();
        Self::span(m.field(), m.rows(), cols.iter())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis as a dense reduced row echelon matrix.
    pub fn basis(&self) -> Matrix {
        Matrix::from_sparse_rows(self.field, self.ambient_dim, &self.rows)
    }

    pub fn basis_sparse(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field, self.ambient_dim);
        for row in &self.rows {
            e.push_normalized(row.clone());
        }
        e
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        self.field.check_same(other.field)?;
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                context: "subspace ambient dimension",
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut e = self.echelon();
        for row in &other.rows {
            e.insert(row);
        }
        Ok(Self::from_echelon(e))
    }

    /// Intersection as the annihilator of the sum of annihilators.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let meet = self.annihilator().sum(&other.annihilator())?.annihilator();
        debug_assert_eq!(
            self.dim() + other.dim(),
            self.sum(other)?.dim() + meet.dim(),
            "modular law"
        );
        Ok(meet)
    }

    fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for r in &self.rows {
            is_pivot[r[0].0] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// Annihilator under the standard pairing of the coordinate space with
    /// its dual basis. Read off the reduced basis: one vector per free
    /// column `f`, namely `e_f - Σ_k row_k[f] e_{pivot_k}`.
    pub fn annihilator(&self) -> Subspace {
        let free = self.free_columns();
        let mut slot = vec![usize::MAX; self.ambient_dim];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut vectors: Vec<SparseVec> = free
            .iter()
            .map(|&f| vec![(f, Scalar::one(self.field))])
            .collect();
        for r in &self.rows {
            let p = r[0].0;
            for (c, x) in &r[1..] {
                vectors[slot[*c]].push((p, -x));
            }
        }
        for v in &mut vectors {
            v.sort_by_key(|(c, _)| *c);
        }
        let ann = Self::span(self.field, self.ambient_dim, vectors.iter());
        debug_assert_eq!(ann.dim(), self.ambient_dim - self.dim());
        ann
    }

    pub fn contains_vector(&self, v: &SparseVec) -> bool {
        self.echelon().contains(v)
    }

    /// Residual of `v` modulo this subspace; empty iff `v` lies in it.
    pub fn residual(&self, v: &SparseVec) -> SparseVec {
        self.echelon().reduce(v)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        if other.dim() > self.dim() {
            return Ok(false);
        }
        let e = self.echelon();
        Ok(other.rows.iter().all(|v| e.contains(v)))
    }

    /// Coordinates of a member vector in the canonical basis: because the
    /// basis is reduced, they are the vector's entries at the pivot columns.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(coordinates_at(self.field, &self.pivots(), v))
    }

    /// Quotient coordinates indexed by the non-pivot columns.
    pub fn quotient_data(&self) -> QuotientData {
        let n = self.ambient_dim;
        let free = self.free_columns();
        let q = free.len();
        let mut slot = vec![usize::MAX; n];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut proj = Matrix::zeros(self.field, q, n);
        let mut section = Matrix::zeros(self.field, n, q);
        for (k, &c) in free.iter().enumerate() {
            proj.set(k, c, Scalar::one(self.field));
            section.set(c, k, Scalar::one(self.field));
        }
        for r in &self.rows {
            let p = r[0].0;
            for (c, x) in &r[1..] {
                proj.set(slot[*c], p, -x);
            }
        }
        QuotientData {
            proj,
            section,
            free,
        }
    }

    /// Image under a linear map given as a matrix with `ambient_dim` columns.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        self.field.check_same(map.field())?;
        if map.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                context: "map columns vs subspace ambient",
                expected: self.ambient_dim,
                found: map.cols(),
            });
        }
        let images: Vec<SparseVec> = self.rows.iter().map(|v| map.apply_sparse(v)).collect();
        Ok(Self::span(self.field, map.rows(), images.iter()))
    }
}

/// Entries of a sparse vector at the given (sorted) columns.
pub fn coordinates_at(field: Field, columns: &[usize], v: &SparseVec) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(field); columns.len()];
    let mut k = 0;
    for (c, x) in v {
        while k < columns.len() && columns[k] < *c {
            k += 1;
        }
        if k < columns.len() && columns[k] == *c {
            out[k] = x.clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rationals;

    fn q(v: i64) -> Scalar {
        Scalar::from_i64(Q, v)
    }

    fn e(i: usize) -> SparseVec {
        vec![(i, q(1))]
    }

    #[test]
    fn sum_and_intersection_examples() {
        let a = Subspace::span(Q, 4, [e(0)].iter());
        let b = Subspace::span(Q, 4, [vec![(0, q(1)), (1, q(1))]].iter());
        let s = a.sum(&b).unwrap();
        assert_eq!(s, Subspace::span(Q, 4, [e(0), e(1)].iter()));
        assert!(a.intersect(&b).unwrap().is_zero());
        assert_eq!(a.sum(&Subspace::zero(Q, 4)).unwrap(), a);
        assert_eq!(a.intersect(&Subspace::full(Q, 4)).unwrap(), a);
    }

    #[test]
    fn sum_rejects_mismatched_ambient() {
        let a = Subspace::zero(Q, 3);
        let b = Subspace::zero(Q, 4);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn annihilator_examples() {
        assert!(Subspace::zero(Q, 4).annihilator().is_full());
        assert!(Subspace::full(Q, 4).annihilator().is_zero());
        // e_xy - e_yx in word order (xx, xy, yx, yy)
        let s = Subspace::span(Q, 4, [vec![(1, q(1)), (2, q(-1))]].iter());
        let ann = s.annihilator();
        let expected = Subspace::span(
            Q,
            4,
            [e(0), e(3), vec![(1, q(1)), (2, q(1))]].iter(),
        );
        assert_eq!(ann, expected);
        assert_eq!(ann.annihilator(), s);
    }

    #[test]
    fn kernel_over_gf5() {
        let f = Field::gf(5).unwrap();
        let m = Matrix::from_i64(f, 1, 2, &[1, 1]);
        let ker = Subspace::span(f, 2, m.nullspace_vectors().iter());
        assert_eq!(ker.basis(), Matrix::from_i64(f, 1, 2, &[1, 4]));
    }

    #[test]
    fn quotient_data_examples() {
        let z = Subspace::zero(Q, 3).quotient_data();
        assert!(z.proj.is_identity());
        let full = Subspace::full(Q, 3).quotient_data();
        assert_eq!(full.proj.rows(), 0);
        let s = Subspace::span(Q, 2, [vec![(0, q(1)), (1, q(1))]].iter());
        let d = s.quotient_data();
        assert_eq!(d.proj, Matrix::from_i64(Q, 1, 2, &[-1, 1]));
        assert!(d.proj.mul(&d.section).unwrap().is_identity());
        assert_eq!(d.proj.apply(&[q(1), q(1)]).unwrap(), vec![q(0)]);
    }

    #[test]
    fn containment_examples() {
        let s = Subspace::span(Q, 2, [vec![(0, q(1)), (1, q(1))]].iter());
        assert!(s.contains(&Subspace::zero(Q, 2)).unwrap());
        assert!(Subspace::full(Q, 2).contains(&s).unwrap());
        let e0 = Subspace::span(Q, 2, [e(0)].iter());
        assert!(!s.contains(&e0).unwrap());
    }
}
