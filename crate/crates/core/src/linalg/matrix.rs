use std::collections::BTreeMap;
use std::fmt;

use super::echelon::{axpy_into, sparse_from_dense, Echelon, SparseVec};
use super::field::{Field, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over a single field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    /// Nonzero rows of the reduced row echelon form.
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![Scalar::zero(field); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one(field);
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged input and mixed fields.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: "matrix row length",
                    expected: cols,
                    found: row.len(),
                });
            }
            for x in row {
                field.check_same(x.field())?;
                data.push(x);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64(field: Field, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count");
        Matrix {
            field,
            rows,
            cols,
            data: entries.iter().map(|&v| Scalar::from_i64(field, v)).collect(),
        }
    }

    pub fn from_sparse_rows(field: Field, cols: usize, rows: &[SparseVec]) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, x) in row {
                m.data[i * cols + j] = x.clone();
            }
        }
        m
    }

    pub fn column_vector(field: Field, v: Vec<Scalar>) -> Self {
        let rows = v.len();
        Matrix {
            field,
            rows,
            cols: 1,
            data: v,
        }
    }

    pub fn row_vector(field: Field, v: Vec<Scalar>) -> Self {
        let cols = v.len();
        Matrix {
            field,
            rows: 1,
            cols,
            data: v,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "entry field");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|i| sparse_from_dense(self.row(i))).collect()
    }

    pub fn sparse_columns(&self) -> Vec<SparseVec> {
        let mut cols = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_zero() {
                    cols[j].push((i, x.clone()));
                }
            }
        }
        cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        self.field.check_same(rhs.field)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product inner dimension",
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero(self.field);
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Image of a sparse vector.
    pub fn apply_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (j, x) in v {
            for i in 0..self.rows {
                let a = self.get(i, *j);
                if !a.is_zero() {
                    axpy_into(&mut acc, x, &[(i, a.clone())]);
                }
            }
        }
        acc.into_iter().collect()
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs)?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        self.same_shape(rhs)?;
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| c * a).collect(),
        }
    }

    fn same_shape(&self, rhs: &Matrix) -> Result<()> {
        self.field.check_same(rhs.field)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                context: "matrix shape",
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(())
    }

    /// Kronecker product in row-major word order: entry
    /// `(i1 * r2 + i2, j1 * c2 + j2)` is `a[i1][j1] * b[i2][j2]`.
    pub fn kron(&self, rhs: &Matrix) -> Result<Matrix> {
        self.field.check_same(rhs.field)?;
        let (r2, c2) = (rhs.rows, rhs.cols);
        let cols = self.cols * c2;
        let mut out = Self::zeros(self.field, self.rows * r2, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        let b = rhs.get(i2, j2);
                        if !b.is_zero() {
                            out.data[(i1 * r2 + i2) * cols + j1 * c2 + j2] = a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero(self.field);
        for i in 0..self.rows.min(self.cols) {
            acc = &acc + self.get(i, i);
        }
        acc
    }

    /// Reduced row echelon form. Pivots are the leftmost nonzero columns; the
    /// result is unique for the row space, so no tie-breaking is involved.
    pub fn rref(&self) -> Rref {
        let mut e = Echelon::new(self.field, self.cols);
        for row in self.sparse_rows() {
            e.insert(&row);
        }
        let rows = e.into_rref();
        let pivots = rows.iter().map(|r| r[0].0).collect::<Vec<_>>();
        Rref {
            rank: rows.len(),
            matrix: Matrix::from_sparse_rows(self.field, self.cols, &rows),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.field, self.cols);
        for row in self.sparse_rows() {
            e.insert(&row);
        }
        e.rank()
    }

    /// Spanning vectors of the null space, one per free column.
    pub fn nullspace_vectors(&self) -> Vec<SparseVec> {
        let r = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &r.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v: Vec<(usize, Scalar)> = r
                    .pivots
                    .iter()
                    .enumerate()
                    .filter_map(|(k, &p)| {
                        let x = r.matrix.get(k, f);
                        (!x.is_zero()).then(|| (p, -x))
                    })
                    .collect();
                v.push((f, Scalar::one(self.field)));
                v.sort_by_key(|(c, _)| *c);
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "right-hand side length",
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Self::zeros(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.data[i * (self.cols + 1) + j] = self.get(i, j).clone();
            }
            aug.data[i * (self.cols + 1) + self.cols] = b[i].clone();
        }
        let r = aug.rref();
        if r.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(self.field); self.cols];
        for (k, &p) in r.pivots.iter().enumerate() {
            x[p] = r.matrix.get(k, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j).clone();
            }
            aug.data[i * 2 * n + n + i] = Scalar::one(self.field);
        }
        let r = aug.rref();
        if r.rank < n || r.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = r.matrix.get(i, n + j).clone();
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Row-major sparse matrix, used for large complex differentials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    field: Field,
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            field,
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    /// Builds from the images of the source basis vectors.
    pub fn from_columns(field: Field, nrows: usize, columns: Vec<SparseVec>) -> Self {
        let ncols = columns.len();
        let mut rows = vec![Vec::new(); nrows];
        for (j, col) in columns.into_iter().enumerate() {
            for (i, x) in col {
                rows[i].push((j, x));
            }
        }
        SparseMatrix {
            field,
            nrows,
            ncols,
            rows,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side.
        if self.ncols <= self.nrows {
            let mut e = Echelon::new(self.field, self.ncols);
            for row in &self.rows {
                e.insert(row);
            }
            e.rank()
        } else {
            self.transpose().rank_by_rows()
        }
    }

    fn rank_by_rows(&self) -> usize {
        let mut e = Echelon::new(self.field, self.ncols);
        for row in &self.rows {
            e.insert(row);
        }
        e.rank()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut rows = vec![Vec::new(); self.ncols];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, x) in row {
                rows[*j].push((i, x.clone()));
            }
        }
        SparseMatrix {
            field: self.field,
            nrows: self.ncols,
            ncols: self.nrows,
            rows,
        }
    }

    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        self.field.check_same(rhs.field)?;
        if self.ncols != rhs.nrows {
            return Err(Error::DimensionMismatch {
                context: "sparse product inner dimension",
                expected: self.ncols,
                found: rhs.nrows,
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BTreeMap::new();
                for (k, a) in row {
                    axpy_into(&mut acc, a, &rhs.rows[*k]);
                }
                acc.into_iter().collect()
            })
            .collect();
        Ok(SparseMatrix {
            field: self.field,
            nrows: self.nrows,
            ncols: rhs.ncols,
            rows,
        })
    }

    pub fn to_dense(&self) -> Matrix {
        Matrix::from_sparse_rows(self.field, self.ncols, &self.rows)
    }
}

impl From<&Matrix> for SparseMatrix {
    fn from(m: &Matrix) -> Self {
        SparseMatrix {
            field: m.field(),
            nrows: m.rows(),
            ncols: m.cols(),
            rows: m.sparse_rows(),
        }
    }
}
