//! Word indexing of tensor powers and the permutations between them.
//!
//! Every coordinate of `V^{⊗m}` is a word `(l_0, …, l_{m-1})` over an
//! alphabet of size `n`, stored at the big-endian index
//! `Σ l_j · n^(m-1-j)`. All modules go through [`WordIndex`] and the
//! permutations here rather than doing their own index arithmetic.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{axpy_into, Matrix, Scalar, SparseVec, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordIndex {
    n: usize,
    letters: Vec<usize>,
}

impl WordIndex {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroAlphabet);
        }
        if let Some(&bad) = letters.iter().find(|&&l| l >= n) {
            return Err(Error::DimensionMismatch {
                context: "letter outside alphabet",
                expected: n,
                found: bad,
            });
        }
        Ok(WordIndex { n, letters })
    }

    pub fn from_index(n: usize, len: usize, mut index: usize) -> Self {
        let mut letters = vec![0; len];
        for slot in letters.iter_mut().rev() {
            *slot = index % n;
            index /= n;
        }
        WordIndex { n, letters }
    }

    pub fn index(&self) -> usize {
        self.letters.iter().fold(0, |acc, &l| acc * self.n + l)
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    /// Concatenation, matching `index(uv) = index(u) · n^|v| + index(v)`.
    pub fn concat(&self, other: &WordIndex) -> WordIndex {
        assert_eq!(self.n, other.n, "alphabet mismatch");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WordIndex { n: self.n, letters }
    }
}

/// `n^m`, the number of words of length `m`.
pub fn word_count(n: usize, m: usize) -> usize {
    n.pow(m as u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PermutationMap {
    image: Vec<usize>,
}

impl PermutationMap {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &i in &image {
            if i >= image.len() || seen[i] {
                return Err(Error::InvalidPresentation(
                    "permutation image is not a bijection".into(),
                ));
            }
            seen[i] = true;
        }
        Ok(PermutationMap { image })
    }

    pub fn identity(size: usize) -> Self {
        PermutationMap {
            image: (0..size).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.image.len()
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> PermutationMap {
        let mut inv = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        PermutationMap { image: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PermutationMap) -> PermutationMap {
        assert_eq!(self.size(), other.size(), "permutation sizes");
        PermutationMap {
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        }
    }

    /// The permutation `σ ⊗ σ` on pairs of letters.
    pub fn tensor_square(&self) -> PermutationMap {
        let n = self.size();
        let mut image = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                image[a * n + b] = self.image[a] * n + self.image[b];
            }
        }
        PermutationMap { image }
    }

    pub fn apply_sparse(&self, v: &SparseVec) -> SparseVec {
        let mut out: SparseVec = v.iter().map(|(i, x)| (self.image[*i], x.clone())).collect();
        out.sort_by_key(|(i, _)| *i);
        out
    }

    /// Permutation matrix with `M e_i = e_{image[i]}`.
    pub fn to_matrix(&self, field: crate::linalg::Field) -> Matrix {
        let n = self.size();
        let mut m = Matrix::zeros(field, n, n);
        for (i, &j) in self.image.iter().enumerate() {
            m.set(j, i, Scalar::one(field));
        }
        m
    }
}

/// `u ⊗ u' ⊗ v ⊗ v' ↦ u ⊗ v ⊗ u' ⊗ v'`, from `U⊗U⊗V⊗V` into
/// `(U⊗V)⊗(U⊗V)`.
pub fn t23(n1: usize, n2: usize) -> Result<PermutationMap> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::ZeroAlphabet);
    }
    let n12 = n1 * n2;
    let mut image = vec![0; n12 * n12];
    for a in 0..n1 {
        for a2 in 0..n1 {
            for b in 0..n2 {
                for b2 in 0..n2 {
                    let src = ((a * n1 + a2) * n2 + b) * n2 + b2;
                    image[src] = (a * n2 + b) * n12 + (a2 * n2 + b2);
                }
            }
        }
    }
    Ok(PermutationMap { image })
}

/// `u ⊗ v ↦ v ⊗ u`, from `U⊗V` (sizes `n1`, `n2`) to `V⊗U`.
pub fn flip(n1: usize, n2: usize) -> Result<PermutationMap> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::ZeroAlphabet);
    }
    let mut image = vec![0; n1 * n2];
    for a in 0..n1 {
        for b in 0..n2 {
            image[a * n2 + b] = b * n1 + a;
        }
    }
    Ok(PermutationMap { image })
}

pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.kron(b)
}

/// Tensor product of two sparse vectors in word order.
pub fn kron_vectors(a: &SparseVec, b: &SparseVec, b_len: usize) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (i, x) in a {
        for (j, y) in b {
            out.push((i * b_len + j, x * y));
        }
    }
    out
}

/// A linear map applied to a subspace: by permutation or by matrix.
pub enum LinearMap<'a> {
    Permutation(&'a PermutationMap),
    Matrix(&'a Matrix),
}

pub fn push_subspace(map: LinearMap<'_>, s: &Subspace) -> Result<Subspace> {
    match map {
        LinearMap::Permutation(p) => {
            if p.size() != s.ambient_dim() {
                return Err(Error::DimensionMismatch {
                    context: "permutation size vs subspace ambient",
                    expected: s.ambient_dim(),
                    found: p.size(),
                });
            }
            let rows: Vec<SparseVec> = s.basis_sparse().iter().map(|v| p.apply_sparse(v)).collect();
            Ok(Subspace::span(s.field(), s.ambient_dim(), rows.iter()))
        }
        LinearMap::Matrix(m) => s.image(m),
    }
}

/// `(M ⊗ M) v` for `v` in `V⊗V`, computed from sparse columns of `M`
/// without materializing the Kronecker square.
pub fn apply_tensor_square(columns: &[SparseVec], target_n: usize, v: &SparseVec) -> SparseVec {
    let src_n = columns.len();
    let mut acc = BTreeMap::new();
    for (idx, x) in v {
        let (a, b) = (idx / src_n, idx % src_n);
        for (i, y) in &columns[a] {
            let xy = x * y;
            let row: SparseVec = columns[b]
                .iter()
                .map(|(j, z)| (i * target_n + j, z.clone()))
                .collect();
            axpy_into(&mut acc, &xy, &row);
        }
    }
    acc.into_iter().collect()
}
