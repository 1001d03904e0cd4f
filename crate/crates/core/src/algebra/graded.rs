//! Graded components `A_m = V^{⊗m} / I_m` computed degree by degree.
//!
//! `I_m = I_{m-1}⊗V + V^{⊗(m-2)}⊗R`. The first summand is already in echelon
//! form (tensoring with a letter keeps leading ones at distinct columns), so
//! only the second needs elimination. Normal words are the non-pivot
//! columns; a pivot word reduces to a combination of normal words.

use crate::linalg::{Echelon, Field, Scalar, SparseVec, Subspace};
use crate::tensor::word_count;

use super::presentation::QuadraticPresentation;

const NOT_NORMAL: usize = usize::MAX;

#[derive(Debug, Clone)]
struct Component {
    ideal: Echelon,
    normal: Vec<usize>,
    position: Vec<usize>,
}

impl Component {
    fn from_ideal(ideal: Echelon) -> Self {
        let mut normal = Vec::new();
        let mut position = vec![NOT_NORMAL; ideal.ambient()];
        for w in 0..ideal.ambient() {
            if !ideal.is_pivot(w) {
                position[w] = normal.len();
                normal.push(w);
            }
        }
        Component {
            ideal,
            normal,
            position,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    field: Field,
    n: usize,
    components: Vec<Component>,
}

impl GradedAlgebra {
    /// Components `0..=max_degree`.
    pub fn new(a: &QuadraticPresentation, max_degree: usize) -> Self {
        let field = a.field();
        let n = a.n();
        let mut components = Vec::with_capacity(max_degree + 1);
        components.push(Component::from_ideal(Echelon::new(field, 1)));
        if max_degree >= 1 {
            components.push(Component::from_ideal(Echelon::new(field, n)));
        }
        let rels = a.relations().basis_sparse();
        for m in 2..=max_degree {
            let ambient = word_count(n, m);
            let mut ideal = Echelon::new(field, ambient);
            if m > 2 {
                let prev = &components[m - 1].ideal;
                for row in prev.rows() {
                    for k in 0..n {
                        ideal.push_normalized(row.iter().map(|(c, x)| (c * n + k, x.clone())).collect());
                    }
                }
            }
            let sq = n * n;
            for prefix in 0..word_count(n, m - 2) {
                for r in rels {
                    let v: SparseVec = r.iter().map(|(c, x)| (prefix * sq + c, x.clone())).collect();
                    ideal.insert(&v);
                }
            }
            components.push(Component::from_ideal(ideal));
        }
        GradedAlgebra {
            field,
            n,
            components,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_degree(&self) -> usize {
        self.components.len() - 1
    }

    pub fn dim(&self, m: usize) -> usize {
        self.components[m].normal.len()
    }

    /// Graded dimensions for degrees `0..=max_degree`.
    pub fn hilbert(&self) -> Vec<usize> {
        (0..self.components.len()).map(|m| self.dim(m)).collect()
    }

    /// Word indices of the normal basis of `A_m`, increasing.
    pub fn normal_words(&self, m: usize) -> &[usize] {
        &self.components[m].normal
    }

    /// `I_m` as a canonical subspace of `V^{⊗m}`.
    pub fn ideal(&self, m: usize) -> Subspace {
        Subspace::from_echelon(self.components[m].ideal.clone())
    }

    /// Image of the word `w ∈ V^{⊗m}` in `A_m`, in normal-basis positions.
    pub fn normal_form(&self, m: usize, w: usize) -> SparseVec {
        let c = &self.components[m];
        if c.position[w] != NOT_NORMAL {
            return vec![(c.position[w], Scalar::one(self.field))];
        }
        c.ideal
            .reduce(&vec![(w, Scalar::one(self.field))])
            .into_iter()
            .map(|(col, x)| (c.position[col], x))
            .collect()
    }

    /// Image of a general element of `V^{⊗m}`.
    pub fn reduce_vector(&self, m: usize, v: &SparseVec) -> SparseVec {
        let c = &self.components[m];
        c.ideal
            .reduce(v)
            .into_iter()
            .map(|(col, x)| (c.position[col], x))
            .collect()
    }

    /// `b_pos · x_j` for the normal basis element `b_pos` of `A_m`.
    pub fn right_multiply_generator(&self, m: usize, pos: usize, j: usize) -> SparseVec {
        let w = self.components[m].normal[pos];
        self.normal_form(m + 1, w * self.n + j)
    }

    /// `x_j · b_pos` for the normal basis element `b_pos` of `A_m`.
    pub fn left_multiply_generator(&self, j: usize, m: usize, pos: usize) -> SparseVec {
        let w = self.components[m].normal[pos];
        self.normal_form(m + 1, j * word_count(self.n, m) + w)
    }

    /// Product of normal basis elements `u ∈ A_p`, `v ∈ A_q`.
    pub fn multiply_basis(&self, p: usize, u: usize, q: usize, v: usize) -> SparseVec {
        let wu = self.components[p].normal[u];
        let wv = self.components[q].normal[v];
        self.normal_form(p + q, wu * word_count(self.n, q) + wv)
    }

    /// Product of arbitrary elements given in normal coordinates.
    pub fn multiply(&self, p: usize, a: &SparseVec, q: usize, b: &SparseVec) -> SparseVec {
        let mut acc = std::collections::BTreeMap::new();
        for (u, x) in a {
            for (v, y) in b {
                let xy = x * y;
                crate::linalg::axpy_into(&mut acc, &xy, &self.multiply_basis(p, *u, q, *v));
            }
        }
        acc.into_iter().collect()
    }
}

/// Degree-`m` piece of the two-sided ideal generated by the relations.
pub fn relation_space_in_degree(a: &QuadraticPresentation, m: usize) -> Subspace {
    if m < 2 {
        return Subspace::zero(a.field(), word_count(a.n(), m));
    }
    GradedAlgebra::new(a, m).ideal(m)
}

pub fn graded_dim(a: &QuadraticPresentation, m: usize) -> usize {
    GradedAlgebra::new(a, m).dim(m)
}

pub fn hilbert(a: &QuadraticPresentation, max: usize) -> Vec<usize> {
    GradedAlgebra::new(a, max).hilbert()
}
