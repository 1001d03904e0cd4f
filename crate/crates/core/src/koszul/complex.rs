use crate::algebra::{GradedAlgebra, QuadraticPresentation};
use crate::exec::Exec;
use crate::linalg::{Field, Scalar, SparseMatrix, SparseVec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// Differentials raise the position index.
    Cochain,
    /// Differentials lower the position index.
    Chain,
}

/// A finite piece of a complex. Terms are listed in the order the
/// differentials run: `differentials[k]` maps term `k` to term `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexSlice {
    pub internal_degree: usize,
    pub convention: Convention,
    /// Position index of each listed term.
    pub positions: Vec<usize>,
    pub position_dims: Vec<usize>,
    pub differentials: Vec<SparseMatrix>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub internal_degree: usize,
    pub positions: Vec<usize>,
    pub position_dims: Vec<usize>,
    pub ranks: Vec<usize>,
    pub homology_dims: Vec<usize>,
    pub exact: bool,
}

impl ComplexSlice {
    fn new(
        internal_degree: usize,
        convention: Convention,
        positions: Vec<usize>,
        position_dims: Vec<usize>,
        differentials: Vec<SparseMatrix>,
    ) -> Self {
        assert_eq!(differentials.len() + 1, position_dims.len().max(1));
        for (k, d) in differentials.iter().enumerate() {
            assert_eq!((d.ncols(), d.nrows()), (position_dims[k], position_dims[k + 1]));
        }
        for pair in differentials.windows(2) {
            let composite = pair[1].mul(&pair[0]).expect("shapes checked");
            assert!(composite.is_zero(), "d∘d ≠ 0 in internal degree {internal_degree}");
        }
        ComplexSlice {
            internal_degree,
            convention,
            positions,
            position_dims,
            differentials,
        }
    }

    /// Ranks and homology at every listed term. Terms at the two ends see
    /// only one differential.
    pub fn homology(&self, exec: Exec) -> HomologyReport {
        let ranks: Vec<usize> = exec.map(self.differentials.iter().collect(), |d| d.rank());
        let homology_dims: Vec<usize> = (0..self.position_dims.len())
            .map(|k| {
                let out = ranks.get(k).copied().unwrap_or(0);
                let inc = if k > 0 { ranks[k - 1] } else { 0 };
                self.position_dims[k] - out - inc
            })
            .collect();
        // Internal degree 0 of the second complex is the ground field itself
        // (the augmentation), counted as exact.
        let augmentation = self.convention == Convention::Chain && self.internal_degree == 0;
        HomologyReport {
            internal_degree: self.internal_degree,
            positions: self.positions.clone(),
            position_dims: self.position_dims.clone(),
            exact: augmentation || homology_dims.iter().all(|&h| h == 0),
            ranks,
            homology_dims,
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.position_dims)
    }
}

fn alternating_sum(v: &[usize]) -> i64 {
    v.iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum()
}

/// Graded components of `A` and `A^!` up to a common degree.
#[derive(Debug, Clone)]
pub struct KoszulPair {
    pub algebra: GradedAlgebra,
    pub dual: GradedAlgebra,
}

impl KoszulPair {
    pub fn new(a: &QuadraticPresentation, max_degree: usize) -> Self {
        KoszulPair {
            algebra: GradedAlgebra::new(a, max_degree),
            dual: GradedAlgebra::new(&a.dual(), max_degree),
        }
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn max_degree(&self) -> usize {
        self.algebra.max_degree()
    }
}

/// Positions `i = 0..=i_max` carrying `A_{i+offset} ⊗ A^!_i`, with
/// `d(a⊗ξ) = Σ_j x_j a ⊗ x̄^j ξ`. Needs components up to
/// `i_max + offset` and `i_max`.
pub fn first_complex_slice(pair: &KoszulPair, offset: usize, i_max: usize) -> ComplexSlice {
    let (a, d) = (&pair.algebra, &pair.dual);
    let n = a.n();
    let dims: Vec<usize> = (0..=i_max).map(|i| a.dim(i + offset) * d.dim(i)).collect();
    let differentials = (0..i_max)
        .map(|i| {
            let (p, q) = (i + offset, i);
            let bq_next = d.dim(q + 1);
            let columns = (0..a.dim(p))
                .flat_map(|u| (0..d.dim(q)).map(move |v| (u, v)))
                .map(|(u, v)| {
                    let mut acc = std::collections::BTreeMap::new();
                    for j in 0..n {
                        let left = a.left_multiply_generator(j, p, u);
                        let right = d.left_multiply_generator(j, q, v);
                        for (s, x) in &left {
                            let row: SparseVec = right.iter().map(|(t, y)| (s * bq_next + t, x * y)).collect();
                            crate::linalg::axpy_into(&mut acc, &Scalar::one(a.field()), &row);
                        }
                    }
                    acc.into_iter().collect()
                })
                .collect();
            SparseMatrix::from_columns(a.field(), dims[i + 1], columns)
        })
        .collect();
    ComplexSlice::new(offset, Convention::Cochain, (0..=i_max).collect(), dims, differentials)
}

/// Internal degree `m`: terms `A_{m-i} ⊗ (A^!_i)*` for `i = m, …, 0`, with
/// `d(a⊗φ) = Σ_j a x_j ⊗ φ(x̄^j ·)`.
pub fn second_complex_slice(pair: &KoszulPair, m: usize) -> ComplexSlice {
    let (a, d) = (&pair.algebra, &pair.dual);
    let field = a.field();
    let n = a.n();
    let positions: Vec<usize> = (0..=m).rev().collect();
    let dims: Vec<usize> = positions.iter().map(|&i| a.dim(m - i) * d.dim(i)).collect();
    let differentials = positions
        .windows(2)
        .enumerate()
        .map(|(k, w)| {
            let i = w[0];
            let p = m - i;
            let b_prev = d.dim(i - 1);
            // transpose of left multiplication A^!_{i-1} → A^!_i by x̄^j:
            // for each β ∈ A^!_i the pairs (γ, [β in x̄^j γ])
            let dual_rows: Vec<Vec<Vec<(usize, Scalar)>>> = (0..n)
                .map(|j| {
                    let mut rows = vec![Vec::new(); d.dim(i)];
                    for g in 0..b_prev {
                        for (b, c) in d.left_multiply_generator(j, i - 1, g) {
                            rows[b].push((g, c));
                        }
                    }
                    rows
                })
                .collect();
            let columns = (0..a.dim(p))
                .flat_map(|u| (0..d.dim(i)).map(move |b| (u, b)))
                .map(|(u, b)| {
                    let mut acc = std::collections::BTreeMap::new();
                    for (j, rows_j) in dual_rows.iter().enumerate() {
                        if rows_j[b].is_empty() {
                            continue;
                        }
                        for (s, x) in a.right_multiply_generator(p, u, j) {
                            let row: SparseVec = rows_j[b].iter().map(|(g, y)| (s * b_prev + g, &x * y)).collect();
                            crate::linalg::axpy_into(&mut acc, &Scalar::one(field), &row);
                        }
                    }
                    acc.into_iter().collect()
                })
                .collect();
            SparseMatrix::from_columns(field, dims[k + 1], columns)
        })
        .collect();
    ComplexSlice::new(m, Convention::Chain, positions, dims, differentials)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulVerdict {
    /// Reports for `m = 1..`; shorter than requested only when stopped early.
    pub reports: Vec<HomologyReport>,
    pub max_degree: usize,
    pub koszul: bool,
}

/// Koszul up to `max`: every slice `1 ≤ m ≤ max` of the second complex is
/// exact. With `stop_early`, stops after the first non-exact slice.
pub fn koszul_verdict_with(pair: &KoszulPair, max: usize, exec: Exec, stop_early: bool) -> KoszulVerdict {
    let mut reports = Vec::new();
    if stop_early {
        for m in 1..=max {
            let r = second_complex_slice(pair, m).homology(exec);
            let exact = r.exact;
            reports.push(r);
            if !exact {
                break;
            }
        }
    } else {
        reports = exec.map((1..=max).collect(), |m| second_complex_slice(pair, m).homology(Exec::Sequential));
    }
    KoszulVerdict {
        koszul: reports.iter().all(|r| r.exact),
        reports,
        max_degree: max,
    }
}

pub fn koszul_verdict(a: &QuadraticPresentation, max: usize, exec: Exec) -> KoszulVerdict {
    koszul_verdict_with(&KoszulPair::new(a, max), max, exec, false)
}

/// Per degree `m = 1..=max`: `Σ_i (-1)^i dim A_{m-i} dim A^!_i = 0`.
pub fn euler_hilbert_test(a: &QuadraticPresentation, max: usize) -> Vec<bool> {
    let ha = crate::algebra::hilbert(a, max);
    let hd = crate::algebra::hilbert(&a.dual(), max);
    euler_from_hilbert(&ha, &hd)
}

pub fn euler_from_hilbert(ha: &[usize], hd: &[usize]) -> Vec<bool> {
    let max = ha.len().min(hd.len()) - 1;
    (1..=max)
        .map(|m| {
            let terms: Vec<usize> = (0..=m).map(|i| ha[m - i] * hd[i]).collect();
            alternating_sum(&terms) == 0
        })
        .collect()
}
