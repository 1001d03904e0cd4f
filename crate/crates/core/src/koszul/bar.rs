//! Reduced bar complex of the augmentation ideal, one internal degree at a
//! time. Position `p` in internal degree `m` is spanned by `[a_1|…|a_p]`
//! with `a_i` in `A_{k_i}`, `k_i ≥ 1`, `Σ k_i = m`, and
//! `d[a_1|…|a_p] = Σ_{i=1}^{p-1} (-1)^i [a_1|…|a_i a_{i+1}|…|a_p]`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{GradedAlgebra, QuadraticPresentation};
use crate::exec::Exec;
use crate::linalg::{axpy_into, Scalar, SparseMatrix, SparseVec};

/// Homology dimensions by (homological degree `p`, internal degree `m`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidegreeTable {
    /// `rows[m][p]` for `0 ≤ p ≤ m`.
    rows: Vec<Vec<usize>>,
}

impl BidegreeTable {
    pub fn max_degree(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, p: usize, m: usize) -> usize {
        if p > m {
            0
        } else {
            self.rows[m][p]
        }
    }

    pub fn row(&self, m: usize) -> &[usize] {
        &self.rows[m]
    }
}

/// Ordered compositions of `m` into `p` positive parts, lexicographic.
pub fn compositions(m: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(m: usize, p: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p == 0 {
            if m == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if m < p {
            return;
        }
        for k in 1..=m - (p - 1) {
            prefix.push(k);
            go(m - k, p - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, p, &mut Vec::new(), &mut out);
    out
}

/// Basis bookkeeping for one bar position: each composition owns a block
/// of consecutive indices, mixed-radix over the component dimensions.
struct Position {
    blocks: Vec<(Vec<usize>, usize)>,
    offset_of: HashMap<Vec<usize>, usize>,
    dim: usize,
}

impl Position {
    fn new(a: &GradedAlgebra, m: usize, p: usize) -> Self {
        let mut blocks = Vec::new();
        let mut offset_of = HashMap::new();
        let mut dim = 0;
        for comp in compositions(m, p) {
            let size: usize = comp.iter().map(|&k| a.dim(k)).product();
            if size == 0 {
                continue;
            }
            offset_of.insert(comp.clone(), dim);
            blocks.push((comp, dim));
            dim += size;
        }
        Position { blocks, offset_of, dim }
    }
}

fn split_index(a: &GradedAlgebra, comp: &[usize], mut idx: usize) -> Vec<usize> {
    let mut digits = vec![0; comp.len()];
    for (slot, &k) in digits.iter_mut().zip(comp).rev() {
        let d = a.dim(k);
        *slot = idx % d;
        idx /= d;
    }
    digits
}

fn join_index(a: &GradedAlgebra, comp: &[usize], digits: &[usize]) -> usize {
    comp.iter().zip(digits).fold(0, |acc, (&k, &d)| acc * a.dim(k) + d)
}

/// `d_p : B_p → B_{p-1}` in internal degree `m`, for `p ≥ 2`.
fn bar_differential(a: &GradedAlgebra, m: usize, p: usize) -> SparseMatrix {
    let src = Position::new(a, m, p);
    let dst = Position::new(a, m, p - 1);
    let field = a.field();
    let mut columns = Vec::with_capacity(src.dim);
    for (comp, offset) in &src.blocks {
        let size: usize = comp.iter().map(|&k| a.dim(k)).product();
        for local in 0..size {
            let digits = split_index(a, comp, local);
            let mut acc = BTreeMap::new();
            for i in 0..p - 1 {
                let product = a.multiply_basis(comp[i], digits[i], comp[i + 1], digits[i + 1]);
                if product.is_empty() {
                    continue;
                }
                let mut merged = comp[..i].to_vec();
                merged.push(comp[i] + comp[i + 1]);
                merged.extend_from_slice(&comp[i + 2..]);
                let base = dst.offset_of[&merged];
                let sign = if (i + 1) % 2 == 0 {
                    Scalar::one(field)
                } else {
                    -&Scalar::one(field)
                };
                let mut d2 = digits[..i].to_vec();
                d2.push(0);
                d2.extend_from_slice(&digits[i + 2..]);
                let row: SparseVec = product
                    .iter()
                    .map(|(c, x)| {
                        d2[i] = *c;
                        (base + join_index(a, &merged, &d2), x.clone())
                    })
                    .collect();
                axpy_into(&mut acc, &sign, &row);
            }
            columns.push(acc.into_iter().collect());
        }
        debug_assert_eq!(*offset + size, columns.len());
    }
    SparseMatrix::from_columns(field, dst.dim, columns)
}

/// Position dimensions `dim B_p` for `p = 0..=m` in internal degree `m`.
pub fn bar_dims(a: &GradedAlgebra, m: usize) -> Vec<usize> {
    if m == 0 {
        return vec![1];
    }
    std::iter::once(0).chain((1..=m).map(|p| Position::new(a, m, p).dim)).collect()
}

/// Homology of internal degree `m`, indexed by `p = 0..=m`.
fn degree_row(a: &GradedAlgebra, m: usize, exec: Exec) -> Vec<usize> {
    if m == 0 {
        return vec![1];
    }
    let dims = bar_dims(a, m);
    // rank[p] = rank of d_p : B_p → B_{p-1}; d_1 = 0 as B_0 vanishes for m ≥ 1
    let ranks_hi: Vec<usize> = exec.map((2..=m).collect(), |p| bar_differential(a, m, p).rank());
    let rank = |p: usize| if p >= 2 && p <= m { ranks_hi[p - 2] } else { 0 };
    (0..=m).map(|p| dims[p] - rank(p) - rank(p + 1)).collect()
}

pub fn bar_homology(a: &QuadraticPresentation, m_max: usize, exec: Exec) -> BidegreeTable {
    let g = GradedAlgebra::new(a, m_max);
    bar_homology_graded(&g, m_max, exec)
}

pub fn bar_homology_graded(g: &GradedAlgebra, m_max: usize, exec: Exec) -> BidegreeTable {
    BidegreeTable {
        rows: (0..=m_max).map(|m| degree_row(g, m, exec)).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtVerdict {
    pub holds: bool,
    /// Internal degrees actually examined (stops at the first failure).
    pub checked_up_to: usize,
    /// `(p, m, value)` of the first off-diagonal or mismatching entry.
    pub failure: Option<(usize, usize, usize)>,
    pub table: BidegreeTable,
}

/// First entry of row `m` that is off the diagonal and nonzero, or on the
/// diagonal and different from `dual_dim`.
fn off_diagonal(row: &[usize], dual_dim: usize) -> Option<(usize, usize)> {
    let m = row.len() - 1;
    (0..=m)
        .find(|&p| if p == m { row[p] != dual_dim } else { row[p] != 0 })
        .map(|p| (p, row[p]))
}

/// `(p, m, value)` of the first failing entry of a full table.
pub fn diagonal_failure(table: &BidegreeTable, dual_dims: &[usize]) -> Option<(usize, usize, usize)> {
    (1..=table.max_degree()).find_map(|m| off_diagonal(table.row(m), dual_dims[m]).map(|(p, v)| (p, m, v)))
}

/// Bar homology is concentrated on the diagonal up to `m_max` and the
/// diagonal matches the dual algebra's graded dimensions.
pub fn ext_diagonal_check(a: &QuadraticPresentation, m_max: usize, exec: Exec) -> ExtVerdict {
    let g = GradedAlgebra::new(a, m_max);
    let dual_dims = crate::algebra::hilbert(&a.dual(), m_max);
    let mut rows = vec![vec![1]];
    for m in 1..=m_max {
        let row = degree_row(&g, m, exec);
        let bad = off_diagonal(&row, dual_dims[m]);
        rows.push(row);
        if let Some((p, value)) = bad {
            return ExtVerdict {
                holds: false,
                checked_up_to: m,
                failure: Some((p, m, value)),
                table: BidegreeTable { rows },
            };
        }
    }
    ExtVerdict {
        holds: true,
        checked_up_to: m_max,
        failure: None,
        table: BidegreeTable { rows },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    const Q: Field = Field::Rationals;

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(5, 3).len(), 6);
        assert!(compositions(2, 3).is_empty());
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn sym2_table() {
        let t = bar_homology(&QuadraticPresentation::symmetric(Q, 2), 4, Exec::Sequential);
        assert_eq!(t.get(0, 0), 1);
        assert_eq!([t.get(1, 1), t.get(2, 2), t.get(3, 3), t.get(4, 4)], [2, 1, 0, 0]);
        for m in 1..=4 {
            for p in 0..m {
                assert_eq!(t.get(p, m), 0, "p={p} m={m}");
            }
            assert_eq!(t.get(m + 1, m), 0);
        }
    }

    #[test]
    fn free_two_table() {
        let t = bar_homology(&QuadraticPresentation::free(Q, 2), 4, Exec::Sequential);
        assert_eq!(t.get(1, 1), 2);
        for m in 2..=4 {
            for p in 1..=m {
                assert_eq!(t.get(p, m), 0);
            }
        }
    }

    #[test]
    fn differential_squares_to_zero() {
        let g = GradedAlgebra::new(&QuadraticPresentation::exterior(Q, 2), 5);
        for m in 3..=5 {
            for p in 3..=m {
                let d_hi = bar_differential(&g, m, p);
                let d_lo = bar_differential(&g, m, p - 1);
                assert!(d_lo.mul(&d_hi).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn ext_check_examples() {
        for a in [QuadraticPresentation::symmetric(Q, 2), QuadraticPresentation::exterior(Q, 2)] {
            let v = ext_diagonal_check(&a, 4, Exec::Parallel);
            assert!(v.holds);
            assert_eq!(v.checked_up_to, 4);
        }
    }
}
