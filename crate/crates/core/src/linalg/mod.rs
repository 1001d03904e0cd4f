//! Exact linear algebra over Q and GF(p).

mod echelon;
mod field;
mod matrix;
mod subspace;

pub use echelon::{axpy_into, dense_from_sparse, scale_sparse, sparse_from_dense, Echelon, SparseVec};
pub use field::{Field, Prime, Scalar};
pub use matrix::{Matrix, Rref, SparseMatrix};
pub use subspace::{coordinates_at, QuotientData, Subspace};

pub fn rref(m: &Matrix) -> Rref {
    m.rref()
}

/// Null space of `m` as a canonical subspace of the column space.
pub fn kernel(m: &Matrix) -> Subspace {
    Subspace::span(m.field(), m.cols(), m.nullspace_vectors().iter())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> Field {
        Field::gf(p).unwrap()
    }

    fn small_matrix(p: u64) -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..6).prop_flat_map(move |(r, c)| {
            prop::collection::vec(0i64..p as i64, r * c)
                .prop_map(move |v| Matrix::from_i64(gf(p), r, c, &v))
        })
    }

    fn matrix_pair(p: u64) -> impl Strategy<Value = (Matrix, Matrix)> {
        (1usize..5, 1usize..5, 1usize..6).prop_flat_map(move |(r1, r2, c)| {
            (
                prop::collection::vec(0i64..p as i64, r1 * c),
                prop::collection::vec(0i64..p as i64, r2 * c),
            )
                .prop_map(move |(a, b)| (Matrix::from_i64(gf(p), r1, c, &a), Matrix::from_i64(gf(p), r2, c, &b)))
        })
    }

    fn int_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(-4i64..5, r * c).prop_map(move |v| (r, c, v))
        })
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&Matrix::identity(Field::Rationals, 3)).is_zero());
        assert!(kernel(&Matrix::zeros(Field::Rationals, 2, 3)).is_full());
        let k = kernel(&Matrix::from_i64(gf(5), 1, 2, &[1, 1]));
        assert_eq!(k.basis(), Matrix::from_i64(gf(5), 1, 2, &[1, 4]));
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix(5)) {
            let once = rref(&m);
            let twice = rref(&once.matrix);
            prop_assert_eq!(once, twice);
        }

        #[test]
        fn rank_nullity(m in small_matrix(7)) {
            let k = kernel(&m);
            prop_assert_eq!(k.dim() + m.rank(), m.cols());
            for v in k.basis_sparse() {
                prop_assert!(m.apply_sparse(v).is_empty());
            }
        }

        #[test]
        fn annihilator_is_an_involution((r, c, v) in int_matrix()) {
            let m = Matrix::from_i64(Field::Rationals, r, c, &v);
            let s = Subspace::row_space(&m);
            prop_assert_eq!(s.annihilator().annihilator(), s);
        }

        #[test]
        fn modular_law((a, b) in matrix_pair(3)) {
            let sa = Subspace::row_space(&a);
            let sb = Subspace::row_space(&b);
            let sum = sa.sum(&sb).unwrap();
            let meet = sa.intersect(&sb).unwrap();
            prop_assert_eq!(sa.dim() + sb.dim(), sum.dim() + meet.dim());
            prop_assert!(sum.contains(&sa).unwrap() && sa.contains(&meet).unwrap());
        }
    }

    /// Reported, not asserted universally: ranks over Q and GF(p) agree for
    /// integer matrices whose rational pivots stay units mod p.
    #[test]
    fn rational_and_modular_ranks_mostly_agree() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut agree = 0;
        let trials = 200;
        for _ in 0..trials {
            let entries: Vec<i64> = (0..12).map(|_| rng.random_range(-3..4)).collect();
            let over_q = Matrix::from_i64(Field::Rationals, 3, 4, &entries).rank();
            let over_p = Matrix::from_i64(gf(101), 3, 4, &entries).rank();
            assert!(over_p <= over_q);
            if over_p == over_q {
                agree += 1;
            }
        }
        println!("rank agreement Q vs GF(101): {agree}/{trials}");
        assert!(agree > trials * 9 / 10);
    }
}
