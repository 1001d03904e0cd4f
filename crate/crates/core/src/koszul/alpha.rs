use crate::algebra::{is_morphism, QuadraticPresentation};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// `α = Σ_i u_i ⊗ u^i` in `A_1 ⊗ A^!_1`, word order `i * n + j`.
pub fn alpha(a: &QuadraticPresentation) -> Vec<Scalar> {
    alpha_unchecked(&Matrix::identity(a.field(), a.n()))
}

/// `α_h = Σ_i h(u_i) ⊗ u^i`; its coordinates are the entries of `h`
/// read row by row.
pub fn alpha_h(a: &QuadraticPresentation, h: &Matrix) -> Result<Vec<Scalar>> {
    if !is_morphism(a, a, h)?.is_valid() {
        return Err(Error::NotAMorphism {
            src: a.name().to_string(),
            dst: a.name().to_string(),
            reason: "alpha_h needs an endomorphism".into(),
        });
    }
    Ok(alpha_unchecked(h))
}

fn alpha_unchecked(h: &Matrix) -> Vec<Scalar> {
    h.entries().to_vec()
}

/// Outcome of the `(d_h)² = 0` test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhSquare {
    pub zero: bool,
    /// `α_h²` in `A_2 ⊗ A^!_2`, as a `dim A_2 × dim A^!_2` coefficient matrix.
    pub witness: Matrix,
}

/// Computes `α_h² = Σ_{i,j} h(u_i)h(u_j) ⊗ u^i u^j` in `A_2 ⊗ A^!_2`.
///
/// As an element of `V⊗V ⊗ (V⊗V)*` this is the matrix `h⊗h`; reducing
/// both factors gives `P_A (h⊗h) P_{A^!}ᵀ`, where `P` projects onto normal
/// words. It vanishes exactly when `(h⊗h)(R) ⊆ R`, so for maps that are
/// not endomorphisms the witness is nonzero.
pub fn dh_square_is_zero(a: &QuadraticPresentation, h: &Matrix) -> Result<DhSquare> {
    if h.rows() != a.n() || h.cols() != a.n() {
        return Err(Error::DimensionMismatch {
            context: "endomorphism must be n × n",
            expected: a.n() * a.n(),
            found: h.rows() * h.cols(),
        });
    }
    let pa = a.relations().quotient_data().proj;
    let pd = a.relations().annihilator().quotient_data().proj;
    let witness = pa.mul(&h.kron(h)?)?.mul(&pd.transpose())?;
    Ok(DhSquare {
        zero: witness.is_zero(),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GradedAlgebra;
    use crate::linalg::{axpy_into, Field};
    use std::collections::BTreeMap;

    const Q: Field = Field::Rationals;

    #[test]
    fn alpha_examples() {
        let one = QuadraticPresentation::free(Q, 1);
        assert_eq!(alpha(&one), vec![Scalar::one(Q)]);
        let s = QuadraticPresentation::symmetric(Q, 2);
        let h = Matrix::from_i64(Q, 2, 2, &[1, 0, 0, 2]);
        let expected: Vec<Scalar> = [1, 0, 0, 2].iter().map(|&v| Scalar::from_i64(Q, v)).collect();
        assert_eq!(alpha_h(&s, &h).unwrap(), expected);
        let two = Matrix::identity(Q, 2).scale(&Scalar::from_i64(Q, 2));
        let doubled: Vec<Scalar> = alpha(&s).iter().map(|x| x * &Scalar::from_i64(Q, 2)).collect();
        assert_eq!(alpha_h(&s, &two).unwrap(), doubled);
        assert!(alpha_h(&s, &Matrix::zeros(Q, 2, 2)).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn alpha_h_rejects_non_endomorphisms() {
        let s = QuadraticPresentation::from_relations(
            Q,
            "xx",
            vec!["x".into(), "y".into()],
            [vec![(0, Scalar::one(Q))]].iter(),
        )
        .unwrap();
        let swap = Matrix::from_i64(Q, 2, 2, &[0, 1, 1, 0]);
        assert!(alpha_h(&s, &swap).is_err());
        assert!(!dh_square_is_zero(&s, &swap).unwrap().zero);
    }

    /// Oracle: expand `Σ h(u_i)h(u_j) ⊗ u^i u^j` word by word and reduce
    /// each factor with the graded-component normal forms.
    fn expanded_square(a: &QuadraticPresentation, h: &Matrix) -> bool {
        let ga = GradedAlgebra::new(a, 2);
        let gd = GradedAlgebra::new(&a.dual(), 2);
        let n = a.n();
        let b2 = gd.dim(2);
        let mut acc = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                let dual_part = gd.normal_form(2, i * n + j);
                for p in 0..n {
                    for q in 0..n {
                        let coeff = h.get(p, i) * h.get(q, j);
                        if coeff.is_zero() {
                            continue;
                        }
                        for (s, x) in ga.normal_form(2, p * n + q) {
                            let row: Vec<_> = dual_part.iter().map(|(t, y)| (s * b2 + t, &x * y)).collect();
                            axpy_into(&mut acc, &coeff, &row);
                        }
                    }
                }
            }
        }
        acc.is_empty()
    }

    #[test]
    fn identity_squares_to_zero() {
        for a in [
            QuadraticPresentation::free(Q, 1),
            QuadraticPresentation::symmetric(Q, 3),
            QuadraticPresentation::exterior(Q, 2),
            QuadraticPresentation::embed_vector_space(Q, 2),
        ] {
            let id = Matrix::identity(Q, a.n());
            assert!(dh_square_is_zero(&a, &id).unwrap().zero);
            assert!(expanded_square(&a, &id));
        }
    }

    #[test]
    fn matches_expansion_oracle_on_random_maps() {
        use rand::{Rng, SeedableRng};
        let f = Field::gf(7).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for c in 0..5 {
            let a = QuadraticPresentation::random(f, 2, c, &mut rng).unwrap();
            for _ in 0..10 {
                let entries: Vec<i64> = (0..4).map(|_| rng.random_range(0..7)).collect();
                let h = Matrix::from_i64(f, 2, 2, &entries);
                let fast = dh_square_is_zero(&a, &h).unwrap().zero;
                assert_eq!(fast, expanded_square(&a, &h));
                assert_eq!(fast, is_morphism(&a, &a, &h).unwrap().is_valid());
            }
        }
    }
}
