use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{coordinates_at, Field, Matrix, Scalar, SparseVec};
use crate::tensor::apply_tensor_square;

use super::presentation::QuadraticPresentation;

/// Outcome of the relation-containment test `(M⊗M)(R_src) ⊆ R_dst`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismCheck {
    /// Row `k` holds the coordinates of the image of the `k`-th source
    /// relation in the canonical basis of the target relations.
    Valid { certificate: Vec<Vec<Scalar>> },
    /// The image of source relation `relation` leaves a nonzero residual.
    Invalid { relation: usize, residual: SparseVec },
}

impl MorphismCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, MorphismCheck::Valid { .. })
    }
}

pub fn is_morphism(src: &QuadraticPresentation, dst: &QuadraticPresentation, m: &Matrix) -> Result<MorphismCheck> {
    src.field().check_same(dst.field())?;
    src.field().check_same(m.field())?;
    if m.rows() != dst.n() || m.cols() != src.n() {
        return Err(Error::DimensionMismatch {
            context: "morphism matrix must be dst.n × src.n",
            expected: dst.n() * src.n(),
            found: m.rows() * m.cols(),
        });
    }
    let columns = m.sparse_columns();
    let target = dst.relations();
    let echelon = target.echelon();
    let pivots = target.pivots();
    let mut certificate = Vec::with_capacity(src.relations().dim());
    for (k, r) in src.relations().basis_sparse().iter().enumerate() {
        let image = apply_tensor_square(&columns, dst.n(), r);
        let residual = echelon.reduce(&image);
        if !residual.is_empty() {
            return Ok(MorphismCheck::Invalid { relation: k, residual });
        }
        certificate.push(coordinates_at(src.field(), &pivots, &image));
    }
    Ok(MorphismCheck::Valid { certificate })
}

/// A degree-1 matrix known to carry the source relations into the target
/// relations. Values exist only after verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMorphism {
    src: QuadraticPresentation,
    dst: QuadraticPresentation,
    matrix: Matrix,
    certificate: Vec<Vec<Scalar>>,
}

impl AlgebraMorphism {
    pub fn new(src: QuadraticPresentation, dst: QuadraticPresentation, matrix: Matrix) -> Result<Self> {
        match is_morphism(&src, &dst, &matrix)? {
            MorphismCheck::Valid { certificate } => Ok(AlgebraMorphism {
                src,
                dst,
                matrix,
                certificate,
            }),
            MorphismCheck::Invalid { relation, residual } => Err(Error::NotAMorphism {
                src: src.name().to_string(),
                dst: dst.name().to_string(),
                reason: format!(
                    "image of relation {relation} leaves residual on words {:?}",
                    residual.iter().map(|(c, _)| *c).collect::<Vec<_>>()
                ),
            }),
        }
    }

    pub fn identity(a: &QuadraticPresentation) -> Self {
        Self::new(a.clone(), a.clone(), Matrix::identity(a.field(), a.n())).expect("identity is a morphism")
    }

    pub fn zero(src: &QuadraticPresentation, dst: &QuadraticPresentation) -> Result<Self> {
        Self::new(src.clone(), dst.clone(), Matrix::zeros(src.field(), dst.n(), src.n()))
    }

    /// The identity matrix between two presentations on the same number of
    /// generators (associators, unit isomorphisms, …), verified.
    pub fn reshape(src: &QuadraticPresentation, dst: &QuadraticPresentation) -> Result<Self> {
        if src.n() != dst.n() {
            return Err(Error::DimensionMismatch {
                context: "reshape between generator spaces",
                expected: src.n(),
                found: dst.n(),
            });
        }
        Self::new(src.clone(), dst.clone(), Matrix::identity(src.field(), src.n()))
    }

    pub fn src(&self) -> &QuadraticPresentation {
        &self.src
    }

    pub fn dst(&self) -> &QuadraticPresentation {
        &self.dst
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn certificate(&self) -> &[Vec<Scalar>] {
        &self.certificate
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &AlgebraMorphism) -> Result<Self> {
        if !first.dst.same_object(&self.src) {
            return Err(Error::NotAMorphism {
                src: first.dst.name().to_string(),
                dst: self.src.name().to_string(),
                reason: "composition across different objects".into(),
            });
        }
        Self::new(first.src.clone(), self.dst.clone(), self.matrix.mul(&first.matrix)?)
    }

    /// `h^!`: the transpose, from the dual of the target to the dual of the
    /// source.
    pub fn dual(&self) -> Self {
        Self::new(self.dst.dual(), self.src.dual(), self.matrix.transpose())
            .expect("annihilators are functorial")
    }

    /// `self • other` between black products.
    pub fn black(&self, other: &AlgebraMorphism) -> Result<Self> {
        Self::new(
            self.src.black(&other.src)?,
            self.dst.black(&other.dst)?,
            self.matrix.kron(&other.matrix)?,
        )
    }

    /// `self ∘ other` between white products.
    pub fn white(&self, other: &AlgebraMorphism) -> Result<Self> {
        Self::new(
            self.src.white(&other.src)?,
            self.dst.white(&other.dst)?,
            self.matrix.kron(&other.matrix)?,
        )
    }

    /// Equality (`(M⊗M)R = R`) for an invertible endomorphism.
    pub fn is_automorphism(&self) -> bool {
        automorphism_check(&self.src, &self.matrix) && self.src.same_object(&self.dst)
    }
}

impl fmt::Display for AlgebraMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: {}", self.src.name(), self.dst.name(), self.matrix)
    }
}

/// `M` is invertible and `(M⊗M)(R) = R` exactly.
pub fn automorphism_check(a: &QuadraticPresentation, m: &Matrix) -> bool {
    if m.rows() != a.n() || m.cols() != a.n() || m.inverse().is_none() {
        return false;
    }
    // Invertibility makes (M⊗M) injective, so containment plus equal
    // dimension is equality.
    matches!(is_morphism(a, a, m), Ok(MorphismCheck::Valid { .. }))
}

/// An element of one graded component of an algebra, in normal coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    pub algebra: QuadraticPresentation,
    pub degree: usize,
    pub coords: Vec<Scalar>,
}

/// `Σ_i u_i ⊗ u^i` in the generator space of `A ∘ A^!`.
pub fn canonical_element(a: &QuadraticPresentation) -> Result<GradedElement> {
    Ok(GradedElement {
        algebra: a.white(&a.dual())?,
        degree: 1,
        coords: identity_tensor(a.field(), a.n()),
    })
}

fn identity_tensor(field: Field, n: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(field); n * n];
    for i in 0..n {
        v[i * n + i] = Scalar::one(field);
    }
    v
}

/// `d_A` as a `1 × n²` row on the generators of `A^! • A`.
pub fn evaluation_matrix(a: &QuadraticPresentation) -> Matrix {
    Matrix::row_vector(a.field(), identity_tensor(a.field(), a.n()))
}

/// `c_A` as an `n² × 1` column into the generators of `A ∘ A^!`.
pub fn coevaluation_matrix(a: &QuadraticPresentation) -> Matrix {
    Matrix::column_vector(a.field(), identity_tensor(a.field(), a.n()))
}

/// `c_A : I_• → A ∘ A^!`, verified.
pub fn coevaluation(a: &QuadraticPresentation) -> Result<AlgebraMorphism> {
    AlgebraMorphism::new(
        QuadraticPresentation::unit_black(a.field()),
        a.white(&a.dual())?,
        coevaluation_matrix(a),
    )
}

/// `d_A : A^! • A → I_∘`, verified.
pub fn evaluation(a: &QuadraticPresentation) -> Result<AlgebraMorphism> {
    AlgebraMorphism::new(
        a.dual().black(a)?,
        QuadraticPresentation::unit_white(a.field()),
        evaluation_matrix(a),
    )
}
