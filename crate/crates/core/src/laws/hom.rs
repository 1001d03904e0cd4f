//! Composition in internal Hom objects `Hom(U, V) = V∘U^!`.

use crate::algebra::{coevaluation, evaluation, AlgebraMorphism, QuadraticPresentation};
use crate::error::Result;
use crate::linalg::{Matrix, Scalar};

use super::check::{names, DiagramCheck, Path};
use super::structure::*;

type Q = QuadraticPresentation;

/// `(U3∘U2^!)•(U2∘U1^!) → U3∘U1^!`, contracting the middle `U2^!•U2`
/// pair: `f`, then `Id∘h`, then `Id∘(d∘Id)`, then the unit.
pub fn composition_map(u1: &Q, u2: &Q, u3: &Q) -> Result<AlgebraMorphism> {
    let (d1, d2) = (u1.dual(), u2.dual());
    let id3 = AlgebraMorphism::identity(u3);
    Path::of(&[
        structure_map_f(u3, &d2, &u2.white(&d1)?)?,
        id3.white(&structure_map_h(&d2, u2, &d1)?)?,
        id3.white(&evaluation(u2)?.white(&AlgebraMorphism::identity(&d1))?)?,
        id3.white(&unitor_white_left(&d1)?)?,
    ])?
    .into_morphism()
}

/// Direct formula for the composition on `Hom(U,U)`: generators
/// `(a,b)·(c,d) ↦ δ_bc (a,d)`.
pub fn contraction_matrix(u: &Q) -> Matrix {
    let n = u.n();
    let field = u.field();
    let mut m = Matrix::zeros(field, n * n, n.pow(4));
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                m.set(a * n + d, ((a * n + b) * n + b) * n + d, Scalar::one(field));
            }
        }
    }
    m
}

/// `l_U` is a morphism equal to the contraction, and `(Hom(U,U), l_U, c_U)`
/// is associative and unital.
pub fn check_hom_algebra(u: &Q) -> Result<Vec<DiagramCheck>> {
    let h = u.internal_hom(u)?;
    let l = composition_map(u, u, u)?;
    let unit = coevaluation(u)?;
    let id = AlgebraMorphism::identity(&h);
    let objs = names(&[u]);
    let composition = DiagramCheck::compare("hom-composition", objs.clone(), l.matrix().clone(), contraction_matrix(u));
    let assoc = DiagramCheck::paths(
        "hom-associativity",
        objs.clone(),
        Path::of(&[id.black(&l)?, l.clone()])?,
        Path::of(&[associator_black_inverse(&h, &h, &h)?, l.black(&id)?, l.clone()])?,
    )?;
    let right_unit = DiagramCheck::paths(
        "hom-unit-right",
        objs.clone(),
        Path::of(&[id.black(&unit)?, l.clone()])?,
        Path::start(&unitor_black_right(&h)?),
    )?;
    let left_unit = DiagramCheck::paths(
        "hom-unit-left",
        objs,
        Path::of(&[unit.black(&id)?, l])?,
        Path::start(&unitor_black_left(&h)?),
    )?;
    Ok(vec![composition, assoc, right_unit, left_unit])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    const Q_: Field = Field::Rationals;

    #[test]
    fn unit_black_hom_is_trivial() {
        let b = Q::unit_black(Q_);
        let l = composition_map(&b, &b, &b).unwrap();
        assert_eq!(l.matrix(), &Matrix::identity(Q_, 1));
    }

    #[test]
    fn sym2_hom_algebra() {
        let s = Q::symmetric(Q_, 2);
        let checks = check_hom_algebra(&s).unwrap();
        assert_eq!(checks.len(), 4);
        for c in &checks {
            assert!(c.passed, "{c}");
        }
        assert_eq!((checks[0].left.rows(), checks[0].left.cols()), (4, 16));
    }

    #[test]
    fn mixed_composition_is_a_morphism() {
        let (a, b, c) = (Q::exterior(Q_, 2), Q::symmetric(Q_, 2), Q::free(Q_, 1));
        let l = composition_map(&a, &b, &c).unwrap();
        assert!(l.dst().same_object(&a.internal_hom(&c).unwrap()));
    }
}
