//! The defining diagrams of a quadratic category and the adjunction
//! between `− • L` and `− ∘ L^!`.

use crate::algebra::{coevaluation, evaluation, AlgebraMorphism, QuadraticPresentation};
use crate::error::{Error, Result};

use super::check::{names, DiagramCheck, Path};
use super::structure::*;

type Q = QuadraticPresentation;

fn id(u: &Q) -> AlgebraMorphism {
    AlgebraMorphism::identity(u)
}

/// `(U1•(U2∘U3))•U4 → (U1•U2)∘(U3•U4)` through `c_•`, `Id•f`, `h` versus
/// `h•Id`, `f`.
pub fn mixed_associativity_black(u1: &Q, u2: &Q, u3: &Q, u4: &Q) -> Result<DiagramCheck> {
    let u23 = u2.white(u3)?;
    let left = Path::of(&[
        associator_black(u1, &u23, u4)?,
        id(u1).black(&structure_map_f(u2, u3, u4)?)?,
        structure_map_h(u1, u2, &u3.black(u4)?)?,
    ])?;
    let right = Path::of(&[
        structure_map_h(u1, u2, u3)?.black(&id(u4))?,
        structure_map_f(&u1.black(u2)?, u3, u4)?,
    ])?;
    DiagramCheck::paths("mixed-assoc-black", names(&[u1, u2, u3, u4]), left, right)
}

/// `(U1∘U2)•(U3∘U4) → U1∘((U2•U3)∘U4)` through `f`, `Id∘h` versus `h`,
/// `f∘Id`, `c_∘`.
pub fn mixed_associativity_white(u1: &Q, u2: &Q, u3: &Q, u4: &Q) -> Result<DiagramCheck> {
    let left = Path::of(&[
        structure_map_f(u1, u2, &u3.white(u4)?)?,
        id(u1).white(&structure_map_h(u2, u3, u4)?)?,
    ])?;
    let right = Path::of(&[
        structure_map_h(&u1.white(u2)?, u3, u4)?,
        structure_map_f(u1, u2, u3)?.white(&id(u4))?,
        associator_white(u1, &u2.black(u3)?, u4)?,
    ])?;
    DiagramCheck::paths("mixed-assoc-white", names(&[u1, u2, u3, u4]), left, right)
}

/// `I_••U → (U∘U^!)•U → U∘(U^!•U) → U∘I_∘ → U` is the unit isomorphism.
pub fn zigzag_left(u: &Q) -> Result<DiagramCheck> {
    let left = Path::of(&[
        coevaluation(u)?.black(&id(u))?,
        structure_map_f(u, &u.dual(), u)?,
        id(u).white(&evaluation(u)?)?,
        unitor_white_right(u)?,
    ])?;
    let right = Path::start(&unitor_black_left(u)?);
    DiagramCheck::paths("zigzag-left", names(&[u]), left, right)
}

/// `U^!•I_• → U^!•(U∘U^!) → (U^!•U)∘U^! → I_∘∘U^! → U^!` is the unit
/// isomorphism.
pub fn zigzag_right(u: &Q) -> Result<DiagramCheck> {
    let d = u.dual();
    let left = Path::of(&[
        id(&d).black(&coevaluation(u)?)?,
        structure_map_h(&d, u, &d)?,
        evaluation(u)?.white(&id(&d))?,
        unitor_white_left(&d)?,
    ])?;
    let right = Path::start(&unitor_black_right(&d)?);
    DiagramCheck::paths("zigzag-right", names(&[u]), left, right)
}

fn sources(maps: [&AlgebraMorphism; 3]) -> [Q; 3] {
    maps.map(|m| m.src().clone())
}

fn targets(maps: [&AlgebraMorphism; 3]) -> [Q; 3] {
    maps.map(|m| m.dst().clone())
}

fn arrow_names(maps: [&AlgebraMorphism; 3]) -> Vec<String> {
    maps.iter().map(|m| format!("{}>{}", m.src().name(), m.dst().name())).collect()
}

/// `h` is natural in all three arguments.
pub fn naturality_h(u1: &AlgebraMorphism, u2: &AlgebraMorphism, u3: &AlgebraMorphism) -> Result<DiagramCheck> {
    let [a1, a2, a3] = sources([u1, u2, u3]);
    let [b1, b2, b3] = targets([u1, u2, u3]);
    let left = Path::of(&[u1.black(&u2.white(u3)?)?, structure_map_h(&b1, &b2, &b3)?])?;
    let right = Path::of(&[structure_map_h(&a1, &a2, &a3)?, u1.black(u2)?.white(u3)?])?;
    DiagramCheck::paths("naturality-h", arrow_names([u1, u2, u3]), left, right)
}

/// `f` is natural in all three arguments.
pub fn naturality_f(u1: &AlgebraMorphism, u2: &AlgebraMorphism, u3: &AlgebraMorphism) -> Result<DiagramCheck> {
    let [a1, a2, a3] = sources([u1, u2, u3]);
    let [b1, b2, b3] = targets([u1, u2, u3]);
    let left = Path::of(&[u1.white(u2)?.black(u3)?, structure_map_f(&b1, &b2, &b3)?])?;
    let right = Path::of(&[structure_map_f(&a1, &a2, &a3)?, u1.white(&u2.black(u3)?)?])?;
    DiagramCheck::paths("naturality-f", arrow_names([u1, u2, u3]), left, right)
}

/// All six defining diagrams. Without explicit morphisms the naturality
/// squares use identities on `U1, U2, U3`.
pub fn check_axiom_diagrams(objects: [&Q; 4], maps: Option<[&AlgebraMorphism; 3]>) -> Result<Vec<DiagramCheck>> {
    let [u1, u2, u3, u4] = objects;
    let ids = [id(u1), id(u2), id(u3)];
    let maps = maps.unwrap_or([&ids[0], &ids[1], &ids[2]]);
    Ok(vec![
        mixed_associativity_black(u1, u2, u3, u4)?,
        mixed_associativity_white(u1, u2, u3, u4)?,
        zigzag_left(u1)?,
        zigzag_right(u1)?,
        naturality_h(maps[0], maps[1], maps[2])?,
        naturality_f(maps[0], maps[1], maps[2])?,
    ])
}

/// `u′ : U → N∘L^!` for `u : U•L → N`.
pub fn adjoint_right(u: &AlgebraMorphism, u_obj: &Q, l: &Q) -> Result<AlgebraMorphism> {
    if !u.src().same_object(&u_obj.black(l)?) {
        return Err(Error::NotAMorphism {
            src: u.src().name().to_string(),
            dst: u.dst().name().to_string(),
            reason: "source is not U•L".into(),
        });
    }
    Path::of(&[
        unitor_black_right_inverse(u_obj)?,
        id(u_obj).black(&coevaluation(l)?)?,
        structure_map_h(u_obj, l, &l.dual())?,
        u.white(&id(&l.dual()))?,
    ])?
    .into_morphism()
}

/// `v″ : U•L → N` for `v : U → N∘L^!`.
pub fn adjoint_left(v: &AlgebraMorphism, l: &Q, n: &Q) -> Result<AlgebraMorphism> {
    if !v.dst().same_object(&n.white(&l.dual())?) {
        return Err(Error::NotAMorphism {
            src: v.src().name().to_string(),
            dst: v.dst().name().to_string(),
            reason: "target is not N∘L^!".into(),
        });
    }
    Path::of(&[
        v.black(&id(l))?,
        structure_map_f(n, &l.dual(), l)?,
        id(n).white(&evaluation(l)?)?,
        unitor_white_right(n)?,
    ])?
    .into_morphism()
}

/// `(u′)″ = u`.
pub fn adjunction_roundtrip(u: &AlgebraMorphism, u_obj: &Q, l: &Q) -> Result<DiagramCheck> {
    let back = adjoint_left(&adjoint_right(u, u_obj, l)?, l, u.dst())?;
    Ok(DiagramCheck::compare(
        "adjunction-roundtrip",
        names(&[u_obj, l, u.dst()]),
        back.matrix().clone(),
        u.matrix().clone(),
    ))
}

/// `(v″)′ = v`.
pub fn adjunction_roundtrip_rev(v: &AlgebraMorphism, l: &Q, n: &Q) -> Result<DiagramCheck> {
    let back = adjoint_right(&adjoint_left(v, l, n)?, v.src(), l)?;
    Ok(DiagramCheck::compare(
        "adjunction-roundtrip-rev",
        names(&[v.src(), l, n]),
        back.matrix().clone(),
        v.matrix().clone(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::evaluation_matrix;
    use crate::linalg::{Field, Matrix};
    use crate::sampling::random_matrix;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const Q_: Field = Field::Rationals;

    #[test]
    fn axioms_on_named_algebras() {
        let s = Q::symmetric(Q_, 2);
        let e = Q::exterior(Q_, 2);
        let f = Q::free(Q_, 2);
        let b = Q::unit_black(Q_);
        for objs in [[&s, &e, &f, &b], [&e, &s, &s, &e], [&f, &b, &e, &s]] {
            for c in check_axiom_diagrams(objs, None).unwrap() {
                assert!(c.passed, "{c}");
            }
        }
    }

    #[test]
    fn zigzag_on_sym2_is_identity_on_generators() {
        let c = zigzag_left(&Q::symmetric(Q_, 2)).unwrap();
        assert!(c.passed);
        assert_eq!(c.left, Matrix::identity(Q_, 2));
    }

    #[test]
    fn naturality_with_free_sources() {
        let f = Field::gf(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let src = [Q::free(f, 2), Q::free(f, 1), Q::free(f, 2)];
        let dst = [Q::symmetric(f, 2), Q::exterior(f, 2), Q::free(f, 1)];
        let maps: Vec<_> = src
            .iter()
            .zip(&dst)
            .map(|(a, b)| AlgebraMorphism::new(a.clone(), b.clone(), random_matrix(f, b.n(), a.n(), &mut rng)).unwrap())
            .collect();
        assert!(naturality_h(&maps[0], &maps[1], &maps[2]).unwrap().passed);
        assert!(naturality_f(&maps[0], &maps[1], &maps[2]).unwrap().passed);
    }

    #[test]
    fn evaluation_roundtrip() {
        let l = Q::symmetric(Q_, 2);
        let u = evaluation(&l).unwrap();
        let c = adjunction_roundtrip(&u, &l.dual(), &l).unwrap();
        assert!(c.passed);
        assert_eq!(c.left, evaluation_matrix(&l));
    }

    #[test]
    fn free_roundtrips() {
        let f = Field::gf(5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let (u_obj, l, n) = (Q::free(f, 2), Q::free(f, 2), Q::free(f, 1));
        for _ in 0..5 {
            let u = AlgebraMorphism::new(u_obj.black(&l).unwrap(), n.clone(), random_matrix(f, 1, 4, &mut rng)).unwrap();
            assert!(adjunction_roundtrip(&u, &u_obj, &l).unwrap().passed);
            let v = adjoint_right(&u, &u_obj, &l).unwrap();
            assert!(adjunction_roundtrip_rev(&v, &l, &n).unwrap().passed);
        }
    }

    #[test]
    fn zero_map_into_full_target() {
        let u_obj = Q::symmetric(Q_, 2);
        let l = Q::exterior(Q_, 2);
        let n = Q::embed_vector_space(Q_, 3);
        let u = AlgebraMorphism::zero(&u_obj.black(&l).unwrap(), &n).unwrap();
        let c = adjunction_roundtrip(&u, &u_obj, &l).unwrap();
        assert!(c.passed && c.left.is_zero());
    }
}
