use crate::algebra::{AlgebraMorphism, QuadraticPresentation};
use crate::error::Result;
use crate::linalg::Matrix;

use super::check::{names, DiagramCheck, Path};
use super::structure::*;

type Q = QuadraticPresentation;

/// `U1•(U2∘U3) → U3∘(U2•U1)` through `c′_•`, `c′_∘•Id`, `f` versus `h`,
/// `c′_∘`, `Id∘c′_•`.
pub fn check_braiding(u1: &Q, u2: &Q, u3: &Q) -> Result<DiagramCheck> {
    let left = Path::of(&[
        braiding_black(u1, &u2.white(u3)?)?,
        braiding_white(u2, u3)?.black(&AlgebraMorphism::identity(u1))?,
        structure_map_f(u3, u2, u1)?,
    ])?;
    let right = Path::of(&[
        structure_map_h(u1, u2, u3)?,
        braiding_white(&u1.black(u2)?, u3)?,
        AlgebraMorphism::identity(u3).white(&braiding_black(u1, u2)?)?,
    ])?;
    DiagramCheck::paths("braiding-hexagon", names(&[u1, u2, u3]), left, right)
}

/// `c_{I_∘} : I_∘ → I_∘∘I_∘^! = I_•`.
pub fn coevaluation_of_white_unit(field: crate::linalg::Field) -> Result<AlgebraMorphism> {
    AlgebraMorphism::new(Q::unit_white(field), Q::unit_black(field), Matrix::identity(field, 1))
}

/// The comparison `U•V → U∘V` built from braidings, `f` and `c_{I_∘}`,
/// checked against the identity on generators.
pub fn check_bullet_to_circle(u: &Q, v: &Q) -> Result<DiagramCheck> {
    let field = u.field();
    let io = Q::unit_white(field);
    let vio = v.white(&io)?;
    let into = AlgebraMorphism::reshape(&u.black(v)?, &u.black(&vio)?)?;
    let swap_units = AlgebraMorphism::identity(v)
        .white(&coevaluation_of_white_unit(field)?.black(&AlgebraMorphism::identity(u))?)?;
    let drop_unit = AlgebraMorphism::reshape(&v.white(&Q::unit_black(field).black(u)?)?, &v.white(u)?)?;
    let left = Path::of(&[
        into,
        braiding_black(u, &vio)?,
        structure_map_f(v, &io, u)?,
        swap_units,
        drop_unit,
        braiding_white(v, u)?,
    ])?;
    let right = Path::start(&AlgebraMorphism::reshape(&u.black(v)?, &u.white(v)?)?);
    DiagramCheck::paths("bullet-to-circle", names(&[u, v]), left, right)
}
