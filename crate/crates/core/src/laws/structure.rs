//! Structure maps. All of them are the identity on generators; what is
//! checked is that the relations of the source land in those of the
//! target.

use crate::algebra::{AlgebraMorphism, QuadraticPresentation};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::tensor::flip;

type Q = QuadraticPresentation;

fn structure(name: &str, objects: &[&Q], src: Q, dst: Q) -> Result<AlgebraMorphism> {
    AlgebraMorphism::reshape(&src, &dst).map_err(|e| match e {
        Error::NotAMorphism { .. } => Error::StructureMap {
            name: name.to_string(),
            objects: objects.iter().map(|o| o.name()).collect::<Vec<_>>().join(","),
        },
        other => other,
    })
}

/// `f : (U1∘U2)•U3 → U1∘(U2•U3)`.
pub fn structure_map_f(u1: &Q, u2: &Q, u3: &Q) -> Result<AlgebraMorphism> {
    structure("f", &[u1, u2, u3], u1.white(u2)?.black(u3)?, u1.white(&u2.black(u3)?)?)
}

/// `h : U1•(U2∘U3) → (U1•U2)∘U3`.
pub fn structure_map_h(u1: &Q, u2: &Q, u3: &Q) -> Result<AlgebraMorphism> {
    structure("h", &[u1, u2, u3], u1.black(&u2.white(u3)?)?, u1.black(u2)?.white(u3)?)
}

/// `(U1•U2)•U3 → U1•(U2•U3)`.
pub fn associator_black(u1: &Q, u2: &Q, u3: &Q) -> Result<AlgebraMorphism> {
    structure("assoc-black", &[u1, u2, u3], u1.black(u2)?.black(u3)?, u1.black(&u2.black(u3)?)?)
}

/// `U1•(U2•U3) → (U1•U2)•U3`.
pub fn associator_black_inverse(u1: &Q, u2: &Q, u3: &Q) -> Result<AlgebraMorphism> {
    structure("assoc-black-inv", &[u1, u2, u3], u1.black(&u2.black(u3)?)?, u1.black(u2)?.black(u3)?)
}

/// `(U1∘U2)∘U3 → U1∘(U2∘U3)`.
pub fn associator_white(u1: &Q, u2: &Q, u3: &Q) -> Result<AlgebraMorphism> {
    structure("assoc-white", &[u1, u2, u3], u1.white(u2)?.white(u3)?, u1.white(&u2.white(u3)?)?)
}

/// `I_••U → U`.
pub fn unitor_black_left(u: &Q) -> Result<AlgebraMorphism> {
    structure("unit-black-left", &[u], Q::unit_black(u.field()).black(u)?, u.clone())
}

/// `U•I_• → U`.
pub fn unitor_black_right(u: &Q) -> Result<AlgebraMorphism> {
    structure("unit-black-right", &[u], u.black(&Q::unit_black(u.field()))?, u.clone())
}

/// `U → U•I_•`.
pub fn unitor_black_right_inverse(u: &Q) -> Result<AlgebraMorphism> {
    structure("unit-black-right-inv", &[u], u.clone(), u.black(&Q::unit_black(u.field()))?)
}

/// `I_∘∘U → U`.
pub fn unitor_white_left(u: &Q) -> Result<AlgebraMorphism> {
    structure("unit-white-left", &[u], Q::unit_white(u.field()).white(u)?, u.clone())
}

/// `U∘I_∘ → U`.
pub fn unitor_white_right(u: &Q) -> Result<AlgebraMorphism> {
    structure("unit-white-right", &[u], u.white(&Q::unit_white(u.field()))?, u.clone())
}

/// `U → U∘I_∘`.
pub fn unitor_white_right_inverse(u: &Q) -> Result<AlgebraMorphism> {
    structure("unit-white-right-inv", &[u], u.clone(), u.white(&Q::unit_white(u.field()))?)
}

fn flip_matrix(a: &Q, b: &Q) -> Result<Matrix> {
    Ok(flip(a.n(), b.n())?.to_matrix(a.field()))
}

/// `c′_• : A•B → B•A`, swapping tensor factors.
pub fn braiding_black(a: &Q, b: &Q) -> Result<AlgebraMorphism> {
    AlgebraMorphism::new(a.black(b)?, b.black(a)?, flip_matrix(a, b)?)
}

/// `c′_∘ : A∘B → B∘A`.
pub fn braiding_white(a: &Q, b: &Q) -> Result<AlgebraMorphism> {
    AlgebraMorphism::new(a.white(b)?, b.white(a)?, flip_matrix(a, b)?)
}
