use crate::algebra::{coevaluation, evaluation, AlgebraMorphism, QuadraticPresentation};
use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Scalar};
use crate::tensor::{flip, push_subspace, LinearMap};

use super::check::{names, stacked, DiagramCheck, Path};

type Q = QuadraticPresentation;

/// `(U•V)^!` and `V^!∘U^!` have the same relations once generators are
/// matched by `(u⊗v)* ↦ v*⊗u*`.
pub fn check_dual_antimultiplicative(u: &Q, v: &Q) -> Result<DiagramCheck> {
    let lhs = u.black(v)?.dual();
    let rhs = v.dual().white(&u.dual())?;
    let swap = flip(u.n(), v.n())?.tensor_square();
    let moved = push_subspace(LinearMap::Permutation(&swap), lhs.relations())?;
    Ok(DiagramCheck::compare(
        "dual-antimultiplicative",
        names(&[u, v]),
        moved.basis(),
        rhs.relations().basis(),
    ))
}

/// `(U^!)^! = U` on canonical relation bases and labels.
pub fn check_double_dual(u: &Q) -> DiagramCheck {
    let dd = u.dual().dual();
    let mut c = DiagramCheck::compare("double-dual", names(&[u]), dd.relations().basis(), u.relations().basis());
    c.passed &= dd.labels() == u.labels();
    c
}

/// `I_•^! = I_∘` and `I_∘^! = I_•`.
pub fn check_unit_duality(field: Field) -> Vec<DiagramCheck> {
    let (b, w) = (Q::unit_black(field), Q::unit_white(field));
    vec![
        DiagramCheck::compare("unit-duality", names(&[&b]), b.dual().relations().basis(), w.relations().basis()),
        DiagramCheck::compare("unit-duality", names(&[&w]), w.dual().relations().basis(), b.relations().basis()),
    ]
}

fn check_contragredient_shape(h: &AlgebraMorphism, h2: &AlgebraMorphism) -> Result<()> {
    if h2.src().same_object(&h.src().dual()) && h2.dst().same_object(&h.dst().dual()) {
        Ok(())
    } else {
        Err(Error::NotAMorphism {
            src: h2.src().name().to_string(),
            dst: h2.dst().name().to_string(),
            reason: "a contragredient goes from the dual of the source to the dual of the target".into(),
        })
    }
}

/// `(h∘h′)·c_U = c_V` and `d_V·(h′•h) = d_U`, stacked into one comparison.
pub fn contragredient_check(h: &AlgebraMorphism, h2: &AlgebraMorphism) -> Result<DiagramCheck> {
    check_contragredient_shape(h, h2)?;
    let (u, v) = (h.src(), h.dst());
    let first = Path::of(&[coevaluation(u)?, h.white(h2)?])?;
    let second = Path::of(&[h2.black(h)?, evaluation(v)?])?;
    let left = stacked(&[first.matrix(), second.matrix()]);
    let right = stacked(&[coevaluation(v)?.matrix(), evaluation(u)?.matrix()]);
    Ok(DiagramCheck::compare("contragredient", names(&[u, v]), left, right))
}

#[derive(Debug, Clone)]
pub struct ContragredientReport {
    pub equations_hold: bool,
    /// `h′∘h^! = Id` and `h^!∘h′ = Id`.
    pub dual_identities: bool,
    /// A two-sided inverse of `h` that is itself a morphism.
    pub inverse: Option<AlgebraMorphism>,
}

impl ContragredientReport {
    /// Whenever the equations hold, `h` is invertible.
    pub fn consistent(&self) -> bool {
        !self.equations_hold || (self.dual_identities && self.inverse.is_some())
    }
}

pub fn contragredient_invertibility(h: &AlgebraMorphism, h2: &AlgebraMorphism) -> Result<ContragredientReport> {
    let equations_hold = contragredient_check(h, h2)?.passed;
    let hd = h.matrix().transpose();
    let is_id = |m: Result<Matrix>| m.map(|m| m.is_identity()).unwrap_or(false);
    let dual_identities = is_id(h2.matrix().mul(&hd)) && is_id(hd.mul(h2.matrix()));
    let inverse = h
        .matrix()
        .inverse()
        .and_then(|m| AlgebraMorphism::new(h.dst().clone(), h.src().clone(), m).ok());
    Ok(ContragredientReport {
        equations_hold,
        dual_identities,
        inverse,
    })
}

/// Solves the contragredient equations for `h′`. They are linear in `h′`:
/// with `X = h′ᵀ` they read `H X = I` and `X H = I`. Returns `None` when the
/// system is inconsistent.
pub fn solve_contragredient(h: &AlgebraMorphism) -> Result<Option<AlgebraMorphism>> {
    let field = h.field();
    let m = h.matrix();
    let (nv, nu) = (m.rows(), m.cols());
    // unknowns X[k][b], k < nu, b < nv, at k * nv + b
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    let delta = |a: usize, b: usize| if a == b { Scalar::one(field) } else { Scalar::zero(field) };
    for a in 0..nv {
        for b in 0..nv {
            let mut row = vec![Scalar::zero(field); nu * nv];
            for k in 0..nu {
                row[k * nv + b] = m.get(a, k).clone();
            }
            rows.push(row);
            rhs.push(delta(a, b));
        }
    }
    for a in 0..nu {
        for b in 0..nu {
            let mut row = vec![Scalar::zero(field); nu * nv];
            for k in 0..nv {
                row[a * nv + k] = m.get(k, b).clone();
            }
            rows.push(row);
            rhs.push(delta(a, b));
        }
    }
    let system = Matrix::from_rows(field, nu * nv, rows)?;
    let Some(x) = system.solve(&rhs)? else {
        return Ok(None);
    };
    let x = Matrix::from_rows(field, nv, x.chunks(nv).map(<[Scalar]>::to_vec).collect())?;
    AlgebraMorphism::new(h.src().dual(), h.dst().dual(), x.transpose()).map(Some)
}
