//! Trace and rank on the rigid objects, vector spaces with full relations.

use crate::algebra::{AlgebraMorphism, QuadraticPresentation};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

use super::check::{names, DiagramCheck, Path};

type Q = QuadraticPresentation;

fn require_rigid(u: &Q) -> Result<()> {
    if u.is_rigid() {
        Ok(())
    } else {
        Err(Error::NotRigid(u.name().to_string()))
    }
}

fn identity_tensor(u: &Q) -> Vec<Scalar> {
    let n = u.n();
    (0..n * n)
        .map(|k| if k / n == k % n { Scalar::one(u.field()) } else { Scalar::zero(u.field()) })
        .collect()
}

/// `c′_U : I_• → U^!∘U`.
pub fn rigid_coevaluation(u: &Q) -> Result<AlgebraMorphism> {
    require_rigid(u)?;
    AlgebraMorphism::new(
        Q::unit_black(u.field()),
        u.dual().white(u)?,
        Matrix::column_vector(u.field(), identity_tensor(u)),
    )
}

/// `d¹_U : U^!∘U → I_•`.
pub fn rigid_evaluation(u: &Q) -> Result<AlgebraMorphism> {
    require_rigid(u)?;
    AlgebraMorphism::new(
        u.dual().white(u)?,
        Q::unit_black(u.field()),
        Matrix::row_vector(u.field(), identity_tensor(u)),
    )
}

fn trace_path(h: &AlgebraMorphism) -> Result<Path> {
    let u = h.src();
    require_rigid(u)?;
    if !h.dst().same_object(u) {
        return Err(Error::NotAMorphism {
            src: u.name().to_string(),
            dst: h.dst().name().to_string(),
            reason: "trace needs an endomorphism".into(),
        });
    }
    Path::of(&[
        rigid_coevaluation(u)?,
        AlgebraMorphism::identity(&u.dual()).white(h)?,
        rigid_evaluation(u)?,
    ])
}

/// `d¹ ∘ (Id∘h) ∘ c′` as a scalar.
pub fn trace(h: &AlgebraMorphism) -> Result<Scalar> {
    Ok(trace_path(h)?.matrix().get(0, 0).clone())
}

pub fn rank_of(u: &Q) -> Result<Scalar> {
    trace(&AlgebraMorphism::identity(u))
}

/// The categorical trace agrees with the matrix trace.
pub fn trace_check(h: &AlgebraMorphism) -> Result<DiagramCheck> {
    let composite = trace_path(h)?.matrix().clone();
    let expected = Matrix::column_vector(h.field(), vec![h.matrix().trace()]);
    Ok(DiagramCheck::compare("trace", names(&[h.src()]), composite, expected))
}

/// `rank(U) = n·1`.
pub fn rank_check(u: &Q) -> Result<DiagramCheck> {
    let r = rank_of(u)?;
    let expected = Scalar::from_i64(u.field(), u.n() as i64);
    Ok(DiagramCheck::compare(
        "rank",
        names(&[u]),
        Matrix::column_vector(u.field(), vec![r]),
        Matrix::column_vector(u.field(), vec![expected]),
    ))
}

/// On rigid objects both products coincide.
pub fn check_rigid_products(a: &Q, b: &Q) -> Result<DiagramCheck> {
    require_rigid(a)?;
    require_rigid(b)?;
    Ok(DiagramCheck::compare(
        "rigid-white-equals-black",
        names(&[a, b]),
        a.white(b)?.relations().basis(),
        a.black(b)?.relations().basis(),
    ))
}

/// Measurement of `Trace(hh′) = Trace(h)·Trace(h′)`. Reported, not
/// asserted.
#[derive(Debug, Clone)]
pub struct TraceProductReport {
    pub pairs: usize,
    pub agreeing: usize,
    /// First pair where the identity fails: `(h, h′, Trace(hh′), Trace(h)·Trace(h′))`.
    pub counterexample: Option<(Matrix, Matrix, Scalar, Scalar)>,
}

pub fn measure_trace_product<'a, I>(pairs: I) -> Result<TraceProductReport>
where
    I: IntoIterator<Item = (&'a AlgebraMorphism, &'a AlgebraMorphism)>,
{
    let mut report = TraceProductReport {
        pairs: 0,
        agreeing: 0,
        counterexample: None,
    };
    for (h, k) in pairs {
        let hk = h.compose(k)?;
        let lhs = trace(&hk)?;
        let rhs = &trace(h)? * &trace(k)?;
        report.pairs += 1;
        if lhs == rhs {
            report.agreeing += 1;
        } else if report.counterexample.is_none() {
            report.counterexample = Some((h.matrix().clone(), k.matrix().clone(), lhs, rhs));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Field;

    const Q_: Field = Field::Rationals;

    #[test]
    fn examples() {
        let e3 = Q::embed_vector_space(Q_, 3);
        assert_eq!(rank_of(&e3).unwrap(), Scalar::from_i64(Q_, 3));
        let e2 = Q::embed_vector_space(Q_, 2);
        assert_eq!(trace(&AlgebraMorphism::identity(&e2)).unwrap(), Scalar::from_i64(Q_, 2));
        let d = AlgebraMorphism::new(e2.clone(), e2.clone(), Matrix::from_i64(Q_, 2, 2, &[1, 0, 0, 2])).unwrap();
        assert_eq!(trace(&d).unwrap(), Scalar::from_i64(Q_, 3));
        assert!(trace_check(&d).unwrap().passed);
    }

    #[test]
    fn non_rigid_objects_are_rejected() {
        let s = Q::symmetric(Q_, 2);
        assert!(matches!(rank_of(&s), Err(Error::NotRigid(_))));
    }

    #[test]
    fn rigid_products_agree() {
        let e = |d| Q::embed_vector_space(Q_, d);
        assert!(check_rigid_products(&e(2), &e(3)).unwrap().passed);
    }

    #[test]
    fn trace_product_fails_generically() {
        let e2 = Q::embed_vector_space(Q_, 2);
        let id = AlgebraMorphism::identity(&e2);
        let report = measure_trace_product([(&id, &id)]).unwrap();
        // Trace(Id) = 2 but Trace(Id)² = 4
        assert_eq!(report.agreeing, 0);
        let (_, _, lhs, rhs) = report.counterexample.unwrap();
        assert_eq!((lhs, rhs), (Scalar::from_i64(Q_, 2), Scalar::from_i64(Q_, 4)));
    }
}
