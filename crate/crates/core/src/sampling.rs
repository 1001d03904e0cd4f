//! Drawing valid morphisms between presentations.
//!
//! Plain random matrices rarely satisfy `(M⊗M)(R) ⊆ R'`, so sampling mixes
//! structured families with a budgeted rejection sampler. The zero map is
//! always valid and is the final fallback.

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

use crate::algebra::{is_morphism, random_scalar, AlgebraMorphism, QuadraticPresentation};
use crate::error::Result;
use crate::linalg::{Field, Matrix, Scalar, SparseVec};
use crate::tensor::kron_vectors;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Identity,
    Scalar,
    Zero,
    /// Generator permutation with nonzero rescaling.
    Monomial,
    Diagonal,
    /// Any matrix: the source is free or the target has full relations.
    Unconstrained,
    /// `v wᵀ` with `w` isotropic for the source relations or `v⊗v ∈ R'`.
    RankOne,
    Composite,
    Rejection,
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub family: Family,
    pub morphism: AlgebraMorphism,
}

const REJECTION_BUDGET: usize = 64;
const STRUCTURED_TRIES: usize = 16;

pub fn random_matrix<R: Rng>(field: Field, rows: usize, cols: usize, rng: &mut R) -> Matrix {
    let entries = (0..rows * cols).map(|_| random_scalar(field, rng)).collect::<Vec<_>>();
    Matrix::from_rows(field, cols, entries.chunks(cols.max(1)).map(<[Scalar]>::to_vec).collect())
        .unwrap_or_else(|_| Matrix::zeros(field, rows, cols))
}

fn random_nonzero<R: Rng>(field: Field, rng: &mut R) -> Scalar {
    loop {
        let x = random_scalar(field, rng);
        if !x.is_zero() {
            return x;
        }
    }
}

fn valid(src: &QuadraticPresentation, dst: &QuadraticPresentation, m: &Matrix) -> bool {
    matches!(is_morphism(src, dst, m), Ok(c) if c.is_valid())
}

/// Nonzero vectors with entries in a small range: `{-1, 0, 1}` over Q, all
/// residues over GF(p) while `p^n` stays small.
fn small_vectors(field: Field, n: usize) -> Vec<Vec<Scalar>> {
    let values: Vec<i64> = match field {
        Field::Prime(p) if (p.get() as f64).powi(n as i32) <= 4096.0 => (0..p.get() as i64).collect(),
        _ => vec![-1, 0, 1],
    };
    let mut out = Vec::new();
    let total = values.len().pow(n as u32);
    for mut code in 0..total {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(Scalar::from_i64(field, values[code % values.len()]));
            code /= values.len();
        }
        if v.iter().any(|x| !x.is_zero()) {
            out.push(v);
        }
    }
    out
}

fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// `Σ r_{ij} w_i w_j = 0` for every relation `r`.
fn isotropic(a: &QuadraticPresentation, w: &[Scalar]) -> bool {
    let n = a.n();
    a.relations().basis_sparse().iter().all(|r| {
        let mut acc = Scalar::zero(a.field());
        for (c, x) in r {
            acc = &acc + &(x * &(&w[c / n] * &w[c % n]));
        }
        acc.is_zero()
    })
}

fn outer(field: Field, v: &[Scalar], w: &[Scalar]) -> Matrix {
    let rows = v.iter().map(|x| w.iter().map(|y| x * y).collect()).collect();
    Matrix::from_rows(field, w.len(), rows).expect("rectangular")
}

fn try_rank_one<R: Rng>(src: &QuadraticPresentation, dst: &QuadraticPresentation, rng: &mut R) -> Option<Matrix> {
    let field = src.field();
    let ws: Vec<_> = small_vectors(field, src.n()).into_iter().filter(|w| isotropic(src, w)).collect();
    let vs: Vec<_> = small_vectors(field, dst.n())
        .into_iter()
        .filter(|v| {
            let s = to_sparse(v);
            dst.relations().contains_vector(&kron_vectors(&s, &s, dst.n()))
        })
        .collect();
    let via_source = !ws.is_empty() && (vs.is_empty() || rng.random_bool(0.5));
    let m = if via_source {
        let w = ws.choose(rng)?;
        let v: Vec<Scalar> = (0..dst.n()).map(|_| random_scalar(field, rng)).collect();
        outer(field, &v, w)
    } else {
        let v = vs.choose(rng)?;
        let w: Vec<Scalar> = (0..src.n()).map(|_| random_scalar(field, rng)).collect();
        outer(field, v, &w)
    };
    valid(src, dst, &m).then_some(m)
}

fn try_monomial<R: Rng>(a: &QuadraticPresentation, b: &QuadraticPresentation, diagonal: bool, rng: &mut R) -> Option<Matrix> {
    let field = a.field();
    let n = a.n();
    for _ in 0..STRUCTURED_TRIES {
        let mut perm: Vec<usize> = (0..n).collect();
        if !diagonal {
            perm.shuffle(rng);
        }
        let mut m = Matrix::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            let x = if rng.random_bool(0.5) { Scalar::one(field) } else { random_nonzero(field, rng) };
            m.set(i, j, x);
        }
        if valid(a, b, &m) {
            return Some(m);
        }
    }
    None
}

fn try_rejection<R: Rng>(src: &QuadraticPresentation, dst: &QuadraticPresentation, rng: &mut R) -> Option<Matrix> {
    let field = src.field();
    for attempt in 0..REJECTION_BUDGET {
        let mut m = random_matrix(field, dst.n(), src.n(), rng);
        if attempt % 2 == 1 {
            for i in 0..dst.n() {
                for j in 0..src.n() {
                    if rng.random_bool(0.5) {
                        m.set(i, j, Scalar::zero(field));
                    }
                }
            }
        }
        if valid(src, dst, &m) {
            return Some(m);
        }
    }
    None
}

fn try_family<R: Rng>(
    family: Family,
    src: &QuadraticPresentation,
    dst: &QuadraticPresentation,
    rng: &mut R,
) -> Option<Matrix> {
    let field = src.field();
    let square = src.n() == dst.n();
    let m = match family {
        Family::Zero => Some(Matrix::zeros(field, dst.n(), src.n())),
        Family::Identity if square => Some(Matrix::identity(field, src.n())),
        Family::Scalar if square => Some(Matrix::identity(field, src.n()).scale(&random_nonzero(field, rng))),
        Family::Monomial if square => try_monomial(src, dst, false, rng),
        Family::Diagonal if square => try_monomial(src, dst, true, rng),
        Family::Unconstrained if src.relations().is_zero() || dst.relations().is_full() => {
            Some(random_matrix(field, dst.n(), src.n(), rng))
        }
        Family::RankOne => try_rank_one(src, dst, rng),
        Family::Composite if src.same_object(dst) => {
            let f = sample_with(src, dst, rng, false).morphism;
            let g = sample_with(src, dst, rng, false).morphism;
            Some(g.matrix().mul(f.matrix()).ok()?)
        }
        Family::Rejection => try_rejection(src, dst, rng),
        _ => None,
    }?;
    valid(src, dst, &m).then_some(m)
}

fn sample_with<R: Rng>(src: &QuadraticPresentation, dst: &QuadraticPresentation, rng: &mut R, composite: bool) -> Sample {
    let mut order = vec![
        Family::Identity,
        Family::Scalar,
        Family::Monomial,
        Family::Diagonal,
        Family::Unconstrained,
        Family::RankOne,
        Family::Rejection,
    ];
    if composite {
        order.push(Family::Composite);
    }
    order.shuffle(rng);
    order.push(Family::Zero);
    for family in order {
        if let Some(m) = try_family(family, src, dst, rng) {
            let morphism = AlgebraMorphism::new(src.clone(), dst.clone(), m).expect("validated above");
            return Sample { family, morphism };
        }
    }
    unreachable!("the zero map is always a morphism")
}

/// A valid morphism `src → dst` from a randomly chosen applicable family.
pub fn sample_morphism<R: Rng>(src: &QuadraticPresentation, dst: &QuadraticPresentation, rng: &mut R) -> Result<Sample> {
    src.field().check_same(dst.field())?;
    Ok(sample_with(src, dst, rng, true))
}

pub fn sample_endomorphism<R: Rng>(a: &QuadraticPresentation, rng: &mut R) -> Sample {
    sample_with(a, a, rng, true)
}

/// `count` endomorphisms: identity, zero and a scalar multiple first, then
/// random draws.
pub fn endomorphism_batch<R: Rng>(a: &QuadraticPresentation, count: usize, rng: &mut R) -> Vec<Sample> {
    let field = a.field();
    let fixed = [
        (Family::Identity, Matrix::identity(field, a.n())),
        (Family::Zero, Matrix::zeros(field, a.n(), a.n())),
        (Family::Scalar, Matrix::identity(field, a.n()).scale(&Scalar::from_i64(field, 2))),
    ];
    let mut out: Vec<Sample> = fixed
        .into_iter()
        .take(count)
        .map(|(family, m)| Sample {
            family,
            morphism: AlgebraMorphism::new(a.clone(), a.clone(), m).expect("always an endomorphism"),
        })
        .collect();
    while out.len() < count {
        out.push(sample_endomorphism(a, rng));
    }
    out
}
