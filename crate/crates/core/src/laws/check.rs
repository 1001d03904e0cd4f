use std::fmt;

use crate::algebra::{AlgebraMorphism, QuadraticPresentation};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// Outcome of comparing two degree-1 matrices, usually the two sides of a
/// commutative diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramCheck {
    pub name: String,
    pub objects: Vec<String>,
    pub trial: Option<usize>,
    pub left: Matrix,
    pub right: Matrix,
    pub passed: bool,
    /// `left − right`, or `None` when the shapes differ.
    pub residual: Option<Matrix>,
}

impl DiagramCheck {
    pub fn compare(name: &str, objects: Vec<String>, left: Matrix, right: Matrix) -> Self {
        let residual = left.sub(&right).ok();
        let passed = residual.as_ref().is_some_and(Matrix::is_zero);
        DiagramCheck {
            name: name.to_string(),
            objects,
            trial: None,
            left,
            right,
            passed,
            residual,
        }
    }

    /// Compares two paths that must share source and target.
    pub fn paths(name: &str, objects: Vec<String>, left: Path, right: Path) -> Result<Self> {
        if !left.src.same_object(&right.src) || !left.dst.same_object(&right.dst) {
            return Err(Error::NotAMorphism {
                src: left.src.name().to_string(),
                dst: right.dst.name().to_string(),
                reason: format!("{name}: the two paths do not share endpoints"),
            });
        }
        Ok(Self::compare(name, objects, left.matrix, right.matrix))
    }

    pub fn with_trial(mut self, trial: usize) -> Self {
        self.trial = Some(trial);
        self
    }

    pub fn objects_label(&self) -> String {
        self.objects.join(",")
    }

    /// Number of nonzero residual entries (all of them when shapes differ).
    pub fn residual_nonzeros(&self) -> usize {
        match &self.residual {
            Some(r) => r.entries().iter().filter(|x| !x.is_zero()).count(),
            None => self.left.entries().len().max(self.right.entries().len()),
        }
    }
}

impl fmt::Display for DiagramCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {}", self.name, self.objects_label())?;
        if let Some(t) = self.trial {
            write!(f, " #{t}")?;
        }
        Ok(())
    }
}

pub(crate) fn names(objects: &[&QuadraticPresentation]) -> Vec<String> {
    objects.iter().map(|o| o.name().to_string()).collect()
}

/// A composite of verified morphisms. Each step is checked to start where
/// the previous one ended.
#[derive(Debug, Clone)]
pub struct Path {
    src: QuadraticPresentation,
    dst: QuadraticPresentation,
    matrix: Matrix,
}

impl Path {
    pub fn start(m: &AlgebraMorphism) -> Self {
        Path {
            src: m.src().clone(),
            dst: m.dst().clone(),
            matrix: m.matrix().clone(),
        }
    }

    pub fn then(self, m: &AlgebraMorphism) -> Result<Self> {
        if !self.dst.same_object(m.src()) {
            return Err(Error::NotAMorphism {
                src: self.dst.name().to_string(),
                dst: m.src().name().to_string(),
                reason: "consecutive path steps do not meet".into(),
            });
        }
        Ok(Path {
            src: self.src,
            dst: m.dst().clone(),
            matrix: m.matrix().mul(&self.matrix)?,
        })
    }

    pub fn of(steps: &[AlgebraMorphism]) -> Result<Self> {
        let (first, rest) = steps.split_first().expect("a path has at least one step");
        rest.iter().try_fold(Path::start(first), |p, m| p.then(m))
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

    /// The composite as a morphism, re-verified.
    pub fn into_morphism(self) -> Result<AlgebraMorphism> {
        AlgebraMorphism::new(self.src, self.dst, self.matrix)
    }
}

/// Entries of several matrices stacked into one column.
pub(crate) fn stacked(parts: &[&Matrix]) -> Matrix {
    let field = parts[0].field();
    let entries: Vec<Scalar> = parts.iter().flat_map(|m| m.entries().iter().cloned()).collect();
    Matrix::column_vector(field, entries)
}
