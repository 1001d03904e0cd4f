use thiserror::Error;

use crate::linalg::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("dimension mismatch: {context} (expected {expected}, found {found})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{0} is not a prime modulus")]
    NotPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("alphabet size must be at least 1")]
    ZeroAlphabet,

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("not a morphism {src} -> {dst}: {reason}")]
    NotAMorphism {
        src: String,
        dst: String,
        reason: String,
    },

    #[error("{0} is not in the rigid subcategory (relations are not the full square)")]
    NotRigid(String),

    #[error("structure map {name} failed its relation containment on {objects}")]
    StructureMap { name: String, objects: String },

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
