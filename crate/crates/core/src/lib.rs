//! Exact computations with quadratic algebras: products, duals, Koszul
//! complexes and checks of the categorical identities that relate them.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod exec;
pub mod format;
pub mod koszul;
pub mod laws;
pub mod linalg;
pub mod sampling;
pub mod tensor;

pub use algebra::{AlgebraMorphism, QuadraticPresentation};
pub use error::{Error, Result};
pub use exec::Exec;
pub use linalg::{Field, Scalar};
