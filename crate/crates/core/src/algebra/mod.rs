//! Quadratic presentations, their morphisms, products, duals and graded
//! components.

mod graded;
mod morphism;
mod presentation;

pub use graded::{graded_dim, hilbert, relation_space_in_degree, GradedAlgebra};
pub use morphism::{
    automorphism_check, canonical_element, coevaluation, coevaluation_matrix, evaluation, evaluation_matrix,
    is_morphism, AlgebraMorphism, GradedElement, MorphismCheck,
};
pub use presentation::{
    default_labels, dual_label, dual_name, product_labels, random_scalar, word2, QuadraticPresentation,
};
