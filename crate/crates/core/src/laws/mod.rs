//! Verification of the quadratic-category structure on concrete algebras.
//! Every map is checked on generators; a composite is only formed from
//! maps that passed the relation-containment test.

mod axioms;
mod braiding;
mod check;
mod duality;
mod hom;
mod rigid;
mod structure;
mod suite;

pub use crate::algebra::automorphism_check;
pub use axioms::{
    adjoint_left, adjoint_right, adjunction_roundtrip, adjunction_roundtrip_rev, check_axiom_diagrams,
    mixed_associativity_black, mixed_associativity_white, naturality_f, naturality_h, zigzag_left, zigzag_right,
};
pub use braiding::{check_braiding, check_bullet_to_circle, coevaluation_of_white_unit};
pub use check::{DiagramCheck, Path};
pub use duality::{
    check_double_dual, check_dual_antimultiplicative, check_unit_duality, contragredient_check,
    contragredient_invertibility, solve_contragredient, ContragredientReport,
};
pub use hom::{check_hom_algebra, composition_map, contraction_matrix};
pub use rigid::{
    check_rigid_products, measure_trace_product, rank_check, rank_of, rigid_coevaluation, rigid_evaluation, trace,
    trace_check, TraceProductReport,
};
pub use structure::*;
pub use suite::{run_suite, Suite, SuiteConfig, SuiteReport, MEDIUM_N, SMALL_N};
