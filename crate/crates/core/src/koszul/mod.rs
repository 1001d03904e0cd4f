//! Koszul complexes, the bar complex and the `(d_h)²` test.

mod alpha;
mod bar;
mod complex;

pub use alpha::{alpha, alpha_h, dh_square_is_zero, DhSquare};
pub use bar::{bar_dims, bar_homology, bar_homology_graded, compositions, diagonal_failure, ext_diagonal_check, BidegreeTable, ExtVerdict};
pub use complex::{
    euler_from_hilbert, euler_hilbert_test, first_complex_slice, koszul_verdict, koszul_verdict_with,
    second_complex_slice, ComplexSlice, Convention, HomologyReport, KoszulPair, KoszulVerdict,
};
