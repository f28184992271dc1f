//! Commutative Pfaffians over any [`Ring`](crate::foundations::Ring): the
//! definitions, cofactor machinery, both sides of the minor summation
//! formula, and matrix-level group checks.

pub mod alternating;
pub mod group;
pub mod io;
pub mod matrix;
pub mod msf;
pub mod pf;

pub use alternating::{AlternatingMatrix, AntiAlternatingMatrix, CoPfaffianMatrix};
pub use group::{
    cayley_orthogonal, equivariance_check, lie_algebra_membership_check, orthogonal_algebra_element,
    pfaffian_against_form, preserves_form, FormPfaffians, MembershipReport,
};
pub use io::{parse_matrix_file, MatrixFile};
pub use matrix::{column_determinant, Matrix};
pub use msf::{msf_rhs, verify_msf, MsfReport};
pub use pf::{
    cofactor_pfaffian, copfaffian_expansion_check, copfaffian_matrix, iw06_relation_check, pfaffian,
    pfaffian_definitional, CoPfaffianReport,
};
