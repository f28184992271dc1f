//! The enveloping algebra `U(o_2n)`: colored generators, PBW normal
//! ordering, the noncommutative Pfaffian and its minor summation formula,
//! centrality and highest-weight eigenvalues.

pub mod central;
pub mod element;
pub mod generator;
pub mod matrix;
pub mod msf;

pub use central::{centrality_check, eigenvalue_product, hc_coefficient, CentralityReport, HighestWeight};
pub use element::{bracket, normal_order, PBWMonomial, UEAElement};
pub use generator::{bracket_terms, GenClass, GenKind, Generator};
pub use matrix::{build_canonical_x, column_determinant, generator, nc_pfaffian, nc_pfaffian_unrestricted, UEAMatrix};
pub use msf::{nc_msf_rhs, shifted_a, shifted_column_determinant};
