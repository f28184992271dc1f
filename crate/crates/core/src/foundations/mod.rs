//! Exact scalar rings and signed-index combinatorics shared by every other
//! module.

pub mod index;
pub mod poly;
pub mod ring;
pub mod scalar;

pub use index::{
    complement_sign, inversions, permutation_sign, signed_permutations, split_sign, IndexSet,
    SignedIndex,
};
pub use poly::{parse_poly, poly_eval, Monomial, MultiPoly, Var};
pub use ring::{ring_product, ring_sum, Ring};
pub use scalar::{factorial, parse_rational, pow2, rat, ratio, Rational};
