//! Exact Pfaffians of alternating and anti-alternating matrices over
//! commutative rings and over the enveloping algebra `U(o_2n)`, with checks
//! of their minor summation formulae.
//!
//! The guide in `book/` walks through each module; its snippets run as
//! doctests.

pub mod error;
pub mod foundations;
pub mod grassmann;
pub mod pfaffian;
pub mod uea;

pub use error::{Error, Result};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/pfaffians.md")]
    pub struct Pfaffians;
    #[doc = include_str!("../../../book/src/minor_summation.md")]
    pub struct MinorSummation;
    #[doc = include_str!("../../../book/src/enveloping_algebra.md")]
    pub struct EnvelopingAlgebra;
    #[doc = include_str!("../../../book/src/center.md")]
    pub struct Center;
    #[doc = include_str!("../../../book/src/exterior_forms.md")]
    pub struct ExteriorForms;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct CommandLine;
}
