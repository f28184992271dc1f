//! Centrality checks and the action of a central element on a highest
//! weight vector.

use super::element::UEAElement;
use super::generator::{GenClass, Generator};
use crate::error::{Error, Result};
use crate::foundations::{rat, MultiPoly, Rational, Var};

/// Generators whose commutator with the tested element is nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct CentralityReport {
    pub n: usize,
    pub failures: Vec<(Generator, UEAElement)>,
}

impl CentralityReport {
    pub fn is_central(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Computes `g z - z g` for every generator `g` of `o_2n`.
pub fn centrality_check(z: &UEAElement, n: usize) -> CentralityReport {
    let failures = Generator::all(n as u32)
        .into_iter()
        .filter_map(|g| {
            let c = UEAElement::generator(g).commutator(z);
            (!c.is_zero()).then_some((g, c))
        })
        .collect();
    CentralityReport { n, failures }
}

/// A highest weight `λ = (λ_1, …, λ_n)`, either numeric or the symbols
/// `lam[1..n]`.
#[derive(Debug, Clone, PartialEq)]
pub enum HighestWeight {
    Numeric(Vec<Rational>),
    Symbolic(usize),
}

impl HighestWeight {
    pub fn len(&self) -> usize {
        match self {
            HighestWeight::Numeric(v) => v.len(),
            HighestWeight::Symbolic(n) => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `λ_i` (1-based) as a polynomial.
    pub fn component(&self, i: usize) -> MultiPoly {
        match self {
            HighestWeight::Numeric(v) => MultiPoly::constant(v[i - 1].clone()),
            HighestWeight::Symbolic(_) => MultiPoly::var(Var::lam(i as u32)),
        }
    }
}

/// The coefficient of `v_λ` in `z v_λ`: monomials with a raising or
/// lowering factor are dropped, and `a[i,i] ↦ λ_i` on the rest.
pub fn hc_coefficient(z: &UEAElement, lambda: &HighestWeight) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero();
    'term: for (m, c) in z.terms() {
        let mut value = MultiPoly::constant(c.clone());
        for &g in m.factors() {
            if g.class() != GenClass::Cartan {
                continue 'term;
            }
            let i = g.row() as usize;
            if i > lambda.len() {
                return Err(Error::LengthMismatch {
                    expected: i,
                    got: lambda.len(),
                });
            }
            value = &value * &lambda.component(i);
        }
        out += value;
    }
    Ok(out)
}

/// `∏_{i=1}^{n} (λ_i + n - i)`.
pub fn eigenvalue_product(lambda: &HighestWeight, n: usize) -> Result<MultiPoly> {
    if lambda.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    let mut out = MultiPoly::constant(rat(1));
    for i in 1..=n {
        let factor = lambda.component(i) + MultiPoly::constant(rat((n - i) as i64));
        out = &out * &factor;
    }
    Ok(out)
}
