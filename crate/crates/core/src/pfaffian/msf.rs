//! Both sides of the commutative minor summation formula for an
//! anti-alternating matrix with a `(p, q)` coloring.

use super::alternating::AntiAlternatingMatrix;
use super::matrix::column_determinant;
use super::pf::pfaffian;
use crate::error::Result;
use crate::foundations::{complement_sign, IndexSet, MultiPoly, Ring};

fn zero_based(s: &IndexSet) -> Vec<usize> {
    s.elements().iter().map(|&x| x - 1).collect()
}

/// `Σ sgn(Ī,I) sgn(J̄,J) det(a[Ī, J̄]) Pf(b_I) Pf(c_J)` over `I ⊆ [p]`,
/// `J ⊆ [q]` with `|Ī| = |J̄|`. Minors are expanded by Leibniz, so this
/// works over any ring.
pub fn msf_rhs<R: Ring>(x: &AntiAlternatingMatrix<R>) -> Result<R> {
    let (p, q) = (x.p(), x.q());
    let (up, uq) = (IndexSet::range(p), IndexSet::range(q));
    let mut total = R::zero();
    // r = |Ī| = |J̄| has the parity of p (and of q)
    let mut r = p % 2;
    while r <= p.min(q) {
        for i_bar in up.subsets_of_size(r) {
            let i_set = i_bar.complement_in(&up)?;
            let pf_b = pfaffian(&x.b().principal(&zero_based(&i_set)))?;
            if pf_b.is_zero() {
                continue;
            }
            let si = complement_sign(&i_set, &up)?;
            for j_bar in uq.subsets_of_size(r) {
                let j_set = j_bar.complement_in(&uq)?;
                let pf_c = pfaffian(&x.c().principal(&zero_based(&j_set)))?;
                if pf_c.is_zero() {
                    continue;
                }
                let minor = x.a().select(&zero_based(&i_bar), &zero_based(&j_bar));
                let det = column_determinant(&minor)?;
                let term = det * pf_b.clone() * pf_c;
                total = if si * complement_sign(&j_set, &uq)? > 0 {
                    total + term
                } else {
                    total - term
                };
            }
        }
        r += 2;
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MsfReport {
    pub p: usize,
    pub q: usize,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
}

impl MsfReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn residual(&self) -> MultiPoly {
        &self.lhs - &self.rhs
    }
}

/// Compares `Pf(X J)` with [`msf_rhs`] on the fully generic `(p, q)` matrix.
pub fn verify_msf(p: usize, q: usize) -> Result<MsfReport> {
    let x = AntiAlternatingMatrix::generic(p, q)?;
    Ok(MsfReport {
        p,
        q,
        lhs: pfaffian(&x.times_j())?,
        rhs: msf_rhs(&x)?,
    })
}
