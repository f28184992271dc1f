//! The right-hand side of the noncommutative minor summation formula.

use num_traits::Zero;

use super::element::UEAElement;
use super::generator::Generator;
use crate::error::{Error, Result};
use crate::foundations::{complement_sign, rat, IndexSet};
use crate::pfaffian::{column_determinant, pfaffian, AlternatingMatrix, Matrix};

fn gen(g: Generator) -> UEAElement {
    UEAElement::generator(g)
}

/// `a[i,j](u) = a[i,j] + u δ_ij` (1-based indices).
pub fn shifted_a(i: u32, j: u32, u: &crate::foundations::Rational) -> UEAElement {
    let mut x = gen(Generator::a(i, j));
    if i == j {
        x += UEAElement::scalar(u.clone());
    }
    x
}

/// Column determinant of `a[rows, cols]` where column `t` (1-based) of the
/// `r × r` minor carries the diagonal shift `u + r - t`, i.e.
/// `Σ_σ sgn σ · a[i_σ1, j_1](u+r-1) ⋯ a[i_σr, j_r](u)`. Indices are 1-based.
pub fn shifted_column_determinant(rows: &[u32], cols: &[u32], u: &crate::foundations::Rational) -> Result<UEAElement> {
    if rows.len() != cols.len() {
        return Err(Error::NotSquare {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    let r = rows.len();
    let m = Matrix::from_fn(r, r, |s, t| {
        let shift = u + rat((r - 1 - t) as i64);
        shifted_a(rows[s], cols[t], &shift)
    });
    column_determinant(&m)
}

fn b_block(indices: &[u32]) -> AlternatingMatrix<UEAElement> {
    AlternatingMatrix::from_upper(indices.len(), |s, t| gen(Generator::b(indices[s], indices[t])))
}

fn c_block(indices: &[u32]) -> AlternatingMatrix<UEAElement> {
    AlternatingMatrix::from_upper(indices.len(), |s, t| gen(Generator::c(indices[s], indices[t])))
}

fn as_u32(s: &IndexSet) -> Vec<u32> {
    s.elements().iter().map(|&x| x as u32).collect()
}

/// `Σ sgn(Ī,I) sgn(J̄,J) det(a[Ī,J̄] + ρ-shift) Pf(c_J) Pf(b_I)` over
/// `I, J ⊆ [n]` with `|I| = |J|` even, factors multiplied in that order.
/// The `b`'s commute among themselves, as do the `c`'s, so their Pfaffians
/// are the commutative ones.
pub fn nc_msf_rhs(n: usize) -> Result<UEAElement> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let universe = IndexSet::range(n);
    let zero = crate::foundations::Rational::zero();
    let mut total = UEAElement::zero();
    for k2 in (0..=n).step_by(2) {
        for i_set in universe.subsets_of_size(k2) {
            let i_bar = i_set.complement_in(&universe)?;
            let pf_b = pfaffian(&b_block(&as_u32(&i_set)))?;
            let si = complement_sign(&i_set, &universe)?;
            for j_set in universe.subsets_of_size(k2) {
                let j_bar = j_set.complement_in(&universe)?;
                let pf_c = pfaffian(&c_block(&as_u32(&j_set)))?;
                let det = shifted_column_determinant(&as_u32(&i_bar), &as_u32(&j_bar), &zero)?;
                let term = &(&det * &pf_c) * &pf_b;
                total = if si * complement_sign(&j_set, &universe)? > 0 {
                    total + term
                } else {
                    total - term
                };
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uea::matrix::{build_canonical_x, nc_pfaffian};

    fn ue(s: &str) -> UEAElement {
        UEAElement::parse(s).unwrap()
    }

    #[test]
    fn small_n() {
        assert_eq!(nc_msf_rhs(1).unwrap(), ue("1 * a[1,1]"));
        assert_eq!(
            nc_msf_rhs(2).unwrap(),
            ue("1 * a[1,1] a[2,2] + 1 * a[2,2] + -1 * a[2,1] a[1,2] + 1 * c[1,2] b[1,2]")
        );
    }

    #[test]
    fn matches_pfaffian_n3() {
        let x = build_canonical_x(3).unwrap();
        assert_eq!(nc_msf_rhs(3).unwrap(), nc_pfaffian(&x).unwrap());
    }

    #[test]
    fn shift_pattern() {
        // 2x2 on rows (1,2), cols (1,2), u = 0: columns shifted by 1 and 0
        let d = shifted_column_determinant(&[1, 2], &[1, 2], &rat(0)).unwrap();
        assert_eq!(d, ue("1 * a[1,1] a[2,2] + 1 * a[2,2] + -1 * a[2,1] a[1,2]"));
        assert_eq!(shifted_column_determinant(&[], &[], &rat(0)).unwrap(), UEAElement::scalar(rat(1)));
    }
}
