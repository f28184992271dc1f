//! Matrix-level checks for the orthogonal group and Lie algebra of a
//! symmetric form `S`: Cayley test points, `Pf(g A tg) = det g Pf(A)`, and
//! membership in `o(S)`.

use super::alternating::AlternatingMatrix;
use super::matrix::Matrix;
use super::pf::pfaffian;
use crate::error::{Error, Result};
use crate::foundations::Rational;

fn check_symmetric(s: &Matrix<Rational>) -> Result<()> {
    if !s.is_square() {
        return Err(Error::NotSquare {
            rows: s.rows(),
            cols: s.cols(),
        });
    }
    if s.transpose() != *s {
        return Err(Error::InvalidParameter("form S is not symmetric".into()));
    }
    Ok(())
}

fn same_size(x: &Matrix<Rational>, s: &Matrix<Rational>) -> Result<()> {
    if !x.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    if x.rows() != s.rows() {
        return Err(Error::DimensionMismatch(format!("{}x{0} against {}x{1}", x.rows(), s.rows())));
    }
    Ok(())
}

/// `tX S + S X`.
fn form_defect(x: &Matrix<Rational>, s: &Matrix<Rational>) -> Matrix<Rational> {
    &(&x.transpose() * s) + &(s * x)
}

/// `Y = S⁻¹ K` for alternating `K`; always lies in `o(S)`.
pub fn orthogonal_algebra_element(k: &AlternatingMatrix<Rational>, s: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    check_symmetric(s)?;
    same_size(k.as_matrix(), s)?;
    Ok(&s.inverse()? * k.as_matrix())
}

/// `g = (I - Y)(I + Y)⁻¹` for `Y ∈ o(S)`; then `tg S g = S`.
pub fn cayley_orthogonal(y: &Matrix<Rational>, s: &Matrix<Rational>) -> Result<Matrix<Rational>> {
    check_symmetric(s)?;
    same_size(y, s)?;
    if !form_defect(y, s).is_zero() {
        return Err(Error::NotInLieAlgebra);
    }
    let id = Matrix::identity(y.rows());
    let inv = (&id + y).inverse()?;
    Ok(&(&id - y) * &inv)
}

/// True iff `tg S g = S`.
pub fn preserves_form(g: &Matrix<Rational>, s: &Matrix<Rational>) -> bool {
    g.is_square() && g.rows() == s.rows() && &(&g.transpose() * s) * g == *s
}

/// `Pf(g A tg) = det(g) Pf(A)`.
pub fn equivariance_check(a: &AlternatingMatrix<Rational>, g: &Matrix<Rational>) -> Result<bool> {
    same_size(g, a.as_matrix())?;
    let moved = &(g * a.as_matrix()) * &g.transpose();
    let lhs = pfaffian(&AlternatingMatrix::try_new(moved)?)?;
    let rhs = g.det()? * pfaffian(a)?;
    Ok(lhs == rhs)
}

/// Outcome of [`lie_algebra_membership_check`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MembershipReport {
    /// `tX S + S X = 0`.
    pub in_algebra: bool,
    /// `X S⁻¹` is alternating; `None` when `S` is singular.
    pub xs_inverse_alternating: Option<bool>,
}

impl MembershipReport {
    /// The two criteria must coincide whenever the second is defined.
    pub fn consistent(&self) -> bool {
        self.xs_inverse_alternating.is_none_or(|b| b == self.in_algebra)
    }
}

pub fn lie_algebra_membership_check(x: &Matrix<Rational>, s: &Matrix<Rational>) -> Result<MembershipReport> {
    same_size(x, s)?;
    let in_algebra = form_defect(x, s).is_zero();
    let xs_inverse_alternating = match s.inverse() {
        Ok(inv) => Some((x * &inv).is_alternating()),
        Err(Error::Singular) => None,
        Err(e) => return Err(e),
    };
    Ok(MembershipReport {
        in_algebra,
        xs_inverse_alternating,
    })
}

/// Pfaffians of `X S` and of `X S⁻¹`, each `None` when that product is not
/// alternating. For `S = J` they agree; for general `S` they need not.
#[derive(Debug, Clone, PartialEq)]
pub struct FormPfaffians {
    pub times_s: Option<Rational>,
    pub times_s_inverse: Option<Rational>,
}

pub fn pfaffian_against_form(x: &Matrix<Rational>, s: &Matrix<Rational>) -> Result<FormPfaffians> {
    check_symmetric(s)?;
    same_size(x, s)?;
    let pf_of = |m: Matrix<Rational>| -> Result<Option<Rational>> {
        match AlternatingMatrix::try_new(m) {
            Ok(a) => pfaffian(&a).map(Some),
            Err(Error::NotAlternating { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };
    Ok(FormPfaffians {
        times_s: pf_of(x * s)?,
        times_s_inverse: pf_of(x * &s.inverse()?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn cayley_of_zero_is_identity() {
        let s = Matrix::anti_identity(4);
        let g = cayley_orthogonal(&Matrix::zeros(4, 4), &s).unwrap();
        assert_eq!(g, Matrix::identity(4));
    }

    #[test]
    fn cayley_diagonal_n1() {
        let t = ratio(1, 3);
        let y = Matrix::from_rows(vec![vec![t.clone(), rat(0)], vec![rat(0), -t.clone()]]).unwrap();
        let s = Matrix::anti_identity(2);
        let g = cayley_orthogonal(&y, &s).unwrap();
        let one = rat(1);
        let expected = Matrix::from_rows(vec![
            vec![(&one - &t) / (&one + &t), rat(0)],
            vec![rat(0), (&one + &t) / (&one - &t)],
        ])
        .unwrap();
        assert_eq!(g, expected);
        assert!(preserves_form(&g, &s));
    }

    #[test]
    fn cayley_rejects_outside_algebra_and_singular() {
        let s = Matrix::anti_identity(2);
        assert_eq!(cayley_orthogonal(&Matrix::identity(2), &s).unwrap_err(), Error::NotInLieAlgebra);
        let y = m(&[&[-1, 0], &[0, 1]]);
        assert_eq!(cayley_orthogonal(&y, &s).unwrap_err(), Error::Singular);
    }

    #[test]
    fn equivariance_simple() {
        let a = AlternatingMatrix::from_upper(2, |_, _| rat(3));
        assert!(equivariance_check(&a, &Matrix::identity(2)).unwrap());
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(swap.det().unwrap(), rat(-1));
        assert!(equivariance_check(&a, &swap).unwrap());
    }

    #[test]
    fn membership_examples() {
        let s = Matrix::anti_identity(2);
        let zero = lie_algebra_membership_check(&Matrix::zeros(2, 2), &s).unwrap();
        assert!(zero.in_algebra && zero.consistent());
        let h = lie_algebra_membership_check(&m(&[&[5, 0], &[0, -5]]), &s).unwrap();
        assert!(h.in_algebra && h.consistent());

        // a nonzero entry at (1, -1) of a 4x4 matrix breaks anti-alternation
        let s4 = Matrix::anti_identity(4);
        let mut x = Matrix::zeros(4, 4);
        x.set(0, 3, rat(1));
        let bad = lie_algebra_membership_check(&x, &s4).unwrap();
        assert!(!bad.in_algebra);
        assert_eq!(bad.xs_inverse_alternating, Some(false));
    }

    #[test]
    fn membership_with_singular_form() {
        let s = m(&[&[1, 0], &[0, 0]]);
        let r = lie_algebra_membership_check(&Matrix::zeros(2, 2), &s).unwrap();
        assert!(r.in_algebra);
        assert_eq!(r.xs_inverse_alternating, None);
    }

    #[test]
    fn conventions_agree_for_j() {
        let k = AlternatingMatrix::from_upper(4, |i, j| rat((i + 2 * j) as i64 - 3));
        let s = Matrix::anti_identity(4);
        let y = orthogonal_algebra_element(&k, &s).unwrap();
        let both = pfaffian_against_form(&y, &s).unwrap();
        assert!(both.times_s.is_some());
        assert_eq!(both.times_s, both.times_s_inverse);
    }

    #[test]
    fn conventions_differ_for_general_form() {
        let s = m(&[&[2, 0], &[0, 1]]);
        let k = AlternatingMatrix::from_upper(2, |_, _| rat(1));
        let y = orthogonal_algebra_element(&k, &s).unwrap();
        let both = pfaffian_against_form(&y, &s).unwrap();
        assert_eq!(both.times_s_inverse, Some(ratio(1, 2)));
        assert_ne!(both.times_s, both.times_s_inverse);
    }
}
