//! Dense matrices over a [`Ring`], plus exact linear algebra over the
//! rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::foundations::{signed_permutations, Rational, Ring};

/// Row-major dense matrix. Indices are 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(size: usize) -> Self {
        Matrix::from_fn(size, size, |r, c| if r == c { R::one() } else { R::zero() })
    }

    /// `J_N`: ones on the anti-diagonal.
    pub fn anti_identity(size: usize) -> Self {
        Matrix::from_fn(size, size, |r, c| {
            if r + c + 1 == size {
                R::one()
            } else {
                R::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &R {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: R) {
        self.data[r * self.cols + c] = value;
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// The submatrix on the given (0-based) rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map(|x| x.scale(r))
    }

    /// Product with entries multiplied in the order `self[i][k] * rhs[k][j]`.
    pub fn try_mul(&self, rhs: &Matrix<R>) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = R::zero();
            for k in 0..self.cols {
                let (x, y) = (self.get(r, k), rhs.get(k, c));
                if !x.is_zero() && !y.is_zero() {
                    acc = acc + x.clone() * y.clone();
                }
            }
            acc
        }))
    }

    fn zip(&self, rhs: &Matrix<R>, f: impl Fn(&R, &R) -> R) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("entrywise operation".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, rhs: &Matrix<R>) -> Result<Self> {
        self.zip(rhs, |a, b| a.clone() + b.clone())
    }

    pub fn try_sub(&self, rhs: &Matrix<R>) -> Result<Self> {
        self.zip(rhs, |a, b| a.clone() - b.clone())
    }

    /// True if `A^T = -A` with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.first_non_alternating().is_none()
    }

    /// The first cell `(r, c)`, `r <= c`, breaking alternation.
    pub fn first_non_alternating(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for r in 0..self.rows {
            for c in r..self.cols {
                let ok = if r == c {
                    self.get(r, c).is_zero()
                } else {
                    (self.get(r, c).clone() + self.get(c, r).clone()).is_zero()
                };
                if !ok {
                    return Some((r, c));
                }
            }
        }
        None
    }
}

/// Column determinant `Σ_σ sgn σ · M[σ(1),1] ⋯ M[σ(m),m]`, factors taken in
/// column order. Over a commutative ring this is the Leibniz determinant.
pub fn column_determinant<R: Ring>(m: &Matrix<R>) -> Result<R> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let size = m.rows;
    let mut total = R::zero();
    'perm: for (sigma, sign) in signed_permutations(size) {
        let mut prod = R::one();
        for (col, &row) in sigma.iter().enumerate() {
            let x = m.get(row, col);
            if x.is_zero() {
                continue 'perm;
            }
            prod = prod * x.clone();
        }
        total = if sign > 0 { total + prod } else { total - prod };
    }
    Ok(total)
}

impl Matrix<Rational> {
    /// Determinant by fraction-exact Gaussian elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                }
                det = -det;
            }
            let p = a.get(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                let factor = a.get(r, col) / &p;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a.get(r, c) - &factor * a.get(col, c);
                    a.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::<Rational>::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::Singular)?;
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                    inv.data.swap(pivot * n + c, col * n + c);
                }
            }
            let p = a.get(col, col).clone();
            for c in 0..n {
                let (x, y) = (a.get(col, c) / &p, inv.get(col, c) / &p);
                a.set(col, c, x);
                inv.set(col, c, y);
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for c in 0..n {
                    let x = a.get(r, c) - &factor * a.get(col, c);
                    let y = inv.get(r, c) - &factor * inv.get(col, c);
                    a.set(r, c, x);
                    inv.set(r, c, y);
                }
            }
        }
        Ok(inv)
    }
}

impl<R: Ring> Add for &Matrix<R> {
    type Output = Matrix<R>;
    fn add(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.try_add(rhs).expect("matrix sizes must agree")
    }
}

impl<R: Ring> Sub for &Matrix<R> {
    type Output = Matrix<R>;
    fn sub(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.try_sub(rhs).expect("matrix sizes must agree")
    }
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, rhs: &Matrix<R>) -> Matrix<R> {
        self.try_mul(rhs).expect("matrix sizes must agree")
    }
}

impl<R: Ring> Neg for &Matrix<R> {
    type Output = Matrix<R>;
    fn neg(self) -> Matrix<R> {
        self.map(|x| -x.clone())
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::{rat, MultiPoly};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn gauss_det_matches_leibniz() {
        let a = m(&[&[2, -1, 0, 3], &[1, 4, -2, 0], &[0, 5, 1, -1], &[7, 0, 2, 2]]);
        assert_eq!(a.det().unwrap(), column_determinant(&a).unwrap());
        let singular = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.det().unwrap(), rat(0));
        assert!(singular.inverse().is_err());
    }

    #[test]
    fn inverse_is_two_sided() {
        let a = m(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(3));
        assert_eq!(&inv * &a, Matrix::identity(3));
    }

    #[test]
    fn symbolic_2x2_determinant() {
        let p = |s: &str| MultiPoly::parse(s).unwrap();
        let a = Matrix::from_rows(vec![vec![p("x"), p("y")], vec![p("z"), p("w")]]).unwrap();
        assert_eq!(column_determinant(&a).unwrap(), p("x*w - y*z"));
    }

    #[test]
    fn anti_identity_squares_to_identity() {
        let j: Matrix<Rational> = Matrix::anti_identity(5);
        assert_eq!(&j * &j, Matrix::identity(5));
    }
}
