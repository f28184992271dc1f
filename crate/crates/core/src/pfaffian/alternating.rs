//! Alternating and anti-alternating matrices, and the `(p, q)` block
//! coloring.

use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::foundations::{MultiPoly, Ring, Var};
use crate::uea::Generator;

/// A square matrix with `A^T = -A` and zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct AlternatingMatrix<R> {
    inner: Matrix<R>,
}

impl<R: Ring> AlternatingMatrix<R> {
    /// Checks alternation. The error names the offending cell (1-based).
    pub fn try_new(m: Matrix<R>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if let Some((r, c)) = m.first_non_alternating() {
            return Err(Error::NotAlternating {
                row: r + 1,
                col: c + 1,
            });
        }
        Ok(AlternatingMatrix { inner: m })
    }

    /// Builds the matrix from its strict upper triangle; `upper(i, j)` is
    /// called with `i < j` (0-based) and mirrored with a sign.
    pub fn from_upper(size: usize, mut upper: impl FnMut(usize, usize) -> R) -> Self {
        let mut m = Matrix::zeros(size, size);
        for i in 0..size {
            for j in i + 1..size {
                let x = upper(i, j);
                m.set(j, i, -x.clone());
                m.set(i, j, x);
            }
        }
        AlternatingMatrix { inner: m }
    }

    pub fn size(&self) -> usize {
        self.inner.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        self.inner.get(i, j)
    }

    pub fn as_matrix(&self) -> &Matrix<R> {
        &self.inner
    }

    pub fn into_matrix(self) -> Matrix<R> {
        self.inner
    }

    /// `A_I`: rows and columns in `indices` (0-based, increasing).
    pub fn principal(&self, indices: &[usize]) -> Self {
        AlternatingMatrix {
            inner: self.inner.select(indices, indices),
        }
    }

    pub fn scale(&self, r: &crate::foundations::Rational) -> Self {
        AlternatingMatrix {
            inner: self.inner.scale(r),
        }
    }
}

impl AlternatingMatrix<MultiPoly> {
    /// The generic alternating matrix with entries `x[i,j]` above the
    /// diagonal (1-based names).
    pub fn generic(size: usize) -> Self {
        AlternatingMatrix::from_upper(size, |i, j| {
            MultiPoly::var(Var::X(i as i32 + 1, j as i32 + 1))
        })
    }
}

/// An element of `o_2n` colored as
/// `[[a, b], [c, -J_q a^T J_p]]` with `a` of size `p × q` and `b`, `c`
/// alternating of sizes `p` and `q`.
///
/// Rows are labelled `1..=p, -q..=-1` and columns `1..=q, -p..=-1`, so
/// that `x[i,-j] = b[i,j]`, `x[-j,i] = c[i,j]` and `x[-j,-i] = -x[i,j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AntiAlternatingMatrix<R> {
    p: usize,
    q: usize,
    a: Matrix<R>,
    b: AlternatingMatrix<R>,
    c: AlternatingMatrix<R>,
}

impl<R: Ring> AntiAlternatingMatrix<R> {
    /// `b_upper[i]` lists `b[i, j]` for `j > i` (so row `i` has `p - 1 - i`
    /// entries); likewise `c_upper`.
    pub fn from_blocks(a: Matrix<R>, b_upper: Vec<Vec<R>>, c_upper: Vec<Vec<R>>) -> Result<Self> {
        let (p, q) = (a.rows(), a.cols());
        if (p + q) % 2 != 0 || p + q == 0 {
            return Err(Error::InvalidColoring(format!("p + q = {} must be positive and even", p + q)));
        }
        let triangle = |rows: &Vec<Vec<R>>, size: usize, name: &str| -> Result<AlternatingMatrix<R>> {
            let expected = size.saturating_sub(1);
            let nonempty: Vec<&Vec<R>> = rows.iter().filter(|r| !r.is_empty()).collect();
            if nonempty.len() != expected {
                return Err(Error::InvalidColoring(format!(
                    "block {name} needs {expected} strict-upper rows, got {}",
                    nonempty.len()
                )));
            }
            for (i, row) in nonempty.iter().enumerate() {
                if row.len() != size - 1 - i {
                    return Err(Error::InvalidColoring(format!(
                        "block {name} row {} needs {} entries, got {}",
                        i + 1,
                        size - 1 - i,
                        row.len()
                    )));
                }
            }
            Ok(AlternatingMatrix::from_upper(size, |i, j| nonempty[i][j - i - 1].clone()))
        };
        let b = triangle(&b_upper, p, "b")?;
        let c = triangle(&c_upper, q, "c")?;
        Ok(AntiAlternatingMatrix { p, q, a, b, c })
    }

    /// From full blocks; `b` and `c` must already be alternating.
    pub fn from_alternating_blocks(
        a: Matrix<R>,
        b: AlternatingMatrix<R>,
        c: AlternatingMatrix<R>,
    ) -> Result<Self> {
        let (p, q) = (a.rows(), a.cols());
        if (p + q) % 2 != 0 || p + q == 0 || b.size() != p || c.size() != q {
            return Err(Error::InvalidColoring(format!(
                "a is {p}x{q}, b is {}x{0}, c is {}x{1}",
                b.size(),
                c.size()
            )));
        }
        Ok(AntiAlternatingMatrix { p, q, a, b, c })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Half the full size.
    pub fn n(&self) -> usize {
        (self.p + self.q) / 2
    }

    pub fn a(&self) -> &Matrix<R> {
        &self.a
    }

    pub fn b(&self) -> &AlternatingMatrix<R> {
        &self.b
    }

    pub fn c(&self) -> &AlternatingMatrix<R> {
        &self.c
    }

    /// Row label of 0-based row `r`: `1..=p` then `-q..=-1`.
    pub fn row_label(&self, r: usize) -> i32 {
        let size = self.p + self.q;
        if r < self.p {
            r as i32 + 1
        } else {
            -((size - r) as i32)
        }
    }

    /// Column label of 0-based column `s`: `1..=q` then `-p..=-1`.
    pub fn col_label(&self, s: usize) -> i32 {
        let size = self.p + self.q;
        if s < self.q {
            s as i32 + 1
        } else {
            -((size - s) as i32)
        }
    }

    /// `x[i,j]` for a row label `i ∈ [p] ∪ [-q]` and column label
    /// `j ∈ [q] ∪ [-p]`.
    pub fn entry(&self, i: i32, j: i32) -> R {
        let u = |k: i32| (k.unsigned_abs() - 1) as usize;
        match (i > 0, j > 0) {
            (true, true) => self.a.get(u(i), u(j)).clone(),
            (true, false) => self.b.get(u(i), u(j)).clone(),
            (false, true) => self.c.get(u(j), u(i)).clone(),
            (false, false) => -self.a.get(u(j), u(i)).clone(),
        }
    }

    /// The full `2n × 2n` matrix `X`.
    pub fn to_matrix(&self) -> Matrix<R> {
        let size = self.p + self.q;
        Matrix::from_fn(size, size, |r, s| self.entry(self.row_label(r), self.col_label(s)))
    }

    /// `X · J_{2n}`, alternating by construction.
    pub fn times_j(&self) -> AlternatingMatrix<R> {
        let size = self.p + self.q;
        let x = self.to_matrix();
        AlternatingMatrix {
            inner: Matrix::from_fn(size, size, |r, s| x.get(r, size - 1 - s).clone()),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> AntiAlternatingMatrix<S> {
        AntiAlternatingMatrix {
            p: self.p,
            q: self.q,
            a: self.a.map(&f),
            b: AlternatingMatrix {
                inner: self.b.inner.map(&f),
            },
            c: AlternatingMatrix {
                inner: self.c.inner.map(&f),
            },
        }
    }
}

impl AntiAlternatingMatrix<MultiPoly> {
    /// Fully generic entries `a[i,j]`, `b[i,j]`, `c[i,j]`.
    pub fn generic(p: usize, q: usize) -> Result<Self> {
        let var = |g: Generator| MultiPoly::var(Var::Gen(g));
        let a = Matrix::from_fn(p, q, |i, j| var(Generator::a(i as u32 + 1, j as u32 + 1)));
        let b = AlternatingMatrix::from_upper(p, |i, j| var(Generator::b(i as u32 + 1, j as u32 + 1)));
        let c = AlternatingMatrix::from_upper(q, |i, j| var(Generator::c(i as u32 + 1, j as u32 + 1)));
        AntiAlternatingMatrix::from_alternating_blocks(a, b, c)
    }
}

/// The co-Pfaffian matrix `Â` with entries `γ_{i,j}(A)`; alternating.
#[derive(Debug, Clone, PartialEq)]
pub struct CoPfaffianMatrix<R> {
    entries: AlternatingMatrix<R>,
}

impl<R: Ring> CoPfaffianMatrix<R> {
    pub(crate) fn new(entries: AlternatingMatrix<R>) -> Self {
        CoPfaffianMatrix { entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        self.entries.get(i, j)
    }

    pub fn as_alternating(&self) -> &AlternatingMatrix<R> {
        &self.entries
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::{rat, Rational};

    #[test]
    fn generic_matrix_lies_in_o2n() {
        for (p, q) in [(1, 1), (2, 2), (1, 3), (3, 1), (2, 4), (3, 3), (0, 2)] {
            let x = AntiAlternatingMatrix::generic(p, q).unwrap().to_matrix();
            let size = p + q;
            let j: Matrix<MultiPoly> = Matrix::anti_identity(size);
            let lhs = &(&x.transpose() * &j) + &(&j * &x);
            assert!(lhs.is_zero(), "p={p} q={q}");
        }
    }

    #[test]
    fn intro_layout_n2() {
        let x = AntiAlternatingMatrix::generic(2, 2).unwrap().to_matrix();
        let p = |s: &str| MultiPoly::parse(s).unwrap();
        let expected = [
            ["a[1,1]", "a[1,2]", "b[1,2]", "0"],
            ["a[2,1]", "a[2,2]", "0", "-b[1,2]"],
            ["c[1,2]", "0", "-a[2,2]", "-a[1,2]"],
            ["0", "-c[1,2]", "-a[2,1]", "-a[1,1]"],
        ];
        for (r, row) in expected.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                assert_eq!(x.get(r, c), &p(e), "cell ({r},{c})");
            }
        }
    }

    #[test]
    fn try_new_rejects_non_alternating() {
        let m = Matrix::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]).unwrap();
        assert_eq!(
            AlternatingMatrix::try_new(m).unwrap_err(),
            Error::NotAlternating { row: 1, col: 2 }
        );
        let diag = Matrix::from_rows(vec![vec![rat(1)]]).unwrap();
        assert!(AlternatingMatrix::<Rational>::try_new(diag).is_err());
    }

    #[test]
    fn from_blocks_validates_triangles() {
        let a = Matrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(3), rat(4)]]).unwrap();
        assert!(AntiAlternatingMatrix::from_blocks(a.clone(), vec![vec![rat(5)]], vec![vec![rat(6)]]).is_ok());
        assert!(AntiAlternatingMatrix::from_blocks(a.clone(), vec![], vec![vec![rat(6)]]).is_err());
        assert!(AntiAlternatingMatrix::from_blocks(a, vec![vec![rat(5), rat(1)]], vec![vec![rat(6)]]).is_err());
        let odd = Matrix::from_rows(vec![vec![rat(1), rat(2)]]).unwrap();
        assert!(AntiAlternatingMatrix::from_blocks(odd, vec![], vec![vec![rat(1)]]).is_err());
    }
}
