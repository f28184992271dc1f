//! Matrices over `U(o_2n)` with signed-index addressing, the canonical
//! matrix `X = (X[i,j])`, and the noncommutative Pfaffian.

use num_traits::One;

use super::element::UEAElement;
use super::generator::Generator;
use crate::error::{Error, Result};
use crate::foundations::{factorial, permutation_sign, signed_permutations, Rational, Ring, SignedIndex};
use crate::pfaffian::{AlternatingMatrix, Matrix};

pub use crate::pfaffian::column_determinant;

/// `X[i,j]` canonicalized: zero for `j = -i`, otherwise `±` one colored
/// generator.
pub fn generator(i: SignedIndex, j: SignedIndex) -> Result<UEAElement> {
    Ok(match Generator::from_signed_indices(i, j)? {
        None => UEAElement::zero(),
        Some((g, s)) => UEAElement::generator(g).scale(&Rational::from_integer(s.into())),
    })
}

/// A `2n × 2n` matrix over `U(o_2n)`. Rows and columns are addressed by
/// signed indices in position order `1..n, -n..-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct UEAMatrix {
    n: usize,
    inner: Matrix<UEAElement>,
}

impl UEAMatrix {
    pub fn from_matrix(m: Matrix<UEAElement>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !m.rows().is_multiple_of(2) {
            return Err(Error::OddSize(m.rows()));
        }
        Ok(UEAMatrix { n: m.rows() / 2, inner: m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_matrix(&self) -> &Matrix<UEAElement> {
        &self.inner
    }

    fn slot(&self, i: i32) -> Result<usize> {
        Ok(SignedIndex::new(i, self.n)?.position() - 1)
    }

    /// The entry in row `i`, column `j` (signed indices).
    pub fn entry(&self, i: i32, j: i32) -> Result<&UEAElement> {
        Ok(self.inner.get(self.slot(i)?, self.slot(j)?))
    }

    fn block(&self, f: impl Fn(i32, i32) -> (i32, i32)) -> Matrix<UEAElement> {
        Matrix::from_fn(self.n, self.n, |r, c| {
            let (i, j) = f(r as i32 + 1, c as i32 + 1);
            self.entry(i, j).expect("in range").clone()
        })
    }

    /// `a[i,j] = X[i,j]`.
    pub fn a(&self) -> Matrix<UEAElement> {
        self.block(|i, j| (i, j))
    }

    /// `b[i,j] = X[i,-j]`.
    pub fn b(&self) -> Matrix<UEAElement> {
        self.block(|i, j| (i, -j))
    }

    /// `c[i,j] = X[-j,i]`.
    pub fn c(&self) -> Matrix<UEAElement> {
        self.block(|i, j| (-j, i))
    }

    /// `X J_{2n}`, checked to be alternating.
    pub fn times_j(&self) -> Result<AlternatingMatrix<UEAElement>> {
        let size = 2 * self.n;
        AlternatingMatrix::try_new(Matrix::from_fn(size, size, |r, s| {
            self.inner.get(r, size - 1 - s).clone()
        }))
    }
}

/// The canonical `X` with `X[i,j] = E[i,j] - E[-j,-i]`.
pub fn build_canonical_x(n: usize) -> Result<UEAMatrix> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let size = 2 * n;
    let mut m = Matrix::zeros(size, size);
    for r in 0..size {
        for c in 0..size {
            let i = SignedIndex::from_position(r + 1, n)?;
            let j = SignedIndex::from_position(c + 1, n)?;
            m.set(r, c, generator(i, j)?);
        }
    }
    UEAMatrix::from_matrix(m)
}

fn pairings(size: usize) -> Vec<Vec<usize>> {
    // ordered sequences of disjoint pairs (i < j) covering 0..size
    fn go(free: &mut Vec<usize>, seq: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if free.is_empty() {
            out.push(seq.clone());
            return;
        }
        for x in 0..free.len() {
            for y in x + 1..free.len() {
                let (i, j) = (free[x], free[y]);
                free.remove(y);
                free.remove(x);
                seq.extend([i, j]);
                go(free, seq, out);
                seq.truncate(seq.len() - 2);
                free.insert(x, i);
                free.insert(y, j);
            }
        }
    }
    let mut out = Vec::new();
    go(&mut (0..size).collect(), &mut Vec::with_capacity(size), &mut out);
    out
}

fn signed_word_sum(a: &AlternatingMatrix<UEAElement>, words: impl Iterator<Item = (Vec<usize>, i32)>) -> UEAElement {
    let mut total = UEAElement::zero();
    'word: for (sigma, sign) in words {
        let mut prod = UEAElement::one();
        for pair in sigma.chunks(2) {
            let x = a.get(pair[0], pair[1]);
            if x.is_zero() {
                continue 'word;
            }
            prod = &prod * x;
        }
        total = if sign > 0 { total + prod } else { total - prod };
    }
    total
}

/// `Pf(X) = (1/n!) Σ sgn(σ) Ã[σ1,σ2] ⋯ Ã[σ(2n-1),σ(2n)]` over `σ` with
/// `σ(2i-1) < σ(2i)`, where `Ã = X J`. Factors are multiplied in order and
/// the result is normal ordered.
pub fn nc_pfaffian(x: &UEAMatrix) -> Result<UEAElement> {
    let a = x.times_j()?;
    let words = pairings(2 * x.n).into_iter().map(|s| {
        let sign = permutation_sign(&s);
        (s, sign)
    });
    let total = signed_word_sum(&a, words);
    Ok(total.scale(&(Rational::one() / factorial(x.n))))
}

/// The same Pfaffian from the sum over all `(2n)!` permutations with
/// prefactor `1 / (2^n n!)`. Used as a cross-check.
pub fn nc_pfaffian_unrestricted(x: &UEAMatrix) -> Result<UEAElement> {
    let a = x.times_j()?;
    let total = signed_word_sum(&a, signed_permutations(2 * x.n).into_iter());
    let norm = crate::foundations::pow2(x.n) * factorial(x.n);
    Ok(total.scale(&(Rational::one() / norm)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::rat;

    fn ue(s: &str) -> UEAElement {
        UEAElement::parse(s).unwrap()
    }

    fn sidx(v: i32, n: usize) -> SignedIndex {
        SignedIndex::new(v, n).unwrap()
    }

    #[test]
    fn generator_examples() {
        assert!(generator(sidx(1, 2), sidx(-1, 2)).unwrap().is_zero());
        assert_eq!(generator(sidx(1, 2), sidx(2, 2)).unwrap(), UEAElement::generator(Generator::a(1, 2)));
        assert_eq!(generator(sidx(-1, 2), sidx(-2, 2)).unwrap(), ue("-1 * a[2,1]"));
        assert!(SignedIndex::new(3, 2).is_err());
    }

    #[test]
    fn canonical_n1() {
        let x = build_canonical_x(1).unwrap();
        assert_eq!(x.entry(1, 1).unwrap(), &ue("1 * a[1,1]"));
        assert!(x.entry(1, -1).unwrap().is_zero());
        assert!(x.entry(-1, 1).unwrap().is_zero());
        assert_eq!(x.entry(-1, -1).unwrap(), &ue("-1 * a[1,1]"));
        assert_eq!(nc_pfaffian(&x).unwrap(), ue("1 * a[1,1]"));
    }

    #[test]
    fn canonical_n2_layout() {
        let x = build_canonical_x(2).unwrap();
        // rows 1, 2, -2, -1 in position order
        let expected = [
            ["1 * a[1,1]", "1 * a[1,2]", "1 * b[1,2]", "0"],
            ["1 * a[2,1]", "1 * a[2,2]", "0", "-1 * b[1,2]"],
            ["1 * c[1,2]", "0", "-1 * a[2,2]", "-1 * a[1,2]"],
            ["0", "-1 * c[1,2]", "-1 * a[2,1]", "-1 * a[1,1]"],
        ];
        for (r, row) in expected.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                assert_eq!(x.as_matrix().get(r, c), &ue(cell), "cell ({r}, {c})");
            }
        }
        assert_eq!(x.b().get(0, 1), &ue("1 * b[1,2]"));
        assert_eq!(x.c().get(0, 1), &ue("1 * c[1,2]"));
        assert_eq!(x.c().get(1, 0), &ue("-1 * c[1,2]"));
    }

    #[test]
    fn canonical_anti_symmetry_n3() {
        let x = build_canonical_x(3).unwrap();
        for i in [-3, -2, -1, 1, 2, 3] {
            for j in [-3, -2, -1, 1, 2, 3] {
                assert_eq!(x.entry(-j, -i).unwrap(), &-x.entry(i, j).unwrap().clone());
            }
        }
    }

    #[test]
    fn intro_example_n2() {
        let x = build_canonical_x(2).unwrap();
        let expected = ue("1 * a[1,1] a[2,2] + 1 * a[2,2] + -1 * a[2,1] a[1,2] + 1 * c[1,2] b[1,2]");
        assert_eq!(nc_pfaffian(&x).unwrap(), expected);
        assert_eq!(nc_pfaffian_unrestricted(&x).unwrap(), expected);
    }

    #[test]
    fn restricted_matches_unrestricted_n3() {
        let x = build_canonical_x(3).unwrap();
        assert_eq!(nc_pfaffian(&x).unwrap(), nc_pfaffian_unrestricted(&x).unwrap());
    }

    #[test]
    fn pairing_count() {
        assert_eq!(pairings(2).len(), 1);
        assert_eq!(pairings(4).len(), 6);
        assert_eq!(pairings(6).len(), 90);
    }

    #[test]
    fn shifted_column_determinant_n2() {
        let x = build_canonical_x(2).unwrap();
        let mut a = x.a();
        let shifted = a.get(0, 0).clone() + UEAElement::scalar(rat(1));
        a.set(0, 0, shifted);
        assert_eq!(
            column_determinant(&a).unwrap(),
            ue("1 * a[1,1] a[2,2] + 1 * a[2,2] + -1 * a[2,1] a[1,2]")
        );
    }

    #[test]
    fn rejects_non_anti_alternating() {
        let mut m = build_canonical_x(2).unwrap().as_matrix().clone();
        m.set(0, 3, ue("1 * a[1,1]"));
        let bad = UEAMatrix::from_matrix(m).unwrap();
        assert!(matches!(nc_pfaffian(&bad), Err(Error::NotAlternating { .. })));
    }
}
