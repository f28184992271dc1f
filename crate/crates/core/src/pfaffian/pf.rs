//! Commutative Pfaffians: the matching sum, the first-row expansion, and the
//! cofactor (co-Pfaffian) machinery.

use num_traits::Zero;

use super::alternating::{AlternatingMatrix, CoPfaffianMatrix};
use crate::error::{Error, Result};
use crate::foundations::{permutation_sign, split_sign, IndexSet, Rational, Ring};

fn check_even<R: Ring>(a: &AlternatingMatrix<R>) -> Result<()> {
    if !a.size().is_multiple_of(2) {
        return Err(Error::OddSize(a.size()));
    }
    Ok(())
}

/// Sum over perfect matchings `{(i1,j1), …, (im,jm)}` with `ik < jk` and
/// `i1 < i2 < …`, each weighted by the sign of the permutation
/// `(i1 j1 i2 j2 …)`. The empty matrix has Pfaffian 1.
pub fn pfaffian_definitional<R: Ring>(a: &AlternatingMatrix<R>) -> Result<R> {
    check_even(a)?;
    fn go<R: Ring>(a: &AlternatingMatrix<R>, free: &mut Vec<usize>, seq: &mut Vec<usize>, acc: &mut R) {
        if free.is_empty() {
            let mut prod = R::one();
            for pair in seq.chunks(2) {
                prod = prod * a.get(pair[0], pair[1]).clone();
            }
            *acc = if permutation_sign(seq) > 0 {
                acc.clone() + prod
            } else {
                acc.clone() - prod
            };
            return;
        }
        let first = free.remove(0);
        for k in 0..free.len() {
            let partner = free.remove(k);
            seq.push(first);
            seq.push(partner);
            go(a, free, seq, acc);
            seq.truncate(seq.len() - 2);
            free.insert(k, partner);
        }
        free.insert(0, first);
    }
    let mut acc = R::zero();
    go(a, &mut (0..a.size()).collect(), &mut Vec::new(), &mut acc);
    Ok(acc)
}

/// Recursive expansion along the first row:
/// `Pf(A) = Σ_{j≥2} (-1)^j a_{1j} Pf(A with rows/cols 1, j removed)`.
pub fn pfaffian<R: Ring>(a: &AlternatingMatrix<R>) -> Result<R> {
    check_even(a)?;
    Ok(pf_on(a, &(0..a.size()).collect::<Vec<_>>()))
}

/// Pfaffian of the principal submatrix on `idx` (0-based, even length).
fn pf_on<R: Ring>(a: &AlternatingMatrix<R>, idx: &[usize]) -> R {
    match idx.len() {
        0 => R::one(),
        2 => a.get(idx[0], idx[1]).clone(),
        _ => {
            let mut acc = R::zero();
            let mut rest = Vec::with_capacity(idx.len() - 2);
            for t in 1..idx.len() {
                let x = a.get(idx[0], idx[t]);
                if x.is_zero() {
                    continue;
                }
                rest.clear();
                rest.extend(idx[1..].iter().enumerate().filter(|&(k, _)| k + 1 != t).map(|(_, &v)| v));
                let term = x.clone() * pf_on(a, &rest);
                // t is the 0-based column, so the 1-based sign (-1)^j is (-1)^(t+1)
                acc = if t % 2 == 1 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// `γ_{i,j}(A)` for 0-based `i, j`:
/// `(-1)^{i+j-1} Pf(A without i, j)` for `i < j` (1-based exponent),
/// `0` on the diagonal, and `(-1)^{i+j} Pf(A without i, j)` for `i > j`.
pub fn cofactor_pfaffian<R: Ring>(a: &AlternatingMatrix<R>, i: usize, j: usize) -> Result<R> {
    check_even(a)?;
    let size = a.size();
    if i >= size || j >= size {
        return Err(Error::IndexOutOfRange { row: i, col: j, size });
    }
    if i == j {
        return Ok(R::zero());
    }
    let rest: Vec<usize> = (0..size).filter(|&k| k != i && k != j).collect();
    let pf = pf_on(a, &rest);
    // 1-based i + j has the same parity as 0-based i + j
    let odd_exponent = if i < j { (i + j + 1) % 2 == 1 } else { (i + j) % 2 == 1 };
    Ok(if odd_exponent { -pf } else { pf })
}

pub fn copfaffian_matrix<R: Ring>(a: &AlternatingMatrix<R>) -> Result<CoPfaffianMatrix<R>> {
    check_even(a)?;
    let mut upper = Vec::new();
    for i in 0..a.size() {
        for j in i + 1..a.size() {
            upper.push(cofactor_pfaffian(a, i, j)?);
        }
    }
    let mut it = upper.into_iter();
    let m = AlternatingMatrix::from_upper(a.size(), |_, _| it.next().expect("counted"));
    Ok(CoPfaffianMatrix::new(m))
}

/// Residuals `Σ_k a_{ik} γ_{jk}(A) - δ_{ij} Pf(A)` for every `(i, j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoPfaffianReport<R> {
    pub residuals: Vec<((usize, usize), R)>,
}

impl<R: Ring> CoPfaffianReport<R> {
    pub fn holds(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }

    pub fn failures(&self) -> impl Iterator<Item = &((usize, usize), R)> {
        self.residuals.iter().filter(|(_, r)| !r.is_zero())
    }
}

pub fn copfaffian_expansion_check<R: Ring>(a: &AlternatingMatrix<R>) -> Result<CoPfaffianReport<R>> {
    let pf = pfaffian(a)?;
    let hat = copfaffian_matrix(a)?;
    let size = a.size();
    let mut residuals = Vec::with_capacity(size * size);
    for i in 0..size {
        for j in 0..size {
            let mut sum = R::zero();
            for k in 0..size {
                sum = sum + a.get(i, k).clone() * hat.get(j, k).clone();
            }
            if i == j {
                sum = sum - pf.clone();
            }
            residuals.push(((i, j), sum));
        }
    }
    Ok(CoPfaffianReport { residuals })
}

/// Checks `Pf(A_I) / Pf(A) = sgn(I, Ī) · Pf((Â / Pf A)_Ī)` for an
/// invertible rational `A` and a 1-based index set `I` of even size.
pub fn iw06_relation_check(a: &AlternatingMatrix<Rational>, i_set: &IndexSet) -> Result<bool> {
    if !i_set.len().is_multiple_of(2) {
        return Err(Error::OddIndexSet(i_set.len()));
    }
    let pf = pfaffian(a)?;
    if pf.is_zero() {
        return Err(Error::Singular);
    }
    let universe = IndexSet::range(a.size());
    let bar = i_set.complement_in(&universe)?;
    let zero_based = |s: &IndexSet| s.elements().iter().map(|&x| x - 1).collect::<Vec<_>>();

    let lhs = pfaffian(&a.principal(&zero_based(i_set)))? / &pf;
    let hat = copfaffian_matrix(a)?;
    let scaled = hat.as_alternating().scale(&(Rational::from_integer(1.into()) / &pf));
    let sign = split_sign(&universe, i_set, &bar)?;
    let rhs = pfaffian(&scaled.principal(&zero_based(&bar)))? * Rational::from_integer(sign.into());
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::{rat, MultiPoly};
    use crate::pfaffian::matrix::{column_determinant, Matrix};

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn small_cases() {
        let empty = AlternatingMatrix::<Rational>::from_upper(0, |_, _| unreachable!());
        assert_eq!(pfaffian(&empty).unwrap(), rat(1));
        assert_eq!(pfaffian_definitional(&empty).unwrap(), rat(1));
        let two = AlternatingMatrix::from_upper(2, |_, _| rat(5));
        assert_eq!(pfaffian(&two).unwrap(), rat(5));
        let x = AlternatingMatrix::from_upper(2, |_, _| p("x"));
        assert_eq!(pfaffian_definitional(&x).unwrap(), p("x"));
    }

    #[test]
    fn generic_4x4_three_matchings() {
        let a = AlternatingMatrix::generic(4);
        let expected = p("x[1,2]*x[3,4] - x[1,3]*x[2,4] + x[1,4]*x[2,3]");
        assert_eq!(pfaffian_definitional(&a).unwrap(), expected);
        assert_eq!(pfaffian(&a).unwrap(), expected);
    }

    #[test]
    fn odd_size_is_an_error() {
        let a = AlternatingMatrix::from_upper(3, |_, _| rat(1));
        assert_eq!(pfaffian(&a).unwrap_err(), Error::OddSize(3));
        assert_eq!(pfaffian_definitional(&a).unwrap_err(), Error::OddSize(3));
    }

    #[test]
    fn expansion_matches_matchings_up_to_8() {
        for size in [0, 2, 4, 6, 8] {
            let a = AlternatingMatrix::generic(size);
            assert_eq!(pfaffian(&a).unwrap(), pfaffian_definitional(&a).unwrap(), "size {size}");
        }
    }

    #[test]
    fn square_is_determinant() {
        let a = AlternatingMatrix::generic(4);
        let pf = pfaffian(&a).unwrap();
        assert_eq!(&pf * &pf, column_determinant(a.as_matrix()).unwrap());
    }

    #[test]
    fn cofactor_examples() {
        let a = AlternatingMatrix::generic(4);
        assert!(cofactor_pfaffian(&a, 1, 1).unwrap().is_zero());
        // γ_{1,3} = (-1)^{1+3-1} Pf(A_{2,4}) = -x[2,4]
        assert_eq!(cofactor_pfaffian(&a, 0, 2).unwrap(), p("-x[2,4]"));
        let two = AlternatingMatrix::generic(2);
        assert_eq!(cofactor_pfaffian(&two, 0, 1).unwrap(), p("1"));
        assert!(cofactor_pfaffian(&a, 0, 4).is_err());
    }

    #[test]
    fn cofactor_antisymmetry() {
        let a = AlternatingMatrix::generic(6);
        for i in 0..6 {
            for j in 0..6 {
                let g = cofactor_pfaffian(&a, i, j).unwrap();
                let h = cofactor_pfaffian(&a, j, i).unwrap();
                assert_eq!(g, -h);
            }
        }
    }

    #[test]
    fn copfaffian_expansion_symbolic() {
        for size in [2, 4, 6] {
            let report = copfaffian_expansion_check(&AlternatingMatrix::generic(size)).unwrap();
            assert!(report.holds(), "size {size}");
            assert_eq!(report.residuals.len(), size * size);
        }
    }

    #[test]
    fn iw06_trivial_sets() {
        let a = AlternatingMatrix::from_upper(4, |i, j| rat((i * 3 + j * 5) as i64 % 7 - 3));
        assert!(!pfaffian(&a).unwrap().is_zero());
        assert!(iw06_relation_check(&a, &IndexSet::range(4)).unwrap());
        assert!(iw06_relation_check(&a, &IndexSet::empty()).unwrap());
        assert!(iw06_relation_check(&a, &IndexSet::new(vec![1, 3]).unwrap()).unwrap());
        assert_eq!(
            iw06_relation_check(&a, &IndexSet::new(vec![1]).unwrap()).unwrap_err(),
            Error::OddIndexSet(1)
        );
        let singular = AlternatingMatrix::from_upper(4, |_, _| rat(1));
        assert_eq!(pfaffian(&singular).unwrap(), rat(1) - rat(1) + rat(1));
        let zero = AlternatingMatrix::<Rational>::try_new(Matrix::zeros(2, 2)).unwrap();
        assert_eq!(iw06_relation_check(&zero, &IndexSet::empty()).unwrap_err(), Error::Singular);
    }
}
