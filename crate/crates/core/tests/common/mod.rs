#![allow(dead_code)]

use pfaffian_msf::foundations::{ratio, Rational};
use pfaffian_msf::pfaffian::{pfaffian, AlternatingMatrix, Matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2024;

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

/// Numerator in `[-9, 9]`, denominator in `[1, 4]`.
pub fn small_rational<G: Rng + ?Sized>(r: &mut G) -> Rational {
    ratio(r.gen_range(-9..=9), r.gen_range(1..=4))
}

pub fn random_alternating(r: &mut impl Rng, size: usize) -> AlternatingMatrix<Rational> {
    AlternatingMatrix::from_upper(size, |_, _| small_rational(r))
}

pub fn random_invertible_alternating(r: &mut impl Rng, size: usize) -> AlternatingMatrix<Rational> {
    loop {
        let a = random_alternating(r, size);
        if pfaffian(&a).is_ok_and(|pf| pf != ratio(0, 1)) {
            return a;
        }
    }
}

pub fn int_matrix(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|row| row.iter().map(|&x| ratio(x, 1)).collect()).collect()).unwrap()
}

/// A symmetric invertible form that is not the anti-diagonal one.
pub fn skewed_form() -> Matrix<Rational> {
    int_matrix(&[&[2, 1, 0, 0], &[1, 1, 0, 1], &[0, 0, 0, 1], &[0, 1, 1, 3]])
}
