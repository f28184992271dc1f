use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::Rational;

/// An associative unital ring (`Zero` and `One` supply the units) with an embedding of the rationals.
///
/// Multiplication is not assumed to be commutative: the enveloping algebra
/// implements this trait too. Algorithms that need commuting entries (the
/// commutative Pfaffian, Leibniz determinants) say so in their docs.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// Multiplies by a rational scalar (scalars are central).
    fn scale(&self, r: &Rational) -> Self {
        self.clone() * Self::from_rational(r.clone())
    }

    /// True when the printed form has more than one term, so that it
    /// needs parentheses when used as a factor.
    fn is_compound(&self) -> bool {
        false
    }
}

impl Ring for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
}

/// Sum of an iterator of ring elements.
pub fn ring_sum<R: Ring, I: IntoIterator<Item = R>>(items: I) -> R {
    items.into_iter().fold(R::zero(), |acc, x| acc + x)
}

/// Left-to-right product of an iterator of ring elements.
pub fn ring_product<R: Ring, I: IntoIterator<Item = R>>(items: I) -> R {
    items.into_iter().fold(R::one(), |acc, x| acc * x)
}
