//! Arbitrary-precision rationals.
//!
//! [`Rational`] is `num_rational::BigRational`: always reduced, positive
//! denominator, zero stored as `0/1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with an optional sign. Both `-` and `−` are
/// accepted as the minus sign.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let (neg, body) = match s.strip_prefix('-').or_else(|| s.strip_prefix('−')) {
        Some(rest) => (true, rest.trim_start()),
        None => (false, s.strip_prefix('+').unwrap_or(s).trim_start()),
    };
    let parse_int = |t: &str, col: usize| -> Result<BigInt> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(col, format!("invalid integer literal {t:?}")));
        }
        Ok(t.parse::<BigInt>().expect("digits only"))
    };
    let value = match body.split_once('/') {
        Some((num, den)) => {
            let num = parse_int(num.trim(), 1)?;
            let den = parse_int(den.trim(), 1 + num.to_string().len() + 1)?;
            if den.is_zero() {
                return Err(Error::parse(1, "zero denominator"));
            }
            Rational::new(num, den)
        }
        None => Rational::from_integer(parse_int(body, 1)?),
    };
    Ok(if neg { -value } else { value })
}

pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * rat(k as i64))
}

pub fn pow2(n: usize) -> Rational {
    Rational::from_integer(BigInt::one() << n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(" −4 ").unwrap(), rat(-4));
        assert_eq!(parse_rational("+2/4").unwrap(), ratio(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn zero_is_canonical() {
        let z = ratio(0, 5);
        assert_eq!(z, rat(0));
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn agrees_with_integer_arithmetic() {
        for a in -12i64..12 {
            for b in -12i64..12 {
                assert_eq!(rat(a) + rat(b), rat(a + b));
                assert_eq!(rat(a) * rat(b), rat(a * b));
                assert_eq!(rat(a) - rat(b), rat(a - b));
            }
        }
    }
}
