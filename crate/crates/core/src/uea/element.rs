//! Elements of `U(o_2n)` in the PBW basis and the straightening rewriter.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::generator::{bracket_terms, GenKind, Generator};
use crate::error::{Error, Result};
use crate::foundations::{inversions, parse_rational, MultiPoly, Rational, Ring, Var};

/// A weakly increasing word of generators. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PBWMonomial {
    // field order gives the derived Ord: degree first, then lexicographic
    degree: usize,
    factors: Vec<Generator>,
}

impl PBWMonomial {
    pub fn identity() -> Self {
        PBWMonomial::default()
    }

    /// Wraps an already ordered word; `None` if it is out of order.
    pub fn new(factors: Vec<Generator>) -> Option<Self> {
        if factors.windows(2).all(|w| w[0] <= w[1]) {
            Some(PBWMonomial {
                degree: factors.len(),
                factors,
            })
        } else {
            None
        }
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Runs of equal generators as `(generator, exponent)`.
    pub fn powers(&self) -> Vec<(Generator, u32)> {
        let mut out: Vec<(Generator, u32)> = Vec::new();
        for &g in &self.factors {
            match out.last_mut() {
                Some((h, e)) if *h == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        out
    }
}

impl fmt::Display for PBWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (g, e)) in self.powers().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}^{e}")?;
        }
        Ok(())
    }
}

/// A finite rational combination of PBW monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UEAElement {
    terms: BTreeMap<PBWMonomial, Rational>,
}

impl UEAElement {
    pub fn zero() -> Self {
        UEAElement::default()
    }

    pub fn scalar(c: Rational) -> Self {
        let mut out = UEAElement::zero();
        out.add_term(PBWMonomial::identity(), c);
        out
    }

    pub fn generator(g: Generator) -> Self {
        let mut out = UEAElement::zero();
        out.add_term(
            PBWMonomial {
                degree: 1,
                factors: vec![g],
            },
            Rational::one(),
        );
        out
    }

    /// The product of a word of generators, normal ordered.
    pub fn word(word: &[Generator]) -> Self {
        normal_order(word)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PBWMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &PBWMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: PBWMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Highest degree of a monomial, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(PBWMonomial::degree).max()
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &UEAElement) -> UEAElement {
        &(self * other) - &(other * self)
    }

    /// The image under `U(o_2n) → S(o_2n)` sending each generator to the
    /// commuting indeterminate of the same name.
    pub fn abelianize(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for &g in &m.factors {
                term = &term * &MultiPoly::var(Var::Gen(g));
            }
            out += term;
        }
        out
    }

    /// Parses the textual PBW format written by `Display`.
    pub fn parse(text: &str) -> Result<Self> {
        parse_uea(text)
    }
}

/// Straightens a word into the PBW basis.
pub fn normal_order(word: &[Generator]) -> UEAElement {
    let mut pending = BTreeMap::new();
    pending.insert(word.to_vec(), Rational::one());
    straighten(pending)
}

/// Straightens a combination of words.
///
/// Each rewrite replaces the first adjacent inversion `g h` (with `g > h`)
/// by `h g + [g, h]`. The swapped word keeps its length and loses exactly one
/// inversion; the bracket terms are one letter shorter. The pair
/// (length, inversions) therefore decreases lexicographically, which bounds
/// the rewriting.
fn straighten(pending: BTreeMap<Vec<Generator>, Rational>) -> UEAElement {
    // Keyed by (length, word): every rewrite produces strictly smaller keys,
    // so popping the largest key handles each word once with all of its
    // contributions already merged.
    fn push(queue: &mut BTreeMap<(usize, Vec<Generator>), Rational>, w: Vec<Generator>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = queue.entry((w.len(), w)).or_insert_with(Rational::zero);
        *slot += c;
    }

    let mut queue = BTreeMap::new();
    for (w, c) in pending {
        push(&mut queue, w, c);
    }
    let pending = &mut queue;
    let mut out = UEAElement::zero();
    while let Some(((_, word), coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        let Some(k) = word.windows(2).position(|w| w[0] > w[1]) else {
            out.add_term(
                PBWMonomial {
                    degree: word.len(),
                    factors: word,
                },
                coeff,
            );
            continue;
        };
        let measure = (word.len(), inversions(&word));

        let mut swapped = word.clone();
        swapped.swap(k, k + 1);
        debug_assert!((swapped.len(), inversions(&swapped)) < measure);
        push(pending, swapped, coeff.clone());

        for (h, s) in bracket_terms(word[k], word[k + 1]) {
            let mut shorter = Vec::with_capacity(word.len() - 1);
            shorter.extend_from_slice(&word[..k]);
            shorter.push(h);
            shorter.extend_from_slice(&word[k + 2..]);
            debug_assert!((shorter.len(), inversions(&shorter)) < measure);
            push(pending, shorter, coeff.clone() * Rational::from_integer(s.into()));
        }
    }
    out
}

/// `[g, h]` as an element of `U(o_2n)`.
pub fn bracket(g: Generator, h: Generator) -> UEAElement {
    let mut out = UEAElement::zero();
    for (x, s) in bracket_terms(g, h) {
        out.add_term(
            PBWMonomial {
                degree: 1,
                factors: vec![x],
            },
            Rational::from_integer(s.into()),
        );
    }
    out
}

impl<'a> Mul<&'a UEAElement> for &'a UEAElement {
    type Output = UEAElement;
    fn mul(self, rhs: &'a UEAElement) -> UEAElement {
        let mut pending: BTreeMap<Vec<Generator>, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut w = Vec::with_capacity(ma.degree + mb.degree);
                w.extend_from_slice(&ma.factors);
                w.extend_from_slice(&mb.factors);
                *pending.entry(w).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        straighten(pending)
    }
}

impl Mul for UEAElement {
    type Output = UEAElement;
    fn mul(self, rhs: UEAElement) -> UEAElement {
        &self * &rhs
    }
}

impl AddAssign<&UEAElement> for UEAElement {
    fn add_assign(&mut self, rhs: &UEAElement) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for UEAElement {
    fn add_assign(&mut self, rhs: UEAElement) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Add for UEAElement {
    type Output = UEAElement;
    fn add(mut self, rhs: UEAElement) -> UEAElement {
        self += rhs;
        self
    }
}

impl<'a> Add<&'a UEAElement> for &'a UEAElement {
    type Output = UEAElement;
    fn add(self, rhs: &'a UEAElement) -> UEAElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for UEAElement {
    type Output = UEAElement;
    fn neg(mut self) -> UEAElement {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for UEAElement {
    type Output = UEAElement;
    fn sub(self, rhs: UEAElement) -> UEAElement {
        self + (-rhs)
    }
}

impl<'a> Sub<&'a UEAElement> for &'a UEAElement {
    type Output = UEAElement;
    fn sub(self, rhs: &'a UEAElement) -> UEAElement {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Zero for UEAElement {
    fn zero() -> Self {
        UEAElement::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for UEAElement {
    fn one() -> Self {
        UEAElement::scalar(Rational::one())
    }
}

impl Ring for UEAElement {
    fn from_rational(r: Rational) -> Self {
        UEAElement::scalar(r)
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return UEAElement::zero();
        }
        UEAElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

impl From<Generator> for UEAElement {
    fn from(g: Generator) -> Self {
        UEAElement::generator(g)
    }
}

/// `coeff * g^k h^l …` terms joined by ` + `; the identity monomial prints
/// as the bare coefficient.
impl fmt::Display for UEAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if m.degree == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c} * {m}")?;
            }
        }
        Ok(())
    }
}

fn parse_uea(text: &str) -> Result<UEAElement> {
    let trimmed = text.trim();
    if trimmed == "0" {
        return Ok(UEAElement::zero());
    }
    let mut out = UEAElement::zero();
    let mut offset = 0;
    for piece in text.split('+') {
        let col = offset + 1 + (piece.len() - piece.trim_start().len());
        offset += piece.chars().count() + 1;
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(Error::parse(col, "empty term"));
        }
        let (coeff_text, word_text) = match piece.split_once('*') {
            Some((c, w)) => (c, Some(w)),
            None => (piece, None),
        };
        let coeff = parse_rational(coeff_text).map_err(|_| {
            Error::parse(col, format!("invalid coefficient {:?}", coeff_text.trim()))
        })?;
        let mut word = Vec::new();
        let mut sign = 1i32;
        if let Some(w) = word_text {
            let tokens: Vec<&str> = w.split_whitespace().collect();
            if tokens.is_empty() {
                return Err(Error::parse(col, "expected generators after '*'"));
            }
            for tok in tokens {
                let (g, s, e) = parse_factor(tok).map_err(|m| Error::parse(col, m))?;
                match g {
                    None => {
                        sign = 0;
                    }
                    Some(g) => {
                        sign *= s.pow(e);
                        word.extend(std::iter::repeat_n(g, e as usize));
                    }
                }
            }
        }
        if sign != 0 {
            let scaled = coeff * Rational::from_integer(sign.into());
            out += normal_order(&word).scale(&scaled);
        }
    }
    Ok(out)
}

/// `a[i,j]^k` → (generator or zero, sign, exponent).
fn parse_factor(tok: &str) -> std::result::Result<(Option<Generator>, i32, u32), String> {
    let (name, exp) = match tok.split_once('^') {
        Some((n, e)) => (n, e.parse::<u32>().map_err(|_| format!("bad exponent in {tok:?}"))?),
        None => (tok, 1),
    };
    let bad = || format!("invalid generator {tok:?}");
    let kind = match name.chars().next() {
        Some('a') => GenKind::A,
        Some('b') => GenKind::B,
        Some('c') => GenKind::C,
        _ => return Err(bad()),
    };
    let inner = name[1..]
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(bad)?;
    let (i, j) = inner.split_once(',').ok_or_else(bad)?;
    let i: u32 = i.trim().parse().map_err(|_| bad())?;
    let j: u32 = j.trim().parse().map_err(|_| bad())?;
    if i == 0 || j == 0 {
        return Err(bad());
    }
    Ok(match kind {
        GenKind::A => (Some(Generator::a(i, j)), 1, exp),
        _ => match Generator::antisymmetric(kind, i, j) {
            Some((g, s)) => (Some(g), s, exp),
            None => (None, 0, exp),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::rat;

    fn g(s: &str) -> Generator {
        parse_factor(s).unwrap().0.unwrap()
    }

    #[test]
    fn normal_order_examples() {
        assert_eq!(normal_order(&[]), UEAElement::one());
        let a11 = Generator::a(1, 1);
        let a22 = Generator::a(2, 2);
        // Cartan generators commute; within the class a[1,1] sorts first
        assert_eq!(normal_order(&[a22, a11]), UEAElement::word(&[a11, a22]));
        assert_eq!(normal_order(&[a11, a22]).to_string(), "1 * a[1,1]^1 a[2,2]^1");
        assert_eq!(
            normal_order(&[Generator::b(1, 2), Generator::c(1, 2)]).to_string(),
            "1 * a[1,1]^1 + 1 * a[2,2]^1 + 1 * c[1,2]^1 b[1,2]^1"
        );
    }

    #[test]
    fn normal_order_is_idempotent() {
        let gens = Generator::all(2);
        for &x in &gens {
            for &y in &gens {
                let e = normal_order(&[x, y]);
                for (m, _) in e.terms() {
                    let again = normal_order(m.factors());
                    assert_eq!(again, UEAElement::word(m.factors()));
                    assert_eq!(again.num_terms(), 1);
                }
            }
        }
    }

    #[test]
    fn display_parse_round_trip() {
        let e = normal_order(&[g("b[1,2]"), g("c[1,2]"), g("a[2,1]"), g("a[1,1]")]).scale(&rat(-3));
        let text = e.to_string();
        assert_eq!(UEAElement::parse(&text).unwrap(), e);
        assert_eq!(UEAElement::parse("0").unwrap(), UEAElement::zero());
        assert_eq!(UEAElement::parse("5/2").unwrap(), UEAElement::scalar(crate::foundations::ratio(5, 2)));
    }

    #[test]
    fn parse_normal_orders_and_canonicalizes() {
        let e = UEAElement::parse("1 * b[2,1]^1").unwrap();
        assert_eq!(e, -UEAElement::generator(Generator::b(1, 2)));
        assert!(UEAElement::parse("1 * c[2,2]^1").unwrap().is_zero());
        let unordered = UEAElement::parse("1 * b[1,2]^1 c[1,2]^1").unwrap();
        assert_eq!(unordered, normal_order(&[Generator::b(1, 2), Generator::c(1, 2)]));
    }

    #[test]
    fn parse_errors() {
        assert!(UEAElement::parse("1 * d[1,2]^1").is_err());
        assert!(UEAElement::parse("x * a[1,2]^1").is_err());
        assert!(UEAElement::parse("1 + ").is_err());
        assert!(UEAElement::parse("1 * a[0,1]^1").is_err());
    }

    #[test]
    fn abelianization_is_multiplicative_on_generators() {
        let x = normal_order(&[Generator::b(1, 2), Generator::c(1, 2)]);
        let p = x.abelianize();
        assert_eq!(
            p,
            MultiPoly::parse("c[1,2]*b[1,2] + a[1,1] + a[2,2]").unwrap()
        );
    }
}
