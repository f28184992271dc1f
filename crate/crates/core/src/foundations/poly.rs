//! Sparse multivariate polynomials with rational coefficients.
//!
//! Indeterminates live in one flat namespace ([`Var`]): the colored
//! generators `a[i,j]`, `b[i,j]`, `c[i,j]`, the entries `x[i,j]` of a generic
//! anti-alternating matrix, the weights `lam[i]`, and free-form names.
//! Variables are ordered like the PBW basis of the enveloping algebra, so a
//! commutative monomial prints its factors in the same order the
//! noncommutative normal form would.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use super::scalar::{rat, Rational};
use crate::error::{Error, Result};
use crate::uea::{GenKind, Generator};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// A colored generator `a[i,j]`, `b[i,j]` or `c[i,j]`.
    Gen(Generator),
    /// An entry `x[i,j]` with signed indices.
    X(i32, i32),
    /// A highest-weight coordinate `lam[i]`.
    Lam(u32),
    Named(String),
}

impl Var {
    pub fn a(i: u32, j: u32) -> Var {
        Var::Gen(Generator::a(i, j))
    }

    pub fn lam(i: u32) -> Var {
        Var::Lam(i)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Gen(g) => write!(f, "{g}"),
            Var::X(i, j) => write!(f, "x[{i},{j}]"),
            Var::Lam(i) => write!(f, "lam[{i}]"),
            Var::Named(s) => f.write_str(s),
        }
    }
}

/// A monomial: variables in increasing order with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial {
            factors: vec![(v, 1)],
        }
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (0, 0);
        while a < self.factors.len() && b < other.factors.len() {
            let (va, ea) = &self.factors[a];
            let (vb, eb) = &other.factors[b];
            match va.cmp(vb) {
                Ordering::Less => {
                    out.push((va.clone(), *ea));
                    a += 1;
                }
                Ordering::Greater => {
                    out.push((vb.clone(), *eb));
                    b += 1;
                }
                Ordering::Equal => {
                    out.push((va.clone(), ea + eb));
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[a..]);
        out.extend_from_slice(&other.factors[b..]);
        Monomial { factors: out }
    }

    fn pow(&self, k: u32) -> Monomial {
        Monomial {
            factors: self.factors.iter().map(|(v, e)| (v.clone(), e * k)).collect(),
        }
    }
}

/// Graded lexicographic order on exponent vectors indexed by [`Var`] order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut a, mut b) = (0, 0);
            loop {
                match (self.factors.get(a), other.factors.get(b)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(eb);
                            }
                            a += 1;
                            b += 1;
                        }
                        // self has a positive exponent where other has none
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A polynomial over the rationals. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        MultiPoly::monomial(Monomial::var(v), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    /// Parses a plain ASCII polynomial literal; see [`parse_poly`].
    pub fn parse(text: &str) -> Result<Self> {
        parse_poly(text)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Every indeterminate occurring in the polynomial.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.factors.iter().map(|(v, _)| v.clone()))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
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

    pub fn pow(&self, k: u32) -> MultiPoly {
        if k == 0 {
            return MultiPoly::constant(Rational::one());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("one term");
            let coeff = (0..k).fold(Rational::one(), |acc, _| acc * c);
            return MultiPoly::monomial(m.pow(k), coeff);
        }
        (1..k).fold(self.clone(), |acc, _| &acc * self)
    }

    /// Exact evaluation. Fails with the list of unassigned names.
    pub fn eval(&self, assignment: &BTreeMap<Var, Rational>) -> Result<Rational> {
        let missing: Vec<String> = self
            .variables()
            .into_iter()
            .filter(|v| !assignment.contains_key(v))
            .map(|v| v.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::MissingIndeterminates(missing));
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in &m.factors {
                let x = &assignment[v];
                for _ in 0..*e {
                    term *= x;
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Substitutes polynomials for some variables; others are kept.
    pub fn substitute(&self, f: &dyn Fn(&Var) -> Option<MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone());
            for (v, e) in &m.factors {
                let base = f(v).unwrap_or_else(|| MultiPoly::var(v.clone()));
                term = &term * &base.pow(*e);
            }
            out += term;
        }
        out
    }
}

/// Evaluates by indeterminate names, e.g. `[("x", 2), ("lam[1]", 3)]`.
pub fn poly_eval(p: &MultiPoly, assignment: &[(&str, Rational)]) -> Result<Rational> {
    let mut map = BTreeMap::new();
    for (name, value) in assignment {
        map.insert(parse_var_name(name, 1)?.0, value.clone());
    }
    p.eval(&map)
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl AddAssign for MultiPoly {
    fn add_assign(&mut self, rhs: MultiPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<'a> AddAssign<&'a MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &'a MultiPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self += rhs;
        self
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(Rational::one())
    }
}

impl Ring for MultiPoly {
    fn from_rational(r: Rational) -> Self {
        MultiPoly::constant(r)
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parses a polynomial literal.
///
/// Terms are joined by `+` or `-` (or `−`); a term is a `*`-separated
/// product of factors; a factor is an integer or `p/q` literal, a name with
/// an optional `^k`, or a parenthesized polynomial with an optional `^k`.
/// Names are identifiers with an optional bracketed index list, such as
/// `a[1,2]`, `x[1,-2]` or `lam[3]`.
pub fn parse_poly(text: &str) -> Result<MultiPoly> {
    let mut p = Parser::new(text);
    let value = p.poly()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(Error::parse(p.column(), format!("unexpected character {c:?}")));
    }
    Ok(value)
}

/// Parses a single indeterminate name such as `b[1,2]`, returning the
/// variable and the sign picked up by canonicalization (`b[2,1] = -b[1,2]`).
/// `None` for the sign means the name denotes zero (`b[i,i]`).
pub(crate) fn parse_var_name(text: &str, column: usize) -> Result<(Var, i32)> {
    let mut p = Parser::new(text);
    p.base_column = column - 1;
    let r = p.name()?;
    if p.peek().is_some() {
        return Err(Error::parse(p.column(), "trailing characters after name"));
    }
    match r {
        NameValue::Var(v, s) => Ok((v, s)),
        NameValue::Zero => Err(Error::parse(column, format!("{text} is identically zero"))),
    }
}

enum NameValue {
    Var(Var, i32),
    Zero,
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    base_column: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            base_column: 0,
        }
    }

    fn column(&self) -> usize {
        self.base_column + self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.column(), msg))
    }

    fn is_minus(c: char) -> bool {
        c == '-' || c == '−'
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        let mut sign = 1;
        match self.peek() {
            Some(c) if Self::is_minus(c) => {
                sign = -1;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?.scale(&rat(sign));
        loop {
            self.skip_ws();
            let s = match self.peek() {
                Some('+') => 1,
                Some(c) if Self::is_minus(c) => -1,
                _ => break,
            };
            self.pos += 1;
            acc += self.term()?.scale(&rat(s));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('*') {
                break;
            }
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected exponent after '^'");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits
            .parse()
            .map_err(|_| Error::parse(self.base_column + start + 1, "exponent too large"))
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        self.skip_ws();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.poly()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                let k = self.exponent()?;
                Ok(inner.pow(k))
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                let k = self.exponent()?;
                Ok(MultiPoly::constant(r).pow(k))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let v = self.name()?;
                let k = self.exponent()?;
                Ok(match v {
                    NameValue::Var(v, s) => MultiPoly::var(v).pow(k).scale(&rat(i64::from(s).pow(k))),
                    NameValue::Zero => MultiPoly::zero(),
                })
            }
            Some(c) => self.err(format!("unexpected character {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let num: String = self.chars[start..self.pos].iter().collect();
        let num: num_bigint::BigInt = num.parse().expect("digits");
        if self.peek() == Some('/') {
            self.pos += 1;
            let ds = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            if ds == self.pos {
                return self.err("expected denominator after '/'");
            }
            let den: String = self.chars[ds..self.pos].iter().collect();
            let den: num_bigint::BigInt = den.parse().expect("digits");
            if den.is_zero() {
                return Err(Error::parse(self.base_column + ds + 1, "zero denominator"));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_integer(num))
    }

    fn signed_int(&mut self) -> Result<i32> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some(c) if Self::is_minus(c)) {
            self.pos += 1;
        }
        let ds = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if ds == self.pos {
            return self.err("expected integer index");
        }
        let digits: String = self.chars[ds..self.pos].iter().collect();
        let v: i32 = digits
            .parse()
            .map_err(|_| Error::parse(self.base_column + start + 1, "index too large"))?;
        self.skip_ws();
        Ok(if ds > start { -v } else { v })
    }

    fn name(&mut self) -> Result<NameValue> {
        let start = self.pos;
        let start_col = self.column();
        while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let ident: String = self.chars[start..self.pos].iter().collect();
        if ident.is_empty() {
            return self.err("expected a name");
        }
        let mut indices = Vec::new();
        if self.peek() == Some('[') {
            self.pos += 1;
            loop {
                indices.push(self.signed_int()?);
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return self.err("expected ',' or ']' in index list"),
                }
            }
        }
        let positive = |k: i32| -> Result<u32> {
            if k <= 0 {
                Err(Error::parse(start_col, format!("index of {ident} must be positive")))
            } else {
                Ok(k as u32)
            }
        };
        Ok(match (ident.as_str(), indices.as_slice()) {
            ("a", [i, j]) => NameValue::Var(Var::Gen(Generator::a(positive(*i)?, positive(*j)?)), 1),
            (kind @ ("b" | "c"), [i, j]) => {
                let (i, j) = (positive(*i)?, positive(*j)?);
                let kind = if kind == "b" { GenKind::B } else { GenKind::C };
                match Generator::antisymmetric(kind, i, j) {
                    Some((g, s)) => NameValue::Var(Var::Gen(g), s),
                    None => NameValue::Zero,
                }
            }
            ("x", [i, j]) if *i != 0 && *j != 0 => NameValue::Var(Var::X(*i, *j), 1),
            ("lam", [i]) => NameValue::Var(Var::Lam(positive(*i)?), 1),
            (_, []) => NameValue::Var(Var::Named(ident), 1),
            _ => {
                let text: String = self.chars[start..self.pos].iter().collect();
                NameValue::Var(Var::Named(text), 1)
            }
        })
    }
}
