//! The exterior algebra on `2n` generators with coefficients in a ring.
//!
//! Generators are stored by slot, `slot = position - 1`, where positions
//! run `1..n` for `e_1..e_n` and `n+1..2n` for `e_{-n}..e_{-1}`. A term
//! `(mask, u)` means `e_{s1} e_{s2} ⋯ ⊗ u` with the slots in increasing
//! order. Coefficients commute with generators but not necessarily with
//! each other, so products keep them in written order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::foundations::{Rational, Ring};

pub type Mask = u64;

#[derive(Debug, Clone, PartialEq)]
pub struct GrassmannElement<R> {
    slots: usize,
    terms: BTreeMap<Mask, R>,
}

/// `(-1)^{#{(a, b) : a ∈ A, b ∈ B, a > b}}`, the sign of `e_A e_B = ± e_{A ∪ B}`.
pub fn wedge_sign(a: Mask, b: Mask) -> i32 {
    let mut count = 0u32;
    let mut rest = b;
    while rest != 0 {
        let slot = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if slot >= 63 { 0 } else { a >> (slot + 1) };
        count += above.count_ones();
    }
    if count.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl<R: Ring> GrassmannElement<R> {
    /// The zero element on `slots` generators (at most 64).
    pub fn zero(slots: usize) -> Self {
        assert!(slots <= 64, "at most 64 exterior generators");
        GrassmannElement {
            slots,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(slots: usize) -> Self {
        GrassmannElement::scalar(slots, R::one())
    }

    pub fn scalar(slots: usize, c: R) -> Self {
        GrassmannElement::term(slots, 0, c)
    }

    /// `e_{mask} ⊗ c`.
    pub fn term(slots: usize, mask: Mask, c: R) -> Self {
        let mut out = GrassmannElement::zero(slots);
        out.add_term(mask, c);
        out
    }

    /// The product `e_{s1} e_{s2} ⋯ ⊗ c` for slots in the given order.
    pub fn word(slots: usize, word: &[usize], c: R) -> Self {
        let mut mask: Mask = 0;
        let mut sign = 1;
        for &s in word {
            assert!(s < slots, "slot {s} out of range");
            let bit = 1 << s;
            if mask & bit != 0 {
                return GrassmannElement::zero(slots);
            }
            sign *= wedge_sign(mask, bit);
            mask |= bit;
        }
        GrassmannElement::term(slots, mask, if sign > 0 { c } else { -c })
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn full_mask(&self) -> Mask {
        if self.slots == 64 {
            Mask::MAX
        } else {
            (1 << self.slots) - 1
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mask, &R)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mask: Mask) -> R {
        self.terms.get(&mask).cloned().unwrap_or_else(R::zero)
    }

    /// The coefficient of the top form `e_1 ⋯ e_n e_{-n} ⋯ e_{-1}`.
    pub fn top_coefficient(&self) -> R {
        self.coefficient(self.full_mask())
    }

    pub fn add_term(&mut self, mask: Mask, c: R) {
        debug_assert!(mask & !self.full_mask() == 0);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = GrassmannElement::zero(self.slots);
        for (&m, c) in &self.terms {
            out.add_term(m, c.scale(r));
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> GrassmannElement<S> {
        let mut out = GrassmannElement::zero(self.slots);
        for (&m, c) in &self.terms {
            out.add_term(m, f(c));
        }
        out
    }

    fn check_slots(&self, other: &Self) -> Result<()> {
        if self.slots != other.slots {
            return Err(Error::DimensionMismatch(format!(
                "exterior algebras on {} and {} generators",
                self.slots, other.slots
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_slots(other)?;
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    /// `x y - y x`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        let xy = grassmann_mul(self, other)?;
        let yx = grassmann_mul(other, self)?;
        Ok(&xy - &yx)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = GrassmannElement::one(self.slots);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Renders with signed labels; `label(slot)` names each generator.
    pub fn render(&self, label: &dyn Fn(usize) -> i32) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (&m, c) in &self.terms {
            let text = c.to_string();
            let coeff = if c.is_compound() {
                format!("+({text})")
            } else if text.starts_with('-') {
                text
            } else {
                format!("+{text}")
            };
            let mut word = String::new();
            for s in 0..self.slots {
                if m & (1 << s) != 0 {
                    word.push_str(&format!("e[{}]", label(s)));
                }
            }
            parts.push(if word.is_empty() { coeff } else { format!("{coeff} {word}") });
        }
        parts.join(" ")
    }
}

/// Exterior product with coefficients multiplied in written order.
pub fn grassmann_mul<R: Ring>(x: &GrassmannElement<R>, y: &GrassmannElement<R>) -> Result<GrassmannElement<R>> {
    x.check_slots(y)?;
    let mut out = GrassmannElement::zero(x.slots);
    for (&ma, ca) in &x.terms {
        for (&mb, cb) in &y.terms {
            if ma & mb != 0 {
                continue;
            }
            let prod = ca.clone() * cb.clone();
            let prod = if wedge_sign(ma, mb) > 0 { prod } else { -prod };
            out.add_term(ma | mb, prod);
        }
    }
    Ok(out)
}

impl<R: Ring> Mul for &GrassmannElement<R> {
    type Output = GrassmannElement<R>;
    fn mul(self, rhs: &GrassmannElement<R>) -> GrassmannElement<R> {
        grassmann_mul(self, rhs).expect("exterior algebras must agree")
    }
}

impl<R: Ring> Add for &GrassmannElement<R> {
    type Output = GrassmannElement<R>;
    fn add(self, rhs: &GrassmannElement<R>) -> GrassmannElement<R> {
        self.try_add(rhs).expect("exterior algebras must agree")
    }
}

impl<R: Ring> Neg for &GrassmannElement<R> {
    type Output = GrassmannElement<R>;
    fn neg(self) -> GrassmannElement<R> {
        self.map(|c| -c.clone())
    }
}

impl<R: Ring> Sub for &GrassmannElement<R> {
    type Output = GrassmannElement<R>;
    fn sub(self, rhs: &GrassmannElement<R>) -> GrassmannElement<R> {
        self + &(-rhs)
    }
}

impl<R: Ring> fmt::Display for GrassmannElement<R> {
    /// Slots are labelled `1..n, -n..-1` with `n = slots / 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.slots / 2;
        let label = |s: usize| if s < n { s as i32 + 1 } else { -((self.slots - s) as i32) };
        f.write_str(&self.render(&label))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::{rat, MultiPoly};
    use crate::uea::UEAElement;

    fn e(slots: usize, s: usize) -> GrassmannElement<Rational> {
        GrassmannElement::word(slots, &[s], rat(1))
    }

    #[test]
    fn nilpotent_and_anticommuting() {
        for slots in 1..=6 {
            for a in 0..slots {
                assert!((&e(slots, a) * &e(slots, a)).is_zero());
                for b in 0..slots {
                    if a != b {
                        let ab = &e(slots, a) * &e(slots, b);
                        let ba = &e(slots, b) * &e(slots, a);
                        assert_eq!(ab, -&ba);
                    }
                }
            }
        }
    }

    #[test]
    fn sign_of_reversed_pair() {
        let x = &e(4, 1) * &e(4, 0);
        assert_eq!(x, GrassmannElement::term(4, 0b11, rat(-1)));
        assert_eq!(wedge_sign(0b10, 0b01), -1);
        assert_eq!(wedge_sign(0b0101, 0b1010), -1);
    }

    #[test]
    fn coefficients_keep_written_order() {
        let b = UEAElement::parse("1 * b[1,2]").unwrap();
        let c = UEAElement::parse("1 * c[1,2]").unwrap();
        let x = GrassmannElement::term(4, 0b0001, b.clone());
        let y = GrassmannElement::term(4, 0b1000, c.clone());
        let xy = grassmann_mul(&x, &y).unwrap();
        assert_eq!(xy.coefficient(0b1001), &b * &c);
        assert_ne!(&b * &c, &c * &b);
    }

    #[test]
    fn ambient_mismatch() {
        let x = GrassmannElement::<Rational>::one(2);
        let y = GrassmannElement::<Rational>::one(4);
        assert!(grassmann_mul(&x, &y).is_err());
    }

    #[test]
    fn display_and_top() {
        let x = GrassmannElement::word(4, &[0, 3], MultiPoly::parse("2*a[1,1]").unwrap());
        assert_eq!(x.to_string(), "+2*a[1,1] e[1]e[-1]");
        let y = GrassmannElement::word(4, &[3, 2, 1, 0], rat(1));
        // reversing four generators is an even permutation
        assert_eq!(y.top_coefficient(), rat(1));
        assert!(GrassmannElement::<Rational>::zero(4).top_coefficient() == rat(0));
        assert_eq!(GrassmannElement::<Rational>::zero(2).to_string(), "0");
    }
}
