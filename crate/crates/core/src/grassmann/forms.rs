//! The 2-forms `Ω, Ξ, Θ, Θ', τ` of an anti-alternating matrix and exact
//! checks of the identities relating their powers to Pfaffians and minors.
//!
//! Forms come from a `(p, q)`-colored matrix. Row labels are `[p] ∪ [-q]`,
//! column labels `[q] ∪ [-p]`, and `-j` stands for position `2n + 1 - j`,
//! so `e_1 … e_p` sit in the first `p` slots and `e_{-q} … e_{-1}` in the
//! rest. The enveloping-algebra forms are the case `p = q = n` with
//! generator coefficients.

use num_traits::One;

use super::element::{GrassmannElement, Mask};
use crate::error::{Error, Result};
use crate::foundations::{factorial, pow2, rat, IndexSet, MultiPoly, Rational, Ring, Var};
use crate::pfaffian::{column_determinant, pfaffian, AlternatingMatrix, AntiAlternatingMatrix, Matrix};
use crate::uea::{shifted_column_determinant, Generator, UEAElement};

/// Coefficient rings that contain the colored generators.
pub trait GeneratorRing: Ring {
    fn generator(g: Generator) -> Self;
}

impl GeneratorRing for MultiPoly {
    fn generator(g: Generator) -> Self {
        MultiPoly::var(Var::Gen(g))
    }
}

impl GeneratorRing for UEAElement {
    fn generator(g: Generator) -> Self {
        UEAElement::generator(g)
    }
}

/// `X` with generic colored entries `a[i,j]`, `b[i,j]`, `c[i,j]`.
pub fn generic_colored<R: GeneratorRing>(p: usize, q: usize) -> Result<AntiAlternatingMatrix<R>> {
    let g = |gen: Generator| R::generator(gen);
    let a = Matrix::from_fn(p, q, |i, j| g(Generator::a(i as u32 + 1, j as u32 + 1)));
    let b = AlternatingMatrix::from_upper(p, |i, j| g(Generator::b(i as u32 + 1, j as u32 + 1)));
    let c = AlternatingMatrix::from_upper(q, |i, j| g(Generator::c(i as u32 + 1, j as u32 + 1)));
    AntiAlternatingMatrix::from_alternating_blocks(a, b, c)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Forms<R> {
    p: usize,
    q: usize,
    x: AntiAlternatingMatrix<R>,
    pub omega: GrassmannElement<R>,
    pub xi: GrassmannElement<R>,
    pub theta: GrassmannElement<R>,
    pub theta_prime: GrassmannElement<R>,
}

impl<R: Ring> Forms<R> {
    /// Builds every form from the entries of `x`.
    pub fn new(x: AntiAlternatingMatrix<R>) -> Self {
        let (p, q) = (x.p(), x.q());
        let slots = p + q;
        let two = |i: usize, j: usize, c: R| GrassmannElement::word(slots, &[i, j], c);
        let pos = |l: i32| label_slot(l, slots);

        let mut omega = GrassmannElement::zero(slots);
        for r in 0..slots {
            for s in 0..slots {
                let (i, j) = (x.row_label(r), x.col_label(s));
                omega = &omega + &two(pos(i), pos(-j), x.entry(i, j));
            }
        }
        let mut xi = GrassmannElement::zero(slots);
        for i in 1..=p as i32 {
            for j in 1..=q as i32 {
                xi = &xi + &two(pos(i), pos(-j), x.entry(i, j));
            }
        }
        let mut theta = GrassmannElement::zero(slots);
        for i in 1..=p as i32 {
            for j in 1..=p as i32 {
                theta = &theta + &two(pos(i), pos(j), x.entry(i, -j));
            }
        }
        let mut theta_prime = GrassmannElement::zero(slots);
        for i in 1..=q as i32 {
            for j in 1..=q as i32 {
                theta_prime = &theta_prime + &two(pos(-j), pos(-i), x.entry(-j, i));
            }
        }
        Forms {
            p,
            q,
            x,
            omega,
            xi,
            theta,
            theta_prime,
        }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        (self.p + self.q) / 2
    }

    pub fn slots(&self) -> usize {
        self.p + self.q
    }

    pub fn matrix(&self) -> &AntiAlternatingMatrix<R> {
        &self.x
    }

    /// Signed label of a slot under this coloring.
    pub fn slot_label(&self, slot: usize) -> i32 {
        if slot < self.p {
            slot as i32 + 1
        } else {
            -((self.slots() - slot) as i32)
        }
    }

    pub fn render(&self, x: &GrassmannElement<R>) -> String {
        x.render(&|s| self.slot_label(s))
    }

    fn require_square(&self) -> Result<()> {
        if self.p != self.q {
            return Err(Error::InvalidColoring(format!("needs p = q, got p = {}, q = {}", self.p, self.q)));
        }
        Ok(())
    }

    /// `τ = Σ_i e_i e_{-i}`; defined for `p = q`.
    pub fn tau(&self) -> Result<GrassmannElement<R>> {
        self.require_square()?;
        let slots = self.slots();
        let mut tau = GrassmannElement::zero(slots);
        for i in 1..=self.n() as i32 {
            tau = &tau + &GrassmannElement::word(slots, &[label_slot(i, slots), label_slot(-i, slots)], R::one());
        }
        Ok(tau)
    }

    /// `Ξ(u) = Ξ + u τ`.
    pub fn xi_at(&self, u: &Rational) -> Result<GrassmannElement<R>> {
        Ok(&self.xi + &self.tau()?.scale(u))
    }

    /// `Ξ^{(r)}(u) = Ξ(u) Ξ(u-1) ⋯ Ξ(u-r+1)`.
    pub fn xi_shifted_power(&self, u: &Rational, r: usize) -> Result<GrassmannElement<R>> {
        let mut out = GrassmannElement::one(self.slots());
        for k in 0..r {
            out = &out * &self.xi_at(&(u - rat(k as i64)))?;
        }
        Ok(out)
    }

    /// `η_j(u) = Σ_i e_i a[i,j](u)` with `a[i,j](u) = a[i,j] + u δ_ij`.
    pub fn eta(&self, j: usize, u: &Rational) -> Result<GrassmannElement<R>> {
        self.require_square()?;
        let slots = self.slots();
        let mut out = GrassmannElement::zero(slots);
        for i in 1..=self.n() {
            let mut c = self.x.a().get(i - 1, j - 1).clone();
            if i == j {
                c = c + R::from_rational(u.clone());
            }
            out = &out + &GrassmannElement::word(slots, &[i - 1], c);
        }
        Ok(out)
    }

    /// `e_I` for `I ⊆ [p]`.
    fn e_plus(&self, set: &IndexSet) -> Mask {
        set.elements().iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    /// `e_{-J} = e_{-j_s} ⋯ e_{-j_1}` for `J ⊆ [q]`: increasing slots, so
    /// the mask carries no sign.
    fn e_minus(&self, set: &IndexSet) -> Mask {
        let slots = self.slots();
        set.elements().iter().fold(0, |m, &j| m | 1 << label_slot(-(j as i32), slots))
    }

    fn zero_based(set: &IndexSet) -> Vec<usize> {
        set.elements().iter().map(|&x| x - 1).collect()
    }

    /// `2^s s! Σ_{|I| = 2s} e_I Pf(b_I)`.
    pub fn theta_power_closed_form(&self, s: usize) -> Result<GrassmannElement<R>> {
        let mut out = GrassmannElement::zero(self.slots());
        for set in IndexSet::range(self.p).subsets_of_size(2 * s) {
            let pf = pfaffian(&self.x.b().principal(&Self::zero_based(&set)))?;
            out.add_term(self.e_plus(&set), pf);
        }
        Ok(out.scale(&(pow2(s) * factorial(s))))
    }

    /// `2^t t! Σ_{|J| = 2t} e_{-J} Pf(c_J)`.
    pub fn theta_prime_power_closed_form(&self, t: usize) -> Result<GrassmannElement<R>> {
        let mut out = GrassmannElement::zero(self.slots());
        for set in IndexSet::range(self.q).subsets_of_size(2 * t) {
            let pf = pfaffian(&self.x.c().principal(&Self::zero_based(&set)))?;
            out.add_term(self.e_minus(&set), pf);
        }
        Ok(out.scale(&(pow2(t) * factorial(t))))
    }

    /// `h! Σ_{|I| = |J| = h} e_I e_{-J} det(a^I_J)`, the unshifted power
    /// `Ξ^h` for commuting entries.
    pub fn xi_power_closed_form_commutative(&self, h: usize) -> Result<GrassmannElement<R>> {
        let mut out = GrassmannElement::zero(self.slots());
        for i_set in IndexSet::range(self.p).subsets_of_size(h) {
            for j_set in IndexSet::range(self.q).subsets_of_size(h) {
                let minor = self.x.a().select(&Self::zero_based(&i_set), &Self::zero_based(&j_set));
                out.add_term(self.e_plus(&i_set) | self.e_minus(&j_set), column_determinant(&minor)?);
            }
        }
        Ok(out.scale(&factorial(h)))
    }
}

fn label_slot(label: i32, slots: usize) -> usize {
    if label > 0 {
        label as usize - 1
    } else {
        (slots as i32 + label) as usize
    }
}

pub fn build_forms_commutative(p: usize, q: usize) -> Result<Forms<MultiPoly>> {
    Ok(Forms::new(generic_colored(p, q)?))
}

pub fn build_forms_uea(n: usize) -> Result<Forms<UEAElement>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    Ok(Forms::new(generic_colored(n, n)?))
}

/// One identity `lhs = rhs` checked exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct FormCheck {
    pub name: String,
    pub holds: bool,
    /// `lhs - rhs` rendered, `"0"` when the identity holds.
    pub residual: String,
}

impl FormCheck {
    fn compare<R: Ring>(forms: &Forms<R>, name: String, lhs: &GrassmannElement<R>, rhs: &GrassmannElement<R>) -> Self {
        let diff = lhs - rhs;
        FormCheck {
            name,
            holds: diff.is_zero(),
            residual: forms.render(&diff),
        }
    }
}

/// `Ω - (Θ' + 2Ξ + Θ)`.
pub fn check_decomposition<R: Ring>(forms: &Forms<R>) -> FormCheck {
    let rhs = &(&forms.theta_prime + &forms.xi.scale(&rat(2))) + &forms.theta;
    FormCheck::compare(forms, "omega = theta' + 2 xi + theta".into(), &forms.omega, &rhs)
}

/// `[Θ,Θ'] = 4τΞ`, `[Θ,Ξ] = 2τΘ`, `[Θ',Ξ] = -2τΘ'`.
pub fn check_sl2<R: Ring>(forms: &Forms<R>) -> Result<Vec<FormCheck>> {
    let tau = forms.tau()?;
    let (t, tp, xi) = (&forms.theta, &forms.theta_prime, &forms.xi);
    Ok(vec![
        FormCheck::compare(forms, "[theta, theta'] = 4 tau xi".into(), &t.commutator(tp)?, &(&tau * xi).scale(&rat(4))),
        FormCheck::compare(forms, "[theta, xi] = 2 tau theta".into(), &t.commutator(xi)?, &(&tau * t).scale(&rat(2))),
        FormCheck::compare(forms, "[theta', xi] = -2 tau theta'".into(), &tp.commutator(xi)?, &(&tau * tp).scale(&rat(-2))),
    ])
}

/// `Ξ^{(r)}(u+r-1) = r! Σ_{|I|=|J|=r} e_I e_{-J} det(a^I_J + diag(u+r-1, …, u))`
/// with the shifted column determinant.
pub fn check_xi_power_formula(forms: &Forms<UEAElement>, u: &Rational, r: usize) -> Result<FormCheck> {
    let n = forms.n();
    if r > n {
        return Err(Error::InvalidParameter(format!("r = {r} exceeds n = {n}")));
    }
    let lhs = forms.xi_shifted_power(&(u + rat(r as i64 - 1)), r)?;
    let mut rhs = GrassmannElement::zero(forms.slots());
    for i_set in IndexSet::range(n).subsets_of_size(r) {
        for j_set in IndexSet::range(n).subsets_of_size(r) {
            let rows: Vec<u32> = i_set.elements().iter().map(|&x| x as u32).collect();
            let cols: Vec<u32> = j_set.elements().iter().map(|&x| x as u32).collect();
            let det = shifted_column_determinant(&rows, &cols, u)?;
            rhs.add_term(forms.e_plus(&i_set) | forms.e_minus(&j_set), det);
        }
    }
    let rhs = rhs.scale(&factorial(r));
    Ok(FormCheck::compare(forms, format!("xi^({r})(u+{r}-1) closed form, u = {u}"), &lhs, &rhs))
}

/// `Ξ^h = h! Σ e_I e_{-J} det(a^I_J)` for commuting entries.
pub fn check_xi_power_commutative<R: Ring>(forms: &Forms<R>, h: usize) -> Result<FormCheck> {
    let lhs = forms.xi.pow(h as u32);
    let rhs = forms.xi_power_closed_form_commutative(h)?;
    Ok(FormCheck::compare(forms, format!("xi^{h} closed form"), &lhs, &rhs))
}

/// `η_i(u+1) η_j(u) + η_j(u+1) η_i(u) = 0` for all `i, j`.
pub fn check_eta_anticommute<R: Ring>(forms: &Forms<R>, u: &Rational) -> Result<Vec<FormCheck>> {
    let n = forms.n();
    let up = u + Rational::one();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let lhs = &(&forms.eta(i, &up)? * &forms.eta(j, u)?) + &(&forms.eta(j, &up)? * &forms.eta(i, u)?);
            let zero = GrassmannElement::zero(forms.slots());
            out.push(FormCheck::compare(forms, format!("eta_{i}(u+1) eta_{j}(u) + eta_{j}(u+1) eta_{i}(u) = 0, u = {u}"), &lhs, &zero));
        }
    }
    Ok(out)
}

/// `Θ^s` and `Θ'^t` against their Pfaffian closed forms.
pub fn check_theta_powers<R: Ring>(forms: &Forms<R>, s: usize, t: usize) -> Result<Vec<FormCheck>> {
    Ok(vec![
        FormCheck::compare(forms, format!("theta^{s} closed form"), &forms.theta.pow(s as u32), &forms.theta_power_closed_form(s)?),
        FormCheck::compare(
            forms,
            format!("theta'^{t} closed form"),
            &forms.theta_prime.pow(t as u32),
            &forms.theta_prime_power_closed_form(t)?,
        ),
    ])
}

/// Which trinomial expansion of `Ω^m` to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trinomial {
    /// `Σ m!/(p!q!r!) 2^r Ξ^{(r)}(q-p+r-1) Θ'^p Θ^q`, for the enveloping algebra.
    Shifted,
    /// `Σ m!/(h!s!t!) 2^h Ξ^h Θ^s Θ'^t`, for commuting entries.
    Unshifted,
}

pub fn trinomial_rhs<R: Ring>(forms: &Forms<R>, m: usize, kind: Trinomial) -> Result<GrassmannElement<R>> {
    let mut total = GrassmannElement::zero(forms.slots());
    for a in 0..=m {
        for b in 0..=m - a {
            let c = m - a - b;
            let multinomial = factorial(m) / (factorial(a) * factorial(b) * factorial(c));
            let term = match kind {
                Trinomial::Shifted => {
                    // (p, q, r) = (a, b, c)
                    let u = rat(b as i64 - a as i64 + c as i64 - 1);
                    let xi = forms.xi_shifted_power(&u, c)?;
                    &(&xi * &forms.theta_prime.pow(a as u32)) * &forms.theta.pow(b as u32)
                }
                Trinomial::Unshifted => {
                    // (h, s, t) = (c, a, b)
                    &(&forms.xi.pow(c as u32) * &forms.theta.pow(a as u32)) * &forms.theta_prime.pow(b as u32)
                }
            };
            total = &total + &term.scale(&(multinomial * pow2(c)));
        }
    }
    Ok(total)
}

pub fn check_trinomial<R: Ring>(forms: &Forms<R>, m: usize, kind: Trinomial) -> Result<FormCheck> {
    let lhs = forms.omega.pow(m as u32);
    let rhs = trinomial_rhs(forms, m, kind)?;
    let label = match kind {
        Trinomial::Shifted => "shifted",
        Trinomial::Unshifted => "unshifted",
    };
    Ok(FormCheck::compare(forms, format!("omega^{m} {label} trinomial"), &lhs, &rhs))
}

/// `top(Ω^n) / (2^n n!)`.
pub fn pfaffian_via_top_form<R: Ring>(forms: &Forms<R>) -> R {
    let n = forms.n();
    let top = forms.omega.pow(n as u32).top_coefficient();
    top.scale(&(Rational::one() / (pow2(n) * factorial(n))))
}

/// `Ω^n Ω = 0`.
pub fn check_top_degree<R: Ring>(forms: &Forms<R>) -> FormCheck {
    let n = forms.n() as u32;
    let beyond = &forms.omega.pow(n) * &forms.omega;
    FormCheck::compare(forms, "omega^(n+1) = 0".into(), &beyond, &GrassmannElement::zero(forms.slots()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uea::{build_canonical_x, nc_pfaffian};

    fn ue(s: &str) -> UEAElement {
        UEAElement::parse(s).unwrap()
    }

    #[test]
    fn n1_forms() {
        let f = build_forms_uea(1).unwrap();
        assert!(f.theta.is_zero() && f.theta_prime.is_zero());
        assert_eq!(f.omega, GrassmannElement::term(2, 0b11, ue("2 * a[1,1]")));
        assert_eq!(pfaffian_via_top_form(&f), ue("1 * a[1,1]"));
    }

    #[test]
    fn n2_tau_and_decomposition() {
        let f = build_forms_uea(2).unwrap();
        let tau = f.tau().unwrap();
        assert_eq!(f.render(&tau), "+1 e[2]e[-2] +1 e[1]e[-1]");
        assert!(check_decomposition(&f).holds);
        let c = build_forms_commutative(1, 3).unwrap();
        assert!(check_decomposition(&c).holds);
        assert!(c.tau().is_err());
    }

    #[test]
    fn sl2_small() {
        for n in 1..=2 {
            let f = build_forms_uea(n).unwrap();
            for c in check_sl2(&f).unwrap() {
                assert!(c.holds, "n = {n}: {} residual {}", c.name, c.residual);
            }
        }
    }

    #[test]
    fn xi_power_small() {
        let f = build_forms_uea(2).unwrap();
        assert_eq!(f.xi_shifted_power(&rat(5), 0).unwrap(), GrassmannElement::one(4));
        assert_eq!(f.xi_shifted_power(&rat(3), 1).unwrap(), f.xi_at(&rat(3)).unwrap());
        for r in 0..=2 {
            for u in -1..=2 {
                let c = check_xi_power_formula(&f, &rat(u), r).unwrap();
                assert!(c.holds, "{}: {}", c.name, c.residual);
            }
        }
    }

    #[test]
    fn eta_small() {
        let f = build_forms_uea(2).unwrap();
        for c in check_eta_anticommute(&f, &rat(0)).unwrap() {
            assert!(c.holds, "{}: {}", c.name, c.residual);
        }
    }

    #[test]
    fn theta_n2() {
        let f = build_forms_uea(2).unwrap();
        assert_eq!(f.theta, GrassmannElement::term(4, 0b0011, ue("2 * b[1,2]")));
        for c in check_theta_powers(&f, 1, 1).unwrap() {
            assert!(c.holds, "{}", c.name);
        }
    }

    #[test]
    fn trinomial_small() {
        let f = build_forms_uea(2).unwrap();
        let c = build_forms_commutative(2, 2).unwrap();
        for m in 0..=2 {
            assert!(check_trinomial(&f, m, Trinomial::Shifted).unwrap().holds, "uea m = {m}");
            assert!(check_trinomial(&c, m, Trinomial::Unshifted).unwrap().holds, "commutative m = {m}");
        }
    }

    #[test]
    fn top_form_matches_other_routes() {
        let f = build_forms_uea(2).unwrap();
        let pf = nc_pfaffian(&build_canonical_x(2).unwrap()).unwrap();
        assert_eq!(f.omega.pow(2).top_coefficient(), pf.scale(&rat(8)));
        assert_eq!(pfaffian_via_top_form(&f), pf);
        let c = build_forms_commutative(1, 3).unwrap();
        assert_eq!(pfaffian_via_top_form(&c), pfaffian(&c.matrix().times_j()).unwrap());
        assert!(check_top_degree(&f).holds);
    }
}
