//! The verification suites behind `pfmsf verify`.

use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use pfaffian_msf::foundations::{ratio, rat, MultiPoly, Rational};
use pfaffian_msf::grassmann::{
    build_forms_commutative, build_forms_uea, check_decomposition, check_eta_anticommute, check_sl2,
    check_theta_powers, check_top_degree, check_trinomial, check_xi_power_commutative, check_xi_power_formula,
    pfaffian_via_top_form, FormCheck, Forms, Trinomial,
};
use pfaffian_msf::pfaffian::{msf_rhs, pfaffian, verify_msf, AlternatingMatrix, AntiAlternatingMatrix, Matrix};
use pfaffian_msf::uea::{build_canonical_x, centrality_check, nc_msf_rhs, nc_pfaffian, nc_pfaffian_unrestricted, UEAElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::CliError;
use crate::report::{CheckResult, Status, VerificationReport};

/// Largest `n` for enveloping-algebra checks without `--force`.
pub const MAX_UEA_N: usize = 3;
/// Largest `p + q` for commutative checks without `--force`.
pub const MAX_COMMUTATIVE: usize = 8;
/// Rational spot checks per coloring in the `msf` suite.
pub const RATIONAL_SAMPLES: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Msf,
    Ncmsf,
    Central,
    Forms,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Msf => "msf",
            Suite::Ncmsf => "ncmsf",
            Suite::Central => "central",
            Suite::Forms => "forms",
            Suite::All => "all",
        }
    }
}

/// What a suite runs on. `n` selects the enveloping-algebra size and, when
/// `pq` is absent, the commutative colorings with `p + q = 2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Plan {
    pub n: Option<usize>,
    pub pq: Option<(usize, usize)>,
    pub seed: u64,
    pub force: bool,
}

impl Plan {
    /// Checks parameter ranges, writing a warning when `--force` lifts a
    /// bound.
    pub fn validate(&self, warn: &mut dyn Write) -> Result<(), CliError> {
        if self.n == Some(0) {
            return Err(CliError::Usage("--n must be at least 1".into()));
        }
        if let Some((p, q)) = self.pq {
            if (p + q) % 2 != 0 || p + q == 0 {
                return Err(CliError::Usage(format!("--pq {p} {q}: p + q must be even and positive")));
            }
        }
        let mut over = Vec::new();
        if let Some(n) = self.n.filter(|&n| n > MAX_UEA_N) {
            over.push(format!("n = {n} exceeds {MAX_UEA_N}"));
        }
        if let Some(m) = self.commutative_sizes().into_iter().find(|&m| m > MAX_COMMUTATIVE) {
            over.push(format!("p + q = {m} exceeds {MAX_COMMUTATIVE}"));
        }
        if over.is_empty() {
            return Ok(());
        }
        let what = over.join(", ");
        if self.force {
            writeln!(warn, "warning: {what}; running anyway because of --force")?;
            Ok(())
        } else {
            Err(CliError::Usage(format!("{what}; pass --force to run it anyway")))
        }
    }

    fn uea_sizes(&self) -> Vec<usize> {
        match self.n {
            Some(n) => vec![n],
            None => (1..=MAX_UEA_N).collect(),
        }
    }

    fn commutative_sizes(&self) -> Vec<usize> {
        match (self.pq, self.n) {
            (Some((p, q)), _) => vec![p + q],
            (None, Some(n)) => vec![2 * n],
            (None, None) => (1..=MAX_COMMUTATIVE / 2).map(|k| 2 * k).collect(),
        }
    }

    fn colorings(&self, default_max: usize) -> Vec<(usize, usize)> {
        if let Some(pq) = self.pq {
            return vec![pq];
        }
        let sizes = match self.n {
            Some(n) => vec![2 * n],
            None => (1..=default_max / 2).map(|k| 2 * k).collect(),
        };
        sizes.into_iter().flat_map(|m| (0..=m).map(move |p| (p, m - p))).collect()
    }
}

type Outcome = pfaffian_msf::Result<(bool, String)>;

pub struct Check {
    pub id: String,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Check {
    fn new(id: String, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Check { id, run: Box::new(run) }
    }
}

fn equal<T: PartialEq + std::fmt::Display>(lhs: &T, rhs: &T) -> (bool, String) {
    if lhs == rhs {
        (true, "0".into())
    } else {
        (false, format!("{lhs} != {rhs}"))
    }
}

fn uea_difference(lhs: UEAElement, rhs: UEAElement) -> (bool, String) {
    let d = lhs - rhs;
    (d.is_zero(), d.to_string())
}

fn form_outcome(checks: Vec<FormCheck>) -> (bool, String) {
    match checks.into_iter().find(|c| !c.holds) {
        None => (true, "0".into()),
        Some(c) => (false, format!("{}: {}", c.name, c.residual)),
    }
}

/// Runs the checks in parallel and reports them sorted by id.
pub fn run_checks(suite: &str, checks: Vec<Check>) -> VerificationReport {
    let results = checks
        .into_par_iter()
        .map(|c| {
            let start = Instant::now();
            let (ok, residual) = match (c.run)() {
                Ok(r) => r,
                Err(e) => (false, format!("error: {e}")),
            };
            CheckResult {
                id: c.id,
                status: if ok { Status::Pass } else { Status::Fail },
                residual,
                millis: start.elapsed().as_millis() as u64,
            }
        })
        .collect();
    VerificationReport::new(suite, results)
}

fn random_colored(rng: &mut ChaCha8Rng, p: usize, q: usize) -> pfaffian_msf::Result<AntiAlternatingMatrix<Rational>> {
    let mut entry = || ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    let a = Matrix::from_fn(p, q, |_, _| entry());
    let b = AlternatingMatrix::from_upper(p, |_, _| entry());
    let c = AlternatingMatrix::from_upper(q, |_, _| entry());
    AntiAlternatingMatrix::from_alternating_blocks(a, b, c)
}

pub fn msf_checks(plan: &Plan) -> Vec<Check> {
    let mut out = Vec::new();
    for (p, q) in plan.colorings(6) {
        out.push(Check::new(format!("msf.p{p}q{q}.symbolic"), move || {
            let r = verify_msf(p, q)?;
            Ok((r.holds(), r.residual().to_string()))
        }));
        let mut rng = ChaCha8Rng::seed_from_u64(plan.seed);
        rng.set_stream((p * 16 + q) as u64);
        for k in 0..RATIONAL_SAMPLES {
            let x = random_colored(&mut rng, p, q);
            out.push(Check::new(format!("msf.p{p}q{q}.rational{k}"), move || {
                let x = x.clone()?;
                Ok(equal(&pfaffian(&x.times_j())?, &msf_rhs(&x)?))
            }));
        }
    }
    out
}

fn nc_pfaffian_of(n: usize) -> pfaffian_msf::Result<UEAElement> {
    nc_pfaffian(&build_canonical_x(n)?)
}

pub fn ncmsf_checks(plan: &Plan) -> Vec<Check> {
    let mut out = Vec::new();
    for n in plan.uea_sizes() {
        out.push(Check::new(format!("ncmsf.n{n}.formula"), move || {
            Ok(uea_difference(nc_pfaffian_of(n)?, nc_msf_rhs(n)?))
        }));
        if n <= MAX_UEA_N {
            out.push(Check::new(format!("ncmsf.n{n}.unrestricted"), move || {
                let x = build_canonical_x(n)?;
                Ok(uea_difference(nc_pfaffian(&x)?, nc_pfaffian_unrestricted(&x)?))
            }));
        }
    }
    out
}

pub fn central_checks(plan: &Plan) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    for n in plan.uea_sizes() {
        let pf = Arc::new(nc_pfaffian_of(n)?);
        for g in pfaffian_msf::uea::Generator::all(n as u32) {
            let pf = Arc::clone(&pf);
            out.push(Check::new(format!("central.n{n}.{g}"), move || {
                let c = pfaffian_msf::uea::UEAElement::generator(g).commutator(&pf);
                Ok((c.is_zero(), c.to_string()))
            }));
        }
        let pf = Arc::clone(&pf);
        out.push(Check::new(format!("central.n{n}.all"), move || {
            let r = centrality_check(&pf, n);
            Ok((r.is_central(), format!("{} generators fail", r.failures.len())))
        }));
    }
    Ok(out)
}

fn uea_form_checks(n: usize, f: Arc<Forms<UEAElement>>) -> Vec<Check> {
    let mut out = Vec::new();
    let id = |s: String| format!("forms.uea.n{n}.{s}");
    let g = Arc::clone(&f);
    out.push(Check::new(id("decomposition".into()), move || Ok(form_outcome(vec![check_decomposition(&g)]))));
    let g = Arc::clone(&f);
    out.push(Check::new(id("sl2".into()), move || Ok(form_outcome(check_sl2(&g)?))));
    for u in -1..=2i64 {
        for r in 0..=n {
            let g = Arc::clone(&f);
            out.push(Check::new(id(format!("xi_power.r{r}.u{u}")), move || {
                Ok(form_outcome(vec![check_xi_power_formula(&g, &rat(u), r)?]))
            }));
        }
        let g = Arc::clone(&f);
        out.push(Check::new(id(format!("eta.u{u}")), move || Ok(form_outcome(check_eta_anticommute(&g, &rat(u))?))));
    }
    for s in 0..=n / 2 {
        let g = Arc::clone(&f);
        out.push(Check::new(id(format!("theta_power.{s}")), move || Ok(form_outcome(check_theta_powers(&g, s, s)?))));
    }
    for m in 0..=n {
        let g = Arc::clone(&f);
        out.push(Check::new(id(format!("trinomial.m{m}")), move || {
            Ok(form_outcome(vec![check_trinomial(&g, m, Trinomial::Shifted)?]))
        }));
    }
    let g = Arc::clone(&f);
    out.push(Check::new(id("top_degree".into()), move || Ok(form_outcome(vec![check_top_degree(&g)]))));
    out.push(Check::new(id("top_form_pfaffian".into()), move || {
        Ok(uea_difference(pfaffian_via_top_form(&f), nc_pfaffian_of(n)?))
    }));
    out
}

fn commutative_form_checks(p: usize, q: usize, f: Arc<Forms<MultiPoly>>) -> Vec<Check> {
    let mut out = Vec::new();
    let id = |s: String| format!("forms.commutative.p{p}q{q}.{s}");
    let g = Arc::clone(&f);
    out.push(Check::new(id("decomposition".into()), move || Ok(form_outcome(vec![check_decomposition(&g)]))));
    for h in 0..=p.min(q) {
        let g = Arc::clone(&f);
        out.push(Check::new(id(format!("xi_power.h{h}")), move || {
            Ok(form_outcome(vec![check_xi_power_commutative(&g, h)?]))
        }));
    }
    for s in 0..=p / 2 {
        for t in 0..=q / 2 {
            let g = Arc::clone(&f);
            out.push(Check::new(id(format!("theta_power.{s}.{t}")), move || {
                Ok(form_outcome(check_theta_powers(&g, s, t)?))
            }));
        }
    }
    for m in 0..=(p + q) / 2 {
        let g = Arc::clone(&f);
        out.push(Check::new(id(format!("trinomial.m{m}")), move || {
            Ok(form_outcome(vec![check_trinomial(&g, m, Trinomial::Unshifted)?]))
        }));
    }
    let g = Arc::clone(&f);
    out.push(Check::new(id("top_degree".into()), move || Ok(form_outcome(vec![check_top_degree(&g)]))));
    out.push(Check::new(id("top_form_pfaffian".into()), move || {
        Ok(equal(&pfaffian_via_top_form(&f), &pfaffian(&f.matrix().times_j())?))
    }));
    out
}

pub fn forms_checks(plan: &Plan) -> Result<Vec<Check>, CliError> {
    let mut out = Vec::new();
    if plan.pq.is_none() {
        for n in plan.uea_sizes() {
            out.extend(uea_form_checks(n, Arc::new(build_forms_uea(n)?)));
        }
    }
    for (p, q) in plan.colorings(MAX_COMMUTATIVE) {
        out.extend(commutative_form_checks(p, q, Arc::new(build_forms_commutative(p, q)?)));
    }
    Ok(out)
}

/// Runs one suite, or each of them in turn for [`Suite::All`].
pub fn run_suite(suite: Suite, plan: &Plan) -> Result<Vec<VerificationReport>, CliError> {
    Ok(match suite {
        Suite::Msf => vec![run_checks("msf", msf_checks(plan))],
        Suite::Ncmsf => vec![run_checks("ncmsf", ncmsf_checks(plan))],
        Suite::Central => vec![run_checks("central", central_checks(plan)?)],
        Suite::Forms => vec![run_checks("forms", forms_checks(plan)?)],
        Suite::All => {
            let mut out = Vec::new();
            for s in [Suite::Msf, Suite::Ncmsf, Suite::Central, Suite::Forms] {
                out.extend(run_suite(s, plan)?);
            }
            out
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(n: Option<usize>, pq: Option<(usize, usize)>) -> Plan {
        Plan {
            n,
            pq,
            seed: 0,
            force: false,
        }
    }

    #[test]
    fn colorings_follow_flags() {
        assert_eq!(plan(None, Some((1, 3))).colorings(6), vec![(1, 3)]);
        assert_eq!(plan(Some(1), None).colorings(6), vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(plan(None, None).colorings(4).len(), 3 + 5);
    }

    #[test]
    fn bounds_need_force() {
        let mut sink = Vec::new();
        assert!(plan(Some(4), None).validate(&mut sink).is_err());
        assert!(plan(None, Some((5, 5))).validate(&mut sink).is_err());
        assert!(plan(None, Some((1, 2))).validate(&mut sink).is_err());
        let forced = Plan {
            force: true,
            ..plan(Some(4), None)
        };
        assert!(forced.validate(&mut sink).is_ok());
        assert!(String::from_utf8(sink).unwrap().contains("--force"));
    }

    #[test]
    fn small_suites_pass() {
        let p = plan(Some(2), None);
        for s in [Suite::Msf, Suite::Ncmsf, Suite::Central, Suite::Forms] {
            for r in run_suite(s, &p).unwrap() {
                assert!(r.passed(), "{}: {:?}", r.suite, r.checks.iter().find(|c| c.status == Status::Fail));
            }
        }
    }
}
