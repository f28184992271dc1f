//! Exact acceptance run. Prints one line per criterion and exits nonzero if
//! any of them fails.

mod common;

use std::time::Instant;

use pfaffian_msf::foundations::{rat, IndexSet, MultiPoly, Rational};
use pfaffian_msf::grassmann::{
    build_forms_commutative, build_forms_uea, check_decomposition, check_eta_anticommute, check_sl2,
    check_theta_powers, check_top_degree, check_trinomial, check_xi_power_commutative, check_xi_power_formula,
    pfaffian_via_top_form, FormCheck, Trinomial,
};
use pfaffian_msf::pfaffian::{
    cayley_orthogonal, copfaffian_expansion_check, equivariance_check, iw06_relation_check, orthogonal_algebra_element,
    pfaffian, pfaffian_definitional, verify_msf, AlternatingMatrix, AntiAlternatingMatrix, Matrix,
};
use pfaffian_msf::uea::{
    build_canonical_x, centrality_check, eigenvalue_product, hc_coefficient, nc_msf_rhs, nc_pfaffian, HighestWeight,
    UEAElement,
};
use pfaffian_msf::Error;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn lift<T>(r: pfaffian_msf::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn colorings(sizes: &[usize]) -> Vec<(usize, usize)> {
    sizes.iter().flat_map(|&m| (0..=m).map(move |p| (p, m - p))).collect()
}

fn commutative_msf() -> Outcome {
    for (p, q) in colorings(&[2, 4, 6]) {
        let report = lift(verify_msf(p, q))?;
        ensure(report.holds(), || format!("(p, q) = ({p}, {q}), residual {}", report.residual()))?;
    }
    Ok(())
}

fn intro_example() -> Outcome {
    let x = lift(AntiAlternatingMatrix::<MultiPoly>::generic(2, 2))?;
    let pf = lift(pfaffian(&x.times_j()))?.to_string();
    let expected = "a[1,1]*a[2,2] - a[2,1]*a[1,2] + c[1,2]*b[1,2]";
    ensure(pf == expected, || format!("commutative: got {pf}"))?;
    let nc = lift(nc_pfaffian(&lift(build_canonical_x(2))?))?;
    let expected = lift(UEAElement::parse("1 * a[1,1] a[2,2] + 1 * a[2,2] + -1 * a[2,1] a[1,2] + 1 * c[1,2] b[1,2]"))?;
    ensure(nc == expected, || format!("noncommutative: got {nc}"))
}

fn nc_msf() -> Outcome {
    for n in 1..=3 {
        let lhs = lift(nc_pfaffian(&lift(build_canonical_x(n))?))?;
        let rhs = lift(nc_msf_rhs(n))?;
        ensure(lhs == rhs, || format!("n = {n}: difference {}", lhs - rhs))?;
    }
    Ok(())
}

fn centrality() -> Outcome {
    for n in 1..=3 {
        let pf = lift(nc_pfaffian(&lift(build_canonical_x(n))?))?;
        let report = centrality_check(&pf, n);
        ensure(report.is_central(), || format!("n = {n}: {} generators fail", report.failures.len()))?;
    }
    Ok(())
}

fn eigenvalue() -> Outcome {
    for n in 1..=3 {
        let pf = lift(nc_pfaffian(&lift(build_canonical_x(n))?))?;
        let sym = HighestWeight::Symbolic(n);
        let (hc, prod) = (lift(hc_coefficient(&pf, &sym))?, lift(eigenvalue_product(&sym, n))?);
        ensure(hc == prod, || format!("n = {n}: {hc} against {prod}"))?;
    }
    let pf = lift(nc_pfaffian(&lift(build_canonical_x(2))?))?;
    let value = lift(hc_coefficient(&pf, &HighestWeight::Numeric(vec![rat(3), rat(1)])))?;
    ensure(value == MultiPoly::constant(rat(4)), || format!("lambda = (3, 1): got {value}"))
}

fn all_hold(checks: impl IntoIterator<Item = FormCheck>, context: &str) -> Outcome {
    for c in checks {
        ensure(c.holds, || format!("{context}: {} fails, residual {}", c.name, c.residual))?;
    }
    Ok(())
}

fn form_suite() -> Outcome {
    for n in 1..=3 {
        let f = lift(build_forms_uea(n))?;
        let ctx = format!("uea n = {n}");
        all_hold([check_decomposition(&f), check_top_degree(&f)], &ctx)?;
        all_hold(lift(check_sl2(&f))?, &ctx)?;
        for u in -1..=2 {
            for r in 0..=n {
                all_hold([lift(check_xi_power_formula(&f, &rat(u), r))?], &ctx)?;
            }
            all_hold(lift(check_eta_anticommute(&f, &rat(u)))?, &ctx)?;
        }
        for s in 0..=n / 2 {
            all_hold(lift(check_theta_powers(&f, s, s))?, &ctx)?;
        }
        for m in 0..=n {
            all_hold([lift(check_trinomial(&f, m, Trinomial::Shifted))?], &ctx)?;
        }
    }
    for n in 1..=4 {
        for (p, q) in colorings(&[2 * n]) {
            let f = lift(build_forms_commutative(p, q))?;
            let ctx = format!("commutative (p, q) = ({p}, {q})");
            all_hold([check_decomposition(&f), check_top_degree(&f)], &ctx)?;
            for h in 0..=p.min(q) {
                all_hold([lift(check_xi_power_commutative(&f, h))?], &ctx)?;
            }
            for s in 0..=p / 2 {
                for t in 0..=q / 2 {
                    all_hold(lift(check_theta_powers(&f, s, t))?, &ctx)?;
                }
            }
            for m in 0..=n {
                all_hold([lift(check_trinomial(&f, m, Trinomial::Unshifted))?], &ctx)?;
            }
        }
    }
    Ok(())
}

fn triple_route() -> Outcome {
    for (p, q) in colorings(&[2, 4, 6]) {
        let f = lift(build_forms_commutative(p, q))?;
        let a = f.matrix().times_j();
        let expansion = lift(pfaffian(&a))?;
        let matching = lift(pfaffian_definitional(&a))?;
        let top = pfaffian_via_top_form(&f);
        ensure(expansion == matching && matching == top, || format!("(p, q) = ({p}, {q}) disagree"))?;
    }
    for n in 1..=3 {
        let pf = lift(nc_pfaffian(&lift(build_canonical_x(n))?))?;
        let top = pfaffian_via_top_form(&lift(build_forms_uea(n))?);
        ensure(pf == top, || format!("uea n = {n}: difference {}", pf - top))?;
    }
    Ok(())
}

fn copfaffian() -> Outcome {
    for size in [2, 4, 6] {
        let report = lift(copfaffian_expansion_check(&AlternatingMatrix::<MultiPoly>::generic(size)))?;
        ensure(report.holds(), || format!("symbolic size {size} fails"))?;
    }
    let mut r = common::rng(8);
    for k in 0..100 {
        let a = common::random_alternating(&mut r, 8);
        ensure(lift(copfaffian_expansion_check(&a))?.holds(), || format!("rational sample {k} fails"))?;
    }
    let mut r = common::rng(6);
    for k in 0..50 {
        let size = [4, 6, 8][k % 3];
        let a = common::random_invertible_alternating(&mut r, size);
        let universe = IndexSet::range(size);
        for even in (0..=size).step_by(2) {
            for i_set in universe.subsets_of_size(even) {
                let ok = lift(iw06_relation_check(&a, &i_set))?;
                ensure(ok, || format!("sample {k}, I = {:?}", i_set.elements()))?;
            }
        }
    }
    Ok(())
}

fn equivariance() -> Outcome {
    let forms: [(&str, Matrix<Rational>); 3] = [
        ("J4", Matrix::anti_identity(4)),
        ("J6", Matrix::anti_identity(6)),
        ("skewed", common::skewed_form()),
    ];
    let mut r = common::rng(9);
    for (name, s) in forms {
        let size = s.rows();
        let mut done = 0;
        while done < 50 {
            let k = common::random_alternating(&mut r, size);
            let y = lift(orthogonal_algebra_element(&k, &s))?;
            let g = match cayley_orthogonal(&y, &s) {
                Ok(g) => g,
                Err(Error::Singular) => continue,
                Err(e) => return Err(e.to_string()),
            };
            let a = common::random_alternating(&mut r, size);
            ensure(lift(equivariance_check(&a, &g))?, || format!("S = {name}, sample {done}"))?;
            done += 1;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("commutative minor summation formula, p + q in {2, 4, 6}", commutative_msf),
        ("n = 2 Pfaffians, commutative string and normal-ordered", intro_example),
        ("noncommutative minor summation formula, n <= 3", nc_msf),
        ("Pf(X) is central, n <= 3", centrality),
        ("eigenvalue on highest weight vectors, n <= 3", eigenvalue),
        ("2-form identities, uea n <= 3, commutative n <= 4", form_suite),
        ("three Pfaffian routes agree", triple_route),
        ("co-Pfaffian expansion and principal minor relation", copfaffian),
        ("equivariance under Cayley orthogonal g", equivariance),
    ];
    let results: Vec<(Outcome, u128)> = std::thread::scope(|scope| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, f)| {
                scope.spawn(move || {
                    let start = Instant::now();
                    let outcome = f();
                    (outcome, start.elapsed().as_millis())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().unwrap_or_else(|_| (Err("panicked".into()), 0)))
            .collect()
    });
    let mut failed = 0;
    for (k, ((name, _), (outcome, ms))) in criteria.iter().zip(results).enumerate() {
        match outcome {
            Ok(()) => println!("criterion {}: pass  {name} ({ms} ms)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({ms} ms): {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 9 criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria pass");
}
