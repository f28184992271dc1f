//! The `pfmsf` command: Pfaffians of matrix files, verification suites,
//! highest-weight eigenvalues and 2-form inspection.
//!
//! Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
//! 3 shape violation.

pub mod error;
pub mod report;
pub mod suites;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pfaffian_msf::foundations::{parse_poly, parse_rational, MultiPoly, Rational};
use pfaffian_msf::grassmann::{build_forms_commutative, build_forms_uea, pfaffian_via_top_form, Forms};
use pfaffian_msf::pfaffian::{parse_matrix_file, pfaffian};
use pfaffian_msf::uea::{build_canonical_x, eigenvalue_product, hc_coefficient, nc_pfaffian, HighestWeight};
use pfaffian_msf::foundations::Ring;

pub use error::CliError;
use report::RunReport;
use suites::{Plan, Suite, MAX_COMMUTATIVE, MAX_UEA_N};

#[derive(Debug, Parser)]
#[command(name = "pfmsf", version, about = "Exact Pfaffians and minor summation formulae")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Pfaffian of a matrix file
    Pfaffian(PfaffianArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
    /// Evaluate Pf(X) on a highest weight vector
    Eigenvalue(EigenvalueArgs),
    /// Print the 2-forms of the generic matrix
    Forms(FormsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingKind {
    Rational,
    Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Pfaffian,
    Product,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Uea,
    Commutative,
}

#[derive(Debug, Args)]
pub struct PfaffianArgs {
    /// Matrix file: `n p q` with blocks a, b, c, or `full 2m`
    pub file: String,
    #[arg(long, value_enum, default_value_t = RingKind::Poly)]
    pub ring: RingKind,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pub pq: Option<Vec<usize>>,
    #[arg(long, env = "PFMSF_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Lift the size bounds
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct EigenvalueArgs {
    #[arg(long)]
    pub n: usize,
    /// Comma-separated rationals `l1,...,ln`
    #[arg(long, conflicts_with = "symbolic", required_unless_present = "symbolic")]
    pub lambda: Option<String>,
    /// Use the symbols lam[1..n]
    #[arg(long)]
    pub symbolic: bool,
    #[arg(long, value_enum, default_value_t = Via::Pfaffian)]
    pub via: Via,
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Args)]
pub struct FormsArgs {
    #[arg(long, value_enum, default_value_t = Mode::Uea)]
    pub mode: Mode,
    #[arg(long, required_unless_present = "pq")]
    pub n: Option<usize>,
    /// Coloring for the commutative mode
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pub pq: Option<Vec<usize>>,
    /// Also print omega^m
    #[arg(long)]
    pub power: Option<usize>,
    #[arg(long)]
    pub force: bool,
}

/// Whether the command's own check passed; maps to exit code 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict, CliError> {
    match cli.command {
        Command::Pfaffian(args) => cmd_pfaffian(&args, out),
        Command::Verify(args) => cmd_verify(&args, out, err),
        Command::Eigenvalue(args) => cmd_eigenvalue(&args, out, err),
        Command::Forms(args) => cmd_forms(&args, out, err),
    }
}

/// Parses `args` (including the program name), runs, and returns the exit
/// code after writing any error to `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match run(cli, out, err) {
        Ok(v) => v.exit_code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn pair(v: &Option<Vec<usize>>) -> Option<(usize, usize)> {
    v.as_ref().map(|v| (v[0], v[1]))
}

pub fn cmd_pfaffian(args: &PfaffianArgs, out: &mut dyn Write) -> Result<Verdict, CliError> {
    let text = std::fs::read_to_string(&args.file).map_err(|source| CliError::Read {
        path: args.file.clone(),
        source,
    })?;
    let located = |source| CliError::File {
        path: args.file.clone(),
        source,
    };
    let value = match args.ring {
        RingKind::Rational => {
            let m = parse_matrix_file::<Rational>(&text, &parse_rational).map_err(located)?;
            pfaffian(&m.alternating())?.to_string()
        }
        RingKind::Poly => {
            let m = parse_matrix_file::<MultiPoly>(&text, &parse_poly).map_err(located)?;
            pfaffian(&m.alternating())?.to_string()
        }
    };
    writeln!(out, "{value}")?;
    Ok(Verdict::Pass)
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict, CliError> {
    let plan = Plan {
        n: args.n,
        pq: pair(&args.pq),
        seed: args.seed,
        force: args.force,
    };
    plan.validate(err)?;
    let report = RunReport::new(args.seed, suites::run_suite(args.suite, &plan)?);
    match args.format {
        Format::Text => write!(out, "{}", report.to_text())?,
        Format::Json => writeln!(out, "{}", report.to_json()?)?,
    }
    Ok(if report.passed() { Verdict::Pass } else { Verdict::Fail })
}

fn check_uea_bound(n: usize, force: bool, err: &mut dyn Write) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if n > MAX_UEA_N {
        if !force {
            return Err(CliError::Usage(format!("n = {n} exceeds {MAX_UEA_N}; pass --force to run it anyway")));
        }
        writeln!(err, "warning: n = {n} exceeds {MAX_UEA_N}; running anyway because of --force")?;
    }
    Ok(())
}

/// `(lam[1]+n-1)*(lam[2]+n-2)*...*lam[n]` with each factor kept intact.
pub fn factored_product(n: usize) -> String {
    (1..=n)
        .map(|i| match n - i {
            0 => format!("lam[{i}]"),
            k => format!("(lam[{i}]+{k})"),
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn parse_lambda(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .map(|s| parse_rational(s.trim()).map_err(|e| CliError::Usage(format!("--lambda {text:?}: {e}"))))
        .collect()
}

pub fn cmd_eigenvalue(args: &EigenvalueArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict, CliError> {
    check_uea_bound(args.n, args.force, err)?;
    let lambda = match &args.lambda {
        Some(text) => HighestWeight::Numeric(parse_lambda(text)?),
        None => HighestWeight::Symbolic(args.n),
    };
    let product = eigenvalue_product(&lambda, args.n)?;
    let product_text = match lambda {
        HighestWeight::Symbolic(_) => factored_product(args.n),
        HighestWeight::Numeric(_) => product.to_string(),
    };
    if args.via == Via::Product {
        writeln!(out, "{product_text}")?;
        return Ok(Verdict::Pass);
    }
    let pf = nc_pfaffian(&build_canonical_x(args.n)?)?;
    let hc = hc_coefficient(&pf, &lambda)?;
    if args.via == Via::Pfaffian {
        writeln!(out, "{hc}")?;
        return Ok(Verdict::Pass);
    }
    if hc == product {
        writeln!(out, "{hc} = {product_text}")?;
        Ok(Verdict::Pass)
    } else {
        writeln!(out, "{hc} != {product_text}")?;
        Ok(Verdict::Fail)
    }
}

fn print_forms<R: Ring>(f: &Forms<R>, power: Option<usize>, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(out, "p = {}, q = {}", f.p(), f.q())?;
    writeln!(out, "omega = {}", f.render(&f.omega))?;
    writeln!(out, "xi = {}", f.render(&f.xi))?;
    writeln!(out, "theta = {}", f.render(&f.theta))?;
    writeln!(out, "theta' = {}", f.render(&f.theta_prime))?;
    if let Ok(tau) = f.tau() {
        writeln!(out, "tau = {}", f.render(&tau))?;
    }
    if let Some(m) = power {
        writeln!(out, "omega^{m} = {}", f.render(&f.omega.pow(m as u32)))?;
    }
    writeln!(out, "pf = {}", pfaffian_via_top_form(f))?;
    Ok(())
}

pub fn cmd_forms(args: &FormsArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<Verdict, CliError> {
    let (p, q) = match (pair(&args.pq), args.n) {
        (Some(pq), _) => pq,
        (None, Some(n)) => (n, n),
        (None, None) => return Err(CliError::Usage("give --n or --pq".into())),
    };
    if (p + q) % 2 != 0 || p + q == 0 {
        return Err(CliError::Usage(format!("p + q = {} must be even and positive", p + q)));
    }
    match args.mode {
        Mode::Uea => {
            if p != q {
                return Err(CliError::Usage("the uea mode needs p = q".into()));
            }
            check_uea_bound(p, args.force, err)?;
            print_forms(&build_forms_uea(p)?, args.power, out)?;
        }
        Mode::Commutative => {
            if p + q > MAX_COMMUTATIVE {
                if !args.force {
                    return Err(CliError::Usage(format!(
                        "p + q = {} exceeds {MAX_COMMUTATIVE}; pass --force to run it anyway",
                        p + q
                    )));
                }
                writeln!(err, "warning: p + q = {} exceeds {MAX_COMMUTATIVE}", p + q)?;
            }
            print_forms(&build_forms_commutative(p, q)?, args.power, out)?;
        }
    }
    Ok(Verdict::Pass)
}
