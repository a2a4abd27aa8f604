//! `zeta`: evaluate the continuation routes, scan the critical line, and run
//! the cross-route verification suites from the command line.

mod config;
mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use zeta_core::zeros::{scan_zeros, trivial_zero_residuals};
use zeta_core::{theta, xi, zeta_em, Complex64, QuadratureConfig, ScanConfig};

use config::{EmChoice, Settings};
use output::{render, Format, Value};

const GRID_SIGMAS: [f64; 5] = [-1.0, 0.0, 0.25, 0.5, 2.0];
const GRID_ORDINATES: [f64; 4] = [0.0, 5.0, 10.0, 20.0];
const THETA_GRID: [f64; 7] = [0.05, 0.1, 0.5, 1.0, 2.0, 10.0, 20.0];

const ZEROS_HEADER: [&str; 6] =
    ["k", "b", "residual_beth", "residual_aleph", "bracket_lo", "bracket_hi"];
const EVAL_HEADER: [&str; 6] = ["method", "s_re", "s_im", "value_re", "value_im", "err_est"];
const VERIFY_HEADER: [&str; 4] = ["check", "max_residual", "threshold", "status"];

#[derive(Parser)]
#[command(name = "zeta", version, about = "Riemann zeta continuation toolkit")]
struct Cli {
    /// Settings file of key=value lines (falls back to $ZETA_CONFIG).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Output format for machine-readable commands.
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    /// Worker threads for the grid sweep of a scan.
    #[arg(long, global = true, value_name = "N", default_value_t = 1)]
    threads: usize,
    /// Quadrature tolerance (eval, verify) or bisection width (zeros, table).
    #[arg(long, global = true, value_name = "X")]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the zeta continuation at one point by a chosen route.
    Eval {
        /// Argument as RE,IM (a bare RE means imaginary part zero).
        #[arg(long, value_name = "RE,IM", allow_hyphen_values = true)]
        s: String,
        /// em: Euler-Maclaurin; integral: through the completed function;
        /// series: plain Dirichlet partial sum (Re > 1 only).
        #[arg(long, value_enum)]
        method: Method,
        /// Series length for --method series.
        #[arg(long, value_name = "N")]
        terms: Option<usize>,
    },
    /// Scan the critical line for zeros and report both residuals.
    Zeros {
        /// Ordinate window as LO:HI.
        #[arg(long, value_name = "LO:HI")]
        range: Option<String>,
        /// Grid spacing of the sign-change sweep.
        #[arg(long, value_name = "X")]
        step: Option<f64>,
        /// Preset window 10:35 with step 0.25 and tol 1e-7.
        #[arg(long)]
        paper: bool,
    },
    /// Run the cross-route invariant suites.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Print the preset zero scan as a human-readable table.
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Em,
    Integral,
    Series,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Em => "em",
            Method::Integral => "integral",
            Method::Series => "series",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theta,
    Functional,
    Dual,
    Trivial,
    Decomposition,
    All,
}

/// A failed run, split by exit code: usage and domain problems exit 2,
/// numerical breakdowns exit 1.
enum Failure {
    Usage(String),
    Numeric(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Numeric(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Numeric(m) => m,
        }
    }
}

fn classify(e: zeta_core::Error) -> Failure {
    use zeta_core::Error::*;
    match e {
        Unconverged { .. } | NonFiniteIntegrand => Failure::Numeric(e.to_string()),
        other => Failure::Usage(other.to_string()),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("zeta: {}", f.message());
            std::process::exit(f.code());
        }
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let settings = load_settings(&cli.config)?;
    match cli.command {
        Command::Eval { s, method, terms } => {
            cmd_eval(&s, method, terms, &settings, cli.tol, cli.format)
        }
        Command::Zeros { range, step, paper } => cmd_zeros(
            range, step, paper, cli.tol, cli.threads, &settings, cli.format,
        ),
        Command::Verify { suite } => cmd_verify(suite, cli.tol, &settings, cli.format),
        Command::Table => cmd_table(cli.tol, cli.threads, &settings),
    }
}

fn load_settings(flag: &Option<PathBuf>) -> Result<Settings, Failure> {
    let path = flag
        .clone()
        .or_else(|| std::env::var_os("ZETA_CONFIG").map(PathBuf::from));
    let file = match path {
        Some(p) => {
            let text = std::fs::read_to_string(&p).map_err(|e| {
                Failure::Usage(format!("cannot read config {}: {e}", p.display()))
            })?;
            config::parse_file(&text).map_err(Failure::Usage)?
        }
        None => config::FileSettings::default(),
    };
    config::resolve(&file).map_err(Failure::Usage)
}

fn parse_complex(text: &str) -> Result<Complex64, Failure> {
    let bad = || Failure::Usage(format!("--s expects RE,IM with decimal parts, got '{text}'"));
    let (re, im) = match text.split_once(',') {
        Some((re, im)) => (re, im),
        None => (text, "0"),
    };
    Ok(Complex64::new(
        re.trim().parse().map_err(|_| bad())?,
        im.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_range(text: &str) -> Result<(f64, f64), Failure> {
    let bad = || Failure::Usage(format!("--range expects LO:HI with decimal parts, got '{text}'"));
    let (lo, hi) = text.split_once(':').ok_or_else(bad)?;
    Ok((
        lo.trim().parse().map_err(|_| bad())?,
        hi.trim().parse().map_err(|_| bad())?,
    ))
}

fn cmd_eval(
    s_text: &str,
    method: Method,
    terms: Option<usize>,
    settings: &Settings,
    tol: Option<f64>,
    format: Format,
) -> Result<i32, Failure> {
    if terms.is_some() && method != Method::Series {
        return Err(Failure::Usage("--terms only applies to --method series".into()));
    }
    let s = parse_complex(s_text)?;
    let settings = settings.clone().with_quad_tol(tol).map_err(Failure::Usage)?;

    let (value, err_est) = match method {
        Method::Em => {
            let eval = match settings.em {
                EmChoice::Auto => zeta_em::euler_maclaurin_auto(s),
                EmChoice::Manual(params) => zeta_em::euler_maclaurin(s, params),
            }
            .map_err(classify)?;
            if !eval.converged {
                return Err(Failure::Numeric(format!(
                    "Euler-Maclaurin remainder {:e} did not converge; raise em.n or em.m",
                    eval.remainder
                )));
            }
            (eval.value, eval.remainder)
        }
        Method::Integral => {
            xi::zeta_from_integral_with_error(s, &settings.quad).map_err(classify)?
        }
        Method::Series => {
            let n = terms.unwrap_or(100_000);
            let value = zeta_em::zeta_dirichlet(s, n).map_err(classify)?;
            // Tail bound of the partial sum: integral_n^inf x^(-Re s) dx.
            let tail = (n as f64).powf(1.0 - s.re) / (s.re - 1.0);
            (value, tail)
        }
    };

    let row = vec![
        Value::Str(method.name()),
        Value::F64(s.re),
        Value::F64(s.im),
        Value::F64(value.re),
        Value::F64(value.im),
        Value::F64(err_est),
    ];
    print!("{}", render(format, &EVAL_HEADER, &[row]));
    Ok(0)
}

fn cmd_zeros(
    range: Option<String>,
    step: Option<f64>,
    paper: bool,
    tol: Option<f64>,
    threads: usize,
    settings: &Settings,
    format: Format,
) -> Result<i32, Failure> {
    let scan = if paper {
        if range.is_some() || step.is_some() || tol.is_some() {
            return Err(Failure::Usage(
                "--paper fixes the window and cannot be combined with --range, --step, or --tol"
                    .into(),
            ));
        }
        ScanConfig::default()
    } else {
        let Some(range) = range else {
            return Err(Failure::Usage("zeros needs either --range LO:HI or --paper".into()));
        };
        let (lo, hi) = parse_range(&range)?;
        let settings = settings.clone().with_refine_tol(tol);
        ScanConfig::new(
            lo,
            hi,
            step.unwrap_or(settings.scan_step),
            settings.scan_refine_tol,
        )
        .map_err(classify)?
    };

    let zeros = scan_zeros(&scan, &settings.quad, threads).map_err(classify)?;
    let rows: Vec<Vec<Value>> = zeros
        .iter()
        .enumerate()
        .map(|(i, z)| {
            vec![
                Value::Int(i + 1),
                Value::F64(z.b),
                Value::F64(z.residual_integral),
                Value::F64(z.residual_em),
                Value::F64(z.bracket.0),
                Value::F64(z.bracket.1),
            ]
        })
        .collect();
    print!("{}", render(format, &ZEROS_HEADER, &rows));
    Ok(0)
}

fn cmd_table(tol: Option<f64>, threads: usize, settings: &Settings) -> Result<i32, Failure> {
    let settings = settings.clone().with_refine_tol(tol);
    let preset = ScanConfig::default();
    let scan = ScanConfig::new(
        preset.b_min,
        preset.b_max,
        settings.scan_step,
        settings.scan_refine_tol,
    )
    .map_err(classify)?;
    let zeros = scan_zeros(&scan, &settings.quad, threads).map_err(classify)?;

    let mut out = String::new();
    out.push_str("  k  b            |xi(1/2+ib)|  |zeta_em(1/2+ib)|\n");
    for (i, z) in zeros.iter().enumerate() {
        out.push_str(&format!(
            "{:>3}  {:<11.5}  {:<12.2e}  {:.2e}\n",
            i + 1,
            z.b,
            z.residual_integral,
            z.residual_em
        ));
    }
    print!("{out}");
    Ok(0)
}

/// One verification check: a named residual against its threshold.
struct Check {
    name: &'static str,
    max_residual: f64,
    threshold: f64,
}

fn suite_theta() -> Result<Vec<Check>, zeta_core::Error> {
    let mut max = 0.0f64;
    for u in THETA_GRID {
        max = max.max(theta::psi_functional_residual(u)?.abs());
    }
    Ok(vec![Check { name: "theta_functional", max_residual: max, threshold: 1e-13 }])
}

fn suite_functional(quad: &QuadratureConfig) -> Result<Vec<Check>, zeta_core::Error> {
    let mut max = 0.0f64;
    for sigma in GRID_SIGMAS {
        for t in GRID_ORDINATES {
            max = max.max(xi::functional_residual(Complex64::new(sigma, t), quad)?);
        }
    }
    let one = Complex64::new(1.0, 0.0);
    let at0 = (xi::completed_zeta(Complex64::new(0.0, 0.0), quad)? - one).norm();
    let at1 = (xi::completed_zeta(one, quad)? - one).norm();
    Ok(vec![
        Check { name: "functional_equation", max_residual: max, threshold: 1e-9 },
        Check { name: "functional_endpoints", max_residual: at0.max(at1), threshold: 1e-10 },
    ])
}

fn suite_dual(quad: &QuadratureConfig) -> Result<Vec<Check>, zeta_core::Error> {
    let mut max = 0.0f64;
    for sigma in GRID_SIGMAS {
        for t in GRID_ORDINATES {
            let s = Complex64::new(sigma, t);
            let aleph = zeta_em::euler_maclaurin_auto(s)?;
            let phi = xi::completion_factor(s)?;
            let beth = xi::completed_zeta(s, quad)?;
            let rel = (phi * aleph.value - beth).norm() / beth.norm().max(1.0);
            max = max.max(rel);
        }
    }
    Ok(vec![Check { name: "dual_route", max_residual: max, threshold: 1e-8 }])
}

fn suite_trivial(quad: &QuadratureConfig) -> Result<Vec<Check>, zeta_core::Error> {
    let mut em = 0.0f64;
    let mut integral = 0.0f64;
    for check in trivial_zero_residuals(4, quad)? {
        em = em.max(check.residual_em);
        integral = integral.max(check.integral_value.norm());
    }
    Ok(vec![
        Check { name: "trivial_em", max_residual: em, threshold: 1e-8 },
        Check { name: "trivial_integral", max_residual: integral, threshold: 1e-15 },
    ])
}

fn suite_decomposition() -> Result<Vec<Check>, zeta_core::Error> {
    let mut max_rel = 0.0f64;
    let mut max_imag = 0.0f64;
    for a in [0.0, 0.25, 0.5, 0.75, 1.0] {
        for b in [-50.0, -12.5, 0.0, 7.0, 33.0] {
            for u in [1.0, 1.5, 4.0, 20.0, 60.0] {
                let d = xi::decompose(a, b, u)?;
                let z = Complex64::new(a, b);
                let arg = (z - Complex64::new(0.5, 0.0)) * (u.ln() * 0.5);
                let oracle = z * (z - Complex64::new(1.0, 0.0)) * arg.cosh();
                let got = Complex64::new(d.real_part(), d.imag_part());
                let rel = (got - oracle).norm() / oracle.norm().max(1.0);
                max_rel = max_rel.max(rel);
                if a == 0.5 {
                    max_imag = max_imag.max(d.imag_part().abs());
                }
            }
        }
    }
    Ok(vec![
        Check { name: "decomposition_oracle", max_residual: max_rel, threshold: 1e-12 },
        Check { name: "decomposition_critical_imag", max_residual: max_imag, threshold: 1e-15 },
    ])
}

fn cmd_verify(
    suite: Suite,
    tol: Option<f64>,
    settings: &Settings,
    format: Format,
) -> Result<i32, Failure> {
    let settings = settings.clone().with_quad_tol(tol).map_err(Failure::Usage)?;
    let quad = &settings.quad;
    let selected: Vec<Suite> = match suite {
        Suite::All => vec![
            Suite::Theta,
            Suite::Functional,
            Suite::Dual,
            Suite::Trivial,
            Suite::Decomposition,
        ],
        one => vec![one],
    };

    let mut checks = Vec::new();
    let mut errors = Vec::new();
    for s in selected {
        let (name, outcome) = match s {
            Suite::Theta => ("theta", suite_theta()),
            Suite::Functional => ("functional", suite_functional(quad)),
            Suite::Dual => ("dual", suite_dual(quad)),
            Suite::Trivial => ("trivial", suite_trivial(quad)),
            Suite::Decomposition => ("decomposition", suite_decomposition()),
            Suite::All => unreachable!(),
        };
        match outcome {
            Ok(batch) => checks.extend(batch),
            Err(e) => errors.push(format!("{name}: {e}")),
        }
    }

    let rows: Vec<Vec<Value>> = checks
        .iter()
        .map(|c| {
            let status = if c.max_residual < c.threshold { "pass" } else { "fail" };
            vec![
                Value::Str(c.name),
                Value::F64(c.max_residual),
                Value::F64(c.threshold),
                Value::Str(status),
            ]
        })
        .collect();
    print!("{}", render(format, &VERIFY_HEADER, &rows));
    for e in &errors {
        eprintln!("zeta: verify {e}");
    }

    let all_pass = errors.is_empty() && checks.iter().all(|c| c.max_residual < c.threshold);
    Ok(if all_pass { 0 } else { 1 })
}
