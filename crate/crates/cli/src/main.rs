//! Command-line surface: evaluation, classification, root solving,
//! verification suites and region-map emission, with deterministic
//! machine-readable output (JSON records on stdout, CSV for tabular data).
//!
//! Exit codes: 0 success, 1 verification failure, 2 domain error,
//! 3 convergence/numerical error, 64 usage error.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperbessel::bessel;
use hyperbessel::error::Error;
use hyperbessel::expansion;
use hyperbessel::regions::{
    self, AskeyMode, AskeyPoint, F12Point, GasperPoint, GridKind, RegionLabel,
};
use hyperbessel::roots;
use hyperbessel::series::{self, HyperParams};
use hyperbessel::verify::{run_suite, Suite};
use output::{fmt_f64, snap12, OutputRecord, Val};
use std::io::Write;
use std::path::PathBuf;

const ENV_TOL: &str = "HYPERBESSEL_TOL";
const ENV_MAX_TERMS: &str = "HYPERBESSEL_MAX_TERMS";
const ENV_SEED: &str = "HYPERBESSEL_SEED";

#[derive(Parser)]
#[command(
    name = "hyperbessel",
    version,
    about = "Positivity analysis for 1F2 hypergeometric functions and Bessel integrals",
    after_help = "Environment: HYPERBESSEL_TOL, HYPERBESSEL_MAX_TERMS and HYPERBESSEL_SEED \
                  mirror --tol, --max-terms and --seed; explicit flags win."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Series stopping tolerance (default 1e-14)
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Series term budget (default 10000)
    #[arg(long, global = true)]
    max_terms: Option<usize>,
    /// Seed for the verification suites (default 7)
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a function at a point
    Eval {
        #[command(subcommand)]
        subject: EvalSubject,
    },
    /// Classify a parameter point against the positivity regions
    Classify {
        #[command(subcommand)]
        kind: ClassifyKind,
    },
    /// Solve a transcendental threshold equation
    Root {
        #[command(subcommand)]
        target: RootTarget,
    },
    /// Emit the β(α) comparison table
    Table(TableArgs),
    /// Run a verification suite (exit 1 on failure)
    Verify {
        /// whipple | saalschutz | lemma | gasper | interlacing | oracle
        suite: String,
        /// Number of random draws (suite-specific default)
        #[arg(short, long)]
        n: Option<usize>,
    },
    /// Write a region-classification grid as CSV
    #[command(name = "region-map")]
    RegionMap(RegionMapArgs),
}

#[derive(Subcommand)]
enum EvalSubject {
    /// Φ(x) = ₁F₂(a; b, c; −x²/4)
    #[command(allow_negative_numbers = true)]
    F12 {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        x: f64,
    },
    /// Bessel function J_α(x)
    #[command(allow_negative_numbers = true)]
    Bessel {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        x: f64,
    },
    /// Normalized Bessel function 𝕁_α(x) = ₀F₁(α+1; −x²/4)
    #[command(allow_negative_numbers = true)]
    Jj {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        x: f64,
    },
    /// Normalized integrand Ψ(x) of ∫₀ˣ t^{−β} J_α(t) dt
    #[command(allow_negative_numbers = true)]
    Psi {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        x: f64,
    },
    /// Normalized integrand Σ(x) of ∫₀ˣ (x²−t²)^γ t^{−β} J_α(t) dt
    #[command(allow_negative_numbers = true)]
    Sigma {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
        #[arg(long)]
        x: f64,
    },
    /// ∫₀ˣ t^{−β} J_α(t) dt (closed form)
    #[command(allow_negative_numbers = true)]
    Integral {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        x: f64,
    },
}

#[derive(Subcommand)]
enum ClassifyKind {
    /// (b, c) plane at fixed a
    #[command(allow_negative_numbers = true)]
    F12 {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        c: f64,
    },
    /// (α, β) plane of the plain Bessel integral
    #[command(allow_negative_numbers = true)]
    Askey {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        /// Also resolve the residual band via the computed root β(α)
        #[arg(long)]
        exact: bool,
    },
    /// (α, β) plane at fixed γ
    #[command(allow_negative_numbers = true)]
    Gasper {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        gamma: f64,
    },
}

#[derive(Subcommand)]
enum RootTarget {
    /// β(α): the positivity threshold for −1 < α ≤ 1/2
    #[command(allow_negative_numbers = true)]
    Beta {
        #[arg(long)]
        alpha: f64,
    },
    /// ᾱ: the threshold of the β = α special case
    Alphabar,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct TableArgs {
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    #[arg(long)]
    step: f64,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Jsonl,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct RegionMapArgs {
    /// f12 | askey | gasper
    kind: String,
    /// Fixed a (f12 grids)
    #[arg(long)]
    a: Option<f64>,
    /// Fixed γ (gasper grids)
    #[arg(long)]
    gamma: Option<f64>,
    /// First-axis range (b for f12, α otherwise)
    #[arg(long)]
    min1: Option<f64>,
    #[arg(long)]
    max1: Option<f64>,
    /// Second-axis range (c for f12, β otherwise)
    #[arg(long)]
    min2: Option<f64>,
    #[arg(long)]
    max2: Option<f64>,
    /// Cells per axis
    #[arg(long, default_value_t = 200)]
    resolution: usize,
    /// Output CSV path (written atomically)
    #[arg(long)]
    out: PathBuf,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::InvalidParams(_)
            | Error::Domain(_)
            | Error::UndefinedDenominator { .. }
            | Error::ConditionsViolated(_) => 2,
            Error::NotConverged { .. }
            | Error::CancellationBudgetExceeded { .. }
            | Error::ScanExhausted { .. }
            | Error::BracketFailed { .. }
            | Error::QuadratureFailed { .. } => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 64,
        message: message.into(),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn env_parse<T: std::str::FromStr>(key: &str) -> Option<T> {
    std::env::var(key).ok().and_then(|v| v.parse().ok())
}

struct Settings {
    tol: f64,
    max_terms: usize,
    seed: u64,
}

fn settings(cli: &Cli) -> Settings {
    Settings {
        tol: cli
            .tol
            .or_else(|| env_parse(ENV_TOL))
            .unwrap_or(series::DEFAULT_TOL),
        max_terms: cli
            .max_terms
            .or_else(|| env_parse(ENV_MAX_TERMS))
            .unwrap_or(series::DEFAULT_MAX_TERMS),
        seed: cli.seed.or_else(|| env_parse(ENV_SEED)).unwrap_or(7),
    }
}

fn run(cli: Cli) -> Result<i32, Failure> {
    let s = settings(&cli);
    match cli.command {
        Command::Eval { ref subject } => cmd_eval(subject, &s),
        Command::Classify { ref kind } => cmd_classify(kind),
        Command::Root { ref target } => cmd_root(target, cli.tol),
        Command::Table(ref args) => cmd_table(args),
        Command::Verify { ref suite, n } => cmd_verify(suite, s.seed, n),
        Command::RegionMap(ref args) => cmd_region_map(args),
    }
}

fn series_result(command: &str, inputs: Vec<(String, Val)>, v: series::SeriesValue) -> i32 {
    let rec = OutputRecord {
        command: command.into(),
        inputs,
        result: Val::Map(vec![("value".into(), Val::Num(v.value))]),
        diagnostics: vec![
            ("abs_error_estimate".into(), Val::Num(v.abs_error_estimate)),
            ("terms_used".into(), Val::Int(v.terms_used as i64)),
            ("max_term_magnitude".into(), Val::Num(v.max_term_magnitude)),
            ("converged".into(), Val::Bool(v.converged)),
        ],
    };
    println!("{}", rec.to_json());
    0
}

fn cmd_eval(subject: &EvalSubject, s: &Settings) -> Result<i32, Failure> {
    match *subject {
        EvalSubject::F12 { a, b, c, x } => {
            let p = F12Point::new(a, b, c)?;
            let params = HyperParams::f12(p.a, p.b, p.c)?;
            let v = series::eval_pfq_auto(&params, -x * x / 4.0, s.tol, s.max_terms)?;
            Ok(series_result(
                "eval f12",
                vec![
                    ("a".into(), Val::Num(a)),
                    ("b".into(), Val::Num(b)),
                    ("c".into(), Val::Num(c)),
                    ("x".into(), Val::Num(x)),
                ],
                v,
            ))
        }
        EvalSubject::Jj { alpha, x } => {
            let v = bessel::jj_series(alpha, x)?;
            Ok(series_result(
                "eval jj",
                vec![
                    ("alpha".into(), Val::Num(alpha)),
                    ("x".into(), Val::Num(x)),
                ],
                v,
            ))
        }
        EvalSubject::Bessel { alpha, x } => {
            let v = bessel::bessel_j(alpha, x)?;
            let rec = OutputRecord {
                command: "eval bessel".into(),
                inputs: vec![
                    ("alpha".into(), Val::Num(alpha)),
                    ("x".into(), Val::Num(x)),
                ],
                result: Val::Map(vec![("value".into(), Val::Num(v))]),
                diagnostics: vec![],
            };
            println!("{}", rec.to_json());
            Ok(0)
        }
        EvalSubject::Psi { alpha, beta, x } => {
            let q = AskeyPoint::new(alpha, beta)?;
            let p = regions::askey_to_f12(&q);
            let params = HyperParams::f12(p.a, p.b, p.c)?;
            let v = series::eval_pfq_auto(&params, -x * x / 4.0, s.tol, s.max_terms)?;
            Ok(series_result(
                "eval psi",
                vec![
                    ("alpha".into(), Val::Num(alpha)),
                    ("beta".into(), Val::Num(beta)),
                    ("x".into(), Val::Num(x)),
                ],
                v,
            ))
        }
        EvalSubject::Sigma {
            alpha,
            beta,
            gamma,
            x,
        } => {
            let q = GasperPoint::new(alpha, beta, gamma)?;
            let p = regions::gasper_to_f12(&q);
            let params = HyperParams::f12(p.a, p.b, p.c)?;
            let v = series::eval_pfq_auto(&params, -x * x / 4.0, s.tol, s.max_terms)?;
            Ok(series_result(
                "eval sigma",
                vec![
                    ("alpha".into(), Val::Num(alpha)),
                    ("beta".into(), Val::Num(beta)),
                    ("gamma".into(), Val::Num(gamma)),
                    ("x".into(), Val::Num(x)),
                ],
                v,
            ))
        }
        EvalSubject::Integral { alpha, beta, x } => {
            let v = roots::integral_closed_form(alpha, beta, x)?;
            let rec = OutputRecord {
                command: "eval integral".into(),
                inputs: vec![
                    ("alpha".into(), Val::Num(alpha)),
                    ("beta".into(), Val::Num(beta)),
                    ("x".into(), Val::Num(x)),
                ],
                result: Val::Map(vec![("value".into(), Val::Num(v))]),
                diagnostics: vec![("method".into(), Val::s("closed-form"))],
            };
            println!("{}", rec.to_json());
            Ok(0)
        }
    }
}

fn label_val(label: &RegionLabel) -> Val {
    Val::Map(vec![
        ("verdict".into(), Val::s(label.verdict.to_string())),
        (
            "justification".into(),
            match label.justification {
                Some(j) => Val::s(j.to_string()),
                None => Val::s("none"),
            },
        ),
    ])
}

fn cmd_classify(kind: &ClassifyKind) -> Result<i32, Failure> {
    match *kind {
        ClassifyKind::F12 { a, b, c } => {
            let p = F12Point::new(a, b, c)?;
            let label = regions::classify_f12(&p);
            let w5 = expansion::w5_conditions(&p);
            let rec = OutputRecord {
                command: "classify f12".into(),
                inputs: vec![
                    ("a".into(), Val::Num(a)),
                    ("b".into(), Val::Num(b)),
                    ("c".into(), Val::Num(c)),
                ],
                result: label_val(&label),
                diagnostics: vec![
                    ("in_newton_diagram".into(), Val::Bool(regions::in_newton_diagram(&p))),
                    ("in_o_strip".into(), Val::Bool(regions::in_o_strip(&p))),
                    ("in_p_star".into(), Val::Bool(regions::in_p_star(&p))),
                    ("w5_all".into(), Val::Bool(w5.all)),
                ],
            };
            println!("{}", rec.to_json());
            Ok(0)
        }
        ClassifyKind::Askey { alpha, beta, exact } => {
            let q = AskeyPoint::new(alpha, beta)?;
            let mode = if exact {
                AskeyMode::Exact
            } else {
                AskeyMode::TheoremsOnly
            };
            let label = regions::classify_askey(&q, mode)?;
            let mut diagnostics = vec![(
                "mode".into(),
                Val::s(if exact { "exact" } else { "theorems-only" }),
            )];
            if exact && alpha <= 0.5 {
                if let Ok(root) = roots::beta_root(alpha, roots::DEFAULT_ROOT_TOL) {
                    diagnostics.push(("beta_threshold".into(), Val::Num(root.value)));
                }
            }
            let rec = OutputRecord {
                command: "classify askey".into(),
                inputs: vec![
                    ("alpha".into(), Val::Num(alpha)),
                    ("beta".into(), Val::Num(beta)),
                ],
                result: label_val(&label),
                diagnostics,
            };
            println!("{}", rec.to_json());
            Ok(0)
        }
        ClassifyKind::Gasper { alpha, beta, gamma } => {
            let q = GasperPoint::new(alpha, beta, gamma)?;
            let c = regions::classify_gasper(&q);
            let rec = OutputRecord {
                command: "classify gasper".into(),
                inputs: vec![
                    ("alpha".into(), Val::Num(alpha)),
                    ("beta".into(), Val::Num(beta)),
                    ("gamma".into(), Val::Num(gamma)),
                ],
                result: label_val(&c.label),
                diagnostics: vec![(
                    "in_gasper_region".into(),
                    Val::Bool(c.in_gasper_region),
                )],
            };
            println!("{}", rec.to_json());
            Ok(0)
        }
    }
}

fn root_record(command: &str, inputs: Vec<(String, Val)>, r: roots::RootResult) -> i32 {
    let rec = OutputRecord {
        command: command.into(),
        inputs,
        result: Val::Map(vec![("value".into(), Val::Num(r.value))]),
        diagnostics: vec![
            ("bracket_lo".into(), Val::Num(r.bracket.0)),
            ("bracket_hi".into(), Val::Num(r.bracket.1)),
            ("residual".into(), Val::Num(r.residual)),
            ("iterations".into(), Val::Int(r.iterations as i64)),
        ],
    };
    println!("{}", rec.to_json());
    0
}

fn cmd_root(target: &RootTarget, tol: Option<f64>) -> Result<i32, Failure> {
    let tol = tol
        .or_else(|| env_parse(ENV_TOL))
        .unwrap_or(roots::DEFAULT_ROOT_TOL);
    match *target {
        RootTarget::Beta { alpha } => {
            let r = roots::beta_root(alpha, tol)?;
            Ok(root_record(
                "root beta",
                vec![("alpha".into(), Val::Num(alpha))],
                r,
            ))
        }
        RootTarget::Alphabar => {
            let r = roots::alpha_bar(tol)?;
            Ok(root_record("root alphabar", vec![], r))
        }
    }
}

fn table_alphas(from: f64, to: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if !(step > 0.0) {
        return Err(usage(format!("step must be > 0, got {step}")));
    }
    if !from.is_finite() || !to.is_finite() {
        return Err(usage("range endpoints must be finite"));
    }
    let span = (to - from) / step;
    if span < -1e-12 {
        return Ok(vec![]);
    }
    let count = (span * (1.0 + 1e-12) + 1e-12).floor() as usize + 1;
    Ok((0..count)
        .map(|i| snap12(from + i as f64 * step))
        .collect())
}

fn cmd_table(args: &TableArgs) -> Result<i32, Failure> {
    let alphas = table_alphas(args.from, args.to, args.step)?;
    let rows = roots::beta_table(&alphas)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.format {
        TableFormat::Csv => {
            writeln!(out, "alpha,beta_of_alpha,upper_bound,gap").ok();
            for row in &rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    fmt_f64(row.alpha),
                    fmt_f64(row.beta_of_alpha),
                    fmt_f64(row.upper_bound),
                    fmt_f64(row.gap)
                )
                .ok();
            }
        }
        TableFormat::Jsonl => {
            for row in &rows {
                let v = Val::Map(vec![
                    ("alpha".into(), Val::Num(row.alpha)),
                    ("beta_of_alpha".into(), Val::Num(row.beta_of_alpha)),
                    ("upper_bound".into(), Val::Num(row.upper_bound)),
                    ("gap".into(), Val::Num(row.gap)),
                ]);
                writeln!(out, "{}", v.json()).ok();
            }
        }
    }
    Ok(0)
}

fn cmd_verify(suite_name: &str, seed: u64, n: Option<usize>) -> Result<i32, Failure> {
    let suite = Suite::parse(suite_name)
        .ok_or_else(|| usage(format!("unknown suite '{suite_name}'")))?;
    let draws = n.unwrap_or_else(|| suite.default_draws());
    let report = run_suite(suite, seed, draws)?;
    for check in &report.checks {
        eprintln!(
            "[{}] {} (worst deviation {})",
            if check.passed { "pass" } else { "FAIL" },
            check.label,
            fmt_f64(check.worst)
        );
    }
    let rec = OutputRecord {
        command: format!("verify {}", report.suite),
        inputs: vec![
            ("seed".into(), Val::Int(seed as i64)),
            ("n".into(), Val::Int(draws as i64)),
        ],
        result: Val::Map(vec![
            ("passed".into(), Val::Bool(report.passed)),
            ("max_deviation".into(), Val::Num(report.max_deviation)),
        ]),
        diagnostics: vec![(
            "checks".into(),
            Val::List(
                report
                    .checks
                    .iter()
                    .map(|c| {
                        Val::Map(vec![
                            ("label".into(), Val::s(c.label.clone())),
                            ("passed".into(), Val::Bool(c.passed)),
                            ("worst".into(), Val::Num(c.worst)),
                        ])
                    })
                    .collect(),
            ),
        )],
    };
    println!("{}", rec.to_json());
    Ok(if report.passed { 0 } else { 1 })
}

fn cmd_region_map(args: &RegionMapArgs) -> Result<i32, Failure> {
    let (kind, range1, range2) = match args.kind.as_str() {
        "f12" => {
            let a = args.a.ok_or_else(|| usage("f12 grids need --a"))?;
            (
                GridKind::F12 { a },
                (args.min1.unwrap_or(0.5), args.max1.unwrap_or(4.0)),
                (args.min2.unwrap_or(0.5), args.max2.unwrap_or(4.0)),
            )
        }
        "askey" => (
            GridKind::Askey,
            (args.min1.unwrap_or(-1.0), args.max1.unwrap_or(3.0)),
            (args.min2.unwrap_or(-1.0), args.max2.unwrap_or(3.0)),
        ),
        "gasper" => {
            let gamma = args.gamma.ok_or_else(|| usage("gasper grids need --gamma"))?;
            (
                GridKind::Gasper { gamma },
                (args.min1.unwrap_or(-1.0), args.max1.unwrap_or(3.0)),
                (args.min2.unwrap_or(-1.0), args.max2.unwrap_or(3.0)),
            )
        }
        other => return Err(usage(format!("unknown region-map kind '{other}'"))),
    };
    let grid = regions::region_grid(kind, range1, range2, args.resolution, args.resolution)?;

    let mut body = String::from("axis1,axis2,verdict,justification\n");
    for (i, &u) in grid.axis1.iter().enumerate() {
        for (j, &v) in grid.axis2.iter().enumerate() {
            let label = &grid.labels[i * grid.axis2.len() + j];
            body.push_str(&format!(
                "{},{},{},{}\n",
                fmt_f64(snap12(u)),
                fmt_f64(snap12(v)),
                label.verdict,
                label
                    .justification
                    .map(|t| t.to_string())
                    .unwrap_or_default()
            ));
        }
    }

    // write-then-rename keeps partial output invisible
    let tmp = args.out.with_extension("tmp");
    std::fs::write(&tmp, body.as_bytes())
        .map_err(|e| usage(format!("cannot write {}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, &args.out)
        .map_err(|e| usage(format!("cannot rename to {}: {e}", args.out.display())))?;

    let rec = OutputRecord {
        command: format!("region-map {}", args.kind),
        inputs: vec![
            ("resolution".into(), Val::Int(args.resolution as i64)),
            ("min1".into(), Val::Num(range1.0)),
            ("max1".into(), Val::Num(range1.1)),
            ("min2".into(), Val::Num(range2.0)),
            ("max2".into(), Val::Num(range2.1)),
        ],
        result: Val::Map(vec![
            ("path".into(), Val::s(args.out.display().to_string())),
            ("cells".into(), Val::Int(grid.labels.len() as i64)),
        ]),
        diagnostics: vec![],
    };
    println!("{}", rec.to_json());
    Ok(0)
}
