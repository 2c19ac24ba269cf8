//! `cyd` — evaluate, tabulate, verify and sample continuous-Young-diagram
//! quantities.
//!
//! Commands print pure JSON or CSV on stdout (diagnostics go to stderr) so
//! the output can be piped into scripts. All randomized commands require an
//! explicit `--seed`; identical flags and seed give byte-identical output.
//!
//! Exit codes: 0 ok, 1 failed verification, 2 usage, 3 domain error,
//! 4 resource guard, 5 numeric error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyd_core::montecarlo::{
    mc_mean_area, mc_monomial_integral, mc_vol_hat, mc_vol_z, monomial_integral_value,
    vol_hat_two_block_quadrature, Estimate,
};
use cyd_core::rational::format_rational;
use cyd_core::simplex::{self, MultiIndex};
use cyd_core::verify::{run_suite, suite_is_randomized, SuiteReport, SUITES};
use cyd_core::volume::{self, RegionKind};
use cyd_core::{qcard, zvolume, Error, SeriesValue};
use num::{BigInt, Zero};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "cyd",
    version,
    about = "Continuous Young diagrams: exact coefficients, Bessel-series volumes, q/z-cardinalities and Monte Carlo checks"
)]
struct Cli {
    /// Output format for results on stdout (default: JSON, except CSV for
    /// tables).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Absolute tolerance for quadrature-backed reference values.
    #[arg(long, global = true, default_value_t = 1e-11)]
    tol: f64,
    /// Seed for randomized commands (required there; no wall-clock default).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single quantity.
    #[command(subcommand)]
    Eval(EvalCmd),
    /// Emit a coefficient or value table as CSV (exact rationals as "p/q").
    #[command(subcommand)]
    Table(TableCmd),
    /// Run a named verification suite (or "all").
    Verify(VerifyArgs),
    /// Run a Monte Carlo experiment against its analytic reference.
    #[command(subcommand)]
    Sample(SampleCmd),
}

#[derive(Subcommand)]
enum EvalCmd {
    /// Total diagram-space volume vol(D(x,y)) = I0(2 sqrt(xy)).
    Rho(XyArgs),
    /// Modified Bessel function I_k(t).
    Besseli {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
    /// Volume of the n-block space D_n(x,y).
    Voldn(NxyArgs),
    /// Volume of a width/height-bounded diagram space.
    Volregion {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
    },
    /// Total z-volume of D(x,y).
    Volz {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
    },
    /// z-volume of the n-block space D_n(x,y).
    Volzdn {
        #[arg(long)]
        n: u64,
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        y: f64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
    },
    /// Continuous binomial bracket {x \ s}.
    Contbinom {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
        #[arg(long, allow_negative_numbers = true)]
        s: f64,
    },
    /// kappa(x) = e^x - 1 summed as simplex volumes.
    Kappa {
        #[arg(long, allow_negative_numbers = true)]
        x: f64,
    },
    /// Area generating polynomial of Y(m,n); ascending coefficients.
    Qcard(MnArgs),
    /// z-cardinality of Y(m,n) graded by area.
    Zcard {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_negative_numbers = true)]
        z: f64,
    },
    /// Mean area xy(n+1)/(2n) of a uniform diagram in D_n(x,y).
    Meanarea(NxyArgs),
}

#[derive(Args)]
struct XyArgs {
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, allow_negative_numbers = true)]
    y: f64,
}

#[derive(Args)]
struct NxyArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, allow_negative_numbers = true)]
    y: f64,
}

#[derive(Args)]
struct MnArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    n: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    D,
    D1,
    D2,
    D3,
}

impl From<Kind> for RegionKind {
    fn from(k: Kind) -> RegionKind {
        match k {
            Kind::D => RegionKind::D,
            Kind::D1 => RegionKind::D1,
            Kind::D2 => RegionKind::D2,
            Kind::D3 => RegionKind::D3,
        }
    }
}

#[derive(Subcommand)]
enum TableCmd {
    /// Grid of the exact coefficients d_{n,l}.
    Dnl {
        #[arg(long)]
        nmax: u64,
        #[arg(long)]
        lmax: u64,
    },
    /// Chain-product numbers T_{k,n}.
    Tnum {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        nmax: u64,
    },
    /// Gap-product numbers U_{k,n}.
    Unum {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        nmax: u64,
    },
    /// Nonzero area counts |Y(m,n,a)| in rows (a, count).
    Ycoeffs(MnArgs),
    /// Coefficients of the k-th power of the volume series in u = xy.
    Powercoeffs {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        degree: u64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or "all".
    suite: String,
    /// Trials for randomized suites.
    #[arg(long, default_value_t = 1000)]
    trials: usize,
}

#[derive(Subcommand)]
enum SampleCmd {
    /// Estimate the z-volume of D_n(x,y) by sampling e^{-z area}.
    Volz(SampleVolzArgs),
    /// Estimate vol(area <= w) in D_n(x,y).
    Vhat(SampleVhatArgs),
    /// Estimate the mean area of a uniform diagram in D_n(x,y).
    Meanarea(SampleMeanArgs),
    /// Estimate a monomial simplex integral.
    Integral(SampleIntegralArgs),
}

#[derive(Args)]
struct SampleCommon {
    #[arg(long)]
    samples: u64,
    /// Independent generator streams (reduced in ascending order).
    #[arg(long, default_value_t = 1)]
    streams: u64,
}

#[derive(Args)]
struct SampleVolzArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, allow_negative_numbers = true)]
    y: f64,
    #[arg(long, allow_negative_numbers = true)]
    z: f64,
    #[command(flatten)]
    common: SampleCommon,
}

#[derive(Args)]
struct SampleVhatArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, allow_negative_numbers = true)]
    y: f64,
    #[arg(long, allow_negative_numbers = true)]
    w: f64,
    #[command(flatten)]
    common: SampleCommon,
}

#[derive(Args)]
struct SampleMeanArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[arg(long, allow_negative_numbers = true)]
    y: f64,
    #[command(flatten)]
    common: SampleCommon,
}

#[derive(Args)]
struct SampleIntegralArgs {
    /// Comma-separated exponents, e.g. "1,1" or "2,3".
    #[arg(long)]
    a: String,
    #[arg(long, allow_negative_numbers = true)]
    x: f64,
    #[command(flatten)]
    common: SampleCommon,
}

/// Structured command outcome; `status: ok` maps to exit code 0.
enum Outcome {
    Json(Value),
    Csv { header: String, rows: Vec<String> },
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            print_outcome(&cli, outcome);
        }
        Err(CliError::Checks(report)) => {
            // the verification report itself is the payload
            print_outcome(&cli, report);
            std::process::exit(1);
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            println!("{}", json!({"status": "usage_error", "message": msg}));
            std::process::exit(2);
        }
        Err(CliError::Core(err)) => {
            let (status, code) = match err {
                Error::Domain(_) => ("domain_error", 3),
                Error::Resource(_) => ("resource_error", 4),
                Error::Numeric(_) => ("numeric_error", 5),
            };
            eprintln!("{err}");
            println!("{}", json!({"status": status, "message": err.to_string()}));
            std::process::exit(code);
        }
    }
}

fn print_outcome(cli: &Cli, outcome: Outcome) {
    let format = cli.format.unwrap_or(match (&cli.command, &outcome) {
        (Command::Table(_), _) | (_, Outcome::Csv { .. }) => Format::Csv,
        _ => Format::Json,
    });
    match outcome {
        Outcome::Json(v) => match format {
            Format::Json => println!("{v}"),
            Format::Csv => print_json_as_csv(&v),
        },
        Outcome::Csv { header, rows } => match format {
            Format::Csv => {
                println!("{header}");
                for row in rows {
                    println!("{row}");
                }
            }
            Format::Json => {
                let cols: Vec<&str> = header.split(',').collect();
                let data: Vec<Value> = rows
                    .iter()
                    .map(|r| {
                        let mut obj = serde_json::Map::new();
                        for (c, v) in cols.iter().zip(r.split(',')) {
                            obj.insert(c.to_string(), Value::String(v.to_string()));
                        }
                        Value::Object(obj)
                    })
                    .collect();
                println!("{}", Value::Array(data));
            }
        },
    }
}

/// Flattens a one-level JSON object into `key,value` CSV lines.
fn print_json_as_csv(v: &Value) {
    println!("key,value");
    if let Value::Object(map) = v {
        for (k, val) in map {
            match val {
                Value::Array(items) => {
                    let joined: Vec<String> = items.iter().map(render_scalar).collect();
                    println!("{k},\"{}\"", joined.join(";"));
                }
                other => println!("{k},{}", render_scalar(other)),
            }
        }
    } else {
        println!("value,{v}");
    }
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

enum CliError {
    Usage(String),
    Core(Error),
    Checks(Outcome),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Eval(cmd) => run_eval(cmd),
        Command::Table(cmd) => run_table(cmd),
        Command::Verify(args) => run_verify(cli, args),
        Command::Sample(cmd) => run_sample(cli, cmd),
    }
}

fn series_json(s: &SeriesValue) -> Value {
    json!({"value": s.value, "tail_bound": s.tail_bound, "terms": s.terms_used})
}

fn run_eval(cmd: &EvalCmd) -> Result<Outcome, CliError> {
    let payload = match cmd {
        EvalCmd::Rho(a) => series_json(&volume::rho(a.x, a.y)?),
        EvalCmd::Besseli { k, t } => series_json(&volume::bessel_i(*k, *t)?),
        EvalCmd::Voldn(a) => json!({"value": volume::vol_dn(a.n, a.x, a.y)?}),
        EvalCmd::Volregion { kind, x, y } => {
            series_json(&volume::vol_region((*kind).into(), *x, *y)?)
        }
        EvalCmd::Volz { x, y, z } => series_json(&zvolume::vol_z_d(*x, *y, *z)?),
        EvalCmd::Volzdn { n, x, y, z } => series_json(&zvolume::vol_z_dn(*n, *x, *y, *z)?),
        EvalCmd::Contbinom { x, s } => json!({"value": volume::cont_binomial(*x, *s)?}),
        EvalCmd::Kappa { x } => series_json(&simplex::kappa(*x)?),
        EvalCmd::Qcard(a) => {
            let p = qcard::young_qcard(a.m, a.n)?;
            json!({"coeffs": p.coeff_strings()})
        }
        EvalCmd::Zcard { m, n, z } => {
            let p = qcard::young_qcard(*m, *n)?;
            json!({"value": qcard::z_cardinality(&p, *z)})
        }
        EvalCmd::Meanarea(a) => json!({"value": zvolume::mean_area(a.n, a.x, a.y)?}),
    };
    Ok(Outcome::Json(payload))
}

fn run_table(cmd: &TableCmd) -> Result<Outcome, CliError> {
    match cmd {
        TableCmd::Dnl { nmax, lmax } => {
            if *nmax == 0 {
                return Err(CliError::Usage("--nmax must be at least 1".into()));
            }
            if *nmax > 64 || *lmax > 256 {
                return Err(Error::resource(format!(
                    "d-table capped at nmax <= 64, lmax <= 256, got ({nmax}, {lmax})"
                ))
                .into());
            }
            let mut table = zvolume::DCoeffTable::new();
            table.ensure(*nmax as usize, *lmax as usize);
            let header = std::iter::once("n".to_string())
                .chain((0..=*lmax).map(|l| format!("l={l}")))
                .collect::<Vec<_>>()
                .join(",");
            let rows = (1..=*nmax)
                .map(|n| {
                    std::iter::once(n.to_string())
                        .chain((0..=*lmax).map(|l| format_rational(table.get(n, l))))
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            Ok(Outcome::Csv { header, rows })
        }
        TableCmd::Tnum { k, nmax } => {
            number_table("T", *k, *nmax, simplex::t_number)
        }
        TableCmd::Unum { k, nmax } => {
            number_table("U", *k, *nmax, simplex::u_number)
        }
        TableCmd::Ycoeffs(a) => {
            if a.m == 0 || a.n == 0 {
                return Err(CliError::Usage("--m and --n must be at least 1".into()));
            }
            if a.m * a.n > 20_000 {
                return Err(Error::resource(format!(
                    "partition polynomial capped at m*n <= 20000, got {}",
                    a.m * a.n
                ))
                .into());
            }
            let p = qcard::young_qcard(a.m, a.n)?;
            let rows = p
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(deg, c)| format!("{deg},{c}"))
                .collect();
            Ok(Outcome::Csv { header: "a,count".into(), rows })
        }
        TableCmd::Powercoeffs { k, degree } => {
            if *k > 32 || *degree > 256 {
                return Err(Error::resource(format!(
                    "power series capped at k <= 32, degree <= 256, got ({k}, {degree})"
                ))
                .into());
            }
            let coeffs = volume::power_series_coeffs(*k, *degree as usize)?;
            let rows = coeffs
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| format!("{n},{}", format_rational(c)))
                .collect();
            Ok(Outcome::Csv { header: "n,coeff".into(), rows })
        }
    }
}

fn number_table(
    label: &str,
    k: u64,
    nmax: u64,
    f: fn(u64, u64) -> cyd_core::Result<BigInt>,
) -> Result<Outcome, CliError> {
    if k == 0 || nmax <= k {
        return Err(CliError::Usage(format!(
            "{label}-numbers need 1 <= k < nmax, got k = {k}, nmax = {nmax}"
        )));
    }
    if nmax > 500 {
        return Err(Error::resource(format!("{label}-table capped at nmax <= 500, got {nmax}")).into());
    }
    let rows = ((k + 1)..=nmax).map(|n| format!("{k},{n},{}", f(k, n).unwrap())).collect();
    Ok(Outcome::Csv { header: format!("k,n,{label}"), rows })
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> Result<Outcome, CliError> {
    let randomized = args.suite == "all" || suite_is_randomized(&args.suite);
    let seed = match (randomized, cli.seed) {
        (true, None) => {
            return Err(CliError::Usage(format!(
                "suite {:?} uses random trials: pass an explicit --seed",
                args.suite
            )))
        }
        (_, seed) => seed.unwrap_or(0),
    };
    let reports: Vec<SuiteReport> = if args.suite == "all" {
        SUITES
            .iter()
            .map(|s| run_suite(s, seed, args.trials).expect("known suite"))
            .collect()
    } else {
        vec![run_suite(&args.suite, seed, args.trials).map_err(|_| {
            CliError::Usage(format!(
                "unknown suite {:?}; expected one of {} or \"all\"",
                args.suite,
                SUITES.join(", ")
            ))
        })?]
    };

    let checks: usize = reports.iter().map(|r| r.checks.len()).sum();
    let passed: usize = reports.iter().map(|r| r.passed()).sum();
    let failed = checks - passed;
    let details: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(move |c| {
                let status = if c.passed { "ok" } else { "FAIL" };
                match &c.detail {
                    Some(d) => format!("{status} [{}] {} ({d})", r.suite, c.name),
                    None => format!("{status} [{}] {}", r.suite, c.name),
                }
            })
        })
        .collect();
    let payload = Outcome::Json(json!({
        "suite": args.suite,
        "checks": checks,
        "passed": passed,
        "failed": failed,
        "details": details,
    }));
    if failed == 0 {
        Ok(payload)
    } else {
        Err(CliError::Checks(payload))
    }
}

fn run_sample(cli: &Cli, cmd: &SampleCmd) -> Result<Outcome, CliError> {
    let Some(seed) = cli.seed else {
        return Err(CliError::Usage("sampling requires an explicit --seed".into()));
    };
    let common = match cmd {
        SampleCmd::Volz(a) => &a.common,
        SampleCmd::Vhat(a) => &a.common,
        SampleCmd::Meanarea(a) => &a.common,
        SampleCmd::Integral(a) => &a.common,
    };
    if common.samples < 1000 {
        return Err(CliError::Usage(format!(
            "at least 1000 samples are required, got {}",
            common.samples
        )));
    }
    let (estimate, reference): (Estimate, Option<f64>) = match cmd {
        SampleCmd::Volz(a) => {
            let est = mc_vol_z(a.n, a.x, a.y, a.z, a.common.samples, seed, a.common.streams)?;
            let reference = zvolume::vol_z_dn(a.n, a.x, a.y, a.z)?.value;
            (est, Some(reference))
        }
        SampleCmd::Vhat(a) => {
            let est = mc_vol_hat(a.n, a.x, a.y, a.w, a.common.samples, seed, a.common.streams)?;
            let reference = match a.n {
                1 => Some(if a.w < a.x * a.y { 0.0 } else { 1.0 }),
                2 => Some(vol_hat_two_block_quadrature(a.x, a.y, a.w, cli.tol)?),
                _ => None,
            };
            (est, reference)
        }
        SampleCmd::Meanarea(a) => {
            let est = mc_mean_area(a.n, a.x, a.y, a.common.samples, seed, a.common.streams)?;
            (est, Some(zvolume::mean_area(a.n, a.x, a.y)?))
        }
        SampleCmd::Integral(a) => {
            let exponents = parse_exponents(&a.a)?;
            let index = MultiIndex::new(exponents);
            let est =
                mc_monomial_integral(&index, a.x, a.common.samples, seed, a.common.streams)?;
            (est, Some(monomial_integral_value(&index, a.x)?))
        }
    };
    let mut payload = json!({
        "estimate": estimate,
        "streams": common.streams,
        "generator": "chacha12, 64-bit seed, per-stream substreams",
    });
    if let Some(r) = reference {
        payload["reference"] = json!(r);
        let diff = (estimate.mean - r).abs();
        let ratio = if estimate.std_error > 0.0 {
            Some(diff / estimate.std_error)
        } else if diff == 0.0 {
            Some(0.0)
        } else {
            None
        };
        payload["se_ratio"] = json!(ratio);
    }
    Ok(Outcome::Json(payload))
}

fn parse_exponents(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map_err(|_| CliError::Usage(format!("bad exponent list entry {p:?}")))
        })
        .collect()
}
