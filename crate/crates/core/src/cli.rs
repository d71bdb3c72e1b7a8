//! Command-line front end.
//!
//! Every subcommand writes CSV to `--out` (or stdout). Invalid parameters
//! exit with status 2 and I/O failures with status 1, each with a single
//! diagnostic line on stderr.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::analysis::csv;
use crate::analysis::grid::GridSpec;
use crate::analysis::lebesgue::lebesgue_constant;
use crate::analysis::metrics::Method;
use crate::analysis::noise::NoiseSpec;
use crate::analysis::reference::{PiecewisePolynomial, ReferenceFunction};
use crate::analysis::sweep::{build_rational, converge_n, scan_de, table1};
use crate::error::InterpError;
use crate::eval::Scheme;
use crate::nodes::NodeSet;
use crate::params::ExtParams;

#[derive(Debug, Parser)]
#[command(
    name = "fh-blend",
    version,
    about = "Floater-Hormann and extended rational interpolation experiments",
    propagate_version = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an interpolant of a built-in function
    Eval(EvalArgs),
    /// Scan L∞ error and Lebesgue constant over (d, e) at fixed n
    Scan(ScanArgs),
    /// Error curves in n for several approximants
    Converge(ConvergeArgs),
    /// Lebesgue constant, or the Lebesgue function on a grid
    Lebesgue(LebesgueArgs),
    /// Runge's function on [-5, 5]: tuned Floater-Hormann vs (min(14, n), 4)
    Table1(Table1Args),
}

#[derive(Debug, Args)]
pub struct Common {
    /// Interval endpoints a b
    #[arg(long, num_args = 2, value_names = ["A", "B"], default_values_t = [-5.0, 5.0], allow_negative_numbers = true)]
    pub interval: Vec<f64>,
    /// Function: runge, poly:c0,c1,..., or pp:PATH (piecewise polynomial file)
    #[arg(long = "fn", default_value = "runge")]
    pub function: String,
    /// Output path (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct NoiseArgs {
    /// Standard deviation of Gaussian noise added to the samples
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub sigma: f64,
    /// Noise seed
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub noise: NoiseArgs,
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub d: usize,
    #[arg(long, default_value_t = 0)]
    pub e: usize,
    /// Evaluation points (repeatable)
    #[arg(long, num_args = 1.., allow_negative_numbers = true)]
    pub at: Vec<f64>,
    /// Uniform evaluation grid size, used when --at is absent
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub noise: NoiseArgs,
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub dmin: usize,
    #[arg(long, default_value_t = 30)]
    pub dmax: usize,
    #[arg(long, default_value_t = 0)]
    pub emin: usize,
    #[arg(long, default_value_t = 30)]
    pub emax: usize,
    /// Error grid size
    #[arg(long, default_value_t = GridSpec::DEFAULT_ERROR_COUNT)]
    pub grid: usize,
}

#[derive(Debug, Args)]
pub struct ConvergeArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub noise: NoiseArgs,
    /// Approximants: fh:D, ext:D,E, cheb, spline
    #[arg(long, num_args = 1.., required = true)]
    pub configs: Vec<String>,
    #[arg(long, default_value_t = 2)]
    pub nmin: usize,
    #[arg(long, default_value_t = 160)]
    pub nmax: usize,
    #[arg(long, default_value_t = 1)]
    pub nstep: usize,
    #[arg(long, default_value_t = GridSpec::DEFAULT_ERROR_COUNT)]
    pub grid: usize,
    /// Also estimate Lebesgue constants of the rational approximants
    #[arg(long)]
    pub lebesgue: bool,
}

#[derive(Debug, Args)]
pub struct LebesgueArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    #[arg(long, default_value_t = 12)]
    pub d: usize,
    #[arg(long, default_value_t = 4)]
    pub e: usize,
    /// Write λ(x) on this many uniform points instead of the constant
    #[arg(long)]
    pub profile: Option<usize>,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    #[arg(long, default_value_t = GridSpec::DEFAULT_ERROR_COUNT)]
    pub grid: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Validated settings shared by the subcommands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub subcommand: &'static str,
    pub function: ReferenceFunction,
    pub n: usize,
    pub params: ExtParams,
    pub grid: usize,
    pub noise: Option<NoiseSpec>,
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or parameter values; exit 2.
    Usage(String),
    /// Reading or writing files failed; exit 1.
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

impl From<InterpError> for CliError {
    fn from(e: InterpError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_function(spec: &str, a: f64, b: f64) -> Result<ReferenceFunction, CliError> {
    if spec == "runge" {
        return Ok(ReferenceFunction::runge(a, b));
    }
    if let Some(list) = spec.strip_prefix("poly:") {
        let coeffs: Vec<f64> = list
            .split(',')
            .map(|c| c.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|_| usage(format!("bad polynomial coefficients: {list}")))?;
        let pp = PiecewisePolynomial::polynomial(coeffs)
            .ok_or_else(|| usage(format!("bad polynomial coefficients: {list}")))?;
        return Ok(ReferenceFunction::piecewise(spec, pp, a, b));
    }
    if let Some(path) = spec.strip_prefix("pp:") {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))?;
        let pp = PiecewisePolynomial::parse(&text)
            .ok_or_else(|| usage(format!("malformed piecewise polynomial file: {path}")))?;
        return Ok(ReferenceFunction::piecewise(spec, pp, a, b));
    }
    Err(usage(format!("unknown function {spec:?}; expected runge, poly:..., or pp:PATH")))
}

fn parse_method(spec: &str) -> Result<Method, CliError> {
    let bad = || usage(format!("bad config {spec:?}; expected fh:D, ext:D,E, cheb, or spline"));
    match spec {
        "cheb" => return Ok(Method::Chebyshev),
        "spline" => return Ok(Method::Spline),
        _ => {}
    }
    if let Some(d) = spec.strip_prefix("fh:") {
        return Ok(Method::Fh {
            d: d.parse().map_err(|_| bad())?,
        });
    }
    if let Some(rest) = spec.strip_prefix("ext:") {
        let (d, e) = rest.split_once(',').ok_or_else(bad)?;
        let (d, e) = (d.parse().map_err(|_| bad())?, e.parse().map_err(|_| bad())?);
        if e > d {
            return Err(usage(format!("e must satisfy 0 ≤ e ≤ d (got e = {e}, d = {d})")));
        }
        return Ok(Method::Extended { d, e });
    }
    Err(bad())
}

fn interval(common: &Common) -> Result<(f64, f64), CliError> {
    let (a, b) = (common.interval[0], common.interval[1]);
    if !(a.is_finite() && b.is_finite()) || a >= b {
        return Err(usage(format!("interval must satisfy a < b (got {a}, {b})")));
    }
    Ok((a, b))
}

fn noise(args: &NoiseArgs) -> Result<Option<NoiseSpec>, CliError> {
    if !args.sigma.is_finite() || args.sigma < 0.0 {
        return Err(usage(format!("sigma must be a finite value ≥ 0 (got {})", args.sigma)));
    }
    Ok((args.sigma > 0.0).then(|| NoiseSpec::new(args.sigma, args.seed)))
}

fn check_grid(count: usize) -> Result<(), CliError> {
    if count < 2 {
        return Err(usage(format!("grid must have at least 2 points (got {count})")));
    }
    Ok(())
}

impl RunConfig {
    fn rational(
        subcommand: &'static str,
        common: &Common,
        n: usize,
        params: ExtParams,
        grid: usize,
        noise: Option<NoiseSpec>,
    ) -> Result<Self, CliError> {
        let (a, b) = interval(common)?;
        if n == 0 {
            return Err(usage("n must be at least 1"));
        }
        params.validate(n)?;
        check_grid(grid)?;
        Ok(Self {
            subcommand,
            function: parse_function(&common.function, a, b)?,
            n,
            params,
            grid,
            noise,
            out: common.out.clone(),
        })
    }
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}")))
        }
    }
}

fn cmd_eval(args: &EvalArgs) -> Result<(), CliError> {
    let cfg = RunConfig::rational(
        "eval",
        &args.common,
        args.n,
        ExtParams::new(args.d, args.e),
        args.grid,
        noise(&args.noise)?,
    )?;
    let f = &cfg.function;
    let interp = build_rational(f, cfg.n, cfg.params, cfg.noise)?;
    let xs = if args.at.is_empty() {
        GridSpec::uniform(cfg.grid).points(f.a(), f.b(), None)
    } else {
        args.at.clone()
    };
    let pairs = xs
        .iter()
        .map(|&x| interp.value(x).map(|v| (x, v)))
        .collect::<Result<Vec<_>, _>>()?;
    write_output(cfg.out.as_ref(), &csv::eval_csv(&pairs))
}

fn cmd_scan(args: &ScanArgs) -> Result<(), CliError> {
    if args.dmin > args.dmax || args.emin > args.emax {
        return Err(usage("need dmin ≤ dmax and emin ≤ emax"));
    }
    let cfg = RunConfig::rational("scan", &args.common, args.n, ExtParams::new(0, 0), args.grid, noise(&args.noise)?)?;
    let ds: Vec<usize> = (args.dmin..=args.dmax).collect();
    let es: Vec<usize> = (args.emin..=args.emax).collect();
    let m = scan_de(&cfg.function, cfg.n, &ds, &es, cfg.noise, GridSpec::uniform(cfg.grid))?;
    write_output(cfg.out.as_ref(), &csv::scan_csv(&m))
}

fn cmd_converge(args: &ConvergeArgs) -> Result<(), CliError> {
    if args.nmin == 0 || args.nmin > args.nmax || args.nstep == 0 {
        return Err(usage("need 1 ≤ nmin ≤ nmax and nstep ≥ 1"));
    }
    let cfg = RunConfig::rational(
        "converge",
        &args.common,
        args.nmax,
        ExtParams::new(0, 0),
        args.grid,
        noise(&args.noise)?,
    )?;
    let methods = args
        .configs
        .iter()
        .map(|s| parse_method(s))
        .collect::<Result<Vec<_>, _>>()?;
    let ns: Vec<usize> = (args.nmin..=args.nmax).step_by(args.nstep).collect();
    let rows = converge_n(&cfg.function, &methods, &ns, cfg.noise, GridSpec::uniform(cfg.grid), args.lebesgue)?;
    write_output(cfg.out.as_ref(), &csv::converge_csv(&rows, cfg.noise))
}

fn cmd_lebesgue(args: &LebesgueArgs) -> Result<(), CliError> {
    let params = ExtParams::new(args.d, args.e);
    let grid = GridSpec::lebesgue_default(args.n, args.d);
    let cfg = RunConfig::rational("lebesgue", &args.common, args.n, params, grid.count, None)?;
    let nodes = NodeSet::equispaced(cfg.function.a(), cfg.function.b(), cfg.n)?;
    let scheme = Scheme::new(nodes, params)?;
    let text = match args.profile {
        Some(count) => {
            check_grid(count)?;
            let pts = GridSpec::uniform(count).points(cfg.function.a(), cfg.function.b(), None);
            let pairs = pts
                .iter()
                .map(|&x| scheme.lebesgue(x).map(|l| (x, l)))
                .collect::<Result<Vec<_>, _>>()?;
            csv::lebesgue_csv(&pairs)
        }
        None => {
            let report = lebesgue_constant(&scheme, grid)?;
            let row = crate::analysis::sweep::ConvergeRow {
                method: Method::from_params(params),
                n: cfg.n,
                report: None,
                lebesgue: Some(report.lambda_max),
            };
            csv::converge_csv(&[row], None)
        }
    };
    write_output(cfg.out.as_ref(), &text)
}

fn cmd_table1(args: &Table1Args) -> Result<(), CliError> {
    check_grid(args.grid)?;
    let rows = table1(GridSpec::uniform(args.grid))?;
    write_output(args.out.as_ref(), &csv::table1_csv(&rows))
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Eval(a) => cmd_eval(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Converge(a) => cmd_converge(a),
        Command::Lebesgue(a) => cmd_lebesgue(a),
        Command::Table1(a) => cmd_table1(a),
    }
}

/// Parses `args`, runs, and returns the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return 0;
            }
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("error: invalid arguments");
            eprintln!("{line}");
            return 2;
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_parsing() {
        assert_eq!(parse_method("fh:3").unwrap(), Method::Fh { d: 3 });
        assert_eq!(parse_method("ext:14,4").unwrap(), Method::Extended { d: 14, e: 4 });
        assert_eq!(parse_method("cheb").unwrap(), Method::Chebyshev);
        assert_eq!(parse_method("spline").unwrap(), Method::Spline);
        assert!(parse_method("ext:4,5").is_err());
        assert!(parse_method("ext:4").is_err());
        assert!(parse_method("poly").is_err());
    }

    #[test]
    fn function_registry() {
        let f = parse_function("poly:1,0,-1", -1.0, 1.0).unwrap();
        assert_eq!(f.eval(0.5), 0.75);
        assert!(parse_function("sin", -1.0, 1.0).is_err());
        assert!(matches!(parse_function("pp:/nonexistent/file", -1.0, 1.0), Err(CliError::Io(_))));
    }

    #[test]
    fn parameter_validation_is_usage_error() {
        let cli = Cli::try_parse_from(["fh-blend", "eval", "--n", "4", "--d", "9"]).unwrap();
        let err = run(&cli).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.message().contains("d must satisfy 0 ≤ d ≤ n"));
    }

    #[test]
    fn negative_interval_parses() {
        let cli = Cli::try_parse_from(["fh-blend", "eval", "--interval", "-3", "7", "--at", "-0.5"]).unwrap();
        match cli.command {
            Command::Eval(a) => {
                assert_eq!(a.common.interval, vec![-3.0, 7.0]);
                assert_eq!(a.at, vec![-0.5]);
            }
            _ => panic!("wrong subcommand"),
        }
    }
}
