//! Command-line front end: list cases, verify them, evaluate functions.
//!
//! Exit status of `verify`: 0 when every selected case behaves as expected
//! (positive cases pass, negative controls fail), 1 otherwise, 2 on a
//! configuration or usage error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::catalog::{
    self, write_report, write_timing, IdentityCase, Kind, ParamPoint, ReportFormat, VerificationReport,
};
use crate::error::{Error, Result};
use crate::special;
use crate::Complex64;

#[derive(Parser, Debug)]
#[command(
    name = "pcflap",
    version,
    about = "Numerical verification of Laplace-transform identities for parabolic cylinder functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the registered cases.
    List {
        /// Only cases of this kind (laplace_pair, direct_integral, reduction).
        #[arg(long)]
        kind: Option<String>,
    },
    /// Verify cases over their grids.
    Verify(VerifyArgs),
    /// Evaluate a special function and print the value at full precision.
    #[command(allow_negative_numbers = true)]
    Eval(EvalArgs),
}

#[derive(clap::Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Case id or glob pattern; may be repeated.
    #[arg(long = "case")]
    pub cases: Vec<String>,
    /// Verify every registered case.
    #[arg(long)]
    pub all: bool,
    /// Tolerance applied to every selected case instead of its default.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Grid override file with lines `id mu nu x y p`.
    #[arg(long)]
    pub grid: Option<PathBuf>,
    /// Report format: json, csv or text.
    #[arg(long, default_value = "json")]
    pub format: String,
    /// Report file; timings go to `<out>.timing.json`. Defaults to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(clap::Args, Debug, Clone)]
pub struct EvalArgs {
    /// gamma, rgamma, digamma, erf, erfc, 1f1, 2f1, 2f1at1, 2f2, appell or D.
    pub function: String,
    #[arg(long)]
    pub x: Option<f64>,
    #[arg(long)]
    pub z: Option<f64>,
    #[arg(long)]
    pub nu: Option<f64>,
    #[arg(long)]
    pub a: Option<f64>,
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub a1: Option<f64>,
    #[arg(long)]
    pub a2: Option<f64>,
    #[arg(long)]
    pub b1: Option<f64>,
    #[arg(long)]
    pub b2: Option<f64>,
    #[arg(long)]
    pub z1: Option<f64>,
    #[arg(long)]
    pub z2: Option<f64>,
}

/// A validated `verify` request.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub cases: Vec<&'static IdentityCase>,
    pub tolerance: Option<f64>,
    pub grids: BTreeMap<String, Vec<ParamPoint>>,
    pub format: ReportFormat,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

impl RunConfig {
    /// Resolve patterns and read the grid file. Unknown ids fail here,
    /// before any computation.
    pub fn from_args(args: &VerifyArgs) -> Result<Self> {
        let format: ReportFormat = args.format.parse()?;
        if let Some(tol) = args.tol {
            if !(tol > 0.0 && tol.is_finite()) {
                return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
            }
        }
        if args.jobs == Some(0) {
            return Err(Error::Config("--jobs must be at least 1".into()));
        }
        let grids = match &args.grid {
            Some(path) => read_grid(path)?,
            None => BTreeMap::new(),
        };
        let mut cases: Vec<&'static IdentityCase> = Vec::new();
        if args.all {
            cases.extend(catalog::registry().iter());
        } else {
            for pattern in &args.cases {
                for case in catalog::select(pattern)? {
                    if !cases.iter().any(|c| c.id == case.id) {
                        cases.push(case);
                    }
                }
            }
            if args.cases.is_empty() {
                for id in grids.keys() {
                    cases.push(catalog::find_case(id)?);
                }
            }
        }
        if cases.is_empty() {
            return Err(Error::Config("nothing to verify: give --case, --all or --grid".into()));
        }
        let order = |c: &&IdentityCase| catalog::registry().iter().position(|r| r.id == c.id);
        cases.sort_by_key(order);
        Ok(RunConfig { cases, tolerance: args.tol, grids, format, out: args.out.clone(), jobs: args.jobs })
    }
}

/// Parse a grid file: one `id mu nu x y p` record per line; blank lines and
/// lines starting with `#` are ignored.
pub fn parse_grid(text: &str) -> Result<BTreeMap<String, Vec<ParamPoint>>> {
    let mut grids: BTreeMap<String, Vec<ParamPoint>> = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = |what: String| Error::Config(format!("grid line {}: {what}", lineno + 1));
        if fields.len() != 6 {
            return Err(bad(format!("expected `id mu nu x y p`, got {} fields", fields.len())));
        }
        let case = catalog::find_case(fields[0])?;
        let mut v = [0.0; 5];
        for (slot, text) in v.iter_mut().zip(&fields[1..]) {
            *slot = text.parse().map_err(|_| bad(format!("not a number: {text:?}")))?;
        }
        grids.entry(case.id.to_string()).or_default().push(ParamPoint::new(v[0], v[1], v[2], v[3], v[4]));
    }
    Ok(grids)
}

fn read_grid(path: &Path) -> Result<BTreeMap<String, Vec<ParamPoint>>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read grid file {}: {e}", path.display())))?;
    parse_grid(&text)
}

/// Run the verification described by `config`.
pub fn run_verification(config: &RunConfig) -> Result<Vec<VerificationReport>> {
    let work = || -> Vec<VerificationReport> {
        config
            .cases
            .par_iter()
            .map(|case| {
                let grid = config.grids.get(case.id).map(Vec::as_slice);
                catalog::verify_case(case, grid, config.tolerance)
            })
            .collect()
    };
    match config.jobs {
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Config(format!("cannot start {n} workers: {e}")))?;
            Ok(pool.install(work))
        }
        None => Ok(work()),
    }
}

fn timing_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".timing.json");
    PathBuf::from(name)
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let config = RunConfig::from_args(args)?;
    let reports = run_verification(&config)?;
    match &config.out {
        Some(path) => {
            let file = std::fs::File::create(path)?;
            write_report(&reports, config.format, std::io::BufWriter::new(file))?;
            let timing = std::fs::File::create(timing_path(path))?;
            write_timing(&reports, std::io::BufWriter::new(timing))?;
            write_report(&reports, ReportFormat::Text, &mut *stdout)?;
        }
        None => write_report(&reports, config.format, &mut *stdout)?,
    }
    let unexpected: Vec<_> = reports.iter().filter(|r| !r.as_expected()).map(|r| r.id).collect();
    if unexpected.is_empty() {
        Ok(0)
    } else {
        writeln!(stderr, "unexpected verdicts: {}", unexpected.join(", "))?;
        Ok(1)
    }
}

fn cmd_list(kind: Option<&str>, stdout: &mut dyn Write) -> Result<i32> {
    let filter = match kind {
        Some(k) => Some(Kind::parse(k).ok_or_else(|| {
            Error::Config(format!("unknown kind {k:?} (laplace_pair, direct_integral or reduction)"))
        })?),
        None => None,
    };
    for info in catalog::list_cases() {
        if filter.is_some_and(|k| k != info.kind) {
            continue;
        }
        writeln!(stdout, "{:<20} {:<16} {:<8.0e} {}", info.id, info.kind.as_str(), info.tolerance, info.summary)?;
    }
    Ok(0)
}

fn need(value: Option<f64>, name: &str, function: &str) -> Result<f64> {
    value.ok_or_else(|| Error::Config(format!("{function} needs --{name}")))
}

fn r(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Evaluate the named function.
pub fn evaluate(args: &EvalArgs) -> Result<Complex64> {
    let f = args.function.as_str();
    let arg = |v: Option<f64>, name: &str| need(v, name, f);
    // `--x` and `--z` are interchangeable for one-argument functions.
    let point = || args.z.or(args.x).ok_or_else(|| Error::Config(format!("{f} needs --z (or --x)")));
    match f {
        "gamma" => special::gamma(r(point()?)),
        "rgamma" => Ok(special::reciprocal_gamma(r(point()?))),
        "digamma" => special::digamma(r(point()?)),
        "erf" => Ok(r(special::erf(point()?))),
        "erfc" => Ok(r(special::erfc(point()?))),
        "1f1" => special::kummer_phi(r(arg(args.a, "a")?), r(arg(args.b, "b")?), r(point()?)),
        "2f1" => special::gauss_2f1(r(arg(args.a, "a")?), r(arg(args.b, "b")?), r(arg(args.c, "c")?), r(point()?)),
        "2f1at1" => special::gauss_2f1_at_one(r(arg(args.a, "a")?), r(arg(args.b, "b")?), r(arg(args.c, "c")?)),
        "2f2" => special::hyp_2f2(
            r(arg(args.a1, "a1")?),
            r(arg(args.a2, "a2")?),
            r(arg(args.b1, "b1")?),
            r(arg(args.b2, "b2")?),
            r(point()?),
        ),
        "appell" => special::appell_f1(
            r(arg(args.a, "a")?),
            r(arg(args.b1, "b1")?),
            r(arg(args.b2, "b2")?),
            r(arg(args.c, "c")?),
            arg(args.z1, "z1")?,
            arg(args.z2, "z2")?,
        ),
        "D" | "d" | "pcf" => special::pcf_d(r(arg(args.nu, "nu")?), r(point()?)),
        other => Err(Error::Config(format!(
            "unknown function {other:?} (gamma, rgamma, digamma, erf, erfc, 1f1, 2f1, 2f1at1, 2f2, appell, D)"
        ))),
    }
}

/// Shortest text that parses back to the same value; `re im` when complex.
pub fn format_value(v: Complex64) -> String {
    if v.im == 0.0 {
        format!("{}", v.re)
    } else {
        format!("{} {}", v.re, v.im)
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 { write!(stdout, "{e}") } else { write!(stderr, "{e}") };
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::List { kind } => cmd_list(kind.as_deref(), stdout),
        Command::Verify(args) => cmd_verify(args, stdout, stderr),
        Command::Eval(args) => evaluate(args).and_then(|v| {
            writeln!(stdout, "{}", format_value(v))?;
            Ok(0)
        }),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::Config(_) | Error::UnknownCase(_) | Error::InvalidParams { .. } => 2,
                Error::Io(_) => 2,
                _ => 1,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["pcflap"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_prints_round_trip_values() {
        assert_eq!(run_capture(&["eval", "D", "--nu", "0", "--z", "2"]).1.trim(), "0.36787944117144233");
        assert_eq!(run_capture(&["eval", "erfc", "--x", "0"]).1.trim(), "1");
        assert_eq!(run_capture(&["eval", "2f1", "--a", "1", "--b", "1.5", "--c", "1.5", "--z", "0.5"]).1.trim(), "2");
        assert_eq!(run_capture(&["eval", "gamma", "--x", "-0.5"]).0, 0);
    }

    #[test]
    fn eval_rejects_unknown_functions_and_missing_args() {
        assert_eq!(run_capture(&["eval", "bessel", "--x", "1"]).0, 2);
        assert_eq!(run_capture(&["eval", "2f1", "--a", "1"]).0, 2);
    }

    #[test]
    fn list_filters_by_kind() {
        let (code, out, _) = run_capture(&["list"]);
        assert_eq!(code, 0);
        assert!(out.contains("T41-CORRECTED"));
        let (_, out, _) = run_capture(&["list", "--kind", "direct_integral"]);
        assert!(out.contains("C361-REP") && !out.contains("T41-CORRECTED"));
        let (_, out, _) = run_capture(&["list", "--kind", "reduction"]);
        assert!(out.contains("R-PCF-RECURRENCE"));
        assert_eq!(run_capture(&["list", "--kind", "bogus"]).0, 2);
    }

    #[test]
    fn unknown_cases_are_config_errors() {
        assert_eq!(run_capture(&["verify", "--case", "NO-SUCH-CASE"]).0, 2);
        assert_eq!(run_capture(&["verify"]).0, 2);
        assert_eq!(run_capture(&["verify", "--case", "R-PCF-ORIGIN", "--format", "xml"]).0, 2);
    }

    #[test]
    fn negative_controls_exit_zero() {
        let (code, out, _) = run_capture(&["verify", "--case", "NEG-T41", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.contains("fail"));
    }

    #[test]
    fn tight_tolerance_gives_exit_one() {
        let (code, _, err) = run_capture(&["verify", "--case", "C341-SINGLE", "--tol", "1e-17", "--format", "csv"]);
        assert_eq!(code, 1);
        assert!(err.contains("C341-SINGLE"));
    }

    #[test]
    fn grid_file_parsing() {
        let g = parse_grid("# comment\n\nR-PCF-SUM 0 0.5 1.3 0 0\nR-PCF-SUM 0 -0.7 1.3 0 0\n").unwrap();
        assert_eq!(g["R-PCF-SUM"].len(), 2);
        assert!(matches!(parse_grid("R-PCF-SUM 0 0.5"), Err(Error::Config(_))));
        assert!(matches!(parse_grid("NOPE 0 0 0 0 0"), Err(Error::UnknownCase(_))));
        assert!(matches!(parse_grid("R-PCF-SUM 0 x 1 0 0"), Err(Error::Config(_))));
    }

    #[test]
    fn json_records_have_stable_keys() {
        let (code, out, _) = run_capture(&["verify", "--case", "R-PCF-ORIGIN"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let rec = &v.as_array().unwrap()[0];
        for key in ["id", "kind", "params", "lhs", "rhs", "rel_error", "verdict", "evaluations", "wall_time_ms"] {
            assert!(rec.get(key).is_some(), "missing {key}");
        }
    }
}
