//! Command-line front end. The `qbath` binary only forwards to [`main`].
//!
//! Exit codes:
//!
//! | code | meaning                                              |
//! |------|------------------------------------------------------|
//! | 0    | success                                              |
//! | 1    | audit found a violation                              |
//! | 2    | quadrature tolerance not met, or `--check` mismatch  |
//! | 3    | invalid or degenerate parameters                     |
//! | 64   | usage error                                          |
//! | 74   | I/O error                                            |

use crate::closed_form::{relative_difference, ThermoReport};
use crate::error::Error;
use crate::model::{to_physical_parameters, to_pole_parameters, OscillatorSpec, PoleDecomposition};
use crate::quadrature::{BathTemperature, QuadratureConfig};
use crate::verify::{self, format_float, SweepGrid, SweepMode, SweepRow};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_TOLERANCE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_IO: i32 = 74;

/// Largest closed-form/quadrature relative difference `eval --check` accepts.
pub const CHECK_TOLERANCE: f64 = 1e-8;

/// Environment variable overriding the default relative tolerance.
pub const TOLERANCE_ENV: &str = "QBATH_TOL";

#[derive(Debug, Parser)]
#[command(
    name = "qbath",
    version,
    about = "Thermodynamics of an oscillator coupled to a single-relaxation-time bath"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate ⟨x²⟩, ⟨ẋ²⟩, ⟨H_O⟩, E₀ and F_O at one parameter point.
    Eval(EvalArgs),
    /// Convert between pole and physical parameters.
    Invert(ParamArgs),
    /// Write grid results as CSV.
    Sweep(SweepArgs),
    /// Check F_O > ⟨H_O⟩ over a grid (exit 1 on any violation).
    Audit(AuditArgs),
    /// Write the data behind the standard figures.
    Figure(FigureArgs),
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false, id = "params")]
struct ParamGroup {
    /// Pole parameters `Ω,ω₀,γ`.
    #[arg(long, value_name = "OMEGA,W0,GAMMA")]
    poles: Option<String>,
    /// Physical parameters `K=..,zeta=..,tau=..,m=..`.
    #[arg(long, value_name = "K=..,zeta=..,tau=..,m=..")]
    physical: Option<String>,
}

#[derive(Debug, Clone, Args)]
struct ParamArgs {
    #[command(flatten)]
    params: ParamGroup,
    /// Oscillator mass for `--poles`.
    #[arg(long, default_value_t = 1.0, conflicts_with = "physical")]
    mass: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
}

#[derive(Debug, Clone, Args)]
struct ToleranceArgs {
    /// Relative quadrature tolerance (default 1e-10, or $QBATH_TOL).
    #[arg(long)]
    rel_tol: Option<f64>,
    /// Absolute quadrature tolerance.
    #[arg(long)]
    abs_tol: Option<f64>,
    /// Subdivision budget per integral.
    #[arg(long)]
    max_subdivisions: Option<usize>,
}

#[derive(Debug, Clone, Args)]
struct EvalArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Temperature as kT in the same units as ħω.
    #[arg(long = "T", default_value_t = 0.0, value_name = "kT", allow_negative_numbers = true)]
    temperature: f64,
    /// Reduced Planck constant.
    #[arg(long, default_value_t = 1.0)]
    hbar: f64,
    /// Also evaluate by quadrature and report the relative discrepancy.
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(flatten)]
    tolerance: ToleranceArgs,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false, id = "grid_choice")]
struct GridChoice {
    /// `g=..;omega=..;T=..`; values are comma lists of numbers, `a:b:n`
    /// (linear) or `a:b:n:log`.
    #[arg(long)]
    grid: Option<String>,
    /// The 6 × 5 cross-validation grid.
    #[arg(long)]
    default_grid: bool,
    #[arg(long)]
    fig1: bool,
    #[arg(long)]
    fig2: bool,
}

#[derive(Debug, Clone, Args)]
struct SweepArgs {
    #[command(flatten)]
    grid: GridChoice,
    #[arg(long, default_value = "closed_form", value_parser = parse_mode)]
    mode: SweepMode,
    /// Output file (stdout when absent).
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    tolerance: ToleranceArgs,
}

#[derive(Debug, Clone, Args)]
struct AuditArgs {
    #[command(flatten)]
    grid: GridChoice,
    /// Also run the large-Ω gap law for these γ/ω₀ values.
    #[arg(long, value_delimiter = ',')]
    asymptotic: Vec<f64>,
    /// Write the audited rows as CSV.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    tolerance: ToleranceArgs,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
struct FigureChoice {
    #[arg(long)]
    fig1: bool,
    #[arg(long)]
    fig2: bool,
}

#[derive(Debug, Clone, Args)]
struct FigureArgs {
    #[command(flatten)]
    which: FigureChoice,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_mode(s: &str) -> Result<SweepMode, String> {
    s.parse()
}

/// Failure of a subcommand, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self {
            code: EXIT_IO,
            message: format!("I/O error: {e}"),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ToleranceNotMet { .. } => EXIT_TOLERANCE,
        _ => EXIT_INVALID,
    }
}

/// Runs the command line with the process's stdout and stderr.
pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the command line against arbitrary writers and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a, out, err),
        Command::Invert(a) => cmd_invert(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out, err),
        Command::Audit(a) => cmd_audit(&a, out, err),
        Command::Figure(a) => cmd_figure(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn quadrature_config(t: &ToleranceArgs) -> Result<QuadratureConfig, Failure> {
    let mut cfg = QuadratureConfig::default();
    if let Ok(raw) = std::env::var(TOLERANCE_ENV) {
        cfg.rel_tol = raw
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("{TOLERANCE_ENV}=`{raw}` is not a number")))?;
    }
    if let Some(r) = t.rel_tol {
        cfg.rel_tol = r;
    }
    if let Some(a) = t.abs_tol {
        cfg.abs_tol = a;
    }
    if let Some(n) = t.max_subdivisions {
        cfg.max_subdivisions = n;
    }
    cfg.validate().map_err(|e| Failure::usage(e.to_string()))?;
    Ok(cfg)
}

fn parse_numbers(s: &str, expected: usize) -> Result<Vec<f64>, Failure> {
    let values: Vec<f64> = s
        .split(',')
        .map(|v| v.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::usage(format!("`{s}`: {e}")))?;
    if values.len() != expected {
        return Err(Failure::usage(format!(
            "`{s}`: expected {expected} comma-separated values"
        )));
    }
    Ok(values)
}

fn parse_physical(s: &str) -> Result<OscillatorSpec, Failure> {
    let (mut k, mut zeta, mut tau, mut m) = (None, None, None, None);
    for item in s.split(',') {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("`{item}` is not key=value")))?;
        let value: f64 = value
            .trim()
            .parse()
            .map_err(|e| Failure::usage(format!("`{item}`: {e}")))?;
        let slot = match key.trim() {
            "K" | "k" => &mut k,
            "zeta" => &mut zeta,
            "tau" => &mut tau,
            "m" | "mass" => &mut m,
            other => return Err(Failure::usage(format!("unknown physical parameter `{other}`"))),
        };
        if slot.replace(value).is_some() {
            return Err(Failure::usage(format!("`{}` given twice", key.trim())));
        }
    }
    let missing = |name: &str| Failure::usage(format!("--physical is missing `{name}`"));
    let k = k.ok_or_else(|| missing("K"))?;
    let zeta = zeta.ok_or_else(|| missing("zeta"))?;
    let tau = tau.ok_or_else(|| missing("tau"))?;
    Ok(OscillatorSpec::new(m.unwrap_or(1.0), k, zeta, tau)?)
}

/// Both parameter sets for the requested point.
fn resolve(p: &ParamArgs) -> Result<(PoleDecomposition, OscillatorSpec), Failure> {
    if let Some(s) = &p.params.poles {
        let v = parse_numbers(s, 3)?;
        let poles = PoleDecomposition::new(p.mass, v[0], v[1], v[2])?;
        let spec = to_physical_parameters(&poles)?;
        Ok((poles, spec))
    } else {
        let spec = parse_physical(p.params.physical.as_deref().unwrap_or_default())?;
        let poles = to_pole_parameters(&spec)?;
        Ok((poles, spec))
    }
}

const QUANTITIES: [&str; 5] = ["<x^2>", "<v^2>", "<H_O>", "E_0", "F_O"];

fn cmd_eval(a: &EvalArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let cfg = quadrature_config(&a.tolerance)?;
    let (poles, spec) = resolve(&a.params)?;
    let hbar = crate::error::positive("hbar", a.hbar)?;
    let temperature = BathTemperature::new(a.temperature)?;

    let mut code = EXIT_OK;
    let closed = if temperature.is_zero() {
        match ThermoReport::closed_form(&poles, hbar) {
            Ok(r) => Some(r),
            Err(e @ Error::NearDegenerateDenominator { .. }) => {
                writeln!(err, "note: {e}")?;
                None
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };
    // uncoupled oscillator: the spectral weight is a delta, no integral form
    let coupled = poles.relaxation_rate() > 0.0;
    let want_quadrature = closed.is_none() || (a.check && coupled);
    let numeric = if want_quadrature {
        match ThermoReport::quadrature(&poles, hbar, temperature, &cfg) {
            Ok(r) => Some(r),
            Err(e @ Error::ToleranceNotMet { .. }) if closed.is_some() => {
                writeln!(err, "error: {e}")?;
                code = EXIT_TOLERANCE;
                None
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };

    let columns = |r: &Option<ThermoReport>| r.as_ref().map(|r| r.values());
    let closed_values = columns(&closed);
    let numeric_values = columns(&numeric);
    let show_both = a.check;
    let cell = |v: Option<f64>| v.map_or_else(|| "n/a".to_string(), format_float);

    if a.format == Format::Table {
        writeln!(
            out,
            "# Omega = {}, w0 = {}, gamma = {}, m = {}",
            format_float(poles.bath_pole()),
            format_float(poles.natural_frequency()),
            format_float(poles.relaxation_rate()),
            format_float(poles.mass())
        )?;
        writeln!(
            out,
            "# K = {}, zeta = {}, tau = {}, hbar = {}, kT = {}",
            format_float(spec.force_constant()),
            format_float(spec.friction()),
            format_float(spec.bath_relaxation()),
            format_float(hbar),
            format_float(temperature.kt())
        )?;
    }
    let header: Vec<&str> = if show_both {
        vec!["quantity", "closed_form", "quadrature", "rel_discrepancy"]
    } else {
        vec!["quantity", "value", "method"]
    };
    let mut lines: Vec<Vec<String>> = Vec::new();
    let mut worst = 0.0f64;
    for (i, name) in QUANTITIES.iter().enumerate() {
        let c = closed_values.map(|v| v[i]);
        let q = numeric_values.map(|v| v[i]);
        if show_both {
            let d = c.zip(q).map(|(c, q)| relative_difference(c, q));
            if let Some(d) = d {
                worst = worst.max(d);
            }
            lines.push(vec![name.to_string(), cell(c), cell(q), cell(d)]);
        } else {
            let (value, method) = match c {
                Some(v) => (v, "closed_form"),
                None => (q.unwrap_or(f64::NAN), "quadrature"),
            };
            lines.push(vec![name.to_string(), format_float(value), method.to_string()]);
        }
    }
    let primary = closed.as_ref().or(numeric.as_ref()).map(|r| r.values());
    if let Some(v) = primary {
        let ratio = |x: f64| format_float(x / v[3]);
        if show_both {
            lines.push(vec!["H_O/E_0".into(), ratio(v[2]), "".into(), "".into()]);
            lines.push(vec!["F_O/E_0".into(), ratio(v[4]), "".into(), "".into()]);
        } else {
            lines.push(vec!["H_O/E_0".into(), ratio(v[2]), "ratio".into()]);
            lines.push(vec!["F_O/E_0".into(), ratio(v[4]), "ratio".into()]);
        }
    }
    match a.format {
        Format::Csv => {
            writeln!(out, "{}", header.join(","))?;
            for l in &lines {
                writeln!(out, "{}", l.join(","))?;
            }
        }
        Format::Table => {
            let widths: Vec<usize> = (0..header.len())
                .map(|j| lines.iter().map(|l| l[j].len()).chain([header[j].len()]).max().unwrap())
                .collect();
            let render = |cells: Vec<&str>| -> String {
                let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                padded.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", render(header.clone()))?;
            for l in &lines {
                writeln!(out, "{}", render(l.iter().map(String::as_str).collect()))?;
            }
        }
    }
    if show_both && worst > CHECK_TOLERANCE {
        writeln!(err, "error: discrepancy {worst:e} exceeds {CHECK_TOLERANCE:e}")?;
        code = EXIT_TOLERANCE;
    }
    if a.check && !coupled {
        writeln!(err, "note: gamma = 0 has no quadrature oracle; nothing to check")?;
    }
    Ok(code)
}

fn cmd_invert(a: &ParamArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (poles, spec) = resolve(a)?;
    writeln!(out, "physical")?;
    writeln!(out, "  m     = {}", format_float(spec.mass()))?;
    writeln!(out, "  K     = {}", format_float(spec.force_constant()))?;
    writeln!(out, "  zeta  = {}", format_float(spec.friction()))?;
    writeln!(out, "  tau   = {}", format_float(spec.bath_relaxation()))?;
    if !spec.in_physical_regime() {
        writeln!(out, "  note: tau*zeta >= m, outside the fast-bath regime")?;
    }
    writeln!(out, "poles")?;
    writeln!(out, "  Omega = {}", format_float(poles.bath_pole()))?;
    writeln!(out, "  w0    = {}", format_float(poles.natural_frequency()))?;
    writeln!(out, "  gamma = {}", format_float(poles.relaxation_rate()))?;
    writeln!(out, "  regime: {:?}", poles.regime())?;
    writeln!(out, "cubic residuals |m tau s^3 - m s^2 + (K tau + zeta) s - K| / K")?;
    let roots: [(&str, Complex64); 3] = [
        ("Omega", Complex64::new(poles.bath_pole(), 0.0)),
        ("z1", poles.z1()),
        ("z2", poles.z2()),
    ];
    for (name, s) in roots {
        let r = spec.cubic_residual(s).norm() / spec.force_constant();
        writeln!(out, "  {name:<5} = {:<26} {}", format_complex(s), format_float(r))?;
    }
    Ok(EXIT_OK)
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format_float(z.re)
    } else {
        format!("{}{:+.16e}i", format_float(z.re), z.im)
    }
}

fn parse_axis(key: &str, s: &str) -> Result<Vec<f64>, Failure> {
    let bad = |why: String| Failure::usage(format!("grid `{key}={s}`: {why}"));
    let mut values = Vec::new();
    for item in s.split(',') {
        let parts: Vec<&str> = item.trim().split(':').collect();
        let num = |t: &str| t.trim().parse::<f64>().map_err(|e| bad(format!("`{t}`: {e}")));
        match parts.as_slice() {
            [x] => values.push(num(x)?),
            [a, b, n] | [a, b, n, _] => {
                let n: usize = n.trim().parse().map_err(|e| bad(format!("`{n}`: {e}")))?;
                let log = match parts.get(3).map(|t| t.trim()) {
                    None | Some("lin") => false,
                    Some("log") => true,
                    Some(other) => return Err(bad(format!("unknown spacing `{other}`"))),
                };
                let (a, b) = (num(a)?, num(b)?);
                if n == 0 {
                    return Err(bad("range needs at least one point".into()));
                }
                if log {
                    values.extend(verify::logspace(a, b, n));
                } else {
                    values.extend(verify::linspace(a, b, n));
                }
            }
            _ => return Err(bad(format!("cannot parse `{item}`"))),
        }
    }
    Ok(values)
}

/// Parses `g=..;omega=..;T=..`. Missing `T` means T = 0.
pub fn parse_grid(spec: &str) -> Result<SweepGrid, String> {
    parse_grid_inner(spec).map_err(|f| f.message)
}

fn parse_grid_inner(spec: &str) -> Result<SweepGrid, Failure> {
    let (mut g, mut w, mut t) = (None, None, None);
    for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("grid part `{part}` is not key=value")))?;
        let key = key.trim();
        let slot = match key {
            "g" | "gamma" => &mut g,
            "omega" | "Omega" | "W" => &mut w,
            "T" | "kT" => &mut t,
            other => return Err(Failure::usage(format!("unknown grid axis `{other}`"))),
        };
        if slot.replace(parse_axis(key, value)?).is_some() {
            return Err(Failure::usage(format!("grid axis `{key}` given twice")));
        }
    }
    let g = g.ok_or_else(|| Failure::usage("grid needs g=..."))?;
    let w = w.ok_or_else(|| Failure::usage("grid needs omega=..."))?;
    Ok(SweepGrid::new(g, w, t.unwrap_or_else(|| vec![0.0]))?)
}

fn choose_grid(c: &GridChoice) -> Result<(SweepGrid, String), Failure> {
    if let Some(s) = &c.grid {
        Ok((parse_grid_inner(s)?, format!("grid {s}")))
    } else if c.fig1 {
        Ok((SweepGrid::fig1(), "grid fig1".into()))
    } else if c.fig2 {
        Ok((SweepGrid::fig2(), "grid fig2".into()))
    } else {
        Ok((SweepGrid::standard(), "grid default".into()))
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Option<BufWriter<File>>, Failure> {
    match path {
        None => Ok(None),
        Some(p) => {
            let file = File::create(p).map_err(|e| Failure {
                code: EXIT_IO,
                message: format!("cannot create {}: {e}", p.display()),
            })?;
            Ok(Some(BufWriter::new(file)))
        }
    }
}

fn emit_csv(
    path: &Option<PathBuf>,
    out: &mut dyn Write,
    rows: &[SweepRow],
    comments: &[String],
) -> Result<(), Failure> {
    match open_output(path)? {
        Some(mut file) => {
            verify::write_csv(&mut file, rows, comments)?;
            file.flush()?;
        }
        None => verify::write_csv(&mut *out, rows, comments)?,
    }
    Ok(())
}

fn row_failure_code(rows: &[SweepRow]) -> i32 {
    rows.iter()
        .filter_map(|r| r.failure.as_ref())
        .map(exit_code)
        .min()
        .unwrap_or(EXIT_OK)
}

fn report_failures(rows: &[SweepRow], err: &mut dyn Write) -> io::Result<()> {
    for r in rows.iter().filter(|r| r.is_failed()) {
        let why = r.failure.as_ref().map(|e| e.to_string()).unwrap_or_default();
        writeln!(
            err,
            "row gamma={} omega={} kT={} failed: {why}",
            r.gamma_over_w0, r.omega_over_w0, r.kt_over_hw0
        )?;
    }
    Ok(())
}

fn cmd_sweep(a: &SweepArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let cfg = quadrature_config(&a.tolerance)?;
    let (grid, label) = choose_grid(&a.grid)?;
    let rows = verify::sweep(&grid, &cfg, a.mode);
    let mut comments = vec![format!("{label}; reduced units hbar = m = w0 = 1")];
    if a.mode == SweepMode::Both {
        comments.push(format!(
            "max closed_form/quadrature discrepancy {:e}",
            verify::max_discrepancy(&rows)
        ));
    }
    emit_csv(&a.out, out, &rows, &comments)?;
    report_failures(&rows, err)?;
    Ok(row_failure_code(&rows))
}

fn cmd_audit(a: &AuditArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let cfg = quadrature_config(&a.tolerance)?;
    let (grid, label) = choose_grid(&a.grid)?;
    let report = verify::second_law_audit(&grid, &cfg);
    // the summary goes to stderr when the CSV occupies stdout
    let summary: &mut dyn Write = if a.out.is_some() { &mut *out } else { &mut *err };
    writeln!(summary, "second-law audit over {} points ({label})", report.rows.len())?;
    if let Some(row) = report.min_gap() {
        writeln!(
            summary,
            "  min (F-H)/E0 = {} at gamma/w0 = {}, Omega/w0 = {}",
            format_float(row.gap_over_e0),
            row.gamma_over_w0,
            row.omega_over_w0
        )?;
    }
    writeln!(
        summary,
        "  max closed_form/quadrature discrepancy = {:e}",
        report.max_discrepancy
    )?;
    writeln!(summary, "  violations: {}", report.violations.len())?;
    writeln!(
        summary,
        "  informational rows (Omega <= w0 or T > 0): {}",
        report.informational.len()
    )?;
    writeln!(summary, "  failed rows: {}", report.failures.len())?;
    let mut asymptotic_ok = true;
    for &g in &a.asymptotic {
        let r = verify::asymptotic_audit(g, &[1e2, 1e3, 1e4, 1e6], &cfg)?;
        let ratios: Vec<String> = r.points.iter().map(|p| format!("{:.9}", p.ratio)).collect();
        writeln!(
            summary,
            "  gap law gamma/w0 = {g}: r = [{}], |r-1| = {:e} (envelope {:e}), monotone = {} -> {}",
            ratios.join(", "),
            r.last_deviation(),
            r.envelope,
            r.monotone,
            if r.passed() { "PASS" } else { "FAIL" }
        )?;
        asymptotic_ok &= r.passed();
    }
    let passed = report.passed() && asymptotic_ok;
    writeln!(summary, "{}", if passed { "PASS" } else { "FAIL" })?;
    if a.out.is_some() {
        let comments = vec![format!("{label}; second-law audit, mode both")];
        emit_csv(&a.out, out, &report.rows, &comments)?;
    }
    report_failures(&report.rows, err)?;
    if !report.violations.is_empty() || !asymptotic_ok {
        Ok(EXIT_VIOLATION)
    } else if !report.passed() {
        Ok(row_failure_code(&report.rows).max(EXIT_TOLERANCE))
    } else {
        Ok(EXIT_OK)
    }
}

fn cmd_figure(a: &FigureArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (grid, name) = if a.which.fig1 {
        (SweepGrid::fig1(), "fig1")
    } else {
        (SweepGrid::fig2(), "fig2")
    };
    let rows = verify::sweep(&grid, &QuadratureConfig::default(), SweepMode::ClosedForm);
    let comments = vec![format!("figure {name}; closed form; reduced units hbar = m = w0 = 1")];
    emit_csv(&a.out, out, &rows, &comments)?;
    Ok(row_failure_code(&rows))
}
