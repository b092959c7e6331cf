//! Parameter-grid sweeps, the second-law audit and the large-Ω gap law.
//!
//! Everything here works in reduced units, ħ = m = ω₀ = 1, so every grid
//! coordinate and every reported number is a ratio: γ/ω₀, Ω/ω₀, kT/ħω₀,
//! ⟨H_O⟩/E₀, F_O/E₀.

use crate::closed_form::ThermoReport;
use crate::error::{Error, Result};
use crate::model::PoleDecomposition;
use crate::quadrature::{BathTemperature, QuadratureConfig};
use rayon::prelude::*;
use std::f64::consts::PI;
use std::fmt;
use std::io::{self, Read, Write};
use std::str::FromStr;

pub const CSV_HEADER: &str = "gamma_over_w0,omega_over_w0,kT_over_hw0,H_over_E0,F_over_E0,gap_over_E0,asymptotic_gap_over_E0,method,second_law_pass";

/// Points on a (γ/ω₀) × (Ω/ω₀) × (kT/ħω₀) grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    gammas: Vec<f64>,
    omegas: Vec<f64>,
    temperatures: Vec<f64>,
}

impl SweepGrid {
    /// Each axis must be nonempty and strictly increasing (no duplicates);
    /// γ and Ω strictly positive, temperatures non-negative.
    pub fn new(gammas: Vec<f64>, omegas: Vec<f64>, temperatures: Vec<f64>) -> Result<Self> {
        check_axis("gamma", &gammas, false)?;
        check_axis("omega", &omegas, false)?;
        check_axis("T", &temperatures, true)?;
        Ok(Self {
            gammas,
            omegas,
            temperatures,
        })
    }

    /// T = 0 grid.
    pub fn zero_temperature(gammas: Vec<f64>, omegas: Vec<f64>) -> Result<Self> {
        Self::new(gammas, omegas, vec![0.0])
    }

    /// The 6 × 5 cross-validation grid.
    pub fn standard() -> Self {
        Self::zero_temperature(vec![0.1, 0.5, 1.0, 2.0, 3.0, 4.0], vec![1.5, 2.0, 5.0, 10.0, 50.0]).unwrap()
    }

    /// Ω = 5ω₀, 80 values of γ/ω₀ evenly spaced on [0.05, 4].
    pub fn fig2() -> Self {
        Self::zero_temperature(linspace(0.05, 4.0, 80), vec![5.0]).unwrap()
    }

    /// 40 evenly spaced γ/ω₀ on [0.05, 4] by 40 log-spaced Ω/ω₀ on [1.5, 100].
    pub fn fig1() -> Self {
        Self::zero_temperature(linspace(0.05, 4.0, 40), logspace(1.5, 100.0, 40)).unwrap()
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    pub fn temperatures(&self) -> &[f64] {
        &self.temperatures
    }

    pub fn len(&self) -> usize {
        self.gammas.len() * self.omegas.len() * self.temperatures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Points in output order: temperature, then Ω, then γ varies fastest.
    pub fn points(&self) -> Vec<(f64, f64, f64)> {
        let mut out = Vec::with_capacity(self.len());
        for &t in &self.temperatures {
            for &omega in &self.omegas {
                for &gamma in &self.gammas {
                    out.push((gamma, omega, t));
                }
            }
        }
        out
    }
}

fn check_axis(name: &str, values: &[f64], allow_zero: bool) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidGrid(format!("{name} axis is empty")));
    }
    for &v in values {
        let ok = v.is_finite() && (v > 0.0 || (allow_zero && v == 0.0));
        if !ok {
            let bound = if allow_zero { "non-negative" } else { "positive" };
            return Err(Error::InvalidGrid(format!(
                "{name} value {v} is not finite and {bound}"
            )));
        }
    }
    if let Some(w) = values.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::InvalidGrid(format!(
            "{name} axis must be strictly increasing, found {} then {}",
            w[0], w[1]
        )));
    }
    Ok(())
}

/// `n` evenly spaced values from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => vec![],
        1 => vec![a],
        _ => (0..n)
            .map(|i| {
                if i == n - 1 {
                    b
                } else {
                    a + (b - a) * i as f64 / (n - 1) as f64
                }
            })
            .collect(),
    }
}

/// `n` geometrically spaced values from `a` to `b` inclusive.
pub fn logspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    let mut v: Vec<f64> = linspace(a.ln(), b.ln(), n).into_iter().map(f64::exp).collect();
    if n > 1 {
        v[0] = a;
        v[n - 1] = b;
    }
    v
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepMode {
    ClosedForm,
    Quadrature,
    Both,
}

impl FromStr for SweepMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "closed_form" | "closed-form" | "closed" => Ok(Self::ClosedForm),
            "quadrature" | "quad" => Ok(Self::Quadrature),
            "both" => Ok(Self::Both),
            other => Err(format!("unknown mode `{other}` (closed_form, quadrature, both)")),
        }
    }
}

/// How a row's numbers were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RowMethod {
    ClosedForm,
    Quadrature,
    /// Closed form and quadrature both ran; the reported values are the
    /// closed-form ones.
    Both,
    /// The closed form hit a near-degenerate denominator.
    QuadratureFallback,
    Failed,
}

impl RowMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            RowMethod::ClosedForm => "closed_form",
            RowMethod::Quadrature => "quadrature",
            RowMethod::Both => "both",
            RowMethod::QuadratureFallback => "quadrature_fallback",
            RowMethod::Failed => "failed",
        }
    }
}

impl fmt::Display for RowMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RowMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [
            RowMethod::ClosedForm,
            RowMethod::Quadrature,
            RowMethod::Both,
            RowMethod::QuadratureFallback,
            RowMethod::Failed,
        ]
        .into_iter()
        .find(|m| m.as_str() == s)
        .ok_or_else(|| format!("unknown method tag `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub gamma_over_w0: f64,
    pub omega_over_w0: f64,
    pub kt_over_hw0: f64,
    pub h_over_e0: f64,
    pub f_over_e0: f64,
    pub gap_over_e0: f64,
    /// γ/(πω₀), the large-Ω limit of the gap.
    pub asymptotic_gap_over_e0: f64,
    pub method: RowMethod,
    pub second_law_pass: bool,
    /// Largest relative closed-form/quadrature difference over ⟨x²⟩, ⟨ẋ²⟩,
    /// ⟨H_O⟩ and F_O, in `Both` mode.
    pub discrepancy: Option<f64>,
    pub failure: Option<Error>,
}

impl SweepRow {
    fn from_report(gamma: f64, omega: f64, kt: f64, report: &ThermoReport, method: RowMethod) -> Self {
        let e0 = report.ground_energy.value;
        let h = report.mean_energy.value / e0;
        let f = report.free_energy.value / e0;
        let gap = (report.free_energy.value - report.mean_energy.value) / e0;
        Self {
            gamma_over_w0: gamma,
            omega_over_w0: omega,
            kt_over_hw0: kt,
            h_over_e0: h,
            f_over_e0: f,
            gap_over_e0: gap,
            asymptotic_gap_over_e0: gamma / PI,
            method,
            second_law_pass: gap > 0.0,
            discrepancy: None,
            failure: None,
        }
    }

    fn failed(gamma: f64, omega: f64, kt: f64, error: Error) -> Self {
        Self {
            gamma_over_w0: gamma,
            omega_over_w0: omega,
            kt_over_hw0: kt,
            h_over_e0: f64::NAN,
            f_over_e0: f64::NAN,
            gap_over_e0: f64::NAN,
            asymptotic_gap_over_e0: gamma / PI,
            method: RowMethod::Failed,
            second_law_pass: false,
            discrepancy: None,
            failure: Some(error),
        }
    }

    pub fn is_failed(&self) -> bool {
        self.method == RowMethod::Failed
    }

    /// The second-law claim covers Ω > ω₀ at T = 0 only.
    pub fn in_claimed_region(&self) -> bool {
        self.omega_over_w0 > 1.0 && self.kt_over_hw0 == 0.0
    }
}

/// Evaluates one reduced-units grid point.
pub fn evaluate_point(gamma: f64, omega: f64, kt: f64, cfg: &QuadratureConfig, mode: SweepMode) -> SweepRow {
    match try_point(gamma, omega, kt, cfg, mode) {
        Ok(row) => row,
        Err(e) => SweepRow::failed(gamma, omega, kt, e),
    }
}

fn try_point(gamma: f64, omega: f64, kt: f64, cfg: &QuadratureConfig, mode: SweepMode) -> Result<SweepRow> {
    let poles = PoleDecomposition::reduced(omega, gamma)?;
    let temperature = BathTemperature::new(kt)?;
    let quadrature = || ThermoReport::quadrature(&poles, 1.0, temperature, cfg);

    // closed forms exist only at T = 0
    if !temperature.is_zero() || mode == SweepMode::Quadrature {
        return Ok(SweepRow::from_report(
            gamma,
            omega,
            kt,
            &quadrature()?,
            RowMethod::Quadrature,
        ));
    }
    let closed = match ThermoReport::closed_form(&poles, 1.0) {
        Ok(report) => report,
        Err(Error::NearDegenerateDenominator { .. }) => {
            return Ok(SweepRow::from_report(
                gamma,
                omega,
                kt,
                &quadrature()?,
                RowMethod::QuadratureFallback,
            ));
        }
        Err(e) => return Err(e),
    };
    if mode == SweepMode::ClosedForm {
        return Ok(SweepRow::from_report(gamma, omega, kt, &closed, RowMethod::ClosedForm));
    }
    let numeric = quadrature()?;
    let mut row = SweepRow::from_report(gamma, omega, kt, &closed, RowMethod::Both);
    row.discrepancy = Some(closed.max_relative_discrepancy(&numeric));
    Ok(row)
}

/// One row per grid point, in [`SweepGrid::points`] order. Rows are
/// evaluated in parallel; a failing row is tagged and does not stop the
/// sweep.
pub fn sweep(grid: &SweepGrid, cfg: &QuadratureConfig, mode: SweepMode) -> Vec<SweepRow> {
    grid.points()
        .into_par_iter()
        .map(|(gamma, omega, kt)| evaluate_point(gamma, omega, kt, cfg, mode))
        .collect()
}

/// 17 significant digits, round-trip exact.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_csv<W: Write>(mut out: W, rows: &[SweepRow], comments: &[String]) -> io::Result<()> {
    for c in comments {
        writeln!(out, "# {c}")?;
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for r in rows {
        w.write_record([
            format_float(r.gamma_over_w0),
            format_float(r.omega_over_w0),
            format_float(r.kt_over_hw0),
            format_float(r.h_over_e0),
            format_float(r.f_over_e0),
            format_float(r.gap_over_e0),
            format_float(r.asymptotic_gap_over_e0),
            r.method.to_string(),
            r.second_law_pass.to_string(),
        ])?;
    }
    w.flush()
}

pub fn to_csv_string(rows: &[SweepRow], comments: &[String]) -> String {
    let mut buf = Vec::new();
    write_csv(&mut buf, rows, comments).expect("writing to memory");
    String::from_utf8(buf).expect("csv is ascii")
}

/// Reads rows written by [`write_csv`]. Lines starting with `#` are skipped.
/// Parsed rows carry no discrepancy or failure detail.
pub fn read_csv<R: Read>(input: R) -> std::result::Result<Vec<SweepRow>, String> {
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(input);
    let header = reader.headers().map_err(|e| e.to_string())?;
    if header.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
        return Err(format!(
            "unexpected header `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        ));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| e.to_string())?;
        let line = record.position().map_or(0, |p| p.line());
        let field = |i: usize| {
            record
                .get(i)
                .ok_or_else(|| format!("line {line}: missing field {}", i + 1))
        };
        let num = |i: usize| -> std::result::Result<f64, String> {
            field(i)?
                .parse::<f64>()
                .map_err(|e| format!("line {line}, field {}: {e}", i + 1))
        };
        rows.push(SweepRow {
            gamma_over_w0: num(0)?,
            omega_over_w0: num(1)?,
            kt_over_hw0: num(2)?,
            h_over_e0: num(3)?,
            f_over_e0: num(4)?,
            gap_over_e0: num(5)?,
            asymptotic_gap_over_e0: num(6)?,
            method: field(7)?.parse()?,
            second_law_pass: field(8)?.parse().map_err(|e| format!("line {line}, field 9: {e}"))?,
            discrepancy: None,
            failure: None,
        });
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SecondLawReport {
    pub rows: Vec<SweepRow>,
    /// Index into `rows` of the smallest gap in the claimed region.
    pub min_gap_index: Option<usize>,
    /// Claimed-region rows with F_O ≤ ⟨H_O⟩.
    pub violations: Vec<usize>,
    /// Rows outside the claimed region (Ω ≤ ω₀ or T > 0); recorded only.
    pub informational: Vec<usize>,
    pub failures: Vec<usize>,
    pub max_discrepancy: f64,
}

impl SecondLawReport {
    pub fn min_gap(&self) -> Option<&SweepRow> {
        self.min_gap_index.map(|i| &self.rows[i])
    }

    /// No violations and no failed rows in the claimed region.
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.failures.iter().all(|&i| !self.rows[i].in_claimed_region())
    }
}

/// Sweeps with both methods and checks F_O > ⟨H_O⟩ wherever it is claimed.
pub fn second_law_audit(grid: &SweepGrid, cfg: &QuadratureConfig) -> SecondLawReport {
    let rows = sweep(grid, cfg, SweepMode::Both);
    let mut report = SecondLawReport {
        rows: Vec::new(),
        min_gap_index: None,
        violations: Vec::new(),
        informational: Vec::new(),
        failures: Vec::new(),
        max_discrepancy: 0.0,
    };
    let mut min_gap = f64::INFINITY;
    for (i, row) in rows.iter().enumerate() {
        if row.is_failed() {
            report.failures.push(i);
            continue;
        }
        if let Some(d) = row.discrepancy {
            report.max_discrepancy = report.max_discrepancy.max(d);
        }
        if !row.in_claimed_region() {
            report.informational.push(i);
            continue;
        }
        if !row.second_law_pass {
            report.violations.push(i);
        }
        if row.gap_over_e0 < min_gap {
            min_gap = row.gap_over_e0;
            report.min_gap_index = Some(i);
        }
    }
    report.rows = rows;
    report
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticPoint {
    pub omega_over_w0: f64,
    /// (F_O − ⟨H_O⟩)·πω₀/(γE₀).
    pub ratio: f64,
    pub method: RowMethod,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    pub gamma_over_w0: f64,
    pub points: Vec<AsymptoticPoint>,
    /// Allowed |r − 1| at the largest Ω.
    pub envelope: f64,
    pub within_envelope: bool,
    /// |r − 1| strictly decreases along the Ω list.
    pub monotone: bool,
}

impl AsymptoticReport {
    pub fn last_deviation(&self) -> f64 {
        self.points.last().map_or(f64::NAN, |p| (p.ratio - 1.0).abs())
    }

    pub fn passed(&self) -> bool {
        self.within_envelope && self.monotone
    }
}

/// Convergence envelope for the gap ratio: (3 + (γ/ω₀)·ln(Ω/ω₀))·ω₀/Ω.
pub fn asymptotic_envelope(gamma_over_w0: f64, omega_over_w0: f64) -> f64 {
    (3.0 + gamma_over_w0 * omega_over_w0.ln()) / omega_over_w0
}

/// Tracks r(Ω) = (F_O − ⟨H_O⟩)·πω₀/(γE₀) toward 1 along an increasing Ω
/// list reaching at least 10³ω₀.
pub fn asymptotic_audit(gamma_over_w0: f64, omegas: &[f64], cfg: &QuadratureConfig) -> Result<AsymptoticReport> {
    let grid = SweepGrid::zero_temperature(vec![gamma_over_w0], omegas.to_vec())?;
    let largest = *omegas.last().unwrap();
    if largest < 1e3 {
        return Err(Error::InvalidGrid(format!(
            "largest Ω/ω₀ must be at least 1e3, got {largest}"
        )));
    }
    let rows = sweep(&grid, cfg, SweepMode::ClosedForm);
    if let Some(row) = rows.iter().find(|r| r.is_failed()) {
        return Err(row.failure.clone().unwrap());
    }
    let points: Vec<AsymptoticPoint> = rows
        .iter()
        .map(|r| AsymptoticPoint {
            omega_over_w0: r.omega_over_w0,
            ratio: r.gap_over_e0 / r.asymptotic_gap_over_e0,
            method: r.method,
        })
        .collect();
    let deviations: Vec<f64> = points.iter().map(|p| (p.ratio - 1.0).abs()).collect();
    let envelope = asymptotic_envelope(gamma_over_w0, largest);
    Ok(AsymptoticReport {
        gamma_over_w0,
        within_envelope: *deviations.last().unwrap() < envelope,
        monotone: deviations.windows(2).all(|w| w[1] < w[0]),
        envelope,
        points,
    })
}

/// Largest `Both`-mode discrepancy among rows that have one.
pub fn max_discrepancy(rows: &[SweepRow]) -> f64 {
    rows.iter().filter_map(|r| r.discrepancy).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(SweepGrid::zero_temperature(vec![], vec![1.0]).is_err());
        assert!(SweepGrid::zero_temperature(vec![1.0, 1.0], vec![1.0]).is_err());
        assert!(SweepGrid::zero_temperature(vec![2.0, 1.0], vec![1.0]).is_err());
        assert!(SweepGrid::zero_temperature(vec![0.0], vec![1.0]).is_err());
        assert!(SweepGrid::zero_temperature(vec![1.0], vec![f64::NAN]).is_err());
        assert!(SweepGrid::new(vec![1.0], vec![1.0], vec![-1.0]).is_err());
        assert!(SweepGrid::new(vec![1.0], vec![1.0], vec![0.0, 0.5]).is_ok());
    }

    #[test]
    fn presets() {
        assert_eq!(SweepGrid::standard().len(), 30);
        let fig2 = SweepGrid::fig2();
        assert_eq!(fig2.len(), 80);
        assert_eq!(fig2.gammas()[0], 0.05);
        assert_eq!(fig2.gammas()[79], 4.0);
        let fig1 = SweepGrid::fig1();
        assert_eq!(fig1.omegas()[0], 1.5);
        assert_eq!(*fig1.omegas().last().unwrap(), 100.0);
    }

    #[test]
    fn spacing_helpers() {
        assert_eq!(linspace(0.0, 1.0, 5), vec![0.0, 0.25, 0.5, 0.75, 1.0]);
        let l = logspace(1.0, 1000.0, 4);
        assert!((l[1] - 10.0).abs() < 1e-12 && (l[2] - 100.0).abs() < 1e-10);
    }

    #[test]
    fn row_order_is_gamma_fastest() {
        let g = SweepGrid::zero_temperature(vec![0.5, 1.0], vec![2.0, 5.0]).unwrap();
        let rows = sweep(&g, &QuadratureConfig::default(), SweepMode::ClosedForm);
        let coords: Vec<_> = rows.iter().map(|r| (r.gamma_over_w0, r.omega_over_w0)).collect();
        assert_eq!(coords, vec![(0.5, 2.0), (1.0, 2.0), (0.5, 5.0), (1.0, 5.0)]);
    }

    #[test]
    fn degenerate_corner_is_isolated() {
        // γ = 2ω₀, Ω = ω₀ puts the bath pole on the double oscillator pole
        let g = SweepGrid::zero_temperature(vec![1.0, 2.0], vec![1.0]).unwrap();
        let rows = sweep(&g, &QuadratureConfig::default(), SweepMode::ClosedForm);
        assert_eq!(rows[0].method, RowMethod::ClosedForm);
        assert_eq!(rows[1].method, RowMethod::Failed);
        assert!(matches!(rows[1].failure, Some(Error::DegeneratePoles { .. })));
    }

    #[test]
    fn near_degenerate_row_falls_back() {
        // Ω a hair above the overdamped pole (γ = 2.5: poles at 2 and 0.5)
        let row = evaluate_point(
            2.5,
            2.0 * (1.0 + 1.1e-9),
            0.0,
            &QuadratureConfig::default(),
            SweepMode::ClosedForm,
        );
        assert_eq!(row.method, RowMethod::QuadratureFallback);
        assert!(row.second_law_pass);
    }

    #[test]
    fn positive_temperature_uses_quadrature() {
        let row = evaluate_point(1.0, 5.0, 0.5, &QuadratureConfig::default(), SweepMode::ClosedForm);
        assert_eq!(row.method, RowMethod::Quadrature);
        assert!(row.h_over_e0 > 1.0);
    }

    #[test]
    fn csv_roundtrip_is_exact() {
        let g = SweepGrid::zero_temperature(vec![0.1, 1.0 / 3.0, 2.0], vec![5.0]).unwrap();
        let rows = sweep(&g, &QuadratureConfig::default(), SweepMode::ClosedForm);
        let text = to_csv_string(&rows, &["note".to_string()]);
        assert!(text.starts_with("# note\n"));
        assert_eq!(text.lines().nth(1), Some(CSV_HEADER));
        let back = read_csv(text.as_bytes()).unwrap();
        assert_eq!(back.len(), 3);
        for (a, b) in rows.iter().zip(&back) {
            assert_eq!(a.h_over_e0.to_bits(), b.h_over_e0.to_bits());
            assert_eq!(a.f_over_e0.to_bits(), b.f_over_e0.to_bits());
            assert_eq!(a.method, b.method);
            assert_eq!(a.second_law_pass, b.second_law_pass);
        }
    }

    #[test]
    fn audit_classifies_regions() {
        let g = SweepGrid::zero_temperature(vec![0.5, 1.0], vec![0.5, 5.0]).unwrap();
        let report = second_law_audit(&g, &QuadratureConfig::default());
        assert_eq!(report.informational.len(), 2);
        assert!(report.passed());
        assert!(report.min_gap().unwrap().gamma_over_w0 == 0.5);
        assert!(report.max_discrepancy < 1e-8);
    }

    #[test]
    fn asymptotic_preconditions() {
        let cfg = QuadratureConfig::default();
        assert!(asymptotic_audit(0.5, &[10.0, 100.0], &cfg).is_err());
        assert!(asymptotic_audit(0.5, &[1e3, 1e2], &cfg).is_err());
        let r = asymptotic_audit(0.5, &[1e2, 1e3, 1e4, 1e6], &cfg).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.last_deviation() < 1e-3);
    }

    #[test]
    fn gap_law_is_loose_at_moderate_bath_pole() {
        let row = evaluate_point(1.0, 5.0, 0.0, &QuadratureConfig::default(), SweepMode::ClosedForm);
        let r = row.gap_over_e0 / row.asymptotic_gap_over_e0;
        assert!(r > 0.5 && r < 1.5, "{r}");
    }
}
