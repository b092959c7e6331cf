//! Numerical oracles for the equilibrium observables.
//!
//! Each observable is a one-sided frequency integral over the spectral
//! weight of the oscillator:
//!
//! ```text
//! ⟨x(0)x(t)⟩_sym = (ħ/π) ∫₀^∞ coth(ħω/2kT) Im α(ω) cos(ωt) dω
//! ⟨ẋ(0)ẋ(t)⟩_sym = (ħ/π) ∫₀^∞ ω² coth(ħω/2kT) Im α(ω) cos(ωt) dω
//! F(T)            = (1/π) ∫₀^∞ kT log(2 sinh(ħω/2kT)) Im{d log α/dω} dω
//! ```
//!
//! The temperature weights are split into their zero-temperature part and
//! an exponentially decaying thermal excess,
//! `coth(x/2) = 1 + 2/(eˣ − 1)` and `kT log(2 sinh(x/2)) = ħω/2 + kT log(1 − e⁻ˣ)`,
//! so T = 0 is evaluated exactly and the thermal part lives on a finite
//! interval. None of this touches the closed-form expressions.

mod gauss_kronrod;

pub use gauss_kronrod::{integrate, kronrod15, Estimate};

use crate::error::{Error, Result};
use crate::model::{DampingRegime, PoleDecomposition, Susceptibility};
use std::f64::consts::PI;

/// Accuracy target used whenever the integrand oscillates (nonzero lag).
pub const OSCILLATORY_REL_TOL: f64 = 1e-6;

/// Thermal excess integrals stop at this many multiples of kT/ħ.
const THERMAL_CUTOFF: f64 = 60.0;

/// Cutoff (in units of max(ω₀, Ω)) for the split-at-cutoff tail strategy.
const TAIL_CUTOFF: f64 = 1e4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailStrategy {
    /// ω = s·t/(1−t) with s = max(ω₀, Ω), mapping [0, ∞) onto [0, 1).
    RationalMap,
    /// Integrate to a finite cutoff and add the power-law tail analytically.
    SplitAtCutoff,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub tail: TailStrategy,
    /// Use the finite-cutoff scheme with an integrated-by-parts tail, as is
    /// done automatically for nonzero time lags.
    pub oscillatory: bool,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
            tail: TailStrategy::RationalMap,
            oscillatory: false,
        }
    }
}

impl QuadratureConfig {
    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "relative tolerance {} must be positive",
                self.rel_tol
            )));
        }
        if !(self.abs_tol > 0.0 && self.abs_tol.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "absolute tolerance {} must be positive",
                self.abs_tol
            )));
        }
        if self.max_subdivisions < 50 {
            return Err(Error::InvalidConfig(format!(
                "max subdivisions {} must be at least 50",
                self.max_subdivisions
            )));
        }
        Ok(())
    }
}

/// Bath temperature as kT in energy units. T = 0 is exact.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BathTemperature(f64);

impl BathTemperature {
    pub const ZERO: Self = Self(0.0);

    pub fn new(kt: f64) -> Result<Self> {
        crate::error::non_negative("kT", kt).map(Self)
    }

    pub fn kt(&self) -> f64 {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == 0.0
    }
}

/// The three spectral integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    Position,
    Velocity,
    FreeEnergy,
}

impl Kernel {
    /// Power of the algebraic decay of the zero-temperature integrand.
    fn decay_power(&self) -> f64 {
        match self {
            Kernel::Position => 5.0,
            Kernel::Velocity | Kernel::FreeEnergy => 3.0,
        }
    }

    fn zero_temperature(&self, s: &Susceptibility, hbar: f64, omega: f64) -> f64 {
        match self {
            Kernel::Position => hbar / PI * s.im_alpha(omega),
            Kernel::Velocity => hbar / PI * omega * omega * s.im_alpha(omega),
            Kernel::FreeEnergy => 0.5 * hbar * omega / PI * s.im_dlog_alpha(omega),
        }
    }

    /// Thermal excess of the integrand; the ω → 0 limit of
    /// `2 Im α/(e^{ħω/kT} − 1)` is `2kT/ħ · Im α/ω` and is used at ω = 0.
    fn thermal(&self, s: &Susceptibility, hbar: f64, kt: f64, omega: f64) -> f64 {
        let x = hbar * omega / kt;
        match self {
            Kernel::Position | Kernel::Velocity => {
                let bose = if omega == 0.0 { kt / hbar } else { omega / x.exp_m1() };
                let base = 2.0 * hbar / PI * s.im_alpha_over_omega(omega) * bose;
                if *self == Kernel::Velocity {
                    base * omega * omega
                } else {
                    base
                }
            }
            Kernel::FreeEnergy => {
                if omega == 0.0 {
                    return 0.0;
                }
                kt / PI * (-(-x).exp_m1()).ln() * s.im_dlog_alpha(omega)
            }
        }
    }
}

fn require_coupling(poles: &PoleDecomposition) -> Result<()> {
    if poles.relaxation_rate() > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "gamma",
            value: poles.relaxation_rate(),
            reason: "quadrature needs γ > 0; the uncoupled spectral weight is a delta function",
        })
    }
}

/// Frequencies where the integrands have structure.
fn feature_frequencies(poles: &PoleDecomposition) -> Vec<f64> {
    let mut points = vec![poles.natural_frequency(), poles.bath_pole()];
    if poles.regime() == DampingRegime::Overdamped {
        points.push(poles.z1().re);
        points.push(poles.z2().re);
    }
    points
}

/// Geometric breakpoints (ratio 2) from the lowest feature up to `hi`, so
/// that no initial panel spans more than an octave of the algebraic tail.
fn octaves(features: &[f64], hi: f64) -> Vec<f64> {
    let lowest = features.iter().copied().fold(f64::INFINITY, f64::min);
    std::iter::successors(Some(2.0 * lowest), |w| Some(2.0 * w))
        .take_while(|w| *w < hi)
        .collect()
}

fn sorted_points(lo: f64, hi: f64, interior: impl IntoIterator<Item = f64>) -> Vec<f64> {
    let mut points: Vec<f64> = interior
        .into_iter()
        .filter(|p| p.is_finite() && *p > lo && *p < hi)
        .collect();
    points.push(lo);
    points.push(hi);
    points.sort_by(f64::total_cmp);
    points.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * a.abs().max(b.abs()));
    points
}

/// Zero-temperature part of a spectral integral at the given time lag.
pub fn zero_temperature_integral(
    kernel: Kernel,
    poles: &PoleDecomposition,
    hbar: f64,
    lag: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    require_coupling(poles)?;
    let s = poles.susceptibility();
    let scale = poles.natural_frequency().max(poles.bath_pole());
    let features = feature_frequencies(poles);
    let f = |omega: f64| {
        let v = kernel.zero_temperature(&s, hbar, omega);
        debug_assert!(
            kernel == Kernel::FreeEnergy || v >= 0.0,
            "negative spectral weight at ω = {omega}"
        );
        v * (omega * lag).cos()
    };

    if lag != 0.0 || cfg.oscillatory {
        let cutoff = 50.0 * scale.max(if lag != 0.0 { 2.0 * PI / lag.abs() } else { 0.0 });
        let half_periods = if lag != 0.0 {
            ((cutoff * lag.abs() / PI).ceil() as usize).min(cfg.max_subdivisions / 2)
        } else {
            0
        };
        let grid = (1..half_periods).map(|k| cutoff * k as f64 / half_periods as f64);
        let points = sorted_points(
            0.0,
            cutoff,
            features.iter().copied().chain(grid).chain(octaves(&features, cutoff)),
        );
        let rel = cfg.rel_tol.max(OSCILLATORY_REL_TOL);
        let body = integrate(f, &points, rel, cfg.abs_tol, cfg.max_subdivisions)?;
        let envelope = kernel.zero_temperature(&s, hbar, cutoff);
        let (tail, tail_error) = power_law_tail(envelope, cutoff, kernel.decay_power(), lag);
        let value = body.value + tail;
        let error = body.error + tail_error;
        let requested = cfg.abs_tol.max(rel * value.abs());
        if error > requested {
            return Err(Error::ToleranceNotMet {
                value,
                achieved: error,
                requested,
                subdivisions: body.subdivisions,
            });
        }
        return Ok(Estimate { value, error, ..body });
    }

    match cfg.tail {
        TailStrategy::RationalMap => {
            let to_unit = |omega: f64| omega / (omega + scale);
            let points = sorted_points(0.0, 1.0, features.iter().map(|w| to_unit(*w)));
            let g = |t: f64| {
                let one_minus = 1.0 - t;
                f(scale * t / one_minus) * scale / (one_minus * one_minus)
            };
            integrate(g, &points, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions)
        }
        TailStrategy::SplitAtCutoff => {
            let cutoff = TAIL_CUTOFF * scale;
            let points = sorted_points(0.0, cutoff, features.iter().copied().chain(octaves(&features, cutoff)));
            let body = integrate(f, &points, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions)?;
            let envelope = kernel.zero_temperature(&s, hbar, cutoff);
            let (tail, tail_error) = power_law_tail(envelope, cutoff, kernel.decay_power(), 0.0);
            Ok(Estimate {
                value: body.value + tail,
                error: body.error + tail_error,
                ..body
            })
        }
    }
}

/// ∫_c^∞ g(ω) cos(ωt) dω for g ∝ ω^{−k} with g(c) = `envelope`.
///
/// At t = 0 the power law integrates exactly to g(c)·c/(k−1); the error
/// allowance covers the O(scale/c) correction to the power law. Otherwise two
/// integrations by parts give `−g(c) sin(ct)/t − g′(c) cos(ct)/t²` with the
/// remainder bounded by |g′(c)|/t².
fn power_law_tail(envelope: f64, cutoff: f64, k: f64, lag: f64) -> (f64, f64) {
    if lag == 0.0 {
        let tail = envelope * cutoff / (k - 1.0);
        (tail, tail.abs() / TAIL_CUTOFF.sqrt())
    } else {
        let slope = -k * envelope / cutoff;
        let (s, c) = (cutoff * lag).sin_cos();
        let tail = -envelope * s / lag - slope * c / (lag * lag);
        (tail, slope.abs() / (lag * lag))
    }
}

/// Thermal excess of a spectral integral over its zero-temperature value.
pub fn thermal_integral(
    kernel: Kernel,
    poles: &PoleDecomposition,
    hbar: f64,
    temperature: BathTemperature,
    lag: f64,
    cfg: &QuadratureConfig,
) -> Result<Estimate> {
    cfg.validate()?;
    require_coupling(poles)?;
    if temperature.is_zero() {
        return Ok(Estimate {
            value: 0.0,
            error: 0.0,
            subdivisions: 0,
        });
    }
    let kt = temperature.kt();
    let s = poles.susceptibility();
    let thermal_frequency = kt / hbar;
    let cutoff = THERMAL_CUTOFF * thermal_frequency;
    let mut interior = feature_frequencies(poles);
    interior.push(thermal_frequency);
    if lag != 0.0 {
        let half_periods = ((cutoff * lag.abs() / PI).ceil() as usize).min(cfg.max_subdivisions / 2);
        interior.extend((1..half_periods).map(|k| cutoff * k as f64 / half_periods as f64));
    }
    let points = sorted_points(0.0, cutoff, interior);
    let rel = if lag != 0.0 {
        cfg.rel_tol.max(OSCILLATORY_REL_TOL)
    } else {
        cfg.rel_tol
    };
    integrate(
        |omega| kernel.thermal(&s, hbar, kt, omega) * (omega * lag).cos(),
        &points,
        rel,
        cfg.abs_tol,
        cfg.max_subdivisions,
    )
}

fn spectral(
    kernel: Kernel,
    poles: &PoleDecomposition,
    hbar: f64,
    temperature: BathTemperature,
    lag: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let zero = zero_temperature_integral(kernel, poles, hbar, lag, cfg)?;
    let thermal = thermal_integral(kernel, poles, hbar, temperature, lag, cfg)?;
    Ok(zero.value + thermal.value)
}

/// Symmetrized position correlation ½⟨x(t)x(0) + x(0)x(t)⟩; ⟨x²⟩ at lag 0.
pub fn correlation(
    poles: &PoleDecomposition,
    hbar: f64,
    temperature: BathTemperature,
    lag: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    spectral(Kernel::Position, poles, hbar, temperature, lag, cfg)
}

/// Symmetrized velocity correlation; ⟨ẋ²⟩ at lag 0.
pub fn velocity_correlation(
    poles: &PoleDecomposition,
    hbar: f64,
    temperature: BathTemperature,
    lag: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    spectral(Kernel::Velocity, poles, hbar, temperature, lag, cfg)
}

/// Free energy of the coupled system minus that of the bath alone.
pub fn free_energy(
    poles: &PoleDecomposition,
    hbar: f64,
    temperature: BathTemperature,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    spectral(Kernel::FreeEnergy, poles, hbar, temperature, 0.0, cfg)
}

/// S = −∂F/∂T in units of k, by a central difference with step 10⁻⁴·T and
/// one Richardson extrapolation. Only the thermal excess depends on T.
pub fn entropy(
    poles: &PoleDecomposition,
    hbar: f64,
    temperature: BathTemperature,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let kt = temperature.kt();
    if !(kt > 0.0) {
        return Err(Error::InvalidParameter {
            name: "kT",
            value: kt,
            reason: "entropy needs a strictly positive temperature",
        });
    }
    let thermal_free = |t: f64| -> Result<f64> {
        Ok(thermal_integral(Kernel::FreeEnergy, poles, hbar, BathTemperature(t), 0.0, cfg)?.value)
    };
    let derivative = |h: f64| -> Result<f64> { Ok((thermal_free(kt + h)? - thermal_free(kt - h)?) / (2.0 * h)) };
    let h = 1e-4 * kt;
    let coarse = derivative(h)?;
    let fine = derivative(0.5 * h)?;
    Ok(-(4.0 * fine - coarse) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn reduced(big: f64, g: f64) -> PoleDecomposition {
        PoleDecomposition::reduced(big, g).unwrap()
    }

    #[test]
    fn config_validation() {
        assert!(QuadratureConfig::default().validate().is_ok());
        assert!(QuadratureConfig::default().with_rel_tol(0.0).validate().is_err());
        let cfg = QuadratureConfig {
            max_subdivisions: 10,
            ..Default::default()
        };
        assert!(matches!(cfg.validate(), Err(Error::InvalidConfig(_))));
        let cfg = QuadratureConfig {
            abs_tol: -1.0,
            ..Default::default()
        };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn negative_temperature_rejected() {
        assert!(BathTemperature::new(-1.0).is_err());
        assert!(BathTemperature::new(0.0).unwrap().is_zero());
    }

    #[test]
    fn uncoupled_oscillator_is_rejected() {
        let p = reduced(5.0, 0.0);
        let err = correlation(&p, 1.0, BathTemperature::ZERO, 0.0, &QuadratureConfig::default()).unwrap_err();
        assert!(matches!(err, Error::InvalidParameter { name: "gamma", .. }));
    }

    #[test]
    fn weak_coupling_limits() {
        let cfg = QuadratureConfig::default();
        let p = reduced(5.0, 1e-6);
        let t0 = BathTemperature::ZERO;
        assert_relative_eq!(correlation(&p, 1.0, t0, 0.0, &cfg).unwrap(), 0.5, max_relative = 1e-5);
        assert_relative_eq!(
            velocity_correlation(&p, 1.0, t0, 0.0, &cfg).unwrap(),
            0.5,
            max_relative = 1e-5
        );
        assert_relative_eq!(free_energy(&p, 1.0, t0, &cfg).unwrap(), 0.5, max_relative = 1e-6);
    }

    #[test]
    fn tail_strategies_agree() {
        let p = reduced(5.0, 1.0);
        let split = QuadratureConfig {
            tail: TailStrategy::SplitAtCutoff,
            ..Default::default()
        };
        for kernel in [Kernel::Position, Kernel::Velocity, Kernel::FreeEnergy] {
            let a = zero_temperature_integral(kernel, &p, 1.0, 0.0, &QuadratureConfig::default()).unwrap();
            let b = zero_temperature_integral(kernel, &p, 1.0, 0.0, &split).unwrap();
            assert_relative_eq!(a.value, b.value, max_relative = 1e-9);
        }
    }

    #[test]
    fn lagged_correlation_is_even_and_continuous() {
        let cfg = QuadratureConfig::default();
        let p = reduced(5.0, 1.0);
        let t0 = BathTemperature::ZERO;
        let at_zero = correlation(&p, 1.0, t0, 0.0, &cfg).unwrap();
        let tiny = correlation(&p, 1.0, t0, 1e-4, &cfg).unwrap();
        assert_relative_eq!(tiny, at_zero, max_relative = 1e-5);
        for lag in [0.5, 2.0, 7.0] {
            let plus = correlation(&p, 1.0, t0, lag, &cfg).unwrap();
            let minus = correlation(&p, 1.0, t0, -lag, &cfg).unwrap();
            assert_relative_eq!(plus, minus, max_relative = 1e-12);
        }
    }

    #[test]
    fn velocity_correlation_is_second_derivative_of_position() {
        // ⟨ẋ(t)ẋ(0)⟩ = −d²/dt² ⟨x(t)x(0)⟩
        let cfg = QuadratureConfig::default();
        let p = reduced(5.0, 1.0);
        let temperature = BathTemperature::new(0.5).unwrap();
        let (t, h) = (1.3, 1e-2);
        let c = |lag: f64| correlation(&p, 1.0, temperature, lag, &cfg).unwrap();
        let fd = -(c(t + h) - 2.0 * c(t) + c(t - h)) / (h * h);
        let direct = velocity_correlation(&p, 1.0, temperature, t, &cfg).unwrap();
        assert!((fd - direct).abs() < 1e-4 * direct.abs().max(0.1), "{fd} vs {direct}");
    }

    #[test]
    fn weak_coupling_lagged_correlation_oscillates_at_natural_frequency() {
        let cfg = QuadratureConfig::default();
        let p = reduced(5.0, 1e-3);
        let lag = 2.0;
        let c = correlation(&p, 1.0, BathTemperature::ZERO, lag, &cfg).unwrap();
        // ħ/(2mω₀)·cos(ω₀t)·exp(−γt/2) to leading order in γ
        let expected = 0.5 * lag.cos() * (-0.5e-3 * lag).exp();
        assert!((c - expected).abs() < 2e-3, "{c} vs {expected}");
    }

    #[test]
    fn thermal_excess_vanishes_at_zero_temperature() {
        let cfg = QuadratureConfig::default();
        let p = reduced(5.0, 1.0);
        let est = thermal_integral(Kernel::Position, &p, 1.0, BathTemperature::ZERO, 0.0, &cfg).unwrap();
        assert_eq!(est.value, 0.0);
        let f0 = free_energy(&p, 1.0, BathTemperature::ZERO, &cfg).unwrap();
        let tiny = free_energy(&p, 1.0, BathTemperature::new(1e-6).unwrap(), &cfg).unwrap();
        assert!((f0 - tiny).abs() < 1e-6);
    }

    #[test]
    fn entropy_requires_positive_temperature() {
        let cfg = QuadratureConfig::default();
        let p = reduced(5.0, 1.0);
        assert!(entropy(&p, 1.0, BathTemperature::ZERO, &cfg).is_err());
    }

    #[test]
    fn budget_exhaustion_surfaces() {
        let cfg = QuadratureConfig {
            max_subdivisions: 50,
            rel_tol: 1e-15,
            abs_tol: 1e-300,
            ..Default::default()
        };
        let p = reduced(50.0, 1e-4);
        let err = correlation(&p, 1.0, BathTemperature::ZERO, 0.0, &cfg).unwrap_err();
        assert!(matches!(err, Error::ToleranceNotMet { .. }));
    }
}
