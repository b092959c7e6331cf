//! Exact zero-temperature observables of the damped oscillator.
//!
//! Every `arccos(γ/2ω₀)/ω₁` combination is routed through the real function
//! [`DampingPhase`], so the formulas stay real and continuous across critical
//! damping and into the overdamped regime, where ω₁ is imaginary and the
//! arccos turns into an arccosh.

use crate::error::{Error, Result};
use crate::model::{DampingRegime, PoleDecomposition};
use crate::quadrature::{self, BathTemperature, QuadratureConfig};
use std::f64::consts::PI;

/// Relative size of Ω² − γΩ + ω₀² below which the closed forms are refused.
pub const DENOMINATOR_TOLERANCE: f64 = 1e-9;

/// Half-width, in units of ω₀, of the window around γ = 2ω₀ where the
/// damping phase is evaluated from its Taylor series.
pub const CRITICAL_WINDOW: f64 = 1e-4;

/// Φ(γ, ω₀) = arccos(γ/2ω₀)/ω₁, continued as arccosh(γ/2ω₀)/√(γ²/4 − ω₀²)
/// above critical damping. Equal to 1/ω₀ at γ = 2ω₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DampingPhase {
    value: f64,
    regime: DampingRegime,
}

impl DampingPhase {
    pub fn new(gamma: f64, omega0: f64) -> Self {
        let regime = DampingRegime::classify(gamma, omega0);
        let x = gamma / (2.0 * omega0);
        let h = x - 1.0;
        let reduced = if (gamma - 2.0 * omega0).abs() < CRITICAL_WINDOW * omega0 {
            critical_series(h)
        } else if x < 1.0 {
            x.acos() / ((1.0 - x) * (1.0 + x)).sqrt()
        } else {
            x.acosh() / (h * (x + 1.0)).sqrt()
        };
        Self {
            value: reduced / omega0,
            regime,
        }
    }

    pub fn of(poles: &PoleDecomposition) -> Self {
        Self::new(poles.relaxation_rate(), poles.natural_frequency())
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn regime(&self) -> DampingRegime {
        self.regime
    }
}

// arccos(x)/√(1−x²) around x = 1 + h: coefficients obey
// c₀ = 1, cₙ = −n/(2n+1)·cₙ₋₁ (from (1−x²)f′ − xf = −1).
fn critical_series(h: f64) -> f64 {
    let mut coefficient = 1.0;
    let mut power = 1.0;
    let mut sum = 1.0;
    for n in 1..=8 {
        coefficient *= -(n as f64) / (2 * n + 1) as f64;
        power *= h;
        sum += coefficient * power;
    }
    sum
}

struct Terms {
    big: f64,
    w0: f64,
    g: f64,
    m: f64,
    phase: f64,
    log_ratio: f64,
    gap: f64,
}

fn terms(poles: &PoleDecomposition) -> Result<Terms> {
    let big = poles.bath_pole();
    let w0 = poles.natural_frequency();
    let gap = poles.pole_gap_product();
    let scale = big * big + w0 * w0;
    if gap.abs() < DENOMINATOR_TOLERANCE * scale {
        return Err(Error::NearDegenerateDenominator { value: gap, scale });
    }
    Ok(Terms {
        big,
        w0,
        g: poles.relaxation_rate(),
        m: poles.mass(),
        phase: DampingPhase::of(poles).value(),
        log_ratio: (big / w0).ln(),
        gap,
    })
}

/// ⟨x²⟩ at T = 0:
/// `ħ[(Ω² + ω₀² − γ²/2)Φ − γ log(Ω/ω₀)] / [πm(Ω² − γΩ + ω₀²)]`.
pub fn mean_sq_position(poles: &PoleDecomposition, hbar: f64) -> Result<f64> {
    let t = terms(poles)?;
    let numerator = (t.big * t.big + t.w0 * t.w0 - 0.5 * t.g * t.g) * t.phase - t.g * t.log_ratio;
    Ok(hbar * numerator / (PI * t.m * t.gap))
}

/// ⟨ẋ²⟩ at T = 0:
/// `ħ[(Ω²(ω₀² − γ²/2) + ω₀⁴)Φ + γΩ² log(Ω/ω₀)] / [πm(Ω² − γΩ + ω₀²)]`.
pub fn mean_sq_velocity(poles: &PoleDecomposition, hbar: f64) -> Result<f64> {
    let t = terms(poles)?;
    let w0sq = t.w0 * t.w0;
    let big_sq = t.big * t.big;
    let numerator = (big_sq * (w0sq - 0.5 * t.g * t.g) + w0sq * w0sq) * t.phase + t.g * big_sq * t.log_ratio;
    Ok(hbar * numerator / (PI * t.m * t.gap))
}

/// ⟨H_O⟩ at T = 0, evaluated from its own closed form rather than by
/// combining the two variances.
pub fn mean_energy(poles: &PoleDecomposition, hbar: f64) -> Result<f64> {
    let t = terms(poles)?;
    let (big, w0, g) = (t.big, t.w0, t.g);
    let w0sq = w0 * w0;
    let big_sq = big * big;
    let w1sq = poles.omega1_sq();
    let denominator = (big + g) * t.gap;
    let phase_coefficient = ((big_sq + w0sq) * (2.0 * big * w1sq + g * w0sq) - 0.5 * g * g * g * big_sq) / denominator;
    let log_coefficient = g * big * (big_sq + g * big - w0sq) / denominator;
    Ok(hbar / (2.0 * PI) * (phase_coefficient * t.phase + log_coefficient * t.log_ratio))
}

/// E₀ = (ħω₀/2)√(Ω/(Ω+γ)) = (ħ/2)√(K/m).
pub fn ground_energy(poles: &PoleDecomposition, hbar: f64) -> f64 {
    let big = poles.bath_pole();
    0.5 * hbar * poles.natural_frequency() * (big / (big + poles.relaxation_rate())).sqrt()
}

/// F_O(0) = (ħ/2π)[2ω₁² Φ + γ log(Ω/ω₀) + (Ω+γ) log((Ω+γ)/Ω)].
pub fn free_energy_t0(poles: &PoleDecomposition, hbar: f64) -> f64 {
    let big = poles.bath_pole();
    let w0 = poles.natural_frequency();
    let g = poles.relaxation_rate();
    let phase = DampingPhase::of(poles).value();
    let bracket = 2.0 * poles.omega1_sq() * phase + g * (big / w0).ln() + (big + g) * (g / big).ln_1p();
    hbar / (2.0 * PI) * bracket
}

/// (γ/πω₀)·E₀, the Ω → ∞ limit of F_O(0) − ⟨H_O⟩.
pub fn asymptotic_gap(poles: &PoleDecomposition, hbar: f64) -> f64 {
    poles.relaxation_rate() / (PI * poles.natural_frequency()) * ground_energy(poles, hbar)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Quadrature,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Quadrature => "quadrature",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Measured {
    pub value: f64,
    pub method: Method,
}

impl Measured {
    fn closed(value: f64) -> Self {
        Self {
            value,
            method: Method::ClosedForm,
        }
    }

    fn quadrature(value: f64) -> Self {
        Self {
            value,
            method: Method::Quadrature,
        }
    }
}

/// The five equilibrium observables of the coupled oscillator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoReport {
    pub temperature: BathTemperature,
    pub mean_sq_position: Measured,
    pub mean_sq_velocity: Measured,
    pub mean_energy: Measured,
    pub ground_energy: Measured,
    pub free_energy: Measured,
}

impl ThermoReport {
    /// All five observables from the exact T = 0 expressions.
    pub fn closed_form(poles: &PoleDecomposition, hbar: f64) -> Result<Self> {
        Ok(Self {
            temperature: BathTemperature::ZERO,
            mean_sq_position: Measured::closed(mean_sq_position(poles, hbar)?),
            mean_sq_velocity: Measured::closed(mean_sq_velocity(poles, hbar)?),
            mean_energy: Measured::closed(mean_energy(poles, hbar)?),
            ground_energy: Measured::closed(ground_energy(poles, hbar)),
            free_energy: Measured::closed(free_energy_t0(poles, hbar)),
        })
    }

    /// Variances and free energy by quadrature at any temperature; the mean
    /// energy is assembled as ½m⟨ẋ²⟩ + ½K⟨x²⟩. E₀ has no integral form and
    /// stays closed-form.
    pub fn quadrature(
        poles: &PoleDecomposition,
        hbar: f64,
        temperature: BathTemperature,
        cfg: &QuadratureConfig,
    ) -> Result<Self> {
        let x2 = quadrature::correlation(poles, hbar, temperature, 0.0, cfg)?;
        let v2 = quadrature::velocity_correlation(poles, hbar, temperature, 0.0, cfg)?;
        let free = quadrature::free_energy(poles, hbar, temperature, cfg)?;
        let k = force_constant(poles);
        Ok(Self {
            temperature,
            mean_sq_position: Measured::quadrature(x2),
            mean_sq_velocity: Measured::quadrature(v2),
            mean_energy: Measured::quadrature(0.5 * poles.mass() * v2 + 0.5 * k * x2),
            ground_energy: Measured::closed(ground_energy(poles, hbar)),
            free_energy: Measured::quadrature(free),
        })
    }

    /// Largest relative difference between corresponding fields.
    pub fn max_relative_discrepancy(&self, other: &ThermoReport) -> f64 {
        self.values()
            .iter()
            .zip(other.values().iter())
            .map(|(a, b)| relative_difference(*a, *b))
            .fold(0.0, f64::max)
    }

    /// ⟨x²⟩, ⟨ẋ²⟩, ⟨H_O⟩, E₀, F_O in that order.
    pub fn values(&self) -> [f64; 5] {
        [
            self.mean_sq_position.value,
            self.mean_sq_velocity.value,
            self.mean_energy.value,
            self.ground_energy.value,
            self.free_energy.value,
        ]
    }
}

pub(crate) fn force_constant(poles: &PoleDecomposition) -> f64 {
    let w0 = poles.natural_frequency();
    let big = poles.bath_pole();
    poles.mass() * w0 * w0 * big / (big + poles.relaxation_rate())
}

pub fn relative_difference(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
