//! Oscillator–bath parameterizations and the susceptibility.
//!
//! The system is described either by its physical constants
//! ([`OscillatorSpec`]: mass, force constant, Ohmic friction and bath
//! relaxation time) or by the positions of the three poles of the response
//! function ([`PoleDecomposition`]: mass, bath pole Ω, shifted natural
//! frequency ω₀ and shifted damping rate γ). The two are related by
//!
//! ```text
//! K = m ω₀² Ω/(Ω+γ),   ζ = m γ [Ω(Ω+γ) + ω₀²]/(Ω+γ)²,   τ = 1/(Ω+γ)
//! ```
//!
//! and the inverse map goes through the real cubic
//! `mτ s³ − m s² + (Kτ+ζ) s − K = 0` whose roots are Ω, z₁ and z₂.

mod cubic;
mod susceptibility;

pub use cubic::{CubicRoots, MonicCubic};
pub use susceptibility::{alpha, dlog_alpha, Susceptibility};

use crate::error::{non_negative, positive, Error, Result};
use num_complex::Complex64;

/// Relative tolerance below which two poles are treated as coincident.
pub const DEGENERACY_TOLERANCE: f64 = 1e-9;

/// Physical parameters of the oscillator and of its coupling to the bath.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorSpec {
    mass: f64,
    force_constant: f64,
    friction: f64,
    bath_relaxation: f64,
}

impl OscillatorSpec {
    pub fn new(mass: f64, force_constant: f64, friction: f64, bath_relaxation: f64) -> Result<Self> {
        Ok(Self {
            mass: positive("m", mass)?,
            force_constant: positive("K", force_constant)?,
            friction: non_negative("zeta", friction)?,
            bath_relaxation: positive("tau", bath_relaxation)?,
        })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn force_constant(&self) -> f64 {
        self.force_constant
    }

    pub fn friction(&self) -> f64 {
        self.friction
    }

    pub fn bath_relaxation(&self) -> f64 {
        self.bath_relaxation
    }

    /// `τ < m/ζ`: the bath relaxes faster than the friction damps the
    /// oscillator. Specs outside this regime are still evaluated exactly.
    pub fn in_physical_regime(&self) -> bool {
        self.bath_relaxation * self.friction < self.mass
    }

    /// Coefficients of `mτ s³ − m s² + (Kτ+ζ) s − K`, highest power first.
    pub fn relaxation_cubic(&self) -> [f64; 4] {
        let (m, k, z, t) = self.parts();
        [m * t, -m, k * t + z, -k]
    }

    /// The relaxation cubic evaluated at a (possibly complex) point.
    pub fn cubic_residual(&self, s: Complex64) -> Complex64 {
        let [c3, c2, c1, c0] = self.relaxation_cubic();
        ((s * c3 + c2) * s + c1) * s + c0
    }

    /// `1/(K − mω² − iω μ̃(ω))` with the single-relaxation-time memory
    /// `μ̃(ω) = ζ/(1 − iωτ)`.
    pub fn alpha_unfactored(&self, omega: f64) -> Complex64 {
        let (m, k, z, t) = self.parts();
        let i = Complex64::i();
        let memory = z / (1.0 - i * omega * t);
        (k - m * omega * omega - i * omega * memory).inv()
    }

    fn parts(&self) -> (f64, f64, f64, f64) {
        (self.mass, self.force_constant, self.friction, self.bath_relaxation)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DampingRegime {
    Underdamped,
    Critical,
    Overdamped,
}

impl DampingRegime {
    pub fn classify(gamma: f64, omega0: f64) -> Self {
        let twice = 2.0 * omega0;
        if gamma < twice {
            Self::Underdamped
        } else if gamma > twice {
            Self::Overdamped
        } else {
            Self::Critical
        }
    }
}

/// Pole-side parameters (m, Ω, ω₀, γ).
///
/// The response function has poles at `−iΩ`, `−iz₁` and `−iz₂` with
/// `z₁,₂ = γ/2 ± iω₁` and `ω₁ = √(ω₀² − γ²/4)`; ω₁ is pure imaginary in the
/// overdamped regime.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoleDecomposition {
    mass: f64,
    bath_pole: f64,
    natural_frequency: f64,
    relaxation_rate: f64,
    regime: DampingRegime,
}

impl PoleDecomposition {
    pub fn new(mass: f64, bath_pole: f64, natural_frequency: f64, relaxation_rate: f64) -> Result<Self> {
        let poles = Self {
            mass: positive("m", mass)?,
            bath_pole: positive("Omega", bath_pole)?,
            natural_frequency: positive("omega0", natural_frequency)?,
            relaxation_rate: non_negative("gamma", relaxation_rate)?,
            regime: DampingRegime::classify(relaxation_rate, natural_frequency),
        };
        let omega = Complex64::new(poles.bath_pole, 0.0);
        for z in [poles.z1(), poles.z2()] {
            let scale = poles.bath_pole.max(z.norm());
            if (omega - z).norm() <= DEGENERACY_TOLERANCE * scale {
                return Err(Error::DegeneratePoles {
                    a: poles.bath_pole,
                    b: z.re,
                    tolerance: DEGENERACY_TOLERANCE,
                });
            }
        }
        Ok(poles)
    }

    /// Reduced units: ħ = m = ω₀ = 1, parameterized by Ω/ω₀ and γ/ω₀.
    pub fn reduced(omega_over_w0: f64, gamma_over_w0: f64) -> Result<Self> {
        Self::new(1.0, omega_over_w0, 1.0, gamma_over_w0)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Ω
    pub fn bath_pole(&self) -> f64 {
        self.bath_pole
    }

    /// ω₀
    pub fn natural_frequency(&self) -> f64 {
        self.natural_frequency
    }

    /// γ
    pub fn relaxation_rate(&self) -> f64 {
        self.relaxation_rate
    }

    pub fn regime(&self) -> DampingRegime {
        self.regime
    }

    /// ω₁² = ω₀² − γ²/4, negative when overdamped.
    pub fn omega1_sq(&self) -> f64 {
        let half = 0.5 * self.relaxation_rate;
        (self.natural_frequency - half) * (self.natural_frequency + half)
    }

    pub fn omega1(&self) -> Complex64 {
        let w1sq = self.omega1_sq();
        if w1sq >= 0.0 {
            Complex64::new(w1sq.sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-w1sq).sqrt())
        }
    }

    pub fn z1(&self) -> Complex64 {
        Complex64::new(0.5 * self.relaxation_rate, 0.0) + Complex64::i() * self.omega1()
    }

    pub fn z2(&self) -> Complex64 {
        Complex64::new(0.5 * self.relaxation_rate, 0.0) - Complex64::i() * self.omega1()
    }

    /// Ω² − γΩ + ω₀² = (Ω − z₁)(Ω − z₂), evaluated without cancellation.
    pub fn pole_gap_product(&self) -> f64 {
        let shifted = self.bath_pole - 0.5 * self.relaxation_rate;
        shifted * shifted + self.omega1_sq()
    }

    pub fn susceptibility(&self) -> Susceptibility {
        Susceptibility::new(*self)
    }
}

/// Forward map from pole positions to the physical constants.
pub fn to_physical_parameters(poles: &PoleDecomposition) -> Result<OscillatorSpec> {
    let m = poles.mass;
    let big = poles.bath_pole;
    let w0 = poles.natural_frequency;
    let g = poles.relaxation_rate;
    let total = big + g;
    let k = m * w0 * w0 * big / total;
    let zeta = m * g * (big * total + w0 * w0) / (total * total);
    OscillatorSpec::new(m, k, zeta, 1.0 / total)
}

/// Inverse map: solves the relaxation cubic and identifies the bath pole.
///
/// Ω is the real root when the other two are a complex pair, and the largest
/// real root otherwise (all roots are below 1/τ, so this is the one closest
/// to it). γ and ω₀ then follow from Ω alone:
/// `γ = ζΩ/(τ(mΩ² + K))` and `ω₀² = K/(mτΩ)`, which avoids the
/// cancellation in `γ = 1/τ − Ω` when γ ≪ Ω.
pub fn to_pole_parameters(spec: &OscillatorSpec) -> Result<PoleDecomposition> {
    let (m, k, zeta, tau) = spec.parts();
    let cubic = MonicCubic {
        a: -1.0 / tau,
        b: (k * tau + zeta) / (m * tau),
        c: -k / (m * tau),
    };
    let bath_pole = match cubic.roots() {
        CubicRoots::OneReal { real, pair } => {
            let gap = (Complex64::new(real, 0.0) - pair).norm();
            if gap <= DEGENERACY_TOLERANCE * real.abs().max(pair.norm()) {
                return Err(Error::DegeneratePoles {
                    a: real,
                    b: pair.re,
                    tolerance: DEGENERACY_TOLERANCE,
                });
            }
            real
        }
        CubicRoots::ThreeReal([first, second, _]) => {
            if first - second <= DEGENERACY_TOLERANCE * first.abs() {
                return Err(Error::DegeneratePoles {
                    a: first,
                    b: second,
                    tolerance: DEGENERACY_TOLERANCE,
                });
            }
            first
        }
    };
    if !(bath_pole > 0.0) || !bath_pole.is_finite() {
        return Err(Error::NoPhysicalRoot);
    }
    let gamma = zeta * bath_pole / (tau * (m * bath_pole * bath_pole + k));
    let omega0 = (k / (m * tau * bath_pole)).sqrt();
    PoleDecomposition::new(m, bath_pole, omega0, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn forward_map_exact_rationals() {
        let poles = PoleDecomposition::new(1.0, 5.0, 1.0, 1.0).unwrap();
        let spec = to_physical_parameters(&poles).unwrap();
        assert_relative_eq!(spec.force_constant(), 5.0 / 6.0, max_relative = 1e-15);
        assert_relative_eq!(spec.friction(), 31.0 / 36.0, max_relative = 1e-15);
        assert_relative_eq!(spec.bath_relaxation(), 1.0 / 6.0, max_relative = 1e-15);
    }

    #[test]
    fn forward_map_uncoupled() {
        let poles = PoleDecomposition::new(1.0, 5.0, 1.0, 0.0).unwrap();
        let spec = to_physical_parameters(&poles).unwrap();
        assert_eq!(spec.force_constant(), 1.0);
        assert_eq!(spec.friction(), 0.0);
        assert_relative_eq!(spec.bath_relaxation(), 0.2, max_relative = 1e-15);
    }

    #[test]
    fn decoupled_inversion() {
        let spec = OscillatorSpec::new(1.0, 1.0, 0.0, 0.2).unwrap();
        let poles = to_pole_parameters(&spec).unwrap();
        assert_relative_eq!(poles.bath_pole(), 5.0, max_relative = 1e-14);
        assert_relative_eq!(poles.natural_frequency(), 1.0, max_relative = 1e-14);
        assert_eq!(poles.relaxation_rate(), 0.0);

        let spec = OscillatorSpec::new(1.0, 1.0, 1e-12, 0.2).unwrap();
        let poles = to_pole_parameters(&spec).unwrap();
        assert_relative_eq!(poles.bath_pole(), 5.0, max_relative = 1e-10);
        assert!(poles.relaxation_rate() < 1e-11);
    }

    #[test]
    fn inversion_roundtrip_known_poles() {
        let poles = PoleDecomposition::new(1.0, 5.0, 1.0, 1.0).unwrap();
        let back = to_pole_parameters(&to_physical_parameters(&poles).unwrap()).unwrap();
        assert_relative_eq!(back.bath_pole(), 5.0, max_relative = 1e-12);
        assert_relative_eq!(back.natural_frequency(), 1.0, max_relative = 1e-12);
        assert_relative_eq!(back.relaxation_rate(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn inversion_golden_roots() {
        // Roots of 0.1 s³ − s² + 1.1 s − 1 from a companion-matrix solve
        // (numpy.roots) and mpmath.polyroots at 30 digits.
        let spec = OscillatorSpec::new(1.0, 1.0, 1.0, 0.1).unwrap();
        let poles = to_pole_parameters(&spec).unwrap();
        let z_re = 0.555_457_940_052_563;
        let z_im = 0.903_571_673_112_349_5;
        assert_relative_eq!(poles.bath_pole(), 8.889_084_119_894_873, max_relative = 1e-13);
        assert_relative_eq!(poles.relaxation_rate(), 2.0 * z_re, max_relative = 1e-12);
        assert_relative_eq!(
            poles.natural_frequency(),
            (z_re * z_re + z_im * z_im).sqrt(),
            max_relative = 1e-12
        );
        assert_relative_eq!(poles.z1().im, z_im, max_relative = 1e-12);
        assert_eq!(poles.regime(), DampingRegime::Underdamped);
        for s in [Complex64::new(poles.bath_pole(), 0.0), poles.z1(), poles.z2()] {
            assert!(spec.cubic_residual(s).norm() < 1e-13);
        }
    }

    #[test]
    fn overdamped_inversion_picks_largest_root() {
        let poles = PoleDecomposition::new(1.0, 5.0, 1.0, 3.0).unwrap();
        assert_eq!(poles.regime(), DampingRegime::Overdamped);
        let spec = to_physical_parameters(&poles).unwrap();
        let back = to_pole_parameters(&spec).unwrap();
        assert_relative_eq!(back.bath_pole(), 5.0, max_relative = 1e-13);
        assert_relative_eq!(back.relaxation_rate(), 3.0, max_relative = 1e-12);
        assert_relative_eq!(back.natural_frequency(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn vieta_identities() {
        let poles = PoleDecomposition::new(2.0, 7.0, 1.3, 0.4).unwrap();
        let (z1, z2) = (poles.z1(), poles.z2());
        assert_relative_eq!((z1 + z2).re, 0.4, max_relative = 1e-15);
        assert!((z1 + z2).im.abs() < 1e-15);
        assert_relative_eq!((z1 * z2).re, 1.3 * 1.3, max_relative = 1e-15);
        assert!((z1 * z2).im.abs() < 1e-15);

        let spec = to_physical_parameters(&poles).unwrap();
        let tau = spec.bath_relaxation();
        assert_relative_eq!(
            poles.bath_pole() + poles.relaxation_rate(),
            1.0 / tau,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            poles.bath_pole() * 1.3 * 1.3,
            spec.force_constant() / (spec.mass() * tau),
            max_relative = 1e-14
        );
    }

    #[test]
    fn regime_tags() {
        let under = PoleDecomposition::reduced(5.0, 1.0).unwrap();
        let crit = PoleDecomposition::reduced(5.0, 2.0).unwrap();
        let over = PoleDecomposition::reduced(5.0, 3.0).unwrap();
        assert_eq!(under.regime(), DampingRegime::Underdamped);
        assert_eq!(crit.regime(), DampingRegime::Critical);
        assert_eq!(over.regime(), DampingRegime::Overdamped);
        assert_eq!(under.omega1().im, 0.0);
        assert_eq!(over.omega1().re, 0.0);
        assert!(over.omega1().im > 0.0);
        // overdamped poles sit on the real s-axis
        assert_relative_eq!(over.z1().re, 1.5 - 1.25f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(over.z2().re, 1.5 + 1.25f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn degenerate_bath_pole_rejected() {
        let r = 1.5 + 1.25f64.sqrt();
        let err = PoleDecomposition::new(1.0, r, 1.0, 3.0).unwrap_err();
        assert!(matches!(err, Error::DegeneratePoles { .. }));
        assert!(PoleDecomposition::new(1.0, r * (1.0 + 1e-6), 1.0, 3.0).is_ok());
    }

    #[test]
    fn double_root_pair_is_critical_damping() {
        // (s − 2)²(s − 1): the double root may be resolved either as the bath
        // pole (degenerate) or as a critically damped pair with Ω = 1.
        let spec = OscillatorSpec::new(1.0, 0.8, 1.44, 0.2).unwrap();
        match to_pole_parameters(&spec) {
            Err(Error::DegeneratePoles { .. }) => {}
            Ok(poles) => {
                let back = to_physical_parameters(&poles).unwrap();
                assert_relative_eq!(back.force_constant(), 0.8, max_relative = 1e-8);
                assert_relative_eq!(back.friction(), 1.44, max_relative = 1e-8);
            }
            Err(other) => panic!("{other}"),
        }
    }

    #[test]
    fn invalid_parameters() {
        assert!(OscillatorSpec::new(0.0, 1.0, 1.0, 1.0).is_err());
        assert!(OscillatorSpec::new(1.0, -1.0, 1.0, 1.0).is_err());
        assert!(OscillatorSpec::new(1.0, 1.0, -0.1, 1.0).is_err());
        assert!(OscillatorSpec::new(1.0, 1.0, 1.0, f64::NAN).is_err());
        assert!(OscillatorSpec::new(1.0, 1.0, 0.0, 1.0).is_ok());
        assert!(PoleDecomposition::new(1.0, 0.0, 1.0, 1.0).is_err());
        assert!(PoleDecomposition::new(1.0, 1.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn physical_regime_flag() {
        assert!(OscillatorSpec::new(1.0, 1.0, 1.0, 0.1).unwrap().in_physical_regime());
        assert!(!OscillatorSpec::new(1.0, 1.0, 1.0, 2.0).unwrap().in_physical_regime());
        assert!(OscillatorSpec::new(1.0, 1.0, 0.0, 1e6).unwrap().in_physical_regime());
    }
}
