use super::PoleDecomposition;
use num_complex::Complex64;

/// Evaluator for the response function α(ω) on the real frequency axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Susceptibility {
    poles: PoleDecomposition,
}

impl Susceptibility {
    pub fn new(poles: PoleDecomposition) -> Self {
        Self { poles }
    }

    pub fn poles(&self) -> &PoleDecomposition {
        &self.poles
    }

    /// `[ω + i(Ω+z₁+z₂)] / [−m(ω+iΩ)(ω+iz₁)(ω+iz₂)]` in complex arithmetic.
    pub fn alpha(&self, omega: f64) -> Complex64 {
        let p = &self.poles;
        let i = Complex64::i();
        let w = Complex64::new(omega, 0.0);
        let numerator = w + i * (p.bath_pole + p.z1() + p.z2());
        let denominator = -p.mass * (w + i * p.bath_pole) * (w + i * p.z1()) * (w + i * p.z2());
        numerator / denominator
    }

    /// Im α(ω) = mγω[Ω(Ω+γ) + ω₀²] / (m²(ω²+Ω²)[(ω²−ω₀²)² + γ²ω²]).
    ///
    /// Algebraically equal to `alpha(ω).im` but free of the cancellation
    /// that the complex quotient suffers at large ω.
    pub fn im_alpha(&self, omega: f64) -> f64 {
        omega * self.im_alpha_over_omega(omega)
    }

    /// Im α(ω)/ω, finite at ω = 0.
    pub fn im_alpha_over_omega(&self, omega: f64) -> f64 {
        let p = &self.poles;
        let (big, w0, g, m) = (p.bath_pole, p.natural_frequency, p.relaxation_rate, p.mass);
        let detune = (omega - w0) * (omega + w0);
        let resonance = detune * detune + g * g * omega * omega;
        g * (big * (big + g) + w0 * w0) / (m * (omega * omega + big * big) * resonance)
    }

    /// d log α/dω = 1/(ω+i(Ω+γ)) − 1/(ω+iΩ) − 1/(ω+iz₁) − 1/(ω+iz₂).
    pub fn dlog_alpha(&self, omega: f64) -> Complex64 {
        let p = &self.poles;
        let i = Complex64::i();
        let w = Complex64::new(omega, 0.0);
        (w + i * (p.bath_pole + p.relaxation_rate)).inv()
            - (w + i * p.bath_pole).inv()
            - (w + i * p.z1()).inv()
            - (w + i * p.z2()).inv()
    }

    /// Imaginary part of [`Self::dlog_alpha`], with the four terms combined
    /// over a common denominator:
    ///
    /// ```text
    /// γ(ω₀² + ΩP)[3ω⁴ + (γ² + ΩP − ω₀²)ω² + ΩPω₀²]
    /// ---------------------------------------------,   P = Ω + γ
    ///   (ω² + P²)(ω² + Ω²)[(ω² − ω₀²)² + γ²ω²]
    /// ```
    ///
    /// The leading 1/ω² parts of the four terms cancel exactly here, so the
    /// O(1/ω⁴) tail is computed without loss.
    pub fn im_dlog_alpha(&self, omega: f64) -> f64 {
        let p = &self.poles;
        let (big, w0, g) = (p.bath_pole, p.natural_frequency, p.relaxation_rate);
        let total = big + g;
        let bp = big * total;
        let w2 = omega * omega;
        let w0sq = w0 * w0;
        let detune = (omega - w0) * (omega + w0);
        let numerator = g * (w0sq + bp) * ((3.0 * w2 + (g * g + bp - w0sq)) * w2 + bp * w0sq);
        let denominator = (w2 + total * total) * (w2 + big * big) * (detune * detune + g * g * w2);
        numerator / denominator
    }
}

pub fn alpha(poles: &PoleDecomposition, omega: f64) -> Complex64 {
    Susceptibility::new(*poles).alpha(omega)
}

pub fn dlog_alpha(poles: &PoleDecomposition, omega: f64) -> Complex64 {
    Susceptibility::new(*poles).dlog_alpha(omega)
}
