//! Round trip between physical constants (m, K, ζ, τ) and pole positions.

use num_complex::Complex64;
use qbath::{to_physical_parameters, to_pole_parameters, OscillatorSpec};

fn main() -> qbath::Result<()> {
    for (k, zeta, tau) in [(1.0, 1.0, 0.1), (1.0, 0.2, 0.01), (1.0, 5.0, 0.05)] {
        let spec = OscillatorSpec::new(1.0, k, zeta, tau)?;
        let poles = to_pole_parameters(&spec)?;
        let back = to_physical_parameters(&poles)?;

        println!("K = {k}, zeta = {zeta}, tau = {tau}");
        println!(
            "  Omega = {:.15}  w0 = {:.15}  gamma = {:.15}  {:?}",
            poles.bath_pole(),
            poles.natural_frequency(),
            poles.relaxation_rate(),
            poles.regime()
        );
        for s in [Complex64::new(poles.bath_pole(), 0.0), poles.z1(), poles.z2()] {
            println!("  root {s:.12}: |P(s)|/K = {:.2e}", spec.cubic_residual(s).norm() / k);
        }
        println!(
            "  back: K = {:.15}  zeta = {:.15}  tau = {:.15}",
            back.force_constant(),
            back.friction(),
            back.bath_relaxation()
        );
    }
    Ok(())
}
