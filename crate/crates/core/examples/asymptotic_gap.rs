//! For a fast bath the second-law gap approaches (γ/πω₀)E₀.

use qbath::verify;
use qbath::QuadratureConfig;

fn main() -> qbath::Result<()> {
    let omegas = [1e1, 1e2, 1e3, 1e4, 1e5, 1e6];
    println!("{:>8} {:>10} {:>14}", "gamma", "Omega", "r");
    for gamma in [0.2, 0.5, 1.0, 2.0] {
        let report = verify::asymptotic_audit(gamma, &omegas, &QuadratureConfig::default())?;
        for p in &report.points {
            println!("{gamma:>8} {:>10.0e} {:>14.10}", p.omega_over_w0, p.ratio);
        }
        println!(
            "  |r-1| = {:.3e} against envelope {:.3e}: {}",
            report.last_deviation(),
            report.envelope,
            if report.passed() { "ok" } else { "outside" }
        );
    }
    Ok(())
}
