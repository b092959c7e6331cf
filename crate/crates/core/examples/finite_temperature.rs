//! Free energy, entropy and equipartition away from T = 0 (quadrature only).

use qbath::quadrature;
use qbath::{BathTemperature, PoleDecomposition, QuadratureConfig, ThermoReport};

fn main() -> qbath::Result<()> {
    let cfg = QuadratureConfig::default();
    let poles = PoleDecomposition::reduced(5.0, 1.0)?;
    println!("{:>8} {:>16} {:>16}", "kT", "F", "S/k");
    for kt in [1e-3, 0.1, 0.3, 1.0, 3.0, 10.0] {
        let t = BathTemperature::new(kt)?;
        let f = quadrature::free_energy(&poles, 1.0, t, &cfg)?;
        let s = quadrature::entropy(&poles, 1.0, t, &cfg)?;
        println!("{kt:>8} {f:>16.10} {s:>16.10}");
    }

    // weakly coupled, hot: ½K⟨x²⟩ → ½kT
    let weak = PoleDecomposition::reduced(50.0, 0.1)?;
    let kt = 10.0;
    let report = ThermoReport::quadrature(&weak, 1.0, BathTemperature::new(kt)?, &cfg)?;
    let k = qbath::to_physical_parameters(&weak)?.force_constant();
    println!(
        "equipartition at kT = {kt}: K<x^2>/kT = {:.6}",
        k * report.mean_sq_position.value / kt
    );
    Ok(())
}
