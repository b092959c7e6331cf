//! Symmetrized ⟨x(0)x(t)⟩ at T = 0 as a function of lag.

use qbath::quadrature;
use qbath::{BathTemperature, PoleDecomposition, QuadratureConfig};

fn main() -> qbath::Result<()> {
    let poles = PoleDecomposition::reduced(5.0, 0.3)?;
    let cfg = QuadratureConfig::default();
    for i in 0..=20 {
        let t = 0.5 * i as f64;
        let c = quadrature::correlation(&poles, 1.0, BathTemperature::ZERO, t, &cfg)?;
        println!("{t:5.1} {c:+.8}");
    }
    Ok(())
}
