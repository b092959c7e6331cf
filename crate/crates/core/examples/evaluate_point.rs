//! Closed forms and quadrature oracles side by side at one parameter point.
//!
//!     cargo run --example evaluate_point -- 5 1 1

use qbath::{BathTemperature, PoleDecomposition, QuadratureConfig, ThermoReport};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (big, w0, g) = match args.as_slice() {
        [] => (5.0, 1.0, 1.0),
        [big, w0, g] => (*big, *w0, *g),
        _ => return Err("usage: evaluate_point [OMEGA W0 GAMMA]".into()),
    };
    let poles = PoleDecomposition::new(1.0, big, w0, g)?;
    let closed = ThermoReport::closed_form(&poles, 1.0)?;
    let numeric = ThermoReport::quadrature(&poles, 1.0, BathTemperature::ZERO, &QuadratureConfig::default())?;

    println!("Omega = {big}, w0 = {w0}, gamma = {g} ({:?})", poles.regime());
    println!("{:<8} {:>22} {:>22}", "", "closed form", "quadrature");
    for (name, (c, q)) in ["<x^2>", "<v^2>", "<H_O>", "E_0", "F_O"]
        .iter()
        .zip(closed.values().into_iter().zip(numeric.values()))
    {
        println!("{name:<8} {c:>22.16} {q:>22.16}");
    }
    println!(
        "max relative discrepancy {:.2e}",
        closed.max_relative_discrepancy(&numeric)
    );

    let e0 = closed.ground_energy.value;
    println!("H/E0 = {:.12}", closed.mean_energy.value / e0);
    println!("F/E0 = {:.12}", closed.free_energy.value / e0);
    Ok(())
}
