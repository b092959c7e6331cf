//! ⟨H_O⟩/E₀ over the (γ/ω₀, Ω/ω₀) plane. The surface never dips to 1:
//! coupling always leaves the oscillator above its ground state.

use qbath::verify::{self, SweepGrid, SweepMode};
use qbath::QuadratureConfig;

fn main() {
    let grid = SweepGrid::fig1();
    let rows = verify::sweep(&grid, &QuadratureConfig::default(), SweepMode::ClosedForm);
    let lowest = rows.iter().min_by(|a, b| a.h_over_e0.total_cmp(&b.h_over_e0)).unwrap();
    eprintln!(
        "min H/E0 = {:.9} at gamma/w0 = {:.3}, Omega/w0 = {:.3}",
        lowest.h_over_e0, lowest.gamma_over_w0, lowest.omega_over_w0
    );
    print!("{}", verify::to_csv_string(&rows, &["fig1 surface".to_string()]));
}
