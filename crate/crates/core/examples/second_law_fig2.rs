//! F_O/E₀ and ⟨H_O⟩/E₀ against γ/ω₀ at Ω = 5ω₀, cross-checked by quadrature.
//! Prints CSV; pipe into a file and feed it to `plot_figures.py`.

use qbath::verify::{self, SweepGrid, SweepMode};
use qbath::QuadratureConfig;

fn main() {
    let rows = verify::sweep(&SweepGrid::fig2(), &QuadratureConfig::default(), SweepMode::Both);
    let violations = rows.iter().filter(|r| !r.second_law_pass).count();
    eprintln!(
        "{} rows, {violations} with F <= H, max method discrepancy {:.2e}",
        rows.len(),
        verify::max_discrepancy(&rows)
    );
    print!("{}", verify::to_csv_string(&rows, &["fig2: Omega = 5 w0".to_string()]));
}
