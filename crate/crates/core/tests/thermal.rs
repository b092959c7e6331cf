use qbath::quadrature::{self, TailStrategy};
use qbath::{closed_form, BathTemperature, PoleDecomposition, QuadratureConfig, ThermoReport};

fn kt(t: f64) -> BathTemperature {
    BathTemperature::new(t).unwrap()
}

#[test]
fn entropy_increases_with_temperature() {
    let poles = PoleDecomposition::reduced(5.0, 1.0).unwrap();
    let cfg = QuadratureConfig::default();
    let s: Vec<f64> = [0.1, 0.3, 1.0, 3.0]
        .iter()
        .map(|&t| quadrature::entropy(&poles, 1.0, kt(t), &cfg).unwrap())
        .collect();
    assert!(s.windows(2).all(|w| w[1] > w[0]), "{s:?}");
}

#[test]
fn classical_entropy_at_weak_coupling() {
    // S/k → 1 + ln(kT/ħω₀) for a classical oscillator
    let poles = PoleDecomposition::reduced(50.0, 0.1).unwrap();
    let s = quadrature::entropy(&poles, 1.0, kt(10.0), &QuadratureConfig::default()).unwrap();
    let classical = 1.0 + 10f64.ln();
    assert!((s - classical).abs() < 0.05 * classical, "{s} vs {classical}");
}

#[test]
fn free_energy_continuous_at_zero_temperature() {
    let poles = PoleDecomposition::reduced(5.0, 1.0).unwrap();
    let f0 = closed_form::free_energy_t0(&poles, 1.0);
    let cold = quadrature::free_energy(&poles, 1.0, kt(1e-4), &QuadratureConfig::default()).unwrap();
    assert!(cold < f0 && f0 - cold < 1e-6);
}

#[test]
fn mean_energy_rises_with_temperature() {
    let poles = PoleDecomposition::reduced(5.0, 0.5).unwrap();
    let cfg = QuadratureConfig::default();
    let h: Vec<f64> = [0.0, 0.2, 1.0, 5.0]
        .iter()
        .map(|&t| {
            ThermoReport::quadrature(&poles, 1.0, kt(t), &cfg)
                .unwrap()
                .mean_energy
                .value
        })
        .collect();
    assert!(h.windows(2).all(|w| w[1] > w[0]), "{h:?}");
}

#[test]
fn high_temperature_velocity_equipartition() {
    // m⟨ẋ²⟩ → kT regardless of the bath once kT ≫ ħΩ
    let poles = PoleDecomposition::reduced(5.0, 1.0).unwrap();
    let t = 200.0;
    let v2 = quadrature::velocity_correlation(&poles, 1.0, kt(t), 0.0, &QuadratureConfig::default()).unwrap();
    assert!((v2 / t - 1.0).abs() < 1e-3, "{}", v2 / t);
}

#[test]
fn tail_strategies_agree_at_temperature() {
    let poles = PoleDecomposition::reduced(10.0, 2.0).unwrap();
    let map = QuadratureConfig::default();
    let split = QuadratureConfig {
        tail: TailStrategy::SplitAtCutoff,
        ..map
    };
    let a = quadrature::free_energy(&poles, 1.0, kt(0.7), &map).unwrap();
    let b = quadrature::free_energy(&poles, 1.0, kt(0.7), &split).unwrap();
    assert!((a - b).abs() < 1e-9 * a.abs());
}
