use proptest::prelude::*;
use qbath::closed_form::{self, relative_difference};
use qbath::{to_physical_parameters, to_pole_parameters, OscillatorSpec, PoleDecomposition};

fn decade(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.log10()..hi.log10()).prop_map(|e| 10f64.powf(e))
}

proptest! {
    #[test]
    fn physical_roundtrip(m in decade(1e-2, 1e2), k in decade(1e-2, 1e2), z in decade(1e-2, 1e2), t in decade(1e-2, 1e2)) {
        let spec = OscillatorSpec::new(m, k, z, t).unwrap();
        let poles = to_pole_parameters(&spec).unwrap();
        let back = to_physical_parameters(&poles).unwrap();
        prop_assert!(relative_difference(back.mass(), m) < 1e-12);
        prop_assert!(relative_difference(back.force_constant(), k) < 1e-10);
        prop_assert!(relative_difference(back.friction(), z) < 1e-10);
        prop_assert!(relative_difference(back.bath_relaxation(), t) < 1e-10);
    }

    #[test]
    fn pole_roundtrip(big in decade(1.5, 1e3), g in decade(1e-3, 10.0)) {
        let poles = PoleDecomposition::reduced(big, g).unwrap();
        prop_assume!(poles.pole_gap_product().abs() > 1e-3 * big * big);
        // inversion labels the largest real root as the bath pole
        prop_assume!(poles.z1().im != 0.0 || big > poles.z1().re.max(poles.z2().re));
        let again = to_pole_parameters(&to_physical_parameters(&poles).unwrap()).unwrap();
        prop_assert!(relative_difference(again.bath_pole(), big) < 1e-10);
        prop_assert!(relative_difference(again.natural_frequency(), 1.0) < 1e-10);
        prop_assert!(relative_difference(again.relaxation_rate(), g) < 1e-9);
    }

    #[test]
    fn observables_survive_relabelling(big in decade(1.01, 1e3), g in decade(1e-2, 20.0)) {
        let poles = PoleDecomposition::reduced(big, g).unwrap();
        prop_assume!(poles.pole_gap_product().abs() > 1e-3 * big * big);
        let again = to_pole_parameters(&to_physical_parameters(&poles).unwrap()).unwrap();
        let a = closed_form::free_energy_t0(&poles, 1.0);
        let b = closed_form::free_energy_t0(&again, 1.0);
        prop_assert!(relative_difference(a, b) < 1e-9, "{a} vs {b}");
        prop_assert!(relative_difference(closed_form::ground_energy(&poles, 1.0), closed_form::ground_energy(&again, 1.0)) < 1e-12);
    }

    #[test]
    fn ordering_of_energies(big in decade(1.01, 1e4), g in decade(1e-3, 20.0)) {
        let poles = PoleDecomposition::reduced(big, g).unwrap();
        let h = match closed_form::mean_energy(&poles, 1.0) {
            Ok(h) => h,
            Err(_) => return Ok(()),
        };
        let e0 = closed_form::ground_energy(&poles, 1.0);
        let f = closed_form::free_energy_t0(&poles, 1.0);
        prop_assert!(h > e0, "H={h} E0={e0}");
        prop_assert!(f > h, "F={f} H={h}");
    }

    #[test]
    fn energy_increases_with_coupling(big in decade(1.5, 100.0), g in 0.05f64..3.9) {
        let ratio = |g: f64| {
            let p = PoleDecomposition::reduced(big, g).unwrap();
            closed_form::mean_energy(&p, 1.0).ok().map(|h| h / closed_form::ground_energy(&p, 1.0))
        };
        if let (Some(a), Some(b)) = (ratio(g), ratio(g + 0.1)) {
            prop_assert!(b > a);
        }
    }
}
