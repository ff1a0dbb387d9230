mod common;

use std::f64::consts::PI;

use cavityrad::modes::enumerate_box_modes_capped;
use cavityrad::oracle::naive_box_count;
use cavityrad::physics::C;
use cavityrad::{
    binned_density, descriptors_for, enumerate_box_modes, enumerate_sphere_modes, film_density,
    film_mode_count, planck_density, rod_density, AngularFrequency, BoundaryCondition, BoxGeometry,
    ClosedCavity, Error, FilmGeometry, RodGeometry, SphereGeometry, Temperature,
};
use common::{compare_mode_lists, conservation_error};
use proptest::prelude::*;

fn w(v: f64) -> AngularFrequency {
    AngularFrequency::new(v).unwrap()
}

fn bc_strategy() -> impl Strategy<Value = BoundaryCondition> {
    prop::sample::select(BoundaryCondition::ALL.to_vec())
}

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.log10()..hi.log10()).prop_map(|e| 10f64.powf(e))
}

/// Admitted longitudinal wavenumbers below ω/c by direct listing.
fn listed_film_count(omega: f64, l: f64, bc: BoundaryCondition) -> u64 {
    let k = omega / C;
    let reach = (k * l / PI).ceil() as i64 + 2;
    (-reach..=reach)
        .filter(|&s| bc.admits(s) && (PI * s as f64 / l).abs() < k)
        .count() as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dirichlet_film_never_exceeds_planck(omega in 0.0..2e15f64, l in log_uniform(1e-8, 1e-1), kelvin in 1.0..5000.0f64) {
        let t = Temperature::new(kelvin).unwrap();
        let film = film_density(w(omega), t, FilmGeometry::new(l).unwrap(), BoundaryCondition::Dirichlet).value();
        prop_assert!(film <= planck_density(w(omega), t).value());
    }

    #[test]
    fn film_count_matches_listing(x in 0.0..200.0f64, l in log_uniform(1e-7, 1e-3), bc in bc_strategy()) {
        let omega = x * PI * C / l;
        prop_assume!((omega * l / (PI * C) - (omega * l / (PI * C)).round()).abs() > 1e-9);
        let geom = FilmGeometry::new(l).unwrap();
        prop_assert_eq!(film_mode_count(w(omega), geom, bc), listed_film_count(omega, l, bc));
    }

    #[test]
    fn densities_grow_with_temperature(
        omega in 1e12..1e15f64,
        l in log_uniform(1e-6, 1e-4),
        t1 in 10.0..3000.0f64,
        factor in 1.01..3.0f64,
        bc in bc_strategy(),
    ) {
        let (lo, hi) = (Temperature::new(t1).unwrap(), Temperature::new(t1 * factor).unwrap());
        let film = FilmGeometry::new(l).unwrap();
        prop_assert!(film_density(w(omega), lo, film, bc).value() <= film_density(w(omega), hi, film, bc).value());
        let rod = RodGeometry::new(l, 1.37 * l).unwrap();
        match (rod_density(w(omega), lo, rod, bc), rod_density(w(omega), hi, rod, bc)) {
            (Ok(a), Ok(b)) => prop_assert!(a.value() <= b.value()),
            (Err(Error::ThresholdSingularity { .. }), _) => {}
            (a, b) => prop_assert!(false, "unexpected {a:?} {b:?}"),
        }
        prop_assert!(planck_density(w(omega), lo).value() < planck_density(w(omega), hi).value());
    }

    /// ω → ω/λ, L → λL, T → T/λ leaves every mode count fixed and scales
    /// each density by λ⁻³.
    #[test]
    fn scaling_law(omega in 1e13..1e15f64, l in log_uniform(1e-6, 1e-4), lambda in 0.2..5.0f64, bc in bc_strategy()) {
        let t = Temperature::new(300.0).unwrap();
        let ts = Temperature::new(300.0 / lambda).unwrap();
        let scale = lambda.powi(-3);
        let film = film_density(w(omega), t, FilmGeometry::new(l).unwrap(), bc).value();
        let film_s = film_density(w(omega / lambda), ts, FilmGeometry::new(lambda * l).unwrap(), bc).value();
        prop_assert!((film_s - scale * film).abs() <= 1e-12 * scale * film.abs().max(f64::MIN_POSITIVE));

        let rod = rod_density(w(omega), t, RodGeometry::new(l, 0.7 * l).unwrap(), bc);
        let rod_s = rod_density(w(omega / lambda), ts, RodGeometry::new(lambda * l, 0.7 * lambda * l).unwrap(), bc);
        if let (Ok(a), Ok(b)) = (rod, rod_s) {
            prop_assert!((b.value() - scale * a.value()).abs() <= 1e-9 * scale * a.value());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn box_enumeration_matches_naive_oracle(
        l1 in log_uniform(1e-6, 1e-5),
        r2 in 0.4..2.5f64,
        r3 in 0.4..2.5f64,
        cube in any::<bool>(),
        x in 1.0..25.0f64,
        bc in bc_strategy(),
    ) {
        let geom = if cube { BoxGeometry::cube(l1).unwrap() } else { BoxGeometry::new(l1, r2 * l1, r3 * l1).unwrap() };
        let omega_max = x * PI * C / l1;
        let naive = naive_box_count(&geom, bc, omega_max);
        prop_assume!(naive.is_ok());
        let fast = enumerate_box_modes(&geom, bc, w(omega_max)).unwrap();
        if let Err(e) = compare_mode_lists(&naive.unwrap(), &fast) {
            prop_assert!(false, "{}", e);
        }
    }

    #[test]
    fn raising_the_cutoff_extends_the_list(l in log_uniform(1e-6, 1e-5), x in 2.0..20.0f64, grow in 1.0..2.0f64, bc in bc_strategy()) {
        let geom = BoxGeometry::new(l, 1.21 * l, 0.93 * l).unwrap();
        let low = enumerate_box_modes(&geom, bc, w(x * PI * C / l)).unwrap();
        let high = enumerate_box_modes(&geom, bc, w(grow * x * PI * C / l)).unwrap();
        prop_assert!(high.len() >= low.len());
        prop_assert_eq!(&high.entries()[..low.len()], low.entries());
    }

    #[test]
    fn permuting_lengths_changes_nothing(l in log_uniform(1e-6, 1e-5), r2 in 0.5..2.0f64, r3 in 0.5..2.0f64, bc in bc_strategy()) {
        let (a, b, c) = (l, r2 * l, r3 * l);
        let omega_max = w(15.0 * PI * C / l);
        let reference = enumerate_box_modes(&BoxGeometry::new(a, b, c).unwrap(), bc, omega_max).unwrap();
        for [x, y, z] in [[a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
            let other = enumerate_box_modes(&BoxGeometry::new(x, y, z).unwrap(), bc, omega_max).unwrap();
            prop_assert_eq!(&reference, &other);
        }
        let d1 = descriptors_for(&ClosedCavity::Box(BoxGeometry::new(a, b, c).unwrap()));
        let d2 = descriptors_for(&ClosedCavity::Box(BoxGeometry::new(c, a, b).unwrap()));
        prop_assert!((d1.volume - d2.volume).abs() <= 1e-15 * d1.volume);
        prop_assert!((d1.area - d2.area).abs() <= 1e-15 * d1.area);
        prop_assert!((d1.mean_curvature - d2.mean_curvature).abs() <= 1e-15 * d1.mean_curvature);
    }

    #[test]
    fn binning_conserves_energy(
        l in log_uniform(2e-6, 3e-5),
        delta in log_uniform(1e12, 5e13),
        kelvin in 30.0..3000.0f64,
        sphere in any::<bool>(),
        bc in bc_strategy(),
    ) {
        let t = Temperature::new(kelvin).unwrap();
        let (modes, volume) = if sphere {
            let g = SphereGeometry::new(l).unwrap();
            (enumerate_sphere_modes(&g, w(1e15)).unwrap(), g.volume())
        } else {
            let g = BoxGeometry::new(l, 1.1 * l, 0.9 * l).unwrap();
            (enumerate_box_modes_capped(&g, bc, w(1e15), u64::MAX).unwrap(), g.volume())
        };
        let spec = binned_density(&modes, t, delta, volume).unwrap();
        prop_assert!(spec.values().iter().all(|&u| u >= 0.0));
        prop_assert!(conservation_error(&spec, &modes, t) <= 1e-12);
    }
}
