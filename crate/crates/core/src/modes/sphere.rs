//! Scalar Dirichlet eigenfrequencies of a sphere: ω = c·x_{n,l}/R for the
//! zeros x_{n,l} of the spherical Bessel function j_l, each (2l+1)-fold
//! degenerate.

use std::f64::consts::PI;

use super::{merge_frequencies, ModeList, DEFAULT_LATTICE_CAP};
use crate::bessel::BesselZeroTable;
use crate::error::{domain, Error, Result};
use crate::geometry::SphereGeometry;
use crate::physics::{AngularFrequency, C};

/// Upper bound on the (n, l) pairs a cutoff can admit, the sphere's
/// analogue of the box lattice count.
pub fn sphere_zero_budget(geom: &SphereGeometry, omega_max: AngularFrequency) -> u128 {
    let x_max = omega_max.rad_per_s() * geom.radius() / C;
    // x_{n,l} > l and zeros are at least π apart.
    let orders = x_max.floor() as u128 + 1;
    let per_order = (x_max / PI).floor() as u128 + 1;
    orders * per_order
}

pub fn enumerate_sphere_modes(
    geom: &SphereGeometry,
    omega_max: AngularFrequency,
) -> Result<ModeList> {
    enumerate_sphere_modes_capped(geom, omega_max, DEFAULT_LATTICE_CAP)
}

pub fn enumerate_sphere_modes_capped(
    geom: &SphereGeometry,
    omega_max: AngularFrequency,
    cap: u64,
) -> Result<ModeList> {
    let w_max = omega_max.rad_per_s();
    if w_max <= 0.0 {
        return Err(domain("omega_max", w_max, "must be positive"));
    }
    let required = sphere_zero_budget(geom, omega_max);
    if required > cap as u128 {
        return Err(Error::ResourceLimit { required, cap });
    }
    let r = geom.radius();
    let table = BesselZeroTable::build(w_max * r / C);
    let mut raw = Vec::with_capacity(table.total_zeros());
    for (l, zeros) in table.iter() {
        for &x in zeros {
            let omega = C * x / r;
            if omega <= w_max {
                raw.push((omega, 2 * l as u64 + 1));
            }
        }
    }
    ModeList::from_entries(merge_frequencies(raw), w_max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: f64) -> AngularFrequency {
        AngularFrequency::new(v).unwrap()
    }

    #[test]
    fn lowest_mode_and_empty_below() {
        let geom = SphereGeometry::new(1e-5).unwrap();
        let r = geom.radius();
        let lowest = PI * C / r;
        let list = enumerate_sphere_modes(&geom, w(lowest * 1.2)).unwrap();
        assert_eq!(list.len(), 1);
        assert_eq!(list.entries()[0].multiplicity, 2);
        assert!((list.entries()[0].omega / lowest - 1.0).abs() < 1e-15);
        assert!(enumerate_sphere_modes(&geom, w(lowest * 0.99))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn second_mode_is_l1_triplet() {
        let geom = SphereGeometry::new(2.0).unwrap();
        let list = enumerate_sphere_modes(&geom, w(C * 5.0)).unwrap();
        assert_eq!(list.len(), 2);
        assert_eq!(list.entries()[1].multiplicity, 6);
        assert!((list.entries()[1].omega / (C * 4.493409457909064) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn leading_weyl_count() {
        // ωR/c = 50: N ≈ Vω³/(3π²c³) = 4(ωR/c)³/(9π) to within the surface correction.
        let geom = SphereGeometry::new(2.0).unwrap();
        let omega = 50.0 * C;
        let list = enumerate_sphere_modes(&geom, w(omega)).unwrap();
        let leading = 4.0 * 50f64.powi(3) / (9.0 * PI);
        let ratio = list.total_modes() as f64 / leading;
        assert!((ratio - 1.0).abs() < 0.15, "{ratio}");
    }
}
