//! Three-term asymptotic spectral density for closed Dirichlet cavities and
//! the geometric descriptors it needs.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geometry::{BoundaryCondition, BoxGeometry, SphereGeometry};
use crate::modes::{enumerate_box_modes_capped, enumerate_sphere_modes_capped, ModeList};
use crate::physics::{oscillator_energy_raw, AngularFrequency, Temperature, C};

/// Volume V (m³), surface area A (m²) and integrated mean curvature
/// M = ∫ ½(κ₁ + κ₂) dS (m).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeometryDescriptors {
    pub volume: f64,
    pub area: f64,
    pub mean_curvature: f64,
}

/// A cavity bounded in all three directions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ClosedCavity {
    Box(BoxGeometry),
    Sphere(SphereGeometry),
}

impl ClosedCavity {
    pub fn volume(&self) -> f64 {
        match self {
            ClosedCavity::Box(b) => b.volume(),
            ClosedCavity::Sphere(s) => s.volume(),
        }
    }

    /// Eigenfrequencies up to `omega_max`. Spheres are always Dirichlet.
    pub fn modes(
        &self,
        bc: BoundaryCondition,
        omega_max: AngularFrequency,
        cap: u64,
    ) -> Result<ModeList> {
        match self {
            ClosedCavity::Box(b) => enumerate_box_modes_capped(b, bc, omega_max, cap),
            ClosedCavity::Sphere(s) => enumerate_sphere_modes_capped(s, omega_max, cap),
        }
    }
}

/// (V, A, M) of a box or sphere.
///
/// A polyhedron has no smooth curvature; its M concentrates on the edges,
/// each contributing ½ × length × exterior dihedral angle. For a box every
/// edge has angle π/2 and each Lᵢ appears on four edges, so M = π(L₁+L₂+L₃).
pub fn descriptors_for(cavity: &ClosedCavity) -> GeometryDescriptors {
    match cavity {
        ClosedCavity::Box(b) => {
            let [l1, l2, l3] = b.lengths();
            GeometryDescriptors {
                volume: l1 * l2 * l3,
                area: 2.0 * (l1 * l2 + l2 * l3 + l3 * l1),
                mean_curvature: PI * (l1 + l2 + l3),
            }
        }
        ClosedCavity::Sphere(s) => {
            let r = s.radius();
            GeometryDescriptors {
                volume: 4.0 / 3.0 * PI * r * r * r,
                area: 4.0 * PI * r * r,
                mean_curvature: 4.0 * PI * r,
            }
        }
    }
}

/// Asymptotic density
/// (ħω³/π²c³ − (A/V)·ħω²/4πc² + (M/V)·ħω/3π²c) / (e^{ħω/k_BT} − 1).
///
/// The result is not clamped and goes negative for small cavities.
pub fn weyl_density(omega: AngularFrequency, t: Temperature, desc: &GeometryDescriptors) -> f64 {
    weyl_raw(omega.rad_per_s(), t.thermal_energy(), desc)
}

pub(crate) fn weyl_raw(omega: f64, kt: f64, desc: &GeometryDescriptors) -> f64 {
    // Each term is written as (coefficient)·ε̄(ω) so ω = 0 takes its limit.
    let energy = oscillator_energy_raw(omega, kt);
    let volume_term = omega * omega / (PI * PI * C * C * C) * energy;
    let area_term = desc.area / desc.volume * omega / (4.0 * PI * C * C) * energy;
    let curvature_term = desc.mean_curvature / desc.volume / (3.0 * PI * PI * C) * energy;
    volume_term - area_term + curvature_term
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::physics::planck_density;

    fn w(v: f64) -> AngularFrequency {
        AngularFrequency::new(v).unwrap()
    }

    #[test]
    fn unit_sphere() {
        let d = descriptors_for(&ClosedCavity::Sphere(SphereGeometry::new(2.0).unwrap()));
        assert!((d.volume - 4.0 * PI / 3.0).abs() < 1e-15);
        assert!((d.area - 4.0 * PI).abs() < 1e-15);
        assert!((d.mean_curvature - 4.0 * PI).abs() < 1e-15);
    }

    #[test]
    fn boxes() {
        let cube = descriptors_for(&ClosedCavity::Box(BoxGeometry::cube(2.0).unwrap()));
        assert_eq!(cube.volume, 8.0);
        assert_eq!(cube.area, 24.0);
        assert!((cube.mean_curvature - 6.0 * PI).abs() < 1e-15);

        let b = descriptors_for(&ClosedCavity::Box(BoxGeometry::new(1.0, 2.0, 3.0).unwrap()));
        assert_eq!(b.volume, 6.0);
        assert_eq!(b.area, 22.0);
        assert!((b.mean_curvature - 6.0 * PI).abs() < 1e-15);
        let p = descriptors_for(&ClosedCavity::Box(BoxGeometry::new(3.0, 1.0, 2.0).unwrap()));
        assert_eq!(b, p);
    }

    #[test]
    fn degenerate_descriptors_reduce_to_planck() {
        let t = Temperature::new(300.0).unwrap();
        let desc = GeometryDescriptors {
            volume: 1.0,
            area: 0.0,
            mean_curvature: 0.0,
        };
        for omega in [0.0, 1e12, 1e14, 7.7e14] {
            assert_eq!(
                weyl_density(w(omega), t, &desc),
                planck_density(w(omega), t).value()
            );
        }
    }

    #[test]
    fn small_sphere_goes_negative() {
        let t = Temperature::new(300.0).unwrap();
        let desc = descriptors_for(&ClosedCavity::Sphere(SphereGeometry::new(1e-5).unwrap()));
        assert!((1..200).any(|i| weyl_density(w(i as f64 * 1e12), t, &desc) < 0.0));
    }
}
