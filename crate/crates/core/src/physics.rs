//! Physical constants, the thermal oscillator energy and the infinite-volume
//! Planck spectral density.
//!
//! Angular frequency (rad/s) is used everywhere; spectral densities are
//! energy per unit volume per unit angular frequency, J·s/(rad·m³).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::quad;

/// Reduced Planck constant, J·s (exact SI 2019).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light in vacuum, m/s (exact).
pub const C: f64 = 299_792_458.0;
/// Boltzmann constant, J/K (exact SI 2019).
pub const K_B: f64 = 1.380_649e-23;

/// The three constants every formula in this crate depends on.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub c: f64,
    pub k_b: f64,
}

impl PhysicalConstants {
    pub const SI: PhysicalConstants = PhysicalConstants {
        hbar: HBAR,
        c: C,
        k_b: K_B,
    };
}

/// Absolute temperature in kelvin, strictly positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Temperature(f64);

impl Temperature {
    pub fn new(kelvin: f64) -> Result<Self> {
        if !kelvin.is_finite() {
            return Err(domain("temperature", kelvin, "must be finite"));
        }
        if kelvin <= 0.0 {
            return Err(domain("temperature", kelvin, "must be positive"));
        }
        Ok(Self(kelvin))
    }

    pub fn kelvin(self) -> f64 {
        self.0
    }

    /// Thermal energy k_B·T in joules.
    pub fn thermal_energy(self) -> f64 {
        K_B * self.0
    }
}

/// Angular frequency in rad/s, non-negative and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct AngularFrequency(f64);

impl AngularFrequency {
    pub const ZERO: AngularFrequency = AngularFrequency(0.0);

    pub fn new(rad_per_s: f64) -> Result<Self> {
        if !rad_per_s.is_finite() {
            return Err(domain("angular frequency", rad_per_s, "must be finite"));
        }
        if rad_per_s < 0.0 {
            return Err(domain(
                "angular frequency",
                rad_per_s,
                "must be non-negative",
            ));
        }
        Ok(Self(rad_per_s))
    }

    pub fn rad_per_s(self) -> f64 {
        self.0
    }

    /// Vacuum wavenumber ω/c in rad/m.
    pub fn wavenumber(self) -> f64 {
        self.0 / C
    }
}

/// Spectral energy density u(ω, T) in J·s/(rad·m³).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
pub struct SpectralDensity(pub f64);

impl SpectralDensity {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Dimensionless ratio ħω / k_B T.
pub fn reduced_frequency(omega: AngularFrequency, t: Temperature) -> f64 {
    HBAR * omega.0 / t.thermal_energy()
}

/// Mean thermal energy of a quantum oscillator, ħω / (exp(ħω/k_BT) − 1).
///
/// Returns the classical limit k_BT at ω = 0.
pub fn mean_oscillator_energy(omega: AngularFrequency, t: Temperature) -> f64 {
    let x = reduced_frequency(omega, t);
    if x == 0.0 {
        t.thermal_energy()
    } else {
        HBAR * omega.0 / x.exp_m1()
    }
}

/// Mean oscillator energy for a raw frequency already known to be valid.
pub(crate) fn oscillator_energy_raw(omega: f64, kt: f64) -> f64 {
    let x = HBAR * omega / kt;
    if x == 0.0 {
        kt
    } else {
        HBAR * omega / x.exp_m1()
    }
}

/// Planck spectral energy density ħω³ / (π²c³ (exp(ħω/k_BT) − 1)).
pub fn planck_density(omega: AngularFrequency, t: Temperature) -> SpectralDensity {
    SpectralDensity(planck_raw(omega.0, t.thermal_energy()))
}

pub(crate) fn planck_raw(omega: f64, kt: f64) -> f64 {
    omega * omega / (PI * PI * C * C * C) * oscillator_energy_raw(omega, kt)
}

/// Radiation constant a = π²k_B⁴ / (15ħ³c³), so that the total energy
/// density is a·T⁴.
pub fn radiation_constant() -> f64 {
    PI * PI * K_B.powi(4) / (15.0 * HBAR.powi(3) * C.powi(3))
}

/// Closed-form total energy density a·T⁴ in J/m³.
pub fn stefan_boltzmann_energy(t: Temperature) -> f64 {
    radiation_constant() * t.0.powi(4)
}

// Above this reduced frequency the integrand is handled by the series tail.
const QUADRATURE_CUTOFF: f64 = 50.0;
const FRACTION_TOLERANCE: f64 = 1e-13;

fn planck_shape(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x * x / x.exp_m1()
    }
}

/// ∫_x^∞ y³/(eʸ − 1) dy via the expansion 1/(eʸ − 1) = Σ e^{−ky}.
fn planck_shape_tail(x: f64) -> f64 {
    let mut sum = 0.0;
    for k in 1..=64 {
        let kf = k as f64;
        let term = (-kf * x).exp()
            * (x.powi(3) / kf + 3.0 * x * x / kf.powi(2) + 6.0 * x / kf.powi(3) + 6.0 / kf.powi(4));
        sum += term;
        if term <= 1e-18 * sum {
            break;
        }
    }
    sum
}

/// ∫_0^x y³/(eʸ − 1) dy.
fn planck_shape_integral(x: f64) -> f64 {
    let head = x.min(QUADRATURE_CUTOFF);
    let mut total = quad::adaptive(planck_shape, 0.0, head, FRACTION_TOLERANCE);
    if x > QUADRATURE_CUTOFF {
        total += planck_shape_tail(QUADRATURE_CUTOFF) - planck_shape_tail(x);
    }
    total
}

/// Total energy density ∫_0^∞ u(ω, T) dω in J/m³, by quadrature.
pub fn planck_total_energy(t: Temperature) -> f64 {
    let kt = t.thermal_energy();
    let shape = planck_shape_integral(QUADRATURE_CUTOFF) + planck_shape_tail(QUADRATURE_CUTOFF);
    shape * kt.powi(4) / (PI * PI * C.powi(3) * HBAR.powi(3))
}

/// Fraction of the total Planck energy carried by frequencies below `omega_max`.
pub fn planck_energy_fraction_below(omega_max: AngularFrequency, t: Temperature) -> f64 {
    let x = reduced_frequency(omega_max, t);
    if x == 0.0 {
        return 0.0;
    }
    let norm = PI.powi(4) / 15.0;
    (planck_shape_integral(x) / norm).clamp(0.0, 1.0)
}

/// Peak of the Planck density in ω: the root of 3(1 − e^{−x}) = x, scaled
/// by k_BT/ħ.
pub fn planck_peak_frequency(t: Temperature) -> AngularFrequency {
    // Newton on g(x) = 3(1 − e^{−x}) − x from the right of the root.
    let mut x: f64 = 3.0;
    for _ in 0..50 {
        let g = 3.0 * (1.0 - (-x).exp()) - x;
        let dg = 3.0 * (-x).exp() - 1.0;
        let step = g / dg;
        x -= step;
        if step.abs() < 1e-15 * x {
            break;
        }
    }
    AngularFrequency(x * t.thermal_energy() / HBAR)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(k: f64) -> Temperature {
        Temperature::new(k).unwrap()
    }

    fn w(v: f64) -> AngularFrequency {
        AngularFrequency::new(v).unwrap()
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(Temperature::new(0.0).is_err());
        assert!(Temperature::new(-1.0).is_err());
        assert!(Temperature::new(f64::NAN).is_err());
        assert!(Temperature::new(f64::INFINITY).is_err());
        assert!(AngularFrequency::new(-1.0).is_err());
        assert!(AngularFrequency::new(f64::NAN).is_err());
    }

    #[test]
    fn zero_frequency_limits() {
        let e = mean_oscillator_energy(AngularFrequency::ZERO, t(300.0));
        assert_eq!(e, K_B * 300.0);
        assert!((e - 4.141947e-21).abs() < 1e-27);
        assert_eq!(
            planck_density(AngularFrequency::ZERO, t(300.0)).value(),
            0.0
        );
    }

    #[test]
    fn unit_reduced_frequency() {
        let temp = t(1234.5);
        let omega = w(temp.thermal_energy() / HBAR);
        let e = mean_oscillator_energy(omega, temp);
        let expected = temp.thermal_energy() / (std::f64::consts::E - 1.0);
        assert!((e / expected - 1.0).abs() < 1e-14);
    }

    #[test]
    fn oscillator_energy_at_1e14() {
        // ħω/(e^{ħω/kT} − 1) at ω = 1e14, T = 300, evaluated with mpmath at 40 digits.
        let e = mean_oscillator_energy(w(1e14), t(300.0));
        let reference = 8.969761069334692e-22;
        assert!((e / reference - 1.0).abs() < 1e-13, "{e:e}");
    }

    #[test]
    fn very_high_frequency_is_zero_not_nan() {
        let u = planck_density(w(1e20), t(3.0));
        assert_eq!(u.value(), 0.0);
    }

    #[test]
    fn energy_fraction_endpoints() {
        assert_eq!(
            planck_energy_fraction_below(AngularFrequency::ZERO, t(300.0)),
            0.0
        );
        let all = planck_energy_fraction_below(w(1e18), t(300.0));
        assert!((all - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fraction_below_three_microns() {
        // mpmath quadrature of x³/(eˣ − 1) to x = ħ·2πc/(3 µm)/(k_B·300 K), over π⁴/15.
        let omega = 2.0 * std::f64::consts::PI * C / 3e-6;
        let f = planck_energy_fraction_below(w(omega), t(300.0));
        assert!((f - 0.9999129728916885).abs() < 1e-12, "{f}");
    }

    #[test]
    fn total_energy_matches_closed_form() {
        for k in [3.0, 300.0, 3000.0] {
            let q = planck_total_energy(t(k));
            let exact = stefan_boltzmann_energy(t(k));
            assert!((q / exact - 1.0).abs() < 1e-12, "{k}: {}", q / exact - 1.0);
        }
        let a300 = stefan_boltzmann_energy(t(300.0));
        assert!((a300 / 6.128243943991482e-6 - 1.0).abs() < 1e-14);
    }

    #[test]
    fn peak_frequency_at_room_temperature() {
        let peak = planck_peak_frequency(t(300.0)).rad_per_s();
        assert!((peak / 1.108e14 - 1.0).abs() < 1e-3, "{peak:e}");
        // Root of 3(1 − e^{−x}) = x from mpmath.findroot.
        assert!((peak / 1.1081513989523701e14 - 1.0).abs() < 1e-14);
    }
}
