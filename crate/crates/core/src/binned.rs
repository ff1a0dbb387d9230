//! Piecewise-constant spectral density of a discrete mode list.
//!
//! Bin i covers [i·Δω, (i+1)·Δω) and holds
//! Σ multiplicity·ε̄(ωᵢ) / (V·Δω) over the modes inside it. The bins
//! partition the axis, so no mode is lost on a bin edge.

use std::io::{self, Write};

use serde::Serialize;

use crate::error::{domain, Result};
use crate::modes::ModeList;
use crate::physics::{oscillator_energy_raw, Temperature};
use crate::quad::{gauss_legendre, CompensatedSum};

/// Default bin width, rad/s.
pub const DEFAULT_DELTA_OMEGA: f64 = 1e13;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BinnedSpectrum {
    delta_omega: f64,
    volume: f64,
    values: Vec<f64>,
    /// True when the last bin extends past the mode list cutoff.
    partial_last: bool,
}

impl BinnedSpectrum {
    pub fn delta_omega(&self) -> f64 {
        self.delta_omega
    }

    pub fn volume(&self) -> f64 {
        self.volume
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn partial_last(&self) -> bool {
        self.partial_last
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn omega_left(&self, i: usize) -> f64 {
        i as f64 * self.delta_omega
    }

    /// (ω_left, u) for every bin.
    pub fn bins(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, &u)| (self.omega_left(i), u))
    }

    /// Σ u·Δω·V: the modal energy the spectrum accounts for, J.
    pub fn total_energy(&self) -> f64 {
        self.values
            .iter()
            .map(|&u| u * self.delta_omega * self.volume)
            .collect::<CompensatedSum>()
            .value()
    }

    /// Mean of `density` over each bin, for like-for-like comparison with
    /// the binned values.
    pub fn bin_averages<F: Fn(f64) -> f64>(&self, density: F) -> Vec<f64> {
        let rule = gauss_legendre();
        (0..self.values.len())
            .map(|i| {
                let lo = self.omega_left(i);
                let hi = lo + self.delta_omega;
                rule.integrate(lo, hi, &density) / self.delta_omega
            })
            .collect()
    }

    /// Writes the `omega_left_rad_s,u_J_s_m3` CSV.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "omega_left_rad_s,u_J_s_m3")?;
        for (w, u) in self.bins() {
            writeln!(out, "{w:e},{u:e}")?;
        }
        Ok(())
    }
}

/// Bins the thermal energy of `modes` into a spectral density for a cavity
/// of volume `volume`.
pub fn binned_density(
    modes: &ModeList,
    t: Temperature,
    delta_omega: f64,
    volume: f64,
) -> Result<BinnedSpectrum> {
    if !(delta_omega > 0.0 && delta_omega.is_finite()) {
        return Err(domain(
            "delta_omega",
            delta_omega,
            "must be positive and finite",
        ));
    }
    if !(volume > 0.0 && volume.is_finite()) {
        return Err(domain("volume", volume, "must be positive and finite"));
    }
    let omega_max = modes.omega_max();
    let mut n_bins = ((omega_max / delta_omega).ceil() as usize).max(1);
    let index = |omega: f64| (omega / delta_omega).floor() as usize;
    if let Some(last) = modes.entries().last() {
        // A mode sitting exactly on the cutoff opens one more bin.
        n_bins = n_bins.max(index(last.omega) + 1);
    }
    let kt = t.thermal_energy();
    let mut acc = vec![CompensatedSum::default(); n_bins];
    for m in modes.iter() {
        acc[index(m.omega)].add(m.multiplicity as f64 * oscillator_energy_raw(m.omega, kt));
    }
    let norm = volume * delta_omega;
    Ok(BinnedSpectrum {
        delta_omega,
        volume,
        values: acc.iter().map(|a| a.value() / norm).collect(),
        partial_last: n_bins as f64 * delta_omega > omega_max,
    })
}
