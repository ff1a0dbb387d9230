//! Discrete eigenfrequencies of closed cavities.
//!
//! A [`ModeList`] holds every eigenfrequency up to a cutoff with its
//! multiplicity. Multiplicities include a global factor 2 for the two
//! polarizations, so that every geometry shares the continuum limit
//! N(ω) ≈ Vω³/(3π²c³).

mod lattice;
mod sphere;

use std::io::{self, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::physics::{oscillator_energy_raw, Temperature};
use crate::quad::CompensatedSum;

pub use lattice::{box_lattice_points, enumerate_box_modes, enumerate_box_modes_capped};
pub use sphere::{enumerate_sphere_modes, enumerate_sphere_modes_capped, sphere_zero_budget};

/// Default cap on the number of lattice points a cutoff may imply.
pub const DEFAULT_LATTICE_CAP: u64 = 100_000_000;

/// Relative tolerance under which two eigenfrequencies are the same mode.
pub const MERGE_TOLERANCE: f64 = 1e-12;

/// Polarization factor applied to every multiplicity.
pub const POLARIZATIONS: u64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mode {
    /// Eigenfrequency in rad/s.
    pub omega: f64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModeList {
    entries: Vec<Mode>,
    omega_max: f64,
}

impl ModeList {
    /// Builds a mode list from already merged entries, checking every
    /// structural invariant.
    pub fn from_entries(entries: Vec<Mode>, omega_max: f64) -> Result<Self> {
        if !(omega_max > 0.0 && omega_max.is_finite()) {
            return Err(Error::InvalidModeList(format!(
                "cutoff {omega_max:e} must be positive"
            )));
        }
        for (i, m) in entries.iter().enumerate() {
            if m.omega.is_nan() || m.omega <= 0.0 || m.omega > omega_max {
                return Err(Error::InvalidModeList(format!(
                    "entry {i}: frequency {:e} outside (0, {omega_max:e}]",
                    m.omega
                )));
            }
            if m.multiplicity == 0 || m.multiplicity % POLARIZATIONS != 0 {
                return Err(Error::InvalidModeList(format!(
                    "entry {i}: multiplicity {} is not a positive even number",
                    m.multiplicity
                )));
            }
            if i > 0 && entries[i - 1].omega >= m.omega {
                return Err(Error::InvalidModeList(format!(
                    "entry {i}: frequencies not strictly increasing"
                )));
            }
        }
        Ok(Self { entries, omega_max })
    }

    pub fn empty(omega_max: f64) -> Result<Self> {
        Self::from_entries(Vec::new(), omega_max)
    }

    pub fn entries(&self) -> &[Mode] {
        &self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Mode> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn omega_max(&self) -> f64 {
        self.omega_max
    }

    /// Total number of modes, N(≤ ω_max), polarizations included.
    pub fn total_modes(&self) -> u64 {
        self.entries.iter().map(|m| m.multiplicity).sum()
    }

    /// N(≤ ω) for ω up to the cutoff.
    pub fn count_up_to(&self, omega: f64) -> u64 {
        self.entries
            .iter()
            .take_while(|m| m.omega <= omega)
            .map(|m| m.multiplicity)
            .sum()
    }

    /// Σ multiplicity · ε̄(ω_i): total thermal energy of the listed modes, J.
    pub fn thermal_energy(&self, t: Temperature) -> f64 {
        let kt = t.thermal_energy();
        self.entries
            .iter()
            .map(|m| m.multiplicity as f64 * oscillator_energy_raw(m.omega, kt))
            .collect::<CompensatedSum>()
            .value()
    }

    /// Writes the `omega_rad_s,multiplicity` CSV.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "omega_rad_s,multiplicity")?;
        for m in &self.entries {
            writeln!(out, "{:e},{}", m.omega, m.multiplicity)?;
        }
        Ok(())
    }
}

/// Sorts raw (ω, count) pairs and merges frequencies within
/// [`MERGE_TOLERANCE`] of the first member of their cluster. Counts are
/// multiplied by the polarization factor.
pub(crate) fn merge_frequencies(mut raw: Vec<(f64, u64)>) -> Vec<Mode> {
    raw.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Vec<Mode> = Vec::new();
    let mut anchor = f64::NAN;
    for (omega, count) in raw {
        match out.last_mut() {
            Some(last) if omega - anchor <= MERGE_TOLERANCE * anchor => {
                last.multiplicity += POLARIZATIONS * count;
            }
            _ => {
                anchor = omega;
                out.push(Mode {
                    omega,
                    multiplicity: POLARIZATIONS * count,
                });
            }
        }
    }
    out
}
