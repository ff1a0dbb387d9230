#![allow(dead_code)]

use cavityrad::{BinnedSpectrum, ModeList, Temperature};

/// Relative tolerance for comparing frequencies computed by different
/// formulas; multiplicities must agree exactly.
pub const FREQ_TOL: f64 = 1e-12;

pub fn t300() -> Temperature {
    Temperature::new(300.0).unwrap()
}

/// `Ok` when both lists have the same entries.
pub fn compare_mode_lists(reference: &ModeList, candidate: &ModeList) -> Result<(), String> {
    if reference.len() != candidate.len() {
        return Err(format!(
            "{} entries vs {}",
            reference.len(),
            candidate.len()
        ));
    }
    for (i, (r, c)) in reference.iter().zip(candidate.iter()).enumerate() {
        if r.multiplicity != c.multiplicity {
            return Err(format!(
                "entry {i}: multiplicity {} vs {}",
                r.multiplicity, c.multiplicity
            ));
        }
        if (r.omega - c.omega).abs() > FREQ_TOL * r.omega {
            return Err(format!("entry {i}: omega {:e} vs {:e}", r.omega, c.omega));
        }
    }
    Ok(())
}

/// Relative gap between Σ u·Δω·V and the exact modal energy.
pub fn conservation_error(spec: &BinnedSpectrum, modes: &ModeList, t: Temperature) -> f64 {
    let exact = modes.thermal_energy(t);
    let binned = spec.total_energy();
    if exact == 0.0 {
        binned.abs()
    } else {
        (binned - exact).abs() / exact.abs()
    }
}

/// Mean of a piecewise-constant series over [a, b), where `a` and `b` fall
/// on bin edges.
pub fn window_mean(values: &[f64], delta: f64, a: f64, b: f64) -> f64 {
    let i0 = (a / delta).round() as usize;
    let i1 = (b / delta).round() as usize;
    values[i0..i1].iter().sum::<f64>() / (i1 - i0) as f64
}
