//! Box eigenfrequencies ω = πc·√(Σ sᵢ²/Lᵢ²) over the admitted integers sᵢ
//! of each boundary condition.
//!
//! General boxes scan the sign-folded integer lattice. Cubes take a faster
//! route: ω depends only on N = s₁² + s₂² + s₃², so the multiplicity of
//! each N is a three-fold convolution of the one-axis square counts.

use std::f64::consts::PI;

use rayon::prelude::*;

use super::{merge_frequencies, Mode, ModeList, DEFAULT_LATTICE_CAP, POLARIZATIONS};
use crate::error::{domain, Error, Result};
use crate::geometry::{BoundaryCondition, BoxGeometry};
use crate::physics::{AngularFrequency, C};

/// Largest s ≥ 0 with π·s/L ≤ ω_max/c.
fn axis_limit(omega_max: f64, l: f64) -> u64 {
    (omega_max * l / (PI * C)).floor() as u64
}

/// Number of signed lattice points in the bounding box a cutoff implies.
pub fn box_lattice_points(
    geom: &BoxGeometry,
    bc: BoundaryCondition,
    omega_max: AngularFrequency,
) -> u128 {
    geom.lengths()
        .iter()
        .map(|&l| bc.axis_count(axis_limit(omega_max.rad_per_s(), l)) as u128)
        .product()
}

/// Every box eigenfrequency up to `omega_max`, with the default lattice cap.
pub fn enumerate_box_modes(
    geom: &BoxGeometry,
    bc: BoundaryCondition,
    omega_max: AngularFrequency,
) -> Result<ModeList> {
    enumerate_box_modes_capped(geom, bc, omega_max, DEFAULT_LATTICE_CAP)
}

/// Every box eigenfrequency up to `omega_max`.
///
/// Frequencies within the merge tolerance are combined and every
/// multiplicity is doubled for polarization. The periodic zero mode is
/// excluded. Fails with [`Error::ResourceLimit`] when the bounding lattice
/// exceeds `cap` points.
pub fn enumerate_box_modes_capped(
    geom: &BoxGeometry,
    bc: BoundaryCondition,
    omega_max: AngularFrequency,
    cap: u64,
) -> Result<ModeList> {
    let w_max = omega_max.rad_per_s();
    if w_max <= 0.0 {
        return Err(domain("omega_max", w_max, "must be positive"));
    }
    let required = box_lattice_points(geom, bc, omega_max);
    if required > cap as u128 {
        return Err(Error::ResourceLimit { required, cap });
    }
    let entries = if geom.is_cube() {
        cube_modes(geom.lengths()[0], bc, w_max)
    } else {
        scan_box(geom, bc, w_max)
    };
    ModeList::from_entries(entries, w_max)
}

fn sorted_sum(mut t: [f64; 3]) -> f64 {
    t.sort_unstable_by(f64::total_cmp);
    (t[0] + t[1]) + t[2]
}

fn scan_box(geom: &BoxGeometry, bc: BoundaryCondition, w_max: f64) -> Vec<Mode> {
    let [l1, l2, l3] = geom.lengths();
    let q_max = (w_max / (PI * C)).powi(2);
    let q_break = q_max * (1.0 + 1e-9);
    let axis = |l: f64| -> Vec<(f64, u64)> {
        bc.folded_axis(axis_limit(w_max, l) + 1)
            .into_iter()
            .map(|(s, w)| ((s as f64 / l).powi(2), w as u64))
            .collect()
    };
    let (a1, a2, a3) = (axis(l1), axis(l2), axis(l3));
    let raw: Vec<(f64, u64)> = a1
        .par_iter()
        .flat_map_iter(|&(t1, w1)| {
            let mut row = Vec::new();
            for &(t2, w2) in &a2 {
                if t1 + t2 > q_break {
                    break;
                }
                for &(t3, w3) in &a3 {
                    let q = sorted_sum([t1, t2, t3]);
                    if q > q_break {
                        break;
                    }
                    if q == 0.0 {
                        continue;
                    }
                    let omega = PI * C * q.sqrt();
                    if omega <= w_max {
                        row.push((omega, w1 * w2 * w3));
                    }
                }
            }
            row
        })
        .collect();
    merge_frequencies(raw)
}

/// Compressed square index ρ(s) with s² = scale·ρ + offset for the admitted
/// s of each condition, so that Σsᵢ² = scale·Σρᵢ + 3·offset.
fn square_index(bc: BoundaryCondition) -> (u64, u64) {
    match bc {
        // s = 2n: s² = 4n²
        BoundaryCondition::Periodic => (4, 0),
        // s odd: s² = 8·(s² − 1)/8 + 1
        BoundaryCondition::Antiperiodic => (8, 1),
        BoundaryCondition::Dirichlet => (1, 0),
    }
}

const CONVOLUTION_CHUNK: usize = 1 << 14;

fn cube_modes(l: f64, bc: BoundaryCondition, w_max: f64) -> Vec<Mode> {
    let unit = PI * C / l;
    let (scale, offset) = square_index(bc);
    let n_top = ((w_max / unit).powi(2)).floor() as u64 + 1;
    let base = 3 * offset;
    if n_top < base {
        return Vec::new();
    }
    let r_max = ((n_top - base) / scale) as usize;

    // One axis: (ρ, signed count) for admitted s ≥ 0.
    let s_top = (n_top as f64).sqrt().ceil() as u64 + 1;
    let axis: Vec<(usize, u64)> = bc
        .folded_axis(s_top)
        .into_iter()
        .map(|(s, w)| (((s * s - offset) / scale) as usize, w as u64))
        .filter(|&(rho, _)| rho <= r_max)
        .collect();

    let mut pairs = vec![0u32; r_max + 1];
    for &(r1, w1) in &axis {
        for &(r2, w2) in &axis {
            let r = r1 + r2;
            if r > r_max {
                break;
            }
            pairs[r] += (w1 * w2) as u32;
        }
    }

    let mut triples = vec![0u32; r_max + 1];
    triples
        .par_chunks_mut(CONVOLUTION_CHUNK)
        .enumerate()
        .for_each(|(chunk, out)| {
            let lo = chunk * CONVOLUTION_CHUNK;
            let hi = lo + out.len();
            for &(r3, w3) in &axis {
                if r3 >= hi {
                    break;
                }
                let w3 = w3 as u32;
                // out[r − lo] += w3 · pairs[r − r3] for r in [max(lo, r3), hi)
                let start = lo.max(r3);
                let dst = &mut out[start - lo..];
                let src = &pairs[start - r3..hi - r3];
                // Counts stay far below u32::MAX; wrapping ops keep the loop
                // vectorizable when overflow checks are on.
                for (d, &p) in dst.iter_mut().zip(src) {
                    *d = d.wrapping_add(w3.wrapping_mul(p));
                }
            }
        });

    triples
        .iter()
        .enumerate()
        .filter(|&(_, &count)| count > 0)
        .filter_map(|(r, &count)| {
            let n = scale * r as u64 + base;
            if n == 0 {
                return None;
            }
            let omega = unit * (n as f64).sqrt();
            (omega <= w_max).then_some(Mode {
                omega,
                multiplicity: POLARIZATIONS * count as u64,
            })
        })
        .collect()
}
