//! Spectral energy densities for cavities that are finite in one direction
//! (films) or two directions (rods).
//!
//! The film density is a closed form: the Planck-like prefactor
//! ω·ε̄(ω)/(πc²L₁) times the number of admitted longitudinal wavenumbers
//! below ω/c. The rod density sums an inverse square-root term over every
//! admitted transverse mode, and diverges as ω crosses a transverse
//! threshold c·|k⊥|.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::geometry::{BoundaryCondition, FilmGeometry, RodGeometry};
use crate::physics::{oscillator_energy_raw, AngularFrequency, SpectralDensity, Temperature, C};
use crate::quad::{gauss_legendre, CompensatedSum};

/// Relative half-width of the window around a transverse threshold in which
/// the rod density refuses to evaluate.
pub const THRESHOLD_EPSILON: f64 = 1e-9;

/// Thresholds at least this many band half-widths below a band are
/// integrated directly in ω: the nearest singularity is then far enough
/// outside the interval for 8-point Gauss–Legendre to reach ~1e-14.
const FAR_THRESHOLD_HALF_WIDTHS: f64 = 3.0;

/// Number of admitted longitudinal wavenumbers |k| < ω/c across a film.
///
/// Floors are taken on the whole bracketed expression, so a new mode counts
/// from the frequency at which it is admitted.
pub fn film_mode_count(omega: AngularFrequency, geom: FilmGeometry, bc: BoundaryCondition) -> u64 {
    let w = omega.rad_per_s();
    let l = geom.l1();
    match bc {
        BoundaryCondition::Periodic => 2 * (w * l / (2.0 * C * PI)).floor() as u64 + 1,
        BoundaryCondition::Antiperiodic => 2 * (w * l / (2.0 * C * PI) + 0.5).floor() as u64,
        BoundaryCondition::Dirichlet => (w * l / (C * PI)).floor() as u64,
    }
}

/// Film spectral density: ħω² / (πc²L₁ (e^{ħω/k_BT} − 1)) × mode count.
pub fn film_density(
    omega: AngularFrequency,
    t: Temperature,
    geom: FilmGeometry,
    bc: BoundaryCondition,
) -> SpectralDensity {
    let count = film_mode_count(omega, geom, bc);
    SpectralDensity(film_prefactor(omega.rad_per_s(), t.thermal_energy(), geom.l1()) * count as f64)
}

fn film_prefactor(omega: f64, kt: f64, l1: f64) -> f64 {
    omega * oscillator_energy_raw(omega, kt) / (PI * C * C * l1)
}

/// One admitted transverse mode of a rod.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransverseMode {
    /// Mode indices as conventionally written for the boundary condition.
    pub n1: i64,
    pub n2: i64,
    /// Transverse wavenumbers in rad/m.
    pub k1: f64,
    pub k2: f64,
}

impl TransverseMode {
    pub fn k_perp_sq(&self) -> f64 {
        self.k1 * self.k1 + self.k2 * self.k2
    }

    /// Frequency at which this mode starts to propagate, c·|k⊥|.
    pub fn threshold(&self) -> f64 {
        C * self.k_perp_sq().sqrt()
    }
}

/// The finite set of transverse modes admitted below a query frequency,
/// sorted by |k⊥|² and then lexicographically by (k1, k2).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TransverseModeSet {
    pub modes: Vec<TransverseMode>,
}

impl TransverseModeSet {
    pub fn len(&self) -> usize {
        self.modes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TransverseMode> {
        self.modes.iter()
    }

    /// Distinct thresholds c·|k⊥| in ascending order.
    pub fn thresholds(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self.modes.iter().map(TransverseMode::threshold).collect();
        out.dedup();
        out
    }
}

/// Largest |s| that can satisfy π|s|/L < k.
fn axis_bound(k: f64, l: f64) -> u64 {
    (k * l / PI).ceil() as u64 + 1
}

/// Every admitted transverse mode with k1² + k2² < (ω/c)².
pub fn rod_transverse_modes(
    omega: AngularFrequency,
    geom: RodGeometry,
    bc: BoundaryCondition,
) -> TransverseModeSet {
    let k = omega.wavenumber();
    let k_sq = k * k;
    let (l1, l2) = (geom.l1(), geom.l2());
    let (b1, b2) = (axis_bound(k, l1) as i64, axis_bound(k, l2) as i64);
    let mut modes = Vec::new();
    for s1 in (-b1..=b1).filter(|&s| bc.admits(s)) {
        let k1 = PI * s1 as f64 / l1;
        for s2 in (-b2..=b2).filter(|&s| bc.admits(s)) {
            let k2 = PI * s2 as f64 / l2;
            if k1 * k1 + k2 * k2 < k_sq {
                modes.push(TransverseMode {
                    n1: bc.mode_index(s1),
                    n2: bc.mode_index(s2),
                    k1,
                    k2,
                });
            }
        }
    }
    modes.sort_by(|a, b| {
        a.k_perp_sq()
            .total_cmp(&b.k_perp_sq())
            .then(a.k1.total_cmp(&b.k1))
            .then(a.k2.total_cmp(&b.k2))
    });
    TransverseModeSet { modes }
}

/// One row s₁ of the sign-folded transverse lattice (s ≥ 0, weights count
/// the folded signs).
struct FoldedRow<'a> {
    s1: u64,
    w1: u32,
    k1_sq: f64,
    l2: f64,
    k_max_sq: f64,
    axis2: &'a [(u64, u32)],
}

impl FoldedRow<'_> {
    /// (|k⊥|², weight, s2) for every mode of the row with |k⊥| < k_max,
    /// in ascending s2.
    fn modes(&self) -> impl Iterator<Item = (f64, u32, u64)> + '_ {
        self.axis2
            .iter()
            .map(move |&(s2, w2)| {
                let k2 = PI * s2 as f64 / self.l2;
                (self.k1_sq + k2 * k2, self.w1 * w2, s2)
            })
            .take_while(move |&(q, _, _)| q < self.k_max_sq)
    }
}

/// Applies `f` to every row of the folded lattice below `k_max`, in
/// parallel, returning results in ascending s1 so that callers reduce
/// deterministically.
fn map_folded_rows<R, F>(geom: RodGeometry, bc: BoundaryCondition, k_max: f64, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(&FoldedRow<'_>) -> R + Sync,
{
    let (l1, l2) = (geom.l1(), geom.l2());
    let k_max_sq = k_max * k_max;
    let axis1 = bc.folded_axis(axis_bound(k_max, l1));
    let axis2 = bc.folded_axis(axis_bound(k_max, l2));
    axis1
        .par_iter()
        .map(|&(s1, w1)| {
            let k1 = PI * s1 as f64 / l1;
            f(&FoldedRow {
                s1,
                w1,
                k1_sq: k1 * k1,
                l2,
                k_max_sq,
                axis2: &axis2,
            })
        })
        .collect()
}

fn rod_prefactor(omega: f64, kt: f64, geom: RodGeometry) -> f64 {
    2.0 * omega * oscillator_energy_raw(omega, kt) / (PI * C * C * geom.l1() * geom.l2())
}

/// Rod spectral density:
/// 2/(πc²L₁L₂) · ħω²/(e^{ħω/k_BT} − 1) · Σ 1/√(ω²/c² − k⊥²).
///
/// Fails with [`Error::ThresholdSingularity`] when ω/c lies within a relative
/// [`THRESHOLD_EPSILON`] of any transverse |k⊥|, admitted or not.
pub fn rod_density(
    omega: AngularFrequency,
    t: Temperature,
    geom: RodGeometry,
    bc: BoundaryCondition,
) -> Result<SpectralDensity> {
    let w = omega.rad_per_s();
    if w == 0.0 {
        return Ok(SpectralDensity(0.0));
    }
    let k = omega.wavenumber();
    let partial: Vec<Result<CompensatedSum>> =
        map_folded_rows(geom, bc, k * (1.0 + THRESHOLD_EPSILON), |row| {
            let mut acc = CompensatedSum::default();
            for (q, weight, s2) in row.modes() {
                let kp = q.sqrt();
                if (k - kp).abs() < THRESHOLD_EPSILON * k {
                    return Err(Error::ThresholdSingularity {
                        omega: w,
                        n1: bc.mode_index(row.s1 as i64),
                        n2: bc.mode_index(s2 as i64),
                        threshold: C * kp,
                    });
                }
                if kp < k {
                    acc.add(weight as f64 / ((k - kp) * (k + kp)).sqrt());
                }
            }
            Ok(acc)
        });
    let mut total = CompensatedSum::default();
    for row in partial {
        total.add(row?.value());
    }
    Ok(SpectralDensity(
        rod_prefactor(w, t.thermal_energy(), geom) * total.value(),
    ))
}

/// Mean rod density over the band [ω_lo, ω_hi].
///
/// Each threshold singularity is integrated exactly through the substitution
/// ω = c|k⊥|·cosh τ, which turns dω/√(ω²/c² − k⊥²) into c·dτ; the remaining
/// smooth factor is integrated by Gauss–Legendre.
pub fn rod_band_average(
    omega_lo: AngularFrequency,
    omega_hi: AngularFrequency,
    t: Temperature,
    geom: RodGeometry,
    bc: BoundaryCondition,
) -> Result<SpectralDensity> {
    let (lo, hi) = (omega_lo.rad_per_s(), omega_hi.rad_per_s());
    if hi <= lo {
        return Err(domain("band upper edge", hi, "must exceed the lower edge"));
    }
    let kt = t.thermal_energy();
    let rule = gauss_legendre();
    // c·ω·ε̄(ω) times the Gauss weight at each node of [lo, hi], shared by
    // every mode whose threshold lies far below the band.
    let (mid, half) = (0.5 * (hi + lo), 0.5 * (hi - lo));
    let nodes: Vec<(f64, f64)> = rule
        .as_node_weight_pairs()
        .iter()
        .map(|&(x, wt)| {
            let w = mid + half * x;
            (w * w, half * wt * C * w * oscillator_energy_raw(w, kt))
        })
        .collect();
    let far_edge = lo - FAR_THRESHOLD_HALF_WIDTHS * half;
    let partial: Vec<f64> = map_folded_rows(geom, bc, hi / C, |row| {
        let mut acc = CompensatedSum::default();
        for (q, weight, _) in row.modes() {
            let threshold = C * q.sqrt();
            let contribution = if q == 0.0 {
                rule.integrate(lo, hi, |w| C * oscillator_energy_raw(w, kt))
            } else if threshold <= far_edge {
                // dω/√(ω²/c² − k⊥²) = c·dω/√(ω² − ω_th²), smooth on the band.
                let th_sq = threshold * threshold;
                nodes
                    .iter()
                    .map(|&(w_sq, g)| g / (w_sq - th_sq).sqrt())
                    .sum()
            } else {
                let tau_lo = (lo / threshold).max(1.0).acosh();
                let tau_hi = (hi / threshold).acosh();
                rule.integrate(tau_lo, tau_hi, |tau| {
                    let w = threshold * tau.cosh();
                    C * w * oscillator_energy_raw(w, kt)
                })
            };
            acc.add(weight as f64 * contribution);
        }
        acc.value()
    });
    let total: CompensatedSum = partial.into_iter().collect();
    let scale = 2.0 / (PI * C * C * geom.l1() * geom.l2());
    Ok(SpectralDensity(scale * total.value() / (hi - lo)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::physics::{planck_density, HBAR, K_B};
    use BoundaryCondition::*;

    fn w(v: f64) -> AngularFrequency {
        AngularFrequency::new(v).unwrap()
    }

    fn t300() -> Temperature {
        Temperature::new(300.0).unwrap()
    }

    /// Explicit enumeration of admitted n with |k_n| < ω/c.
    fn enumerate_film(omega: f64, l: f64, bc: BoundaryCondition) -> u64 {
        let k = omega / C;
        let bound = (omega * l / C).ceil() as i64 + 2;
        (-bound..=bound)
            .filter(|&n| {
                let kn = match bc {
                    Periodic => 2.0 * PI * n as f64 / l,
                    Antiperiodic => 2.0 * PI * (n as f64 + 0.5) / l,
                    Dirichlet if n >= 1 => PI * n as f64 / l,
                    Dirichlet => return false,
                };
                kn.abs() < k
            })
            .count() as u64
    }

    #[test]
    fn film_counts_examples() {
        let l = 1e-5;
        let geom = FilmGeometry::new(l).unwrap();
        assert_eq!(film_mode_count(AngularFrequency::ZERO, geom, Periodic), 1);
        assert_eq!(film_mode_count(w(2.5 * C * PI / l), geom, Dirichlet), 2);
        assert_eq!(
            film_mode_count(w(0.4 * 2.0 * C * PI / l), geom, Antiperiodic),
            0
        );
    }

    #[test]
    fn film_counts_match_enumeration() {
        let geom = FilmGeometry::new(3.7e-5).unwrap();
        for i in 1..400 {
            let omega = i as f64 * 1.37e12;
            for bc in BoundaryCondition::ALL {
                assert_eq!(
                    film_mode_count(w(omega), geom, bc),
                    enumerate_film(omega, geom.l1(), bc),
                    "{bc} omega={omega:e}"
                );
            }
        }
    }

    #[test]
    fn film_below_first_periodic_threshold() {
        let l = 2e-5;
        let geom = FilmGeometry::new(l).unwrap();
        let omega = 0.7 * 2.0 * C * PI / l;
        let x = HBAR * omega / (K_B * 300.0);
        let expected = HBAR * omega * omega / (PI * C * C * l * x.exp_m1());
        let got = film_density(w(omega), t300(), geom, Periodic).value();
        assert!((got / expected - 1.0).abs() < 1e-14);
    }

    #[test]
    fn dirichlet_cut_off_is_exact_zero() {
        let l = 1e-5;
        let geom = FilmGeometry::new(l).unwrap();
        let cut = C * PI / l;
        for bc in [Dirichlet, Antiperiodic] {
            assert_eq!(
                film_density(w(cut * 0.999_999), t300(), geom, bc).value(),
                0.0
            );
            assert!(film_density(w(cut * 1.000_001), t300(), geom, bc).value() > 0.0);
        }
    }

    #[test]
    fn large_film_matches_planck() {
        let geom = FilmGeometry::new(1e-2).unwrap();
        let planck = planck_density(w(1e14), t300()).value();
        for bc in BoundaryCondition::ALL {
            let u = film_density(w(1e14), t300(), geom, bc).value();
            assert!((u / planck - 1.0).abs() < 1e-3, "{bc}");
        }
    }

    #[test]
    fn periodic_rod_contains_origin_and_small_shell() {
        let l = 1e-5;
        let geom = RodGeometry::new(l, l).unwrap();
        let modes = rod_transverse_modes(w(2.0 * PI * C / l * 1.1), geom, Periodic);
        assert_eq!(modes.len(), 5);
        assert_eq!((modes.modes[0].k1, modes.modes[0].k2), (0.0, 0.0));
        let set = rod_transverse_modes(w(1e9), geom, Periodic);
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn dirichlet_rod_empty_below_lowest_mode() {
        let (l1, l2) = (1e-5, 2e-5);
        let geom = RodGeometry::new(l1, l2).unwrap();
        let lowest = PI * C * (1.0 / (l1 * l1) + 1.0 / (l2 * l2)).sqrt();
        assert!(rod_transverse_modes(w(lowest * 0.999), geom, Dirichlet).is_empty());
        assert_eq!(
            rod_transverse_modes(w(lowest * 1.001), geom, Dirichlet).len(),
            1
        );
        assert_eq!(
            rod_density(w(lowest * 0.999), t300(), geom, Dirichlet)
                .unwrap()
                .value(),
            0.0
        );
    }

    #[test]
    fn periodic_rod_single_term() {
        let l = 1e-5;
        let geom = RodGeometry::new(l, l).unwrap();
        let omega = 0.5 * 2.0 * PI * C / l;
        let x = HBAR * omega / (K_B * 300.0);
        let expected = 2.0 * HBAR * omega / (PI * C * l * l * x.exp_m1());
        let got = rod_density(w(omega), t300(), geom, Periodic)
            .unwrap()
            .value();
        assert!((got / expected - 1.0).abs() < 1e-13);
    }

    #[test]
    fn threshold_guard_names_mode() {
        let l = 1e-5;
        let geom = RodGeometry::new(l, l).unwrap();
        let threshold = 2.0 * PI * C / l;
        match rod_density(w(threshold), t300(), geom, Periodic) {
            Err(Error::ThresholdSingularity { n1, n2, .. }) => {
                assert_eq!(n1.abs() + n2.abs(), 1);
            }
            other => panic!("expected threshold error, got {other:?}"),
        }
        // Just below the threshold, where the mode is not yet admitted.
        assert!(rod_density(w(threshold * (1.0 - 1e-10)), t300(), geom, Periodic).is_err());
        assert!(rod_density(w(threshold * (1.0 - 1e-6)), t300(), geom, Periodic).is_ok());
    }

    #[test]
    fn transverse_set_is_sorted_and_symmetric() {
        let geom = RodGeometry::new(3e-5, 2e-5).unwrap();
        for bc in [Periodic, Antiperiodic] {
            let set = rod_transverse_modes(w(3e14), geom, bc);
            for pair in set.modes.windows(2) {
                assert!(pair[0].k_perp_sq() <= pair[1].k_perp_sq());
            }
            for m in set.iter() {
                assert!(set.iter().any(|o| o.k1 == -m.k1 && o.k2 == -m.k2));
            }
        }
    }

    #[test]
    fn folded_sum_equals_sorted_mode_sum() {
        let geom = RodGeometry::new(2.1e-5, 1.3e-5).unwrap();
        let omega = 4.1e14;
        for bc in BoundaryCondition::ALL {
            let set = rod_transverse_modes(w(omega), geom, bc);
            let k = omega / C;
            let direct: f64 = set
                .iter()
                .map(|m| 1.0 / (k * k - m.k_perp_sq()).sqrt())
                .sum();
            let pref = rod_prefactor(omega, K_B * 300.0, geom);
            let u = rod_density(w(omega), t300(), geom, bc).unwrap().value();
            assert!((u / (pref * direct) - 1.0).abs() < 1e-12, "{bc}");
        }
    }

    #[test]
    fn band_average_below_thresholds_matches_pointwise_mean() {
        // Single (0,0) term: smooth, so Simpson on a fine grid is a fair reference.
        let l = 1e-5;
        let geom = RodGeometry::new(l, l).unwrap();
        let (lo, hi) = (1e13, 8e13);
        let n = 2000;
        let h = (hi - lo) / n as f64;
        let f = |x: f64| rod_density(w(x), t300(), geom, Periodic).unwrap().value();
        let mut s = f(lo) + f(hi);
        for i in 1..n {
            s += f(lo + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        let simpson = s * h / 3.0 / (hi - lo);
        let avg = rod_band_average(w(lo), w(hi), t300(), geom, Periodic)
            .unwrap()
            .value();
        assert!((avg / simpson - 1.0).abs() < 1e-10);
    }

    #[test]
    fn band_average_across_thresholds_matches_romberg() {
        use crate::oracle::{quadrature_across_breakpoints, RombergOptions};
        let l = 1e-5;
        let geom = RodGeometry::new(l, 1.3 * l).unwrap();
        let (lo, hi) = (3.0e14, 3.3e14);
        for bc in BoundaryCondition::ALL {
            let breaks = rod_transverse_modes(w(hi), geom, bc).thresholds();
            let f = |x: f64| rod_density(w(x), t300(), geom, bc).map(|u| u.value());
            let opts = RombergOptions::with_steps(2);
            let upper = quadrature_across_breakpoints(f, &breaks, hi, opts).unwrap();
            let lower = quadrature_across_breakpoints(f, &breaks, lo, opts).unwrap();
            let reference = (upper - lower) / (hi - lo);
            let avg = rod_band_average(w(lo), w(hi), t300(), geom, bc)
                .unwrap()
                .value();
            assert!(
                (avg / reference - 1.0).abs() < 1e-9,
                "{bc}: {avg:e} vs {reference:e}"
            );
        }
    }
}
