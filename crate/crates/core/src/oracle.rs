//! Brute-force reference computations.
//!
//! Nothing here shares code with the main computation path beyond the
//! physical constants and the plain data types: mode lists come from a naive
//! triple loop over the conventional mode indices, and integrals from
//! composite midpoint rules with Richardson extrapolation. They are slow by
//! design and meant for tests.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{BoundaryCondition, BoxGeometry};
use crate::modes::{Mode, ModeList};
use crate::physics::C;

/// Largest lattice scan the naive counter will attempt.
pub const ORACLE_SCAN_BUDGET: u64 = 1_000_000;

const FLOOR: f64 = 1e-300;

/// One oracle-versus-candidate comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub label: String,
    pub reference: f64,
    pub candidate: f64,
    pub rel_dev: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl OracleReport {
    pub const CSV_HEADER: &'static str = "label,reference,candidate,rel_dev,pass";

    pub fn new(label: impl Into<String>, reference: f64, candidate: f64, tolerance: f64) -> Self {
        let rel_dev = (candidate - reference).abs() / reference.abs().max(FLOOR);
        Self {
            label: label.into(),
            reference,
            candidate,
            rel_dev,
            tolerance,
            pass: rel_dev <= tolerance,
        }
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{:e},{:e},{:e},{}",
            self.label, self.reference, self.candidate, self.rel_dev, self.pass
        )
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.csv_row())
    }
}

/// Box eigenfrequencies by a plain triple loop over the mode indices
/// n₁, n₂, n₃, with multiplicities from sorting and grouping.
///
/// Refuses scans above [`ORACLE_SCAN_BUDGET`] points.
pub fn naive_box_count(
    geom: &BoxGeometry,
    bc: BoundaryCondition,
    omega_max: f64,
) -> Result<ModeList> {
    let [l1, l2, l3] = geom.lengths();
    let k_max = omega_max / C;
    // Index ranges wide enough for every admitted mode with |k| ≤ k_max.
    let range = |l: f64| -> (i64, i64) {
        let n = (k_max * l / PI).ceil() as i64 + 1;
        match bc {
            BoundaryCondition::Dirichlet => (1, n),
            _ => (-n, n),
        }
    };
    let (r1, r2, r3) = (range(l1), range(l2), range(l3));
    let points: u128 = [r1, r2, r3]
        .iter()
        .map(|(a, b)| (b - a + 1) as u128)
        .product();
    if points > ORACLE_SCAN_BUDGET as u128 {
        return Err(Error::ResourceLimit {
            required: points,
            cap: ORACLE_SCAN_BUDGET,
        });
    }

    let mut freqs = Vec::new();
    for n1 in r1.0..=r1.1 {
        for n2 in r2.0..=r2.1 {
            for n3 in r3.0..=r3.1 {
                let (a, b, c) = (n1 as f64, n2 as f64, n3 as f64);
                let k = match bc {
                    BoundaryCondition::Periodic => {
                        2.0 * PI
                            * (a * a / (l1 * l1) + b * b / (l2 * l2) + c * c / (l3 * l3)).sqrt()
                    }
                    BoundaryCondition::Antiperiodic => {
                        let (a, b, c) = (a + 0.5, b + 0.5, c + 0.5);
                        2.0 * PI
                            * (a * a / (l1 * l1) + b * b / (l2 * l2) + c * c / (l3 * l3)).sqrt()
                    }
                    BoundaryCondition::Dirichlet => {
                        PI * (a * a / (l1 * l1) + b * b / (l2 * l2) + c * c / (l3 * l3)).sqrt()
                    }
                };
                let omega = C * k;
                if omega > 0.0 && omega <= omega_max {
                    freqs.push(omega);
                }
            }
        }
    }
    freqs.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut entries: Vec<Mode> = Vec::new();
    let mut first = 0.0;
    for omega in freqs {
        match entries.last_mut() {
            Some(last) if omega - first <= 1e-12 * first => last.multiplicity += 2,
            _ => {
                first = omega;
                entries.push(Mode {
                    omega,
                    multiplicity: 2,
                });
            }
        }
    }
    ModeList::from_entries(entries, omega_max)
}

/// Settings for the Richardson-extrapolated midpoint rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RombergOptions {
    /// Panels in the coarsest midpoint rule.
    pub steps: usize,
    /// Maximum number of halvings.
    pub max_levels: usize,
    /// Relative change between successive extrapolants that counts as converged.
    pub rel_tol: f64,
}

impl RombergOptions {
    pub fn with_steps(steps: usize) -> Self {
        Self {
            steps: steps.max(1),
            max_levels: 16,
            rel_tol: 1e-11,
        }
    }
}

/// Composite midpoint rule with `n` panels.
pub fn midpoint<F: Fn(f64) -> Result<f64>>(f: &F, a: f64, b: f64, n: usize) -> Result<f64> {
    let h = (b - a) / n as f64;
    let mut sum = 0.0;
    for i in 0..n {
        sum += f(a + (i as f64 + 0.5) * h)?;
    }
    Ok(sum * h)
}

/// Midpoint rule in u = √(ω − start) over [start, end]: the integrand
/// becomes 2u·f(start + u²), which is regular when f has an inverse
/// square-root singularity at `start`.
pub fn midpoint_sqrt<F: Fn(f64) -> Result<f64>>(
    f: &F,
    start: f64,
    end: f64,
    n: usize,
) -> Result<f64> {
    let g = |u: f64| -> Result<f64> { Ok(2.0 * u * f(start + u * u)?) };
    midpoint(&g, 0.0, (end - start).sqrt(), n)
}

fn romberg<R: Fn(usize) -> Result<f64>>(rule: R, opts: RombergOptions) -> Result<f64> {
    let mut previous_row: Vec<f64> = vec![rule(opts.steps)?];
    let mut n = opts.steps;
    for level in 1..=opts.max_levels {
        n *= 2;
        let mut row = vec![rule(n)?];
        let mut factor = 1.0;
        for j in 1..=level {
            factor *= 4.0;
            let better = row[j - 1] + (row[j - 1] - previous_row[j - 1]) / (factor - 1.0);
            row.push(better);
        }
        let (last, prev) = (row[level], previous_row[level - 1]);
        if (last - prev).abs() <= opts.rel_tol * last.abs() || (last == 0.0 && prev == 0.0) {
            return Ok(last);
        }
        previous_row = row;
        if level == opts.max_levels {
            return Err(Error::NonConvergence {
                levels: level,
                last,
                previous: prev,
            });
        }
    }
    Ok(previous_row[0])
}

/// ∫₀^{ω_max} u(ω) dω for a regular density, J/m³.
pub fn quadrature_total_energy<F: Fn(f64) -> f64>(
    density: F,
    omega_max: f64,
    steps: usize,
) -> Result<f64> {
    let f = |w: f64| Ok(density(w));
    romberg(
        |n| midpoint(&f, 0.0, omega_max, n),
        RombergOptions::with_steps(steps),
    )
}

/// ∫₀^{ω_max} u(ω) dω for a density with inverse square-root singularities
/// or jumps at the given breakpoints. Each interval between consecutive
/// breakpoints is integrated separately in u = √(ω − left edge).
pub fn quadrature_across_breakpoints<F: Fn(f64) -> Result<f64>>(
    density: F,
    breakpoints: &[f64],
    omega_max: f64,
    opts: RombergOptions,
) -> Result<f64> {
    let mut edges = vec![0.0];
    edges.extend(
        breakpoints
            .iter()
            .copied()
            .filter(|&b| b > 0.0 && b < omega_max),
    );
    edges.push(omega_max);
    edges.sort_by(|a, b| a.partial_cmp(b).unwrap());
    edges.dedup();
    let mut total = 0.0;
    for pair in edges.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        total += romberg(|n| midpoint_sqrt(&density, a, b, n), opts)?;
    }
    Ok(total)
}
