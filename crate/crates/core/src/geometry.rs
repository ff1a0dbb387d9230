//! Cavity shapes and boundary conditions.
//!
//! Every boundary condition admits wavenumbers k = π·s / L along a finite
//! axis of length L, for a set of integers s:
//!
//! | condition    | admitted s          | k                  |
//! |--------------|---------------------|--------------------|
//! | periodic     | even, s = 2n, n ∈ ℤ | 2πn / L            |
//! | antiperiodic | odd, s = 2n + 1     | 2π(n + ½) / L      |
//! | Dirichlet    | s = n ≥ 1           | πn / L             |
//!
//! Working with the integer `s` keeps lattice arithmetic exact and lets the
//! three conditions share one enumeration path.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryCondition {
    Periodic,
    Antiperiodic,
    Dirichlet,
}

impl BoundaryCondition {
    pub const ALL: [BoundaryCondition; 3] = [
        BoundaryCondition::Periodic,
        BoundaryCondition::Antiperiodic,
        BoundaryCondition::Dirichlet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundaryCondition::Periodic => "periodic",
            BoundaryCondition::Antiperiodic => "antiperiodic",
            BoundaryCondition::Dirichlet => "dirichlet",
        }
    }

    /// Whether the half-wavenumber integer `s` is admitted (sign included).
    pub fn admits(self, s: i64) -> bool {
        match self {
            BoundaryCondition::Periodic => s % 2 == 0,
            BoundaryCondition::Antiperiodic => s % 2 != 0,
            BoundaryCondition::Dirichlet => s >= 1,
        }
    }

    /// The conventional mode index n for an admitted `s`.
    pub fn mode_index(self, s: i64) -> i64 {
        match self {
            BoundaryCondition::Periodic => s / 2,
            BoundaryCondition::Antiperiodic => (s - 1).div_euclid(2),
            BoundaryCondition::Dirichlet => s,
        }
    }

    /// Admitted non-negative `s` up to `s_max` (inclusive), each paired with
    /// the number of signed values it stands for.
    pub(crate) fn folded_axis(self, s_max: u64) -> Vec<(u64, u32)> {
        let (start, step) = match self {
            BoundaryCondition::Periodic => (0, 2),
            BoundaryCondition::Antiperiodic => (1, 2),
            BoundaryCondition::Dirichlet => (1, 1),
        };
        (start..=s_max)
            .step_by(step)
            .map(|s| {
                let weight = match self {
                    BoundaryCondition::Dirichlet => 1,
                    _ if s == 0 => 1,
                    _ => 2,
                };
                (s, weight)
            })
            .collect()
    }

    /// Number of signed admitted `s` with |s| ≤ s_max.
    pub(crate) fn axis_count(self, s_max: u64) -> u64 {
        match self {
            BoundaryCondition::Periodic => 2 * (s_max / 2) + 1,
            BoundaryCondition::Antiperiodic => 2 * s_max.div_ceil(2),
            BoundaryCondition::Dirichlet => s_max,
        }
    }
}

impl fmt::Display for BoundaryCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundaryCondition {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "periodic" => Ok(BoundaryCondition::Periodic),
            "antiperiodic" => Ok(BoundaryCondition::Antiperiodic),
            "dirichlet" => Ok(BoundaryCondition::Dirichlet),
            other => Err(format!(
                "unknown boundary condition '{other}' (expected periodic, antiperiodic or dirichlet)"
            )),
        }
    }
}

fn length(name: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(domain(name, value, "must be finite"));
    }
    if value <= 0.0 {
        return Err(domain(name, value, "must be positive"));
    }
    Ok(value)
}

/// Two infinite parallel plates a distance `l1` apart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FilmGeometry {
    l1: f64,
}

impl FilmGeometry {
    pub fn new(l1: f64) -> Result<Self> {
        Ok(Self {
            l1: length("film thickness", l1)?,
        })
    }

    pub fn l1(&self) -> f64 {
        self.l1
    }
}

/// Infinitely long rod with a rectangular `l1` × `l2` cross-section.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RodGeometry {
    l1: f64,
    l2: f64,
}

impl RodGeometry {
    pub fn new(l1: f64, l2: f64) -> Result<Self> {
        Ok(Self {
            l1: length("rod length L1", l1)?,
            l2: length("rod length L2", l2)?,
        })
    }

    pub fn l1(&self) -> f64 {
        self.l1
    }

    pub fn l2(&self) -> f64 {
        self.l2
    }
}

/// Closed rectangular box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoxGeometry {
    lengths: [f64; 3],
}

impl BoxGeometry {
    pub fn new(l1: f64, l2: f64, l3: f64) -> Result<Self> {
        Ok(Self {
            lengths: [
                length("box length L1", l1)?,
                length("box length L2", l2)?,
                length("box length L3", l3)?,
            ],
        })
    }

    pub fn cube(side: f64) -> Result<Self> {
        Self::new(side, side, side)
    }

    pub fn lengths(&self) -> [f64; 3] {
        self.lengths
    }

    pub fn is_cube(&self) -> bool {
        let [a, b, c] = self.lengths;
        a == b && b == c
    }

    pub fn volume(&self) -> f64 {
        let [a, b, c] = self.lengths;
        a * b * c
    }
}

/// Closed sphere, specified by its diameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphereGeometry {
    diameter: f64,
}

impl SphereGeometry {
    pub fn new(diameter: f64) -> Result<Self> {
        Ok(Self {
            diameter: length("sphere diameter", diameter)?,
        })
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn radius(&self) -> f64 {
        0.5 * self.diameter
    }

    pub fn volume(&self) -> f64 {
        let r = self.radius();
        4.0 / 3.0 * std::f64::consts::PI * r * r * r
    }
}

/// Any cavity shape handled by the library.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum CavityGeometry {
    Film(FilmGeometry),
    Rod(RodGeometry),
    Box(BoxGeometry),
    Sphere(SphereGeometry),
}

#[cfg(test)]
mod tests {
    use super::*;
    use BoundaryCondition::*;

    fn brute_folded(bc: BoundaryCondition, s_max: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        for s in 0..=s_max as i64 {
            let weight = [s, -s].iter().filter(|&&v| bc.admits(v)).count() as u32
                - u32::from(s == 0 && bc.admits(0));
            if weight > 0 {
                out.push((s as u64, weight));
            }
        }
        out
    }

    #[test]
    fn folded_axis_matches_signed_enumeration() {
        for bc in BoundaryCondition::ALL {
            for s_max in 0..12 {
                assert_eq!(
                    bc.folded_axis(s_max),
                    brute_folded(bc, s_max),
                    "{bc} {s_max}"
                );
                let signed = (-(s_max as i64)..=s_max as i64)
                    .filter(|&s| bc.admits(s))
                    .count();
                assert_eq!(bc.axis_count(s_max), signed as u64);
            }
        }
    }

    #[test]
    fn mode_indices() {
        assert_eq!(Periodic.mode_index(-4), -2);
        assert_eq!(Antiperiodic.mode_index(1), 0);
        assert_eq!(Antiperiodic.mode_index(-1), -1);
        assert_eq!(Dirichlet.mode_index(3), 3);
    }

    #[test]
    fn parse_round_trip() {
        for bc in BoundaryCondition::ALL {
            assert_eq!(bc.name().parse::<BoundaryCondition>().unwrap(), bc);
        }
        assert!("neumann".parse::<BoundaryCondition>().is_err());
    }

    #[test]
    fn lengths_validated() {
        assert!(FilmGeometry::new(0.0).is_err());
        assert!(RodGeometry::new(1.0, -1.0).is_err());
        assert!(BoxGeometry::new(1.0, 1.0, f64::NAN).is_err());
        assert!(SphereGeometry::new(-2.0).is_err());
        assert!(BoxGeometry::cube(2.0).unwrap().is_cube());
    }
}
