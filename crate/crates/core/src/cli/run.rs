//! Spectrum and mode-list runs and their CSV/JSON encodings.

use std::fmt::Write as _;

use serde::Serialize;

use super::config::{Comparison, OutputFormat, RunConfig};
use super::CliError;
use crate::binned::{binned_density, BinnedSpectrum};
use crate::error::Error;
use crate::geometry::CavityGeometry;
use crate::modes::{enumerate_box_modes_capped, enumerate_sphere_modes_capped, ModeList};
use crate::physics::{planck_density, planck_raw, AngularFrequency, Temperature};
use crate::slab_rod::{film_density, rod_density};
use crate::weyl::{descriptors_for, weyl_raw, ClosedCavity};

/// One output column.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Column {
    pub name: &'static str,
    #[serde(skip)]
    pub header: &'static str,
    pub values: Vec<Option<f64>>,
}

/// A table of columns over a shared frequency axis.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub omega_header: &'static str,
    pub omega: Vec<f64>,
    pub columns: Vec<Column>,
    pub warnings: Vec<String>,
    /// Binned spectrum behind a box or sphere run.
    pub spectrum: Option<BinnedSpectrum>,
    /// Exact thermal energy of the enumerated modes, J.
    pub modal_energy: Option<f64>,
}

#[derive(Serialize)]
struct JsonSeries<'a> {
    name: &'static str,
    omega: &'a [f64],
    values: &'a [Option<f64>],
}

#[derive(Serialize)]
struct JsonDocument<'a> {
    config: &'a RunConfig,
    series: Vec<JsonSeries<'a>>,
    warnings: &'a [String],
}

impl RunOutput {
    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(self.omega_header);
        for c in &self.columns {
            out.push(',');
            out.push_str(c.header);
        }
        out.push('\n');
        for (i, w) in self.omega.iter().enumerate() {
            write!(out, "{w:e}").unwrap();
            for c in &self.columns {
                out.push(',');
                if let Some(v) = c.values[i] {
                    write!(out, "{v:e}").unwrap();
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, config: &RunConfig) -> String {
        let doc = JsonDocument {
            config,
            series: self
                .columns
                .iter()
                .map(|c| JsonSeries {
                    name: c.name,
                    omega: &self.omega,
                    values: &c.values,
                })
                .collect(),
            warnings: &self.warnings,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("finite values serialize");
        s.push('\n');
        s
    }

    pub fn render(&self, config: &RunConfig) -> String {
        match config.format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(config),
        }
    }

    /// Keeps only the omega column and the named column.
    pub fn only(mut self, name: &str) -> RunOutput {
        self.columns.retain(|c| c.name == name);
        self
    }
}

fn closed(cavity: &CavityGeometry) -> Option<ClosedCavity> {
    match *cavity {
        CavityGeometry::Box(b) => Some(ClosedCavity::Box(b)),
        CavityGeometry::Sphere(s) => Some(ClosedCavity::Sphere(s)),
        _ => None,
    }
}

fn omega(v: f64) -> Result<AngularFrequency, CliError> {
    Ok(AngularFrequency::new(v)?)
}

fn sample_grid(cfg: &RunConfig) -> Vec<f64> {
    let step = (cfg.omega_max - cfg.omega_min) / (cfg.samples - 1) as f64;
    (0..cfg.samples)
        .map(|i| {
            if i + 1 == cfg.samples {
                cfg.omega_max
            } else {
                cfg.omega_min + i as f64 * step
            }
        })
        .collect()
}

fn sampled(cfg: &RunConfig, t: Temperature) -> Result<RunOutput, CliError> {
    let grid = sample_grid(cfg);
    let mut warnings = Vec::new();
    let mut u = Vec::with_capacity(grid.len());
    for &w in &grid {
        let value = match cfg.geometry {
            CavityGeometry::Film(g) => Some(film_density(omega(w)?, t, g, cfg.bc).value()),
            CavityGeometry::Rod(g) => match rod_density(omega(w)?, t, g, cfg.bc) {
                Ok(v) => Some(v.value()),
                Err(e @ Error::ThresholdSingularity { .. }) => {
                    warnings.push(format!("skipped sample: {e}"));
                    None
                }
                Err(e) => return Err(e.into()),
            },
            _ => unreachable!("closed cavities are binned"),
        };
        u.push(value);
    }
    let mut columns = vec![Column {
        name: "u",
        header: "u_J_s_m3",
        values: u,
    }];
    if cfg.compare.contains(&Comparison::Planck) {
        let values = grid
            .iter()
            .map(|&w| Ok(Some(planck_density(omega(w)?, t).value())))
            .collect::<Result<_, CliError>>()?;
        columns.push(Column {
            name: "planck",
            header: "planck_J_s_m3",
            values,
        });
    }
    Ok(RunOutput {
        omega_header: "omega_rad_s",
        omega: grid,
        columns,
        warnings,
        spectrum: None,
        modal_energy: None,
    })
}

fn enumerate(cfg: &RunConfig, cavity: &ClosedCavity) -> Result<ModeList, CliError> {
    let w_max = omega(cfg.omega_max)?;
    Ok(match cavity {
        ClosedCavity::Box(b) => {
            enumerate_box_modes_capped(b, cfg.bc, w_max, cfg.max_lattice_points)?
        }
        ClosedCavity::Sphere(s) => enumerate_sphere_modes_capped(s, w_max, cfg.max_lattice_points)?,
    })
}

fn binned(
    cfg: &RunConfig,
    t: Temperature,
    cavity: ClosedCavity,
    modes: &ModeList,
) -> Result<RunOutput, CliError> {
    let spec = binned_density(modes, t, cfg.delta_omega, cavity.volume())?;
    let keep: Vec<usize> = (0..spec.len())
        .filter(|&i| spec.omega_left(i) >= cfg.omega_min)
        .collect();
    let pick = |all: Vec<f64>| -> Vec<Option<f64>> { keep.iter().map(|&i| Some(all[i])).collect() };

    let mut columns = vec![Column {
        name: "u",
        header: "u_J_s_m3",
        values: pick(spec.values().to_vec()),
    }];
    let kt = t.thermal_energy();
    if cfg.compare.contains(&Comparison::Planck) {
        let avg = spec.bin_averages(|w| planck_raw(w, kt));
        columns.push(Column {
            name: "planck",
            header: "planck_J_s_m3",
            values: pick(avg),
        });
    }
    if cfg.compare.contains(&Comparison::Weyl) {
        let desc = descriptors_for(&cavity);
        let avg = spec.bin_averages(|w| weyl_raw(w, kt, &desc));
        columns.push(Column {
            name: "weyl",
            header: "weyl_J_s_m3",
            values: pick(avg),
        });
    }
    let mut warnings = Vec::new();
    if spec.partial_last() {
        warnings.push(format!(
            "last bin extends past omega-max {:e}: omega-max is not a multiple of delta-omega",
            cfg.omega_max
        ));
    }
    Ok(RunOutput {
        omega_header: "omega_left_rad_s",
        omega: keep.iter().map(|&i| spec.omega_left(i)).collect(),
        columns,
        warnings,
        modal_energy: Some(modes.thermal_energy(t)),
        spectrum: Some(spec),
    })
}

/// Computes the spectrum a configuration describes.
pub fn spectrum(cfg: &RunConfig) -> Result<RunOutput, CliError> {
    let t = Temperature::new(cfg.temperature)?;
    match closed(&cfg.geometry) {
        None => sampled(cfg, t),
        Some(cavity) => {
            let modes = enumerate(cfg, &cavity)?;
            binned(cfg, t, cavity, &modes)
        }
    }
}

/// The Planck reference alone, on the grid `cfg` would use.
pub fn planck_reference(cfg: &RunConfig) -> Result<RunOutput, CliError> {
    let mut cfg = cfg.clone();
    cfg.compare = vec![Comparison::Planck];
    let t = Temperature::new(cfg.temperature)?;
    let out = match closed(&cfg.geometry) {
        None => sampled(&cfg, t)?,
        Some(cavity) => binned(&cfg, t, cavity, &ModeList::empty(cfg.omega_max)?)?,
    };
    Ok(RunOutput {
        spectrum: None,
        modal_energy: None,
        ..out.only("planck")
    })
}

/// Mode list of a closed cavity.
pub fn modes(cfg: &RunConfig) -> Result<ModeList, CliError> {
    let cavity = closed(&cfg.geometry)
        .ok_or_else(|| CliError::Usage("modes needs a closed cavity (box or sphere)".into()))?;
    enumerate(cfg, &cavity)
}

pub fn render_modes(cfg: &RunConfig, list: &ModeList) -> String {
    match cfg.format {
        OutputFormat::Csv => {
            let mut buf = Vec::new();
            list.write_csv(&mut buf).expect("writing to memory");
            String::from_utf8(buf).expect("ascii output")
        }
        OutputFormat::Json => RunOutput {
            omega_header: "omega_rad_s",
            omega: list.iter().map(|m| m.omega).collect(),
            columns: vec![Column {
                name: "multiplicity",
                header: "multiplicity",
                values: list.iter().map(|m| Some(m.multiplicity as f64)).collect(),
            }],
            warnings: Vec::new(),
            spectrum: None,
            modal_energy: None,
        }
        .to_json(cfg),
    }
}
