//! Run configuration: command-line flags, key=value files and validation.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Serialize;

use super::CliError;
use crate::binned::DEFAULT_DELTA_OMEGA;
use crate::geometry::{
    BoundaryCondition, BoxGeometry, CavityGeometry, FilmGeometry, RodGeometry, SphereGeometry,
};
use crate::modes::DEFAULT_LATTICE_CAP;

pub const DEFAULT_OMEGA_MAX: f64 = 1e15;
pub const DEFAULT_SAMPLES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeometryKind {
    Film,
    Rod,
    Box,
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BcArg {
    Periodic,
    Antiperiodic,
    Dirichlet,
}

impl From<BcArg> for BoundaryCondition {
    fn from(b: BcArg) -> Self {
        match b {
            BcArg::Periodic => BoundaryCondition::Periodic,
            BcArg::Antiperiodic => BoundaryCondition::Antiperiodic,
            BcArg::Dirichlet => BoundaryCondition::Dirichlet,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Planck,
    Weyl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Run flags as given. Every field is optional so that a config file can
/// fill whatever the command line leaves out.
#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// Cavity shape.
    #[arg(long, value_enum)]
    pub geometry: Option<GeometryKind>,
    /// Boundary condition (sphere is always dirichlet).
    #[arg(long, value_enum)]
    pub bc: Option<BcArg>,
    /// Single length in meters: film thickness, square rod side or cube side.
    #[arg(long)]
    pub length: Option<f64>,
    /// Comma-separated lengths in meters (rod: L1,L2; box: L1,L2,L3).
    #[arg(long, value_delimiter = ',')]
    pub lengths: Option<Vec<f64>>,
    /// Sphere diameter in meters.
    #[arg(long)]
    pub diameter: Option<f64>,
    /// Temperature in kelvin.
    #[arg(long)]
    pub temperature: Option<f64>,
    /// Lowest sampled angular frequency, rad/s.
    #[arg(long)]
    pub omega_min: Option<f64>,
    /// Highest angular frequency, rad/s [default: 1e15].
    #[arg(long)]
    pub omega_max: Option<f64>,
    /// Number of sample points for film and rod spectra [default: 1000].
    #[arg(long)]
    pub samples: Option<usize>,
    /// Bin width for box and sphere spectra, rad/s [default: 1e13].
    #[arg(long)]
    pub delta_omega: Option<f64>,
    /// Reference densities to append (comma-separated).
    #[arg(long, value_enum, value_delimiter = ',')]
    pub compare: Option<Vec<Comparison>>,
    /// Output encoding.
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Output file [default: standard output].
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Largest lattice scan a box or sphere cutoff may imply.
    #[arg(long)]
    pub max_lattice_points: Option<u64>,
    /// key=value file using the flag names as keys; flags take precedence.
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// Wrapper used to parse config-file entries with the flag grammar.
#[derive(Debug, clap::Parser)]
#[command(no_binary_name = true)]
struct FileArgs {
    #[command(flatten)]
    args: RunArgs,
}

impl RunArgs {
    /// Fills unset fields from `base`.
    pub fn or(self, base: RunArgs) -> RunArgs {
        RunArgs {
            geometry: self.geometry.or(base.geometry),
            bc: self.bc.or(base.bc),
            length: self.length.or(base.length),
            lengths: self.lengths.or(base.lengths),
            diameter: self.diameter.or(base.diameter),
            temperature: self.temperature.or(base.temperature),
            omega_min: self.omega_min.or(base.omega_min),
            omega_max: self.omega_max.or(base.omega_max),
            samples: self.samples.or(base.samples),
            delta_omega: self.delta_omega.or(base.delta_omega),
            compare: self.compare.or(base.compare),
            format: self.format.or(base.format),
            output: self.output.or(base.output),
            max_lattice_points: self.max_lattice_points.or(base.max_lattice_points),
            config: self.config.or(base.config),
        }
    }

    /// Parses key=value lines. Blank lines and `#` comments are skipped.
    pub fn parse_key_values(text: &str, origin: &str) -> Result<RunArgs, CliError> {
        let mut argv = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!("{origin}:{}: expected key=value", n + 1))
            })?;
            let key = key.trim();
            if key == "config" {
                return Err(CliError::Usage(format!(
                    "{origin}:{}: config files cannot nest",
                    n + 1
                )));
            }
            argv.push(format!("--{key}"));
            let value: Vec<&str> = value.split(',').map(str::trim).collect();
            argv.push(value.join(","));
        }
        <FileArgs as clap::Parser>::try_parse_from(argv)
            .map(|f| f.args)
            .map_err(|e| {
                CliError::Usage(format!("{origin}: {}", e.render().to_string().trim_end()))
            })
    }

    pub fn load_file(path: &Path) -> Result<RunArgs, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        Self::parse_key_values(&text, &path.display().to_string())
    }

    /// Merges in the config file, if one was named.
    pub fn with_config_file(self) -> Result<RunArgs, CliError> {
        match &self.config {
            Some(path) => {
                let file = Self::load_file(path)?;
                Ok(self.or(file))
            }
            None => Ok(self),
        }
    }
}

/// A complete, validated run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub geometry: CavityGeometry,
    pub bc: BoundaryCondition,
    pub temperature: f64,
    pub omega_min: f64,
    pub omega_max: f64,
    pub samples: usize,
    pub delta_omega: f64,
    pub compare: Vec<Comparison>,
    pub format: OutputFormat,
    #[serde(skip)]
    pub output: Option<PathBuf>,
    pub max_lattice_points: u64,
}

fn usage(msg: impl fmt::Display) -> CliError {
    CliError::Usage(msg.to_string())
}

fn lengths_for(args: &RunArgs, kind: GeometryKind, count: usize) -> Result<Vec<f64>, CliError> {
    match (&args.lengths, args.length) {
        (Some(_), Some(_)) => Err(usage("give either --length or --lengths, not both")),
        (Some(ls), None) if ls.len() == count => Ok(ls.clone()),
        (Some(ls), None) => Err(usage(format!(
            "{kind:?} geometry needs {count} length(s), got {}",
            ls.len()
        ))),
        (None, Some(l)) => Ok(vec![l; count]),
        (None, None) => Err(usage(format!(
            "{kind:?} geometry needs --length or --lengths"
        ))),
    }
}

impl RunConfig {
    /// Validates merged flags. `needs_temperature` is false for commands
    /// that only enumerate modes.
    pub fn from_args(args: &RunArgs, needs_temperature: bool) -> Result<RunConfig, CliError> {
        let kind = args
            .geometry
            .ok_or_else(|| usage("--geometry is required"))?;
        let geometry = match kind {
            GeometryKind::Film => {
                CavityGeometry::Film(FilmGeometry::new(lengths_for(args, kind, 1)?[0])?)
            }
            GeometryKind::Rod => {
                let l = lengths_for(args, kind, 2)?;
                CavityGeometry::Rod(RodGeometry::new(l[0], l[1])?)
            }
            GeometryKind::Box => {
                let l = lengths_for(args, kind, 3)?;
                CavityGeometry::Box(BoxGeometry::new(l[0], l[1], l[2])?)
            }
            GeometryKind::Sphere => {
                if args.length.is_some() || args.lengths.is_some() {
                    return Err(usage("sphere takes --diameter, not --length"));
                }
                let d = args
                    .diameter
                    .ok_or_else(|| usage("sphere geometry needs --diameter"))?;
                CavityGeometry::Sphere(SphereGeometry::new(d)?)
            }
        };
        if kind != GeometryKind::Sphere && args.diameter.is_some() {
            return Err(usage("--diameter applies to spheres only"));
        }
        let bc = match (kind, args.bc) {
            (GeometryKind::Sphere, None | Some(BcArg::Dirichlet)) => BoundaryCondition::Dirichlet,
            (GeometryKind::Sphere, Some(other)) => {
                return Err(usage(format!(
                    "sphere supports only the dirichlet boundary condition, got {}",
                    BoundaryCondition::from(other)
                )))
            }
            (_, Some(bc)) => bc.into(),
            (_, None) => return Err(usage("--bc is required")),
        };

        let temperature = match args.temperature {
            Some(t) if t > 0.0 && t.is_finite() => t,
            Some(t) => return Err(usage(format!("temperature must be positive, got {t}"))),
            None if needs_temperature => return Err(usage("--temperature is required")),
            None => 300.0,
        };
        let omega_min = args.omega_min.unwrap_or(0.0);
        let omega_max = args.omega_max.unwrap_or(DEFAULT_OMEGA_MAX);
        if !(omega_min >= 0.0 && omega_max.is_finite() && omega_min < omega_max) {
            return Err(usage(format!(
                "need 0 <= omega-min < omega-max, got {omega_min} and {omega_max}"
            )));
        }
        let samples = args.samples.unwrap_or(DEFAULT_SAMPLES);
        if samples < 2 {
            return Err(usage("--samples must be at least 2"));
        }
        let delta_omega = args.delta_omega.unwrap_or(DEFAULT_DELTA_OMEGA);
        if !(delta_omega > 0.0 && delta_omega.is_finite()) {
            return Err(usage(format!(
                "--delta-omega must be positive, got {delta_omega}"
            )));
        }
        let mut compare = args.compare.clone().unwrap_or_default();
        compare.sort();
        compare.dedup();
        if compare.contains(&Comparison::Weyl)
            && matches!(geometry, CavityGeometry::Film(_) | CavityGeometry::Rod(_))
        {
            return Err(usage(
                "weyl comparison needs a closed cavity (box or sphere)",
            ));
        }
        Ok(RunConfig {
            geometry,
            bc,
            temperature,
            omega_min,
            omega_max,
            samples,
            delta_omega,
            compare,
            format: args.format.unwrap_or_default(),
            output: args.output.clone(),
            max_lattice_points: args.max_lattice_points.unwrap_or(DEFAULT_LATTICE_CAP),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<RunConfig, CliError> {
        RunConfig::from_args(&RunArgs::parse_key_values(text, "test")?, true)
    }

    #[test]
    fn key_value_file() {
        let cfg = parse(
            "# cube\ngeometry = box\nbc=periodic\nlengths=2e-4,2e-4,2e-4\ntemperature=300\ncompare=weyl,planck\n",
        )
        .unwrap();
        assert_eq!(cfg.compare, vec![Comparison::Planck, Comparison::Weyl]);
        assert_eq!(
            cfg.geometry,
            CavityGeometry::Box(BoxGeometry::cube(2e-4).unwrap())
        );
        assert_eq!(cfg.delta_omega, DEFAULT_DELTA_OMEGA);
    }

    #[test]
    fn flags_win_over_file() {
        let file = RunArgs::parse_key_values(
            "geometry=film\nlength=1e-5\nbc=periodic\ntemperature=3",
            "t",
        )
        .unwrap();
        let flags = RunArgs {
            temperature: Some(300.0),
            ..RunArgs::default()
        };
        let cfg = RunConfig::from_args(&flags.or(file), true).unwrap();
        assert_eq!(cfg.temperature, 300.0);
        assert_eq!(cfg.bc, BoundaryCondition::Periodic);
    }

    #[test]
    fn rejections() {
        assert!(parse("geometry=sphere\ndiameter=1e-5\nbc=periodic\ntemperature=300").is_err());
        assert!(
            parse("geometry=film\nlength=1e-5\nbc=dirichlet\ntemperature=300\ncompare=weyl")
                .is_err()
        );
        assert!(parse("geometry=box\nlengths=1,2\nbc=dirichlet\ntemperature=300").is_err());
        assert!(parse("geometry=rod\nlength=-1\nbc=dirichlet\ntemperature=300").is_err());
        assert!(
            parse("geometry=film\nlength=1\nbc=dirichlet\ntemperature=300\nsamples=1").is_err()
        );
        assert!(parse("geometry=film\nlength=1\ntemperature=300").is_err());
        assert!(parse("nonsense").is_err());
        assert!(parse("colour=blue").is_err());
    }

    #[test]
    fn sphere_defaults_to_dirichlet() {
        let cfg = parse("geometry=sphere\ndiameter=1e-5\ntemperature=300").unwrap();
        assert_eq!(cfg.bc, BoundaryCondition::Dirichlet);
    }
}
