//! Figure presets: each preset file lists panels, and each panel names the
//! curves to compute with a shared run configuration.
//!
//! ```text
//! [defaults]          keys applied to every panel
//! geometry = box
//! [0.2mm]             one section per panel
//! length = 2e-4
//! curves = periodic, antiperiodic, planck
//! ```
//!
//! A curve is either a boundary condition (the cavity spectrum) or
//! `planck` (the reference density alone on the panel's grid).

use std::path::{Path, PathBuf};

use super::config::{BcArg, RunArgs, RunConfig};
use super::run::{planck_reference, spectrum, RunOutput};
use super::CliError;

const PRESETS: [(u32, &str); 4] = [
    (1, include_str!("../../presets/fig1.conf")),
    (2, include_str!("../../presets/fig2.conf")),
    (3, include_str!("../../presets/fig3.conf")),
    (4, include_str!("../../presets/fig4.conf")),
];

pub const FIGURE_IDS: [u32; 4] = [1, 2, 3, 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curve {
    Cavity(BcArg),
    Planck,
}

impl Curve {
    fn parse(name: &str) -> Result<Curve, CliError> {
        match name {
            "periodic" => Ok(Curve::Cavity(BcArg::Periodic)),
            "antiperiodic" => Ok(Curve::Cavity(BcArg::Antiperiodic)),
            "dirichlet" => Ok(Curve::Cavity(BcArg::Dirichlet)),
            "planck" => Ok(Curve::Planck),
            other => Err(CliError::Usage(format!("unknown curve `{other}`"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Curve::Cavity(BcArg::Periodic) => "periodic",
            Curve::Cavity(BcArg::Antiperiodic) => "antiperiodic",
            Curve::Cavity(BcArg::Dirichlet) => "dirichlet",
            Curve::Planck => "planck",
        }
    }
}

/// One curve of a figure with its resolved configuration.
#[derive(Debug, Clone)]
pub struct FigureCurve {
    pub panel: String,
    pub curve: Curve,
    pub config: RunConfig,
}

impl FigureCurve {
    pub fn file_name(&self, figure: u32) -> String {
        format!("fig{figure}_{}_{}.csv", self.panel, self.curve.name())
    }

    pub fn compute(&self) -> Result<RunOutput, CliError> {
        match self.curve {
            Curve::Planck => planck_reference(&self.config),
            Curve::Cavity(_) => spectrum(&self.config),
        }
    }
}

/// Splits preset text into (section, body) pairs.
fn sections(text: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        let trimmed = line.trim();
        if let Some(name) = trimmed.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            out.push((name.trim().to_string(), String::new()));
        } else if let Some((_, body)) = out.last_mut() {
            body.push_str(line);
            body.push('\n');
        }
    }
    out
}

/// Parses a preset into its curves, in file order.
pub fn parse_preset(text: &str, origin: &str) -> Result<Vec<FigureCurve>, CliError> {
    let mut defaults = RunArgs::default();
    let mut curves = Vec::new();
    for (panel, body) in sections(text) {
        let mut names = Vec::new();
        let mut rest = String::new();
        for line in body.lines() {
            match line.split_once('=') {
                Some((k, v)) if k.trim() == "curves" => {
                    names = v
                        .split(',')
                        .map(|s| s.trim().to_string())
                        .filter(|s| !s.is_empty())
                        .collect();
                }
                _ => {
                    rest.push_str(line);
                    rest.push('\n');
                }
            }
        }
        let args = RunArgs::parse_key_values(&rest, &format!("{origin} [{panel}]"))?;
        if panel == "defaults" {
            defaults = args;
            continue;
        }
        let args = args.or(defaults.clone());
        for name in names {
            let curve = Curve::parse(&name)?;
            let mut a = args.clone();
            if let Curve::Cavity(bc) = curve {
                a.bc = Some(bc);
            } else if a.bc.is_none() {
                a.bc = Some(BcArg::Dirichlet);
            }
            curves.push(FigureCurve {
                panel: panel.clone(),
                curve,
                config: RunConfig::from_args(&a, true)?,
            });
        }
    }
    Ok(curves)
}

/// Curves of a built-in figure.
pub fn figure(id: u32) -> Result<Vec<FigureCurve>, CliError> {
    let (_, text) = PRESETS.iter().find(|(n, _)| *n == id).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown figure id {id}; expected one of 1, 2, 3, 4"
        ))
    })?;
    parse_preset(text, &format!("fig{id}.conf"))
}

/// Computes and writes every curve of a figure, returning the paths written.
pub fn write_figure(id: u32, dir: &Path) -> Result<Vec<(PathBuf, RunOutput)>, CliError> {
    let curves = figure(id)?;
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.display().to_string(), e))?;
    let mut written = Vec::with_capacity(curves.len());
    for c in curves {
        let out = c.compute()?;
        let path = dir.join(c.file_name(id));
        std::fs::write(&path, out.to_csv())
            .map_err(|e| CliError::Io(path.display().to_string(), e))?;
        written.push((path, out));
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_parse() {
        let counts: Vec<usize> = FIGURE_IDS
            .iter()
            .map(|&id| figure(id).unwrap().len())
            .collect();
        assert_eq!(counts, vec![12, 12, 9, 6]);
        let fig3 = figure(3).unwrap();
        assert_eq!(fig3.iter().filter(|c| c.curve == Curve::Planck).count(), 3);
        assert_eq!(fig3[0].file_name(3), "fig3_0.01mm_periodic.csv");
    }

    #[test]
    fn unknown_figure() {
        assert!(matches!(figure(9), Err(CliError::Usage(_))));
    }
}
