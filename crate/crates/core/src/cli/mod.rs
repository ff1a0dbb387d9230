//! The `cavityrad` command-line front end.
//!
//! ```text
//! cavityrad spectrum --geometry box --bc periodic --lengths 2e-4,2e-4,2e-4 --temperature 300
//! cavityrad modes --geometry sphere --diameter 1e-5 --omega-max 2e14
//! cavityrad figures 1..4 --output-dir out
//! ```
//!
//! Exit codes: 0 success, 1 I/O or numerical failure, 2 usage error,
//! 3 resource cap exceeded.

pub mod config;
pub mod figures;
pub mod run;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::error::Error;
pub use config::{RunArgs, RunConfig};

pub const THREADS_ENV: &str = "CAVITYRAD_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("{0}: {1}")]
    Io(String, #[source] io::Error),
    #[error(transparent)]
    Compute(Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Io(..) | CliError::Compute(_) => 1,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain { .. } => CliError::Usage(e.to_string()),
            Error::ResourceLimit { .. } => CliError::Resource(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cavityrad",
    version,
    about = "Blackbody radiation spectra in finite cavities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral energy density of a cavity, with optional reference columns.
    Spectrum(RunArgs),
    /// Eigenfrequencies and multiplicities of a box or sphere.
    Modes(RunArgs),
    /// Regenerate the data behind figures 1 to 4 (ids, or a range like 1..4).
    Figures {
        #[arg(required = true, num_args = 1..)]
        ids: Vec<String>,
        /// Directory for the CSV files.
        #[arg(long, default_value = ".")]
        output_dir: PathBuf,
    },
}

fn parse_ids(tokens: &[String]) -> Result<Vec<u32>, CliError> {
    let bad = |t: &str| CliError::Usage(format!("invalid figure id `{t}`"));
    let mut ids = Vec::new();
    for t in tokens {
        if let Some((a, b)) = t.split_once("..") {
            let a: u32 = a.parse().map_err(|_| bad(t))?;
            let b: u32 = b.trim_start_matches('=').parse().map_err(|_| bad(t))?;
            ids.extend(a..=b);
        } else {
            ids.push(t.parse().map_err(|_| bad(t))?);
        }
    }
    for &id in &ids {
        if !figures::FIGURE_IDS.contains(&id) {
            return Err(CliError::Usage(format!(
                "unknown figure id {id}; expected one of 1, 2, 3, 4"
            )));
        }
    }
    Ok(ids)
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "{THREADS_ENV} must be a positive integer, got `{raw}`"
        ))
    })?;
    // A pool that already exists (repeated calls in one process) is kept.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn emit(text: &str, output: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
        }
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io("standard output".into(), e)),
    }
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Spectrum(args) => {
            let cfg = RunConfig::from_args(&args.with_config_file()?, true)?;
            let out = run::spectrum(&cfg)?;
            for w in &out.warnings {
                let _ = writeln!(stderr, "warning: {w}");
            }
            emit(&out.render(&cfg), cfg.output.as_deref(), stdout)
        }
        Command::Modes(args) => {
            let cfg = RunConfig::from_args(&args.with_config_file()?, false)?;
            let list = run::modes(&cfg)?;
            let _ = writeln!(
                stderr,
                "{} distinct frequencies, N(<= {:e} rad/s) = {}",
                list.len(),
                cfg.omega_max,
                list.total_modes()
            );
            emit(
                &run::render_modes(&cfg, &list),
                cfg.output.as_deref(),
                stdout,
            )
        }
        Command::Figures { ids, output_dir } => {
            for id in parse_ids(&ids)? {
                for (path, out) in figures::write_figure(id, &output_dir)? {
                    for w in &out.warnings {
                        let _ = writeln!(stderr, "warning: {}: {w}", path.display());
                    }
                    let _ = writeln!(stderr, "wrote {}", path.display());
                }
            }
            Ok(())
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                return 2;
            }
            let _ = stdout.write_all(text.as_bytes());
            return 0;
        }
    };
    match execute(cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
