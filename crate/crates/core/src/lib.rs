//! Blackbody radiation in finite cavities.
//!
//! Spectral energy densities for films, rods, boxes and spheres under
//! periodic, antiperiodic and Dirichlet boundary conditions, with the
//! infinite-volume Planck density and the three-term asymptotic (Weyl)
//! density as references.
//!
//! * [`physics`]: constants, ε̄(ω), Planck density and energy integrals.
//! * [`slab_rod`]: closed-form film densities and mode-sum rod densities.
//! * [`modes`] and [`bessel`]: exact eigenfrequency lists for boxes and spheres.
//! * [`binned`] and [`weyl`]: binned spectra of mode lists and the asymptotic density.
//! * [`oracle`]: slow, independent reference computations for testing.
//! * [`cli`]: the `cavityrad` command-line front end.

pub mod bessel;
pub mod binned;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod modes;
pub mod oracle;
pub mod physics;
mod quad;
pub mod slab_rod;
pub mod weyl;

pub use binned::{binned_density, BinnedSpectrum, DEFAULT_DELTA_OMEGA};
pub use error::{Error, Result};
pub use geometry::{
    BoundaryCondition, BoxGeometry, CavityGeometry, FilmGeometry, RodGeometry, SphereGeometry,
};
pub use modes::{enumerate_box_modes, enumerate_sphere_modes, Mode, ModeList};
pub use physics::{
    mean_oscillator_energy, planck_density, planck_energy_fraction_below, AngularFrequency,
    PhysicalConstants, SpectralDensity, Temperature,
};
pub use slab_rod::{film_density, film_mode_count, rod_density, rod_transverse_modes};
pub use weyl::{descriptors_for, weyl_density, ClosedCavity, GeometryDescriptors};
