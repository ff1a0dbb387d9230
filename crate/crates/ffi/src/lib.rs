//! C ABI for `cavityrad`.
//!
//! Every function returns a [`CavityradStatus`] and writes results through
//! out-pointers. On failure, [`cavityrad_last_error_message`] describes the
//! most recent error on the calling thread. Mode lists and binned spectra
//! are opaque handles released with their `_free` functions.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cavityrad::modes::{enumerate_box_modes_capped, enumerate_sphere_modes_capped};
use cavityrad::{
    binned_density, descriptors_for, film_density, film_mode_count, mean_oscillator_energy,
    planck_density, planck_energy_fraction_below, rod_density, weyl_density, AngularFrequency,
    BinnedSpectrum, BoundaryCondition, BoxGeometry, ClosedCavity, Error, FilmGeometry,
    GeometryDescriptors, ModeList, RodGeometry, SphereGeometry, Temperature,
};

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CavityradStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    ThresholdSingularity = 3,
    ResourceLimit = 4,
    InvalidModeList = 5,
    NonConvergence = 6,
    IndexOutOfRange = 7,
    InvalidBoundary = 8,
    Panic = 9,
}

/// Boundary condition codes accepted by the `bc` parameters.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CavityradBoundary {
    Periodic = 0,
    Antiperiodic = 1,
    Dirichlet = 2,
}

/// Volume (m^3), surface area (m^2) and integrated mean curvature (m).
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityradDescriptors {
    pub volume: f64,
    pub area: f64,
    pub mean_curvature: f64,
}

impl From<GeometryDescriptors> for CavityradDescriptors {
    fn from(d: GeometryDescriptors) -> Self {
        Self {
            volume: d.volume,
            area: d.area,
            mean_curvature: d.mean_curvature,
        }
    }
}

impl From<CavityradDescriptors> for GeometryDescriptors {
    fn from(d: CavityradDescriptors) -> Self {
        Self {
            volume: d.volume,
            area: d.area,
            mean_curvature: d.mean_curvature,
        }
    }
}

/// Opaque list of eigenfrequencies with multiplicities.
pub struct CavityradModeList(ModeList);

/// Opaque binned spectral density.
pub struct CavityradSpectrum(BinnedSpectrum);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(CavityradStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Domain { .. } => CavityradStatus::Domain,
            Error::ThresholdSingularity { .. } => CavityradStatus::ThresholdSingularity,
            Error::ResourceLimit { .. } => CavityradStatus::ResourceLimit,
            Error::InvalidModeList(_) => CavityradStatus::InvalidModeList,
            Error::NonConvergence { .. } => CavityradStatus::NonConvergence,
        };
        Failure(status, e.to_string())
    }
}

fn null(name: &str) -> Failure {
    Failure(CavityradStatus::NullPointer, format!("{name} is null"))
}

/// Runs `body`, translating errors and panics into status codes.
fn guard<F: FnOnce() -> Result<(), Failure>>(body: F) -> CavityradStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CavityradStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            CavityradStatus::Panic
        }
    }
}

unsafe fn write<T>(out: *mut T, value: T, name: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(name));
    }
    out.write(value);
    Ok(())
}

unsafe fn borrow<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(name))
}

fn boundary(code: i32) -> Result<BoundaryCondition, Failure> {
    match code {
        0 => Ok(BoundaryCondition::Periodic),
        1 => Ok(BoundaryCondition::Antiperiodic),
        2 => Ok(BoundaryCondition::Dirichlet),
        other => Err(Failure(
            CavityradStatus::InvalidBoundary,
            format!("unknown boundary condition code {other}"),
        )),
    }
}

fn omega(v: f64) -> Result<AngularFrequency, Failure> {
    Ok(AngularFrequency::new(v)?)
}

fn temperature(v: f64) -> Result<Temperature, Failure> {
    Ok(Temperature::new(v)?)
}

/// Message for the last failed call on this thread, or NULL after a
/// success. The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn cavityrad_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Planck spectral energy density, J s / m^3.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_planck_density(
    omega_rad_s: f64,
    kelvin: f64,
    out: *mut f64,
) -> CavityradStatus {
    guard(|| {
        let v = planck_density(omega(omega_rad_s)?, temperature(kelvin)?).value();
        write(out, v, "out")
    })
}

/// Mean thermal energy of one oscillator mode, J.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_mean_oscillator_energy(
    omega_rad_s: f64,
    kelvin: f64,
    out: *mut f64,
) -> CavityradStatus {
    guard(|| {
        let v = mean_oscillator_energy(omega(omega_rad_s)?, temperature(kelvin)?);
        write(out, v, "out")
    })
}

/// Fraction of the Planck energy below `omega_max`.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_planck_energy_fraction_below(
    omega_max: f64,
    kelvin: f64,
    out: *mut f64,
) -> CavityradStatus {
    guard(|| {
        let v = planck_energy_fraction_below(omega(omega_max)?, temperature(kelvin)?);
        write(out, v, "out")
    })
}

/// Number of admitted longitudinal modes across a film of thickness `l1`.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_film_mode_count(
    omega_rad_s: f64,
    l1: f64,
    bc: i32,
    out: *mut u64,
) -> CavityradStatus {
    guard(|| {
        let n = film_mode_count(omega(omega_rad_s)?, FilmGeometry::new(l1)?, boundary(bc)?);
        write(out, n, "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn cavityrad_film_density(
    omega_rad_s: f64,
    kelvin: f64,
    l1: f64,
    bc: i32,
    out: *mut f64,
) -> CavityradStatus {
    guard(|| {
        let v = film_density(
            omega(omega_rad_s)?,
            temperature(kelvin)?,
            FilmGeometry::new(l1)?,
            boundary(bc)?,
        );
        write(out, v.value(), "out")
    })
}

/// Rod density; fails with `THRESHOLD_SINGULARITY` next to a transverse
/// mode threshold.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_rod_density(
    omega_rad_s: f64,
    kelvin: f64,
    l1: f64,
    l2: f64,
    bc: i32,
    out: *mut f64,
) -> CavityradStatus {
    guard(|| {
        let v = rod_density(
            omega(omega_rad_s)?,
            temperature(kelvin)?,
            RodGeometry::new(l1, l2)?,
            boundary(bc)?,
        )?;
        write(out, v.value(), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn cavityrad_box_descriptors(
    l1: f64,
    l2: f64,
    l3: f64,
    out: *mut CavityradDescriptors,
) -> CavityradStatus {
    guard(|| {
        let d = descriptors_for(&ClosedCavity::Box(BoxGeometry::new(l1, l2, l3)?));
        write(out, d.into(), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn cavityrad_sphere_descriptors(
    diameter: f64,
    out: *mut CavityradDescriptors,
) -> CavityradStatus {
    guard(|| {
        let d = descriptors_for(&ClosedCavity::Sphere(SphereGeometry::new(diameter)?));
        write(out, d.into(), "out")
    })
}

/// Three-term asymptotic density. May be negative.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_weyl_density(
    omega_rad_s: f64,
    kelvin: f64,
    descriptors: *const CavityradDescriptors,
    out: *mut f64,
) -> CavityradStatus {
    guard(|| {
        let d = *borrow(descriptors, "descriptors")?;
        let v = weyl_density(omega(omega_rad_s)?, temperature(kelvin)?, &d.into());
        write(out, v, "out")
    })
}

unsafe fn emit_list(list: ModeList, out: *mut *mut CavityradModeList) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(CavityradModeList(list))), "out")
}

/// Box eigenfrequencies up to `omega_max`. `max_lattice_points` = 0 selects
/// the library default.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_box_modes(
    l1: f64,
    l2: f64,
    l3: f64,
    bc: i32,
    omega_max: f64,
    max_lattice_points: u64,
    out: *mut *mut CavityradModeList,
) -> CavityradStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let cap = cap_or_default(max_lattice_points);
        let list = enumerate_box_modes_capped(
            &BoxGeometry::new(l1, l2, l3)?,
            boundary(bc)?,
            omega(omega_max)?,
            cap,
        )?;
        emit_list(list, out)
    })
}

/// Dirichlet sphere eigenfrequencies up to `omega_max`.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_sphere_modes(
    diameter: f64,
    omega_max: f64,
    max_lattice_points: u64,
    out: *mut *mut CavityradModeList,
) -> CavityradStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let cap = cap_or_default(max_lattice_points);
        let list =
            enumerate_sphere_modes_capped(&SphereGeometry::new(diameter)?, omega(omega_max)?, cap)?;
        emit_list(list, out)
    })
}

fn cap_or_default(cap: u64) -> u64 {
    if cap == 0 {
        cavityrad::modes::DEFAULT_LATTICE_CAP
    } else {
        cap
    }
}

/// Number of distinct frequencies.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_mode_list_len(
    list: *const CavityradModeList,
    out: *mut usize,
) -> CavityradStatus {
    guard(|| write(out, borrow(list, "list")?.0.len(), "out"))
}

#[no_mangle]
pub unsafe extern "C" fn cavityrad_mode_list_omega_max(
    list: *const CavityradModeList,
    out: *mut f64,
) -> CavityradStatus {
    guard(|| write(out, borrow(list, "list")?.0.omega_max(), "out"))
}

/// Entry `index` as (frequency in rad/s, multiplicity).
#[no_mangle]
pub unsafe extern "C" fn cavityrad_mode_list_get(
    list: *const CavityradModeList,
    index: usize,
    omega_out: *mut f64,
    multiplicity_out: *mut u64,
) -> CavityradStatus {
    guard(|| {
        let list = &borrow(list, "list")?.0;
        let m = list.entries().get(index).ok_or_else(|| {
            Failure(
                CavityradStatus::IndexOutOfRange,
                format!("index {index} out of range for {} entries", list.len()),
            )
        })?;
        if omega_out.is_null() || multiplicity_out.is_null() {
            return Err(null("output pointer"));
        }
        write(omega_out, m.omega, "omega_out")?;
        write(multiplicity_out, m.multiplicity, "multiplicity_out")
    })
}

/// Releases a mode list. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_mode_list_free(list: *mut CavityradModeList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Binned spectral density of a mode list in a cavity of volume `volume`.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_binned_density(
    list: *const CavityradModeList,
    kelvin: f64,
    delta_omega: f64,
    volume: f64,
    out: *mut *mut CavityradSpectrum,
) -> CavityradStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let spec = binned_density(
            &borrow(list, "list")?.0,
            temperature(kelvin)?,
            delta_omega,
            volume,
        )?;
        write(out, Box::into_raw(Box::new(CavityradSpectrum(spec))), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn cavityrad_spectrum_len(
    spec: *const CavityradSpectrum,
    out: *mut usize,
) -> CavityradStatus {
    guard(|| write(out, borrow(spec, "spectrum")?.0.len(), "out"))
}

#[no_mangle]
pub unsafe extern "C" fn cavityrad_spectrum_delta_omega(
    spec: *const CavityradSpectrum,
    out: *mut f64,
) -> CavityradStatus {
    guard(|| write(out, borrow(spec, "spectrum")?.0.delta_omega(), "out"))
}

/// Bin `index` as (left edge in rad/s, density in J s / m^3).
#[no_mangle]
pub unsafe extern "C" fn cavityrad_spectrum_get(
    spec: *const CavityradSpectrum,
    index: usize,
    omega_left_out: *mut f64,
    density_out: *mut f64,
) -> CavityradStatus {
    guard(|| {
        let spec = &borrow(spec, "spectrum")?.0;
        let u = *spec.values().get(index).ok_or_else(|| {
            Failure(
                CavityradStatus::IndexOutOfRange,
                format!("index {index} out of range for {} bins", spec.len()),
            )
        })?;
        if omega_left_out.is_null() || density_out.is_null() {
            return Err(null("output pointer"));
        }
        write(omega_left_out, spec.omega_left(index), "omega_left_out")?;
        write(density_out, u, "density_out")
    })
}

/// Releases a spectrum. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cavityrad_spectrum_free(spec: *mut CavityradSpectrum) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}
