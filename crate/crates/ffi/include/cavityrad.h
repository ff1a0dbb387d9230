#ifndef CAVITYRAD_H
#define CAVITYRAD_H

/* Generated by cbindgen from crates/ffi/src; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Boundary condition codes accepted by the `bc` parameters.
 */
typedef enum CavityradBoundary {
  CAVITYRAD_BOUNDARY_PERIODIC = 0,
  CAVITYRAD_BOUNDARY_ANTIPERIODIC = 1,
  CAVITYRAD_BOUNDARY_DIRICHLET = 2,
} CavityradBoundary;

/**
 * Result of every call.
 */
typedef enum CavityradStatus {
  CAVITYRAD_STATUS_OK = 0,
  CAVITYRAD_STATUS_NULL_POINTER = 1,
  CAVITYRAD_STATUS_DOMAIN = 2,
  CAVITYRAD_STATUS_THRESHOLD_SINGULARITY = 3,
  CAVITYRAD_STATUS_RESOURCE_LIMIT = 4,
  CAVITYRAD_STATUS_INVALID_MODE_LIST = 5,
  CAVITYRAD_STATUS_NON_CONVERGENCE = 6,
  CAVITYRAD_STATUS_INDEX_OUT_OF_RANGE = 7,
  CAVITYRAD_STATUS_INVALID_BOUNDARY = 8,
  CAVITYRAD_STATUS_PANIC = 9,
} CavityradStatus;

/**
 * Opaque list of eigenfrequencies with multiplicities.
 */
typedef struct CavityradModeList CavityradModeList;

/**
 * Opaque binned spectral density.
 */
typedef struct CavityradSpectrum CavityradSpectrum;

/**
 * Volume (m^3), surface area (m^2) and integrated mean curvature (m).
 */
typedef struct CavityradDescriptors {
  double volume;
  double area;
  double mean_curvature;
} CavityradDescriptors;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a
 * success. The pointer stays valid until the next call on this thread.
 */
const char *cavityrad_last_error_message(void);

/**
 * Planck spectral energy density, J s / m^3.
 */
enum CavityradStatus cavityrad_planck_density(double omega_rad_s, double kelvin, double *out);

/**
 * Mean thermal energy of one oscillator mode, J.
 */
enum CavityradStatus cavityrad_mean_oscillator_energy(double omega_rad_s,
                                                      double kelvin,
                                                      double *out);

/**
 * Fraction of the Planck energy below `omega_max`.
 */
enum CavityradStatus cavityrad_planck_energy_fraction_below(double omega_max,
                                                            double kelvin,
                                                            double *out);

/**
 * Number of admitted longitudinal modes across a film of thickness `l1`.
 */
enum CavityradStatus cavityrad_film_mode_count(double omega_rad_s,
                                               double l1,
                                               int32_t bc,
                                               uint64_t *out);

enum CavityradStatus cavityrad_film_density(double omega_rad_s,
                                            double kelvin,
                                            double l1,
                                            int32_t bc,
                                            double *out);

/**
 * Rod density; fails with `THRESHOLD_SINGULARITY` next to a transverse
 * mode threshold.
 */
enum CavityradStatus cavityrad_rod_density(double omega_rad_s,
                                           double kelvin,
                                           double l1,
                                           double l2,
                                           int32_t bc,
                                           double *out);

enum CavityradStatus cavityrad_box_descriptors(double l1,
                                               double l2,
                                               double l3,
                                               struct CavityradDescriptors *out);

enum CavityradStatus cavityrad_sphere_descriptors(double diameter,
                                                  struct CavityradDescriptors *out);

/**
 * Three-term asymptotic density. May be negative.
 */
enum CavityradStatus cavityrad_weyl_density(double omega_rad_s,
                                            double kelvin,
                                            const struct CavityradDescriptors *descriptors,
                                            double *out);

/**
 * Box eigenfrequencies up to `omega_max`. `max_lattice_points` = 0 selects
 * the library default.
 */
enum CavityradStatus cavityrad_box_modes(double l1,
                                         double l2,
                                         double l3,
                                         int32_t bc,
                                         double omega_max,
                                         uint64_t max_lattice_points,
                                         struct CavityradModeList **out);

/**
 * Dirichlet sphere eigenfrequencies up to `omega_max`.
 */
enum CavityradStatus cavityrad_sphere_modes(double diameter,
                                            double omega_max,
                                            uint64_t max_lattice_points,
                                            struct CavityradModeList **out);

/**
 * Number of distinct frequencies.
 */
enum CavityradStatus cavityrad_mode_list_len(const struct CavityradModeList *list, size_t *out);

enum CavityradStatus cavityrad_mode_list_omega_max(const struct CavityradModeList *list,
                                                   double *out);

/**
 * Entry `index` as (frequency in rad/s, multiplicity).
 */
enum CavityradStatus cavityrad_mode_list_get(const struct CavityradModeList *list,
                                             size_t index,
                                             double *omega_out,
                                             uint64_t *multiplicity_out);

/**
 * Releases a mode list. NULL is ignored.
 */
void cavityrad_mode_list_free(struct CavityradModeList *list);

/**
 * Binned spectral density of a mode list in a cavity of volume `volume`.
 */
enum CavityradStatus cavityrad_binned_density(const struct CavityradModeList *list,
                                              double kelvin,
                                              double delta_omega,
                                              double volume,
                                              struct CavityradSpectrum **out);

enum CavityradStatus cavityrad_spectrum_len(const struct CavityradSpectrum *spec, size_t *out);

enum CavityradStatus cavityrad_spectrum_delta_omega(const struct CavityradSpectrum *spec,
                                                    double *out);

/**
 * Bin `index` as (left edge in rad/s, density in J s / m^3).
 */
enum CavityradStatus cavityrad_spectrum_get(const struct CavityradSpectrum *spec,
                                            size_t index,
                                            double *omega_left_out,
                                            double *density_out);

/**
 * Releases a spectrum. NULL is ignored.
 */
void cavityrad_spectrum_free(struct CavityradSpectrum *spec);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CAVITYRAD_H */
