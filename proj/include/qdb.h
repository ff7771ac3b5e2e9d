#ifndef QDB_H
#define QDB_H

/*
 * C interface to the double-barrier tunneling library.
 *
 * Units: energies in eV, lengths in Angstrom, times in fs, wave numbers in
 * k_e = 5.12289e9 /m (the wave number of a ~1 eV electron), for which the
 * energy map is E[eV] = k^2. Optical-cavity helpers take plain dimensionless
 * phases so that callers choose their own length scale.
 *
 * Every function returns a qdb_status; results are written through out
 * pointers. Handles are created with qdb_double_barrier_create (or from a
 * preset) and released with qdb_double_barrier_destroy.
 */

#include <stddef.h>

#if defined(_WIN32)
#define QDB_API __declspec(dllexport)
#else
#define QDB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdb_status {
  QDB_OK = 0,
  QDB_ERROR_INVALID_ARGUMENT = 1,
  QDB_ERROR_UNSUPPORTED_REGIME = 2, /* energy at or above a barrier top */
  QDB_ERROR_NUMERIC = 3,            /* overflow guard or failed bracketing */
  QDB_ERROR_CAPACITY = 4,           /* output buffer too small */
  QDB_ERROR_UNKNOWN_PRESET = 5
} qdb_status;

typedef struct qdb_double_barrier qdb_double_barrier; /* opaque */

typedef struct qdb_complex {
  double re;
  double im;
} qdb_complex;

/* Full scattering solution at one wave number. */
typedef struct qdb_solution {
  qdb_complex transmission;
  qdb_complex reflection;
  double transmission_rate;
  double reflection_rate;
  /* interior amplitudes: psi = c1 e^{b1 x}+d1 e^{-b1 x} | alpha e^{ikx}+gamma
   * e^{-ikx} | c2 e^{b2 x}+d2 e^{-b2 x} */
  qdb_complex c1, d1, alpha, gamma, c2, d2;
} qdb_solution;

typedef struct qdb_resonance_record {
  double k_res;
  int mode_index;
  double peak_transmission;
  double k_half_left;
  double k_half_right;
  double fwhm;
  double half_level;
  double free_spectral;
  double finesse_numeric;
  double finesse_analytic;
  int width_valid;
} qdb_resonance_record;

typedef struct qdb_lifetime_record {
  double k_res;
  double fwhm;
  double energy_width_ev;
  double two_tau_uncertainty_fs;
  double tau_phase_fs;
  double tau_corrected_fs;
} qdb_lifetime_record;

QDB_API const char* qdb_version(void);

/* Human-readable text for a status code. */
QDB_API const char* qdb_status_message(qdb_status status);

/* Message of the most recent error on this thread (empty if none). */
QDB_API const char* qdb_last_error(void);

QDB_API qdb_status qdb_double_barrier_create(double height1_ev,
                                             double length1_angstrom,
                                             double height2_ev,
                                             double length2_angstrom,
                                             double gap_angstrom,
                                             qdb_double_barrier** out);

/* Known presets: "fig4b-symmetric", "fig6b-asymmetric", "fig7b-standing". */
QDB_API qdb_status qdb_double_barrier_preset(const char* name,
                                             qdb_double_barrier** out);

QDB_API void qdb_double_barrier_destroy(qdb_double_barrier* handle);

QDB_API qdb_status qdb_double_barrier_params(const qdb_double_barrier* handle,
                                             double* height1_ev,
                                             double* length1_angstrom,
                                             double* height2_ev,
                                             double* length2_angstrom,
                                             double* gap_angstrom);

/* Closed-form solution, tunneling regime only (E < min barrier height). */
QDB_API qdb_status qdb_solve(const qdb_double_barrier* handle, double k,
                             qdb_solution* out);

/* |T|^2 through the continued closed form; valid for E != barrier heights. */
QDB_API qdb_status qdb_transmission_rate(const qdb_double_barrier* handle,
                                         double k, double* out);

/* Sweep of n points on [k_min, k_max]: fills k, |T|^2, |R|^2 and the
 * unwrapped transmission phase shift theta (rad). Arrays hold n entries. */
QDB_API qdb_status qdb_spectrum(const qdb_double_barrier* handle, double k_min,
                                double k_max, size_t n, double* k_out,
                                double* t_out, double* r_out,
                                double* theta_out);

/* Resonance analysis on (k_min, k_max): positions, widths, finesse.
 * Writes at most capacity records; *count receives the number found. */
QDB_API qdb_status qdb_resonances(const qdb_double_barrier* handle,
                                  double k_min, double k_max,
                                  qdb_resonance_record* out, size_t capacity,
                                  size_t* count);

/* Stationary-phase time (fs) at wave number k. dk_hint <= 0 selects the
 * default finite-difference step for asymmetric barriers. */
QDB_API qdb_status qdb_phase_time(const qdb_double_barrier* handle, double k,
                                  double dk_hint, double* out_fs);

/* Single-barrier phase time (fs), closed form. */
QDB_API qdb_status qdb_single_barrier_phase_time(double height_ev,
                                                 double length_angstrom,
                                                 double k, double* out_fs);

/* Lifetime table for previously computed resonance records. */
QDB_API qdb_status qdb_lifetimes(const qdb_double_barrier* handle,
                                 const qdb_resonance_record* records,
                                 size_t count, double dk_hint,
                                 qdb_lifetime_record* out);

/* Relative probability inside the inter-barrier region, x in Angstrom. */
QDB_API qdb_status qdb_well_standing_wave(const qdb_double_barrier* handle,
                                          double k, double x_angstrom,
                                          double* out);

/* Bundled optical-cavity preset ("fp-optical"): reflectivity 0.8, plate
 * separation 0.02 m. */
QDB_API qdb_status qdb_preset_optical_cavity(double* reflectivity,
                                             double* plate_separation_m);

/* Optical Fabry-Perot helpers; phases are dimensionless (k*d0, k*x). */
QDB_API qdb_status qdb_fp_finesse(double reflectivity, double* out);
QDB_API qdb_status qdb_fp_transmission(double reflectivity, double phase_kd0,
                                       double* out);
QDB_API qdb_status qdb_fp_standing_wave(double reflectivity, double phase_kd0,
                                        double phase_kx, double* out);

/* Three-way validation: closed form vs interference path vs transfer-matrix
 * reference on `samples` random wave numbers plus an n-point grid. Returns
 * the largest pairwise amplitude deviation. */
QDB_API qdb_status qdb_validate(const qdb_double_barrier* handle, double k_min,
                                double k_max, size_t samples, size_t grid_points,
                                unsigned seed, double* max_residual);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QDB_H */
