#ifndef QDB_RESONANCE_HPP
#define QDB_RESONANCE_HPP

#include <vector>

#include "qdb/barrier.hpp"
#include "qdb/interference.hpp"

// Resonance location, linewidths, and finesse extraction, plus the
// standing-wave spectra inside the cavity/well.
namespace qdb::resonance {

// One located resonance and its derived quantities. Wave numbers in k_e.
struct ResonanceRecord {
  double k_res = 0.0;
  int mode_index = 0;           // m with Phi(k_res) = m pi
  double peak_transmission = 0.0;
  double k_half_left = 0.0;
  double k_half_right = 0.0;
  double fwhm = 0.0;            // k_half_right - k_half_left
  double half_level = 0.0;      // transmission level used for the crossings
  double free_spectral = 0.0;   // mean spacing, first spacing taken from k = 0
  double finesse_numeric = 0.0;
  double finesse_analytic = 0.0;
  bool width_valid = false;     // false when a half crossing was not bracketed
};

struct FindOptions {
  double k_tolerance = 1e-10;       // root refinement stop
  double scan_step_max = 0.005;     // upper bound on the scan step (k_e)
};

// The angle delta(k) of the symmetric transmission rate,
//   tan(delta) = [cosh(2 beta l) - (M^2/2)(cosh(2 beta l) - 1)] / [K sinh(2 beta l)],
// taken in (-pi, pi] via atan2.
double symmetric_delta(double k, double height_ev, double length_angstrom);

// Symmetric transmission rate through the 1 + sin(2kd + delta) closed form;
// equal to |double_barrier_solution().transmission|^2.
double symmetric_transmission_rate(double k, double height_ev,
                                   double length_angstrom,
                                   double gap_angstrom);

// Residuals of the two simultaneous resonance conditions
//   tan(delta) = cot(2kd)   and   sin(2kd) = -K sinh(2bl) / (1 + (M^2/2)(cosh(2bl)-1)).
struct SymmetricConditionResiduals {
  double extremal = 0.0;
  double resonant = 0.0;
};
SymmetricConditionResiduals symmetric_condition_residuals(
    double k, double height_ev, double length_angstrom, double gap_angstrom);

// Locates resonances on (k_min, k_max). The symmetric path solves
// 2kd + delta(k) = 2N pi + 3 pi/2 by scan/bisection/secant; the general path
// solves Phi(k) = m pi, which reduces to the same condition when the
// barriers are identical. Records come back sorted with k_res, mode_index
// and peak_transmission filled.
std::vector<ResonanceRecord> find_resonances(const DoubleBarrier& db,
                                             double k_min, double k_max,
                                             const FindOptions& opt = {});

// Anti-resonances: wave numbers with Phi(k) = m pi + pi/2, where the
// transmission rate sits exactly on the envelope minimum
// (T1 T2 / (1 + R1 R2))^2.
std::vector<double> find_antiresonances(const DoubleBarrier& db, double k_min,
                                        double k_max,
                                        const FindOptions& opt = {});

// Fills the half-maximum crossings and FWHM of every record. All crossings
// are traced at one level: half the peak transmission of the lowest
// resonance (1/2 exactly for symmetric barriers, where peaks reach unity).
// The tracer continues above the lower barrier top when a crossing lies
// beyond it. Collisions with a neighbouring resonance mark width_valid=false.
void measure_widths(const DoubleBarrier& db,
                    std::vector<ResonanceRecord>& records);

// Mean spacing between consecutive resonances, the first spacing measured
// from k = 0.
double free_spectral_distance(const std::vector<ResonanceRecord>& records);

// Fills free_spectral, finesse_numeric = free_spectral / fwhm and
// finesse_analytic (evaluated at k_res).
void fill_finesse(const DoubleBarrier& db,
                  std::vector<ResonanceRecord>& records);

// One call for the full pipeline: find, widths, finesse.
std::vector<ResonanceRecord> analyze(const DoubleBarrier& db, double k_min,
                                     double k_max,
                                     const FindOptions& opt = {});

// Relative standing-wave intensity inside an optical cavity at position x
// from the left mirror: I(k, x) >= 0, with k in 1/m and x in m.
double fp_standing_wave(double k_per_m, double x_m,
                        const interference::OpticalCavity& cav);

// Relative probability |alpha e^{ikx} + gamma e^{-ikx}|^2 inside the
// inter-barrier region b1 < x < a2 (x in Angstrom).
double well_standing_wave(double k, double x_angstrom, const DoubleBarrier& db);

}  // namespace qdb::resonance

#endif  // QDB_RESONANCE_HPP
