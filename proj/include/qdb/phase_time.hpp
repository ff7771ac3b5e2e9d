#ifndef QDB_PHASE_TIME_HPP
#define QDB_PHASE_TIME_HPP

#include <vector>

#include "qdb/barrier.hpp"
#include "qdb/resonance.hpp"

// Stationary-phase tunneling times tau = (m / hbar k) dtheta/dk, where theta
// is the transmitted-wave phase shift with the free-propagation phase across
// the structure restored, i.e. theta = arg(T e^{ik(l1+d+l2)}).
namespace qdb::phase_time {

// Transmission phase shift of a double barrier, principal value in (-pi, pi].
double transmission_phase(double k, const DoubleBarrier& db);

// Single-barrier phase time from the closed form
//   tau = (m / hbar k) [M^2 sinh(2 b l) + K k l] / (b [1 + M^2 sinh^2(b l)]),
// in fs.
double single_barrier_phase_time(double k, const Barrier& b);

// The single-barrier auxiliary phase arctan[K tanh(beta l)] (= -theta_sb);
// exposed for differentiation cross-checks.
double single_barrier_phase(double k, const Barrier& b);

// Symmetric double-barrier phase time from the analytic derivative
// dtheta/dk = D[k, beta, l, d] / S[k, beta, l, d], S = |F|^2, in fs.
double symmetric_double_phase_time(double k, double height_ev,
                                   double length_angstrom,
                                   double gap_angstrom);

// D[k, beta, l, d]: the numerator of dtheta/dk, in Angstrom.
double symmetric_phase_derivative_numerator(double k, double height_ev,
                                            double length_angstrom,
                                            double gap_angstrom);

// Phase time of a general double barrier by centered finite differences of
// the unwrapped phase shift, two-step Richardson extrapolated. Throws when a
// phase jump larger than pi/2 is detected inside the stencil.
double asymmetric_phase_time(double k, const DoubleBarrier& db,
                             double dk = 1e-6);

// Unwrapped phase shift over an even wave-number grid: accumulated along
// increasing k with local refinement wherever a single step would move the
// phase by pi/2 or more.
std::vector<double> unwrapped_phase(const DoubleBarrier& db, double k_min,
                                    double k_max, int points);

// Phase shift and phase time sampled over a wave-number grid.
struct PhaseTimeProfile {
  std::vector<double> k;
  std::vector<double> theta;    // unwrapped, rad
  std::vector<double> tau_fs;
  std::vector<bool> near_resonance;  // |Phi - m pi| < pi/4
};
PhaseTimeProfile profile(const DoubleBarrier& db, double k_min, double k_max,
                         int points, double dk = 1e-6);

// Resonance lifetime bookkeeping (fs):
//   tau_uncertainty = hbar / deltaE with deltaE = hbar^2 k dk / m and
//   dk ~ the resonance FWHM; reported doubled, paired with the phase time
//   at resonance and the single-barrier-corrected variant.
struct LifetimeRecord {
  double k_res = 0.0;
  double fwhm = 0.0;
  double energy_width_ev = 0.0;
  double two_tau_uncertainty_fs = 0.0;
  double tau_phase_fs = 0.0;
  double tau_corrected_fs = 0.0;  // tau_phase - [tau_sb(l1) + tau_sb(l2)]
};

LifetimeRecord lifetime_from_uncertainty(const resonance::ResonanceRecord& rec);

std::vector<LifetimeRecord> lifetime_report(
    const DoubleBarrier& db,
    const std::vector<resonance::ResonanceRecord>& records,
    double dk = 1e-6);

}  // namespace qdb::phase_time

#endif  // QDB_PHASE_TIME_HPP
