#ifndef QDB_SCATTERING_HPP
#define QDB_SCATTERING_HPP

#include <complex>
#include <optional>

#include "qdb/barrier.hpp"

namespace qdb {

using Complex = std::complex<double>;

// Plane-wave amplitudes inside a double barrier (incident amplitude 1):
//   psi = c1 e^{beta1 x} + d1 e^{-beta1 x}        0  < x < b1
//   psi = alpha e^{ikx}  + gamma e^{-ikx}         b1 < x < a2
//   psi = c2 e^{beta2 x} + d2 e^{-beta2 x}        a2 < x < b2
struct InteriorAmplitudes {
  Complex c1, d1;
  Complex alpha, gamma;
  Complex c2, d2;
};

// Complex transmission/reflection amplitudes of a scattering problem, plus
// the interior amplitudes when the potential is a double barrier.
struct ScatteringSolution {
  Complex transmission;
  Complex reflection;
  std::optional<InteriorAmplitudes> interior;

  double transmission_rate() const { return std::norm(transmission); }
  double reflection_rate() const { return std::norm(reflection); }
};

// Residuals of the flux-conservation identities
//   |T|^2 + |R|^2 = 1   and, for double barriers,   |T|^2 = |alpha|^2 - |gamma|^2.
struct FluxReport {
  double unitarity_residual = 0.0;
  double interior_residual = 0.0;
  double max_residual() const {
    return unitarity_residual > interior_residual ? unitarity_residual
                                                  : interior_residual;
  }
};

// Transmission and reflection of a single barrier placed at the origin,
// 0 < E(k) < A. Throws RegimeError outside the tunneling window.
ScatteringSolution single_barrier_solution(double k, const Barrier& b);

// Full double-barrier solution including interior amplitudes, for
// 0 < E(k) < min(A1, A2).
ScatteringSolution double_barrier_solution(double k, const DoubleBarrier& db);

// F[k; beta1, beta2; d; l1, l2], the denominator of the double-barrier
// transmission amplitude T = e^{-ik(d+l1+l2)} / F. Continued across barrier
// tops (complex decay constants), so it is defined for any E != A_i.
Complex transmission_denominator(double k, const DoubleBarrier& db);

// |T|^2 evaluated through the continued denominator; no upper regime
// restriction (E != A_i). The strict-regime path is double_barrier_solution.
double transmission_rate_general(double k, const DoubleBarrier& db);

// Transmission rate of a square well of depth A (E > 0 above the floor):
//   T = 1 / (1 + (k/beta - beta/k)^2 sin^2(beta L) / 4),  beta = sqrt(A + E).
double well_transmission_rate(double k, double depth_ev, double length_angstrom);

FluxReport verify_flux_conservation(const ScatteringSolution& sol);

// Wavefunction value assembled from the solution amplitudes at position x
// (Angstrom), and its derivative with respect to (k_e * x); used to verify
// continuity at the interfaces.
Complex wavefunction_value(double k, const DoubleBarrier& db,
                           const ScatteringSolution& sol, double x);
Complex wavefunction_derivative(double k, const DoubleBarrier& db,
                                const ScatteringSolution& sol, double x);

}  // namespace qdb

#endif  // QDB_SCATTERING_HPP
