#ifndef QDB_INTERFERENCE_HPP
#define QDB_INTERFERENCE_HPP

#include <complex>

#include "qdb/barrier.hpp"
#include "qdb/scattering.hpp"

// Fabry-Perot style computation path: single-barrier amplitude/phase
// decomposition, multi-wave summation of the double-barrier coefficients,
// the resonance phase, and the analytic finesse. Serves as an independent
// route that must agree with the direct closed forms to machine precision.
namespace qdb::interference {

// Magnitude/phase split of a single-barrier solution:
//   T e^{i phi_t}, phi_t = -k l - phi;   R e^{i phi_r}, phi_r = -pi/2 - phi;
//   phi = arctan[K tanh(beta l)].
struct AmplitudePhaseDecomposition {
  double transmission_magnitude = 0.0;  // T in (0, 1]
  double reflection_magnitude = 0.0;    // R in [0, 1)
  double transmission_phase = 0.0;      // phi_t (rad)
  double reflection_phase = 0.0;        // phi_r (rad)
  double auxiliary_phase = 0.0;         // phi   (rad)

  Complex transmission() const {
    return std::polar(transmission_magnitude, transmission_phase);
  }
  Complex reflection() const {
    return std::polar(reflection_magnitude, reflection_phase);
  }
};

AmplitudePhaseDecomposition decompose(double k, const Barrier& b);

// Sum of the first `terms` transmitted partial waves (terms >= 1), with the
// overall propagation phase e^{-ik(d+l1+l2)} reinstated so the result is
// directly comparable to double_barrier_solution().transmission.
Complex transmission_partial_sum(double k, const DoubleBarrier& db, int terms);

// Geometric-series limit of the partial-wave sum (same phase convention).
Complex transmission_closed(double k, const DoubleBarrier& db);

// Reflected-wave summation in closed form.
Complex reflection_closed(double k, const DoubleBarrier& db);

// Upper bound on |partial_sum(N) - closed|: T1 T2 (R1 R2)^N / (1 - R1 R2).
double truncation_bound(double k, const DoubleBarrier& db, int terms);

// Resonance phase Phi(k) = kd - (phi_1 + phi_2 + pi)/2; resonant tunneling
// occurs at Phi = m pi.
double resonance_phase(double k, const DoubleBarrier& db);

// Envelope extrema of the transmission rate:
//   maximum (T1 T2 / (1 - R1 R2))^2, minimum (T1 T2 / (1 + R1 R2))^2.
double transmission_rate_maximum(double k, const DoubleBarrier& db);
double transmission_rate_minimum(double k, const DoubleBarrier& db);

// Finesse of the double barrier read off the Fabry-Perot analogy:
//   pi sqrt(R1 R2) / (1 - R1 R2).
double analytic_finesse(double k, const DoubleBarrier& db);

// Ideal two-mirror optical cavity.
struct OpticalCavity {
  double reflectivity = 0.0;        // in [0, 1)
  double plate_separation_m = 0.0;  // d0 > 0
};

inline void validate(const OpticalCavity& cav) {
  if (!(cav.reflectivity >= 0.0 && cav.reflectivity < 1.0)) {
    throw std::domain_error("optical cavity reflectivity must be in [0, 1)");
  }
  if (!(cav.plate_separation_m > 0.0)) {
    throw std::invalid_argument("optical cavity separation must be positive");
  }
}

// pi sqrt(R) / (1 - R).
double fp_finesse(double reflectivity);

// T = 1 / (1 + (2 F / pi)^2 sin^2(k d0)), k in 1/m.
double fp_transmission(double k_per_m, const OpticalCavity& cav);

}  // namespace qdb::interference

#endif  // QDB_INTERFERENCE_HPP
