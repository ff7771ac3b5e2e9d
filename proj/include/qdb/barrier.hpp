#ifndef QDB_BARRIER_HPP
#define QDB_BARRIER_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "qdb/units.hpp"

namespace qdb {

// Rectangular barrier: height A > 0 (eV), length l >= 0 (Angstrom).
struct Barrier {
  double height_ev = 0.0;
  double length_angstrom = 0.0;
};

// Two rectangular barriers separated by a free gap d >= 0. The first barrier
// starts at the origin, so the interface positions are
//   b1 = l1, a2 = l1 + d, b2 = l1 + d + l2.
struct DoubleBarrier {
  Barrier first;
  Barrier second;
  double gap_angstrom = 0.0;

  double inner_left() const { return first.length_angstrom; }
  double inner_right() const { return first.length_angstrom + gap_angstrom; }
  double extent() const {
    return first.length_angstrom + gap_angstrom + second.length_angstrom;
  }
  bool symmetric() const {
    return first.height_ev == second.height_ev &&
           first.length_angstrom == second.length_angstrom;
  }
};

inline void validate(const Barrier& b) {
  if (!(b.height_ev > 0.0)) {
    throw std::invalid_argument("barrier height must be positive");
  }
  if (!(b.length_angstrom >= 0.0)) {
    throw std::invalid_argument("barrier length must be non-negative");
  }
}

inline void validate(const DoubleBarrier& db) {
  validate(db.first);
  validate(db.second);
  if (!(db.gap_angstrom >= 0.0)) {
    throw std::invalid_argument("barrier gap must be non-negative");
  }
}

// Thrown when an operation is asked for an energy at or above a barrier top,
// where the real-decay-constant closed forms do not apply.
class RegimeError : public std::domain_error {
 public:
  explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

// Hyperbolic arguments beyond this make cosh/sinh overflow double precision.
inline constexpr double kMaxHyperbolicArgument = 300.0;

// In-barrier kinematics for E < A: decay constant beta = sqrt(A - E) (k_e
// units) and the dimensionless combinations
//   M = (beta/k + k/beta)/2,  K = (beta/k - k/beta)/2,
// which satisfy M^2 - K^2 = 1.
struct Kinematics {
  double k = 0.0;
  double energy_ev = 0.0;
  double beta = 0.0;
  double big_m = 0.0;
  double big_k = 0.0;
};

inline Kinematics kinematics(double k, double barrier_height_ev) {
  if (!(k > 0.0)) {
    throw std::domain_error("kinematics: wavenumber must be positive");
  }
  const double energy = k * k;
  if (energy >= barrier_height_ev) {
    throw RegimeError("kinematics: energy " + std::to_string(energy) +
                      " eV is not below the barrier height " +
                      std::to_string(barrier_height_ev) + " eV");
  }
  Kinematics out;
  out.k = k;
  out.energy_ev = energy;
  out.beta = std::sqrt(barrier_height_ev - energy);
  out.big_m = 0.5 * (out.beta / k + k / out.beta);
  out.big_k = 0.5 * (out.beta / k - k / out.beta);
  return out;
}

namespace detail {

// Continued kinematics: beta = sqrt(A - E) as a complex number, purely
// imaginary above the barrier top. The closed-form scattering expressions
// stay valid (hyperbolic functions turn trigonometric); used by the width
// tracer, which may cross the lower barrier top of an asymmetric pair.
struct ComplexKinematics {
  std::complex<double> beta;
  std::complex<double> big_m;
  std::complex<double> big_k;
};

inline ComplexKinematics complex_kinematics(double k, double height_ev) {
  if (!(k > 0.0)) {
    throw std::domain_error("kinematics: wavenumber must be positive");
  }
  const double e = k * k;
  ComplexKinematics out;
  out.beta = std::sqrt(std::complex<double>(height_ev - e, 0.0));
  if (std::abs(out.beta) == 0.0) {
    throw RegimeError("kinematics: energy coincides with a barrier height");
  }
  out.big_m = 0.5 * (out.beta / k + k / out.beta);
  out.big_k = 0.5 * (out.beta / k - k / out.beta);
  return out;
}

inline void check_hyperbolic(double argument, const char* where) {
  if (std::abs(argument) > kMaxHyperbolicArgument) {
    throw std::domain_error(std::string(where) +
                            ": hyperbolic argument exceeds overflow guard");
  }
}

}  // namespace detail
}  // namespace qdb

#endif  // QDB_BARRIER_HPP
