#include "qdb/interference.hpp"

#include <cmath>

#include "qdb/units.hpp"

namespace qdb::interference {

namespace {

constexpr Complex kI{0.0, 1.0};

double scale(double x_angstrom) { return x_angstrom * units::kAngstromKe; }

struct Pair {
  AmplitudePhaseDecomposition first;
  AmplitudePhaseDecomposition second;
};

Pair decompose_both(double k, const DoubleBarrier& db) {
  return {decompose(k, db.first), decompose(k, db.second)};
}

}  // namespace

AmplitudePhaseDecomposition decompose(double k, const Barrier& b) {
  validate(b);
  const Kinematics kin = kinematics(k, b.height_ev);
  const double bl = kin.beta * scale(b.length_angstrom);
  detail::check_hyperbolic(bl, "decompose");
  const double x = kin.big_m * std::sinh(bl);
  const double norm = std::sqrt(1.0 + x * x);

  AmplitudePhaseDecomposition out;
  out.transmission_magnitude = 1.0 / norm;
  out.reflection_magnitude = x / norm;
  out.auxiliary_phase = std::atan(kin.big_k * std::tanh(bl));
  out.transmission_phase = -k * scale(b.length_angstrom) - out.auxiliary_phase;
  out.reflection_phase = -0.5 * M_PI - out.auxiliary_phase;
  return out;
}

Complex transmission_partial_sum(double k, const DoubleBarrier& db, int terms) {
  if (terms < 1) {
    throw std::invalid_argument("transmission_partial_sum: terms must be >= 1");
  }
  validate(db);
  const auto [one, two] = decompose_both(k, db);
  const double kd = k * scale(db.gap_angstrom);
  const double kl = k * scale(db.first.length_angstrom +
                              db.second.length_angstrom);
  const double t12 = one.transmission_magnitude * two.transmission_magnitude;
  const double r12 = one.reflection_magnitude * two.reflection_magnitude;
  const double phase_t = one.transmission_phase + two.transmission_phase;
  const double phase_r = one.reflection_phase + two.reflection_phase;

  Complex sum = 0.0;
  for (int n = 0; n < terms; ++n) {
    const double amplitude = t12 * std::pow(r12, n);
    const double phase = phase_t + n * phase_r + (2 * n + 1) * kd + kl;
    sum += std::polar(amplitude, phase);
  }
  return sum * std::exp(-kI * (kd + kl));
}

Complex transmission_closed(double k, const DoubleBarrier& db) {
  validate(db);
  const auto [one, two] = decompose_both(k, db);
  const double kd = k * scale(db.gap_angstrom);
  const double kl = k * scale(db.first.length_angstrom +
                              db.second.length_angstrom);
  const Complex lead =
      std::polar(one.transmission_magnitude * two.transmission_magnitude,
                 one.transmission_phase + two.transmission_phase + kd + kl);
  const Complex ratio =
      std::polar(one.reflection_magnitude * two.reflection_magnitude,
                 one.reflection_phase + two.reflection_phase + 2.0 * kd);
  return lead / (1.0 - ratio) * std::exp(-kI * (kd + kl));
}

Complex reflection_closed(double k, const DoubleBarrier& db) {
  validate(db);
  const auto [one, two] = decompose_both(k, db);
  const double kd = k * scale(db.gap_angstrom);
  const double kl1 = k * scale(db.first.length_angstrom);
  const Complex direct =
      std::polar(one.reflection_magnitude, one.reflection_phase);
  const Complex through = std::polar(
      one.transmission_magnitude * one.transmission_magnitude *
          two.reflection_magnitude,
      2.0 * one.transmission_phase + two.reflection_phase + 2.0 * (kd + kl1));
  const Complex ratio =
      std::polar(one.reflection_magnitude * two.reflection_magnitude,
                 one.reflection_phase + two.reflection_phase + 2.0 * kd);
  return direct + through / (1.0 - ratio);
}

double truncation_bound(double k, const DoubleBarrier& db, int terms) {
  const auto [one, two] = decompose_both(k, db);
  const double t12 = one.transmission_magnitude * two.transmission_magnitude;
  const double r12 = one.reflection_magnitude * two.reflection_magnitude;
  return t12 * std::pow(r12, terms) / (1.0 - r12);
}

double resonance_phase(double k, const DoubleBarrier& db) {
  validate(db);
  const auto [one, two] = decompose_both(k, db);
  return k * scale(db.gap_angstrom) -
         0.5 * (one.auxiliary_phase + two.auxiliary_phase + M_PI);
}

double transmission_rate_maximum(double k, const DoubleBarrier& db) {
  const auto [one, two] = decompose_both(k, db);
  const double t12 = one.transmission_magnitude * two.transmission_magnitude;
  const double r12 = one.reflection_magnitude * two.reflection_magnitude;
  const double value = t12 / (1.0 - r12);
  return value * value;
}

double transmission_rate_minimum(double k, const DoubleBarrier& db) {
  const auto [one, two] = decompose_both(k, db);
  const double t12 = one.transmission_magnitude * two.transmission_magnitude;
  const double r12 = one.reflection_magnitude * two.reflection_magnitude;
  const double value = t12 / (1.0 + r12);
  return value * value;
}

double analytic_finesse(double k, const DoubleBarrier& db) {
  const auto [one, two] = decompose_both(k, db);
  const double r12 = one.reflection_magnitude * two.reflection_magnitude;
  return M_PI * std::sqrt(r12) / (1.0 - r12);
}

double fp_finesse(double reflectivity) {
  if (!(reflectivity >= 0.0 && reflectivity < 1.0)) {
    throw std::domain_error("fp_finesse: reflectivity must be in [0, 1)");
  }
  return M_PI * std::sqrt(reflectivity) / (1.0 - reflectivity);
}

double fp_transmission(double k_per_m, const OpticalCavity& cav) {
  validate(cav);
  if (!(k_per_m > 0.0)) {
    throw std::domain_error("fp_transmission: wavenumber must be positive");
  }
  const double finesse = fp_finesse(cav.reflectivity);
  const double s = std::sin(k_per_m * cav.plate_separation_m);
  const double term = 2.0 * finesse / M_PI * s;
  return 1.0 / (1.0 + term * term);
}

}  // namespace qdb::interference
