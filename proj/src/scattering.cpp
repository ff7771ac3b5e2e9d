#include "qdb/scattering.hpp"

#include <cmath>

#include "qdb/units.hpp"

namespace qdb {

namespace {

using detail::ComplexKinematics;
using detail::complex_kinematics;

constexpr Complex kI{0.0, 1.0};

double scale(double x_angstrom) { return x_angstrom * units::kAngstromKe; }

}  // namespace

ScatteringSolution single_barrier_solution(double k, const Barrier& b) {
  validate(b);
  const Kinematics kin = kinematics(k, b.height_ev);
  const double bl = kin.beta * scale(b.length_angstrom);
  detail::check_hyperbolic(bl, "single_barrier_solution");
  const double sh = std::sinh(bl);
  const double ch = std::cosh(bl);
  const Complex denom = ch + kI * kin.big_k * sh;
  const double kl = k * scale(b.length_angstrom);

  ScatteringSolution out;
  out.transmission = std::exp(-kI * kl) / denom;
  out.reflection = -kI * kin.big_m * sh / denom;
  return out;
}

Complex transmission_denominator(double k, const DoubleBarrier& db) {
  validate(db);
  const ComplexKinematics k1 = complex_kinematics(k, db.first.height_ev);
  const ComplexKinematics k2 = complex_kinematics(k, db.second.height_ev);
  const Complex e1 = k1.beta * scale(db.first.length_angstrom);
  const Complex e2 = k2.beta * scale(db.second.length_angstrom);
  detail::check_hyperbolic(e1.real(), "transmission_denominator");
  detail::check_hyperbolic(e2.real(), "transmission_denominator");
  const double kd = k * scale(db.gap_angstrom);
  return std::exp(kI * kd) * (k1.big_m * std::sinh(e1)) *
             (k2.big_m * std::sinh(e2)) +
         std::exp(-kI * kd) * (std::cosh(e1) + kI * k1.big_k * std::sinh(e1)) *
             (std::cosh(e2) + kI * k2.big_k * std::sinh(e2));
}

double transmission_rate_general(double k, const DoubleBarrier& db) {
  return 1.0 / std::norm(transmission_denominator(k, db));
}

ScatteringSolution double_barrier_solution(double k, const DoubleBarrier& db) {
  validate(db);
  // Regime checks against both barrier tops; the denominator itself would
  // continue smoothly, but the interior amplitude formulas assume real betas.
  const Kinematics k1 = kinematics(k, db.first.height_ev);
  const Kinematics k2 = kinematics(k, db.second.height_ev);

  const double l1 = db.first.length_angstrom;
  const double l2 = db.second.length_angstrom;
  const double d = db.gap_angstrom;
  const double e1 = k1.beta * scale(l1);
  const double e2 = k2.beta * scale(l2);
  detail::check_hyperbolic(e1, "double_barrier_solution");
  detail::check_hyperbolic(e2, "double_barrier_solution");
  detail::check_hyperbolic(k2.beta * scale(d + l1 + l2), "double_barrier_solution");
  const double sh1 = std::sinh(e1), ch1 = std::cosh(e1);
  const double sh2 = std::sinh(e2), ch2 = std::cosh(e2);
  const double kd = k * scale(d);
  const double kl1 = k * scale(l1);

  const Complex f = std::exp(kI * kd) * (k1.big_m * sh1) * (k2.big_m * sh2) +
                    std::exp(-kI * kd) * (ch1 + kI * k1.big_k * sh1) *
                        (ch2 + kI * k2.big_k * sh2);
  const Complex inv_f = 1.0 / f;
  const Complex w2 = ch2 + kI * k2.big_k * sh2;

  ScatteringSolution out;
  out.transmission = std::exp(-kI * (k * scale(d + l1 + l2))) * inv_f;
  out.reflection =
      -kI *
      (std::exp(-kI * kd) * w2 * (k1.big_m * sh1) +
       std::exp(kI * kd) * (ch1 - kI * k1.big_k * sh1) * (k2.big_m * sh2)) *
      inv_f;

  InteriorAmplitudes in;
  in.alpha = std::exp(-kI * (kd + kl1)) * w2 * inv_f;
  in.gamma = -kI * std::exp(kI * (kd + kl1)) * (k2.big_m * sh2) * inv_f;
  in.c2 = 0.5 * std::exp(-k2.beta * scale(d + l1 + l2)) *
          (1.0 + kI * k / k2.beta) * inv_f;
  in.d2 = 0.5 * std::exp(k2.beta * scale(d + l1 + l2)) *
          (1.0 - kI * k / k2.beta) * inv_f;
  in.c1 = 0.5 * std::exp(-e1) *
          ((1.0 + kI * k / k1.beta) * std::exp(-kI * kd) * w2 -
           kI * (1.0 - kI * k / k1.beta) * std::exp(kI * kd) * (k2.big_m * sh2)) *
          inv_f;
  in.d1 = 0.5 * std::exp(e1) *
          ((1.0 - kI * k / k1.beta) * std::exp(-kI * kd) * w2 -
           kI * (1.0 + kI * k / k1.beta) * std::exp(kI * kd) * (k2.big_m * sh2)) *
          inv_f;
  out.interior = in;
  return out;
}

double well_transmission_rate(double k, double depth_ev,
                              double length_angstrom) {
  if (!(depth_ev > 0.0)) {
    throw std::invalid_argument("well_transmission_rate: depth must be positive");
  }
  if (!(length_angstrom >= 0.0)) {
    throw std::invalid_argument("well_transmission_rate: length must be non-negative");
  }
  if (!(k > 0.0)) {
    throw std::domain_error("well_transmission_rate: wavenumber must be positive");
  }
  const double beta = std::sqrt(depth_ev + k * k);
  const double arg = beta * scale(length_angstrom);
  const double ratio = k / beta - beta / k;
  const double s = std::sin(arg);
  return 1.0 / (1.0 + 0.25 * ratio * ratio * s * s);
}

FluxReport verify_flux_conservation(const ScatteringSolution& sol) {
  FluxReport report;
  report.unitarity_residual =
      std::abs(sol.transmission_rate() + sol.reflection_rate() - 1.0);
  if (sol.interior) {
    report.interior_residual =
        std::abs(sol.transmission_rate() - (std::norm(sol.interior->alpha) -
                                            std::norm(sol.interior->gamma)));
  }
  return report;
}

Complex wavefunction_value(double k, const DoubleBarrier& db,
                           const ScatteringSolution& sol, double x) {
  if (!sol.interior) {
    throw std::invalid_argument("wavefunction_value: interior amplitudes missing");
  }
  const InteriorAmplitudes& in = *sol.interior;
  const double b1 = db.inner_left();
  const double a2 = db.inner_right();
  const double b2 = db.extent();
  const double xs = scale(x);
  const double beta1 = std::sqrt(db.first.height_ev - k * k);
  const double beta2 = std::sqrt(db.second.height_ev - k * k);
  if (x < 0.0) {
    return std::exp(kI * k * xs) + sol.reflection * std::exp(-kI * k * xs);
  }
  if (x <= b1) {
    return in.c1 * std::exp(beta1 * xs) + in.d1 * std::exp(-beta1 * xs);
  }
  if (x <= a2) {
    return in.alpha * std::exp(kI * k * xs) + in.gamma * std::exp(-kI * k * xs);
  }
  if (x <= b2) {
    return in.c2 * std::exp(beta2 * xs) + in.d2 * std::exp(-beta2 * xs);
  }
  return sol.transmission * std::exp(kI * k * xs);
}

Complex wavefunction_derivative(double k, const DoubleBarrier& db,
                                const ScatteringSolution& sol, double x) {
  if (!sol.interior) {
    throw std::invalid_argument("wavefunction_derivative: interior amplitudes missing");
  }
  const InteriorAmplitudes& in = *sol.interior;
  const double b1 = db.inner_left();
  const double a2 = db.inner_right();
  const double b2 = db.extent();
  const double xs = scale(x);
  const double beta1 = std::sqrt(db.first.height_ev - k * k);
  const double beta2 = std::sqrt(db.second.height_ev - k * k);
  if (x < 0.0) {
    return kI * k *
           (std::exp(kI * k * xs) - sol.reflection * std::exp(-kI * k * xs));
  }
  if (x <= b1) {
    return beta1 *
           (in.c1 * std::exp(beta1 * xs) - in.d1 * std::exp(-beta1 * xs));
  }
  if (x <= a2) {
    return kI * k *
           (in.alpha * std::exp(kI * k * xs) - in.gamma * std::exp(-kI * k * xs));
  }
  if (x <= b2) {
    return beta2 *
           (in.c2 * std::exp(beta2 * xs) - in.d2 * std::exp(-beta2 * xs));
  }
  return kI * k * sol.transmission * std::exp(kI * k * xs);
}

}  // namespace qdb
