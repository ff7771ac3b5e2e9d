#include "qdb/phase_time.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "qdb/interference.hpp"
#include "qdb/scattering.hpp"
#include "qdb/units.hpp"

namespace qdb::phase_time {

namespace {

double scale(double x_angstrom) { return x_angstrom * units::kAngstromKe; }

double wrap_to_pi(double x) {
  while (x > M_PI) x -= 2.0 * M_PI;
  while (x < -M_PI) x += 2.0 * M_PI;
  return x;
}

// Raw centered difference of the principal-value phase, wrap-corrected.
double phase_slope(double k, const DoubleBarrier& db, double h) {
  const double lo = transmission_phase(k - h, db);
  const double hi = transmission_phase(k + h, db);
  const double dt = wrap_to_pi(hi - lo);
  return dt / (2.0 * h);
}

}  // namespace

double transmission_phase(double k, const DoubleBarrier& db) {
  // theta = arg(T e^{ik(d+l1+l2)}) = -arg F.
  return -std::arg(transmission_denominator(k, db));
}

double single_barrier_phase(double k, const Barrier& b) {
  validate(b);
  const Kinematics kin = kinematics(k, b.height_ev);
  const double bl = kin.beta * scale(b.length_angstrom);
  detail::check_hyperbolic(bl, "single_barrier_phase");
  return std::atan(kin.big_k * std::tanh(bl));
}

double single_barrier_phase_time(double k, const Barrier& b) {
  validate(b);
  const Kinematics kin = kinematics(k, b.height_ev);
  // Internal lengths in Angstrom, wavenumbers in 1/Angstrom.
  const double ki = k * units::kAngstromKe;
  const double bi = kin.beta * units::kAngstromKe;
  const double l = b.length_angstrom;
  const double bl = bi * l;
  detail::check_hyperbolic(bl, "single_barrier_phase_time");
  const double m2 = kin.big_m * kin.big_m;
  const double sh = std::sinh(bl);
  const double numer = m2 * std::sinh(2.0 * bl) + kin.big_k * (ki * l);
  const double denom = bi * (1.0 + m2 * sh * sh);
  // dtheta/dk in Angstrom -> dimensionless per k_e via the Angstrom scale.
  const double dtheta_dk = (numer / denom) * units::kAngstromKe;
  return units::kTauPrefactorFs * dtheta_dk / k;
}

double symmetric_phase_derivative_numerator(double k, double height_ev,
                                            double length_angstrom,
                                            double gap_angstrom) {
  const Kinematics kin = kinematics(k, height_ev);
  const double ki = k * units::kAngstromKe;
  const double bi = kin.beta * units::kAngstromKe;
  const double l = length_angstrom;
  const double d = gap_angstrom;
  const double bl2 = 2.0 * bi * l;
  detail::check_hyperbolic(bl2, "symmetric_phase_derivative_numerator");
  const double c2 = std::cosh(bl2);
  const double s2 = std::sinh(bl2);
  const double m2 = kin.big_m * kin.big_m;
  const double kk = kin.big_k;
  const double kd2 = 2.0 * ki * d;

  return d * (m2 * c2 - kk * kk) +
         (2.0 / bi) * (m2 * s2 + kk * (ki * l)) * (1.0 + 0.5 * m2 * (c2 - 1.0)) +
         (2.0 * m2 / bi) *
             ((c2 - 1.0) * ((1.0 - 0.5 * m2) * s2 - 0.5 * kk * ki * l) *
                  std::cos(kd2) +
              (kk * c2 * (c2 - 1.0) + 0.5 * s2 * ki * l) * std::sin(kd2));
}

double symmetric_double_phase_time(double k, double height_ev,
                                   double length_angstrom,
                                   double gap_angstrom) {
  const double numer = symmetric_phase_derivative_numerator(
      k, height_ev, length_angstrom, gap_angstrom);
  const double rate = resonance::symmetric_transmission_rate(
      k, height_ev, length_angstrom, gap_angstrom);
  // dtheta/dk = D / S with S = |F|^2 = 1 / T.
  const double dtheta_dk = numer * rate * units::kAngstromKe;
  return units::kTauPrefactorFs * dtheta_dk / k;
}

double asymmetric_phase_time(double k, const DoubleBarrier& db, double dk) {
  validate(db);
  if (!(dk > 0.0)) {
    throw std::invalid_argument("asymmetric_phase_time: step must be positive");
  }
  // Guard against a phase wrap straddling the stencil.
  const double t0 = transmission_phase(k - dk, db);
  const double t1 = transmission_phase(k, db);
  const double t2 = transmission_phase(k + dk, db);
  if (std::abs(wrap_to_pi(t1 - t0)) >= 0.5 * M_PI ||
      std::abs(wrap_to_pi(t2 - t1)) >= 0.5 * M_PI) {
    throw std::domain_error(
        "asymmetric_phase_time: phase jump inside the stencil; reduce dk");
  }
  // Two-step Richardson: (4 D(h/2) - D(h)) / 3.
  const double coarse = phase_slope(k, db, dk);
  const double fine = phase_slope(k, db, 0.5 * dk);
  const double dtheta_dk = (4.0 * fine - coarse) / 3.0;
  return units::kTauPrefactorFs * dtheta_dk / k;
}

std::vector<double> unwrapped_phase(const DoubleBarrier& db, double k_min,
                                    double k_max, int points) {
  validate(db);
  if (points < 2) {
    throw std::invalid_argument("unwrapped_phase: need at least two grid points");
  }
  if (!(k_min > 0.0) || !(k_max > k_min)) {
    throw std::invalid_argument("unwrapped_phase: empty wave-number range");
  }

  // True phase change across [k_lo, k_hi], refining recursively until every
  // sub-step moves the phase by less than pi/2.
  const std::function<double(double, double, double, double, int)> span_delta =
      [&](double k_lo, double raw_lo, double k_hi, double raw_hi,
          int depth) -> double {
    const double delta = wrap_to_pi(raw_hi - raw_lo);
    if (std::abs(delta) < 0.5 * M_PI || depth >= 48) return delta;
    const double mid = 0.5 * (k_lo + k_hi);
    const double raw_mid = transmission_phase(mid, db);
    return span_delta(k_lo, raw_lo, mid, raw_mid, depth + 1) +
           span_delta(mid, raw_mid, k_hi, raw_hi, depth + 1);
  };

  std::vector<double> theta(points);
  double prev_k = 0.0;
  double prev_raw = 0.0;
  for (int i = 0; i < points; ++i) {
    const double k = k_min + (k_max - k_min) * i / (points - 1);
    const double raw = transmission_phase(k, db);
    theta[i] = (i == 0) ? raw
                        : theta[i - 1] + span_delta(prev_k, prev_raw, k, raw, 0);
    prev_k = k;
    prev_raw = raw;
  }
  return theta;
}

PhaseTimeProfile profile(const DoubleBarrier& db, double k_min, double k_max,
                         int points, double dk) {
  PhaseTimeProfile out;
  out.theta = unwrapped_phase(db, k_min, k_max, points);
  out.k.resize(points);
  out.tau_fs.resize(points);
  out.near_resonance.resize(points);
  for (int i = 0; i < points; ++i) {
    const double k = k_min + (k_max - k_min) * i / (points - 1);
    out.k[i] = k;
    out.tau_fs[i] = asymmetric_phase_time(k, db, dk);
    const double phi = interference::resonance_phase(k, db);
    const double res = phi - std::round(phi / M_PI) * M_PI;
    out.near_resonance[i] = std::abs(res) < 0.25 * M_PI;
  }
  return out;
}

LifetimeRecord lifetime_from_uncertainty(
    const resonance::ResonanceRecord& rec) {
  if (!rec.width_valid || !(rec.fwhm > 0.0)) {
    throw std::domain_error(
        "lifetime_from_uncertainty: record has no valid linewidth");
  }
  LifetimeRecord out;
  out.k_res = rec.k_res;
  out.fwhm = rec.fwhm;
  // deltaE = hbar^2 k dk / m = 2 E_s k dk in eV with E_s = 1 eV.
  out.energy_width_ev = 2.0 * rec.k_res * rec.fwhm;
  const double tau_uc = units::kHbarEvFs / out.energy_width_ev;
  out.two_tau_uncertainty_fs = 2.0 * tau_uc;
  return out;
}

std::vector<LifetimeRecord> lifetime_report(
    const DoubleBarrier& db,
    const std::vector<resonance::ResonanceRecord>& records, double dk) {
  validate(db);
  std::vector<LifetimeRecord> out;
  out.reserve(records.size());
  for (const resonance::ResonanceRecord& rec : records) {
    LifetimeRecord lt = lifetime_from_uncertainty(rec);
    if (db.symmetric()) {
      lt.tau_phase_fs = symmetric_double_phase_time(
          rec.k_res, db.first.height_ev, db.first.length_angstrom,
          db.gap_angstrom);
    } else {
      lt.tau_phase_fs = asymmetric_phase_time(rec.k_res, db, dk);
    }
    lt.tau_corrected_fs = lt.tau_phase_fs -
                          single_barrier_phase_time(rec.k_res, db.first) -
                          single_barrier_phase_time(rec.k_res, db.second);
    out.push_back(lt);
  }
  return out;
}

}  // namespace qdb::phase_time
