#include "qdb/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdb/scattering.hpp"
#include "qdb/units.hpp"

namespace qdb::resonance {

namespace {

double scale(double x_angstrom) { return x_angstrom * units::kAngstromKe; }

// Wraps v to the nearest residual against the lattice {offset + period * n}.
double lattice_residual(double v, double offset, double period) {
  const double n = std::round((v - offset) / period);
  return v - (offset + period * n);
}

// Bisection refined by secant steps on a bracketed sign change.
template <typename F>
double refine_root(F&& f, double a, double b, double fa, double fb,
                   double tol) {
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    double mid;
    // Secant proposal, accepted only if it lands inside the bracket.
    const double sec = (fb != fa) ? b - fb * (b - a) / (fb - fa) : a;
    if (sec > a && sec < b && (it % 2 == 0)) {
      mid = sec;
    } else {
      mid = 0.5 * (a + b);
    }
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fa < 0.0) != (fm < 0.0)) {
      b = mid;
      fb = fm;
    } else {
      a = mid;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

// Continued auxiliary phase phi_i = arctan[K tanh(beta l)]; real on both
// sides of the barrier top.
double auxiliary_phase_general(double k, const Barrier& b) {
  const auto kin = detail::complex_kinematics(k, b.height_ev);
  const std::complex<double> arg =
      kin.big_k * std::tanh(kin.beta * scale(b.length_angstrom));
  return std::atan(arg.real());
}

double resonance_phase_general(double k, const DoubleBarrier& db) {
  return k * scale(db.gap_angstrom) -
         0.5 * (auxiliary_phase_general(k, db.first) +
                auxiliary_phase_general(k, db.second) + M_PI);
}

// Roots of Phi(k) = offset (mod pi) on (k_min, hi].
std::vector<double> scan_phase_roots(const DoubleBarrier& db, double k_min,
                                     double hi, double offset,
                                     const FindOptions& opt) {
  const auto target = [&db, offset](double k) {
    return lattice_residual(resonance_phase_general(k, db), offset, M_PI);
  };
  const double step = std::min(
      opt.scan_step_max, M_PI / (8.0 * scale(std::max(db.gap_angstrom, 1.0))));
  const int n = std::max(16, static_cast<int>(std::ceil((hi - k_min) / step)));
  std::vector<double> roots;
  double prev_k = k_min;
  double prev_t = target(prev_k);
  for (int i = 1; i <= n; ++i) {
    const double k = k_min + (hi - k_min) * i / n;
    const double t = target(k);
    if ((prev_t < 0.0) != (t < 0.0) && std::abs(t - prev_t) < 0.5 * M_PI) {
      roots.push_back(refine_root(target, prev_k, k, prev_t, t,
                                  opt.k_tolerance));
    }
    prev_k = k;
    prev_t = t;
  }
  return roots;
}

}  // namespace

double symmetric_delta(double k, double height_ev, double length_angstrom) {
  const Kinematics kin = kinematics(k, height_ev);
  const double bl2 = 2.0 * kin.beta * scale(length_angstrom);
  detail::check_hyperbolic(bl2, "symmetric_delta");
  const double c2 = std::cosh(bl2);
  const double s2 = std::sinh(bl2);
  const double m2 = kin.big_m * kin.big_m;
  return std::atan2(c2 - 0.5 * m2 * (c2 - 1.0), kin.big_k * s2);
}

double symmetric_transmission_rate(double k, double height_ev,
                                   double length_angstrom,
                                   double gap_angstrom) {
  const Kinematics kin = kinematics(k, height_ev);
  const double bl2 = 2.0 * kin.beta * scale(length_angstrom);
  detail::check_hyperbolic(bl2, "symmetric_transmission_rate");
  const double c2 = std::cosh(bl2);
  const double m2 = kin.big_m * kin.big_m;
  const double delta = symmetric_delta(k, height_ev, length_angstrom);
  const double kd2 = 2.0 * k * scale(gap_angstrom);
  const double mod = m2 * (c2 - 1.0) * (1.0 + 0.5 * m2 * (c2 - 1.0)) *
                     (1.0 + std::sin(kd2 + delta));
  return 1.0 / (1.0 + mod);
}

SymmetricConditionResiduals symmetric_condition_residuals(
    double k, double height_ev, double length_angstrom, double gap_angstrom) {
  const Kinematics kin = kinematics(k, height_ev);
  const double bl2 = 2.0 * kin.beta * scale(length_angstrom);
  const double c2 = std::cosh(bl2);
  const double s2 = std::sinh(bl2);
  const double m2 = kin.big_m * kin.big_m;
  const double delta = symmetric_delta(k, height_ev, length_angstrom);
  const double kd2 = 2.0 * k * scale(gap_angstrom);

  SymmetricConditionResiduals out;
  out.extremal = std::tan(delta) - std::cos(kd2) / std::sin(kd2);
  out.resonant =
      std::sin(kd2) + kin.big_k * s2 / (1.0 + 0.5 * m2 * (c2 - 1.0));
  return out;
}

std::vector<ResonanceRecord> find_resonances(const DoubleBarrier& db,
                                             double k_min, double k_max,
                                             const FindOptions& opt) {
  validate(db);
  const double k_top = std::sqrt(
      std::min(db.first.height_ev, db.second.height_ev));
  if (!(k_min > 0.0) || !(k_max > k_min)) {
    throw std::invalid_argument("find_resonances: empty wave-number range");
  }
  const double hi = std::min(k_max, k_top * (1.0 - 1e-9));
  if (hi <= k_min) return {};

  // Roots of the resonance condition. The symmetric path brackets
  // 2kd + delta(k) = 2N pi + 3 pi/2; the general path brackets
  // Phi(k) = m pi. The two conditions coincide for identical barriers
  // (delta = n pi - pi/2 - 2 phi).
  std::vector<double> roots;
  if (db.symmetric()) {
    const double a = db.first.height_ev;
    const double l = db.first.length_angstrom;
    const double d = db.gap_angstrom;
    const auto target = [a, l, d](double k) {
      const double g = 2.0 * k * scale(d) + symmetric_delta(k, a, l);
      return lattice_residual(g, 1.5 * M_PI, 2.0 * M_PI);
    };
    const double step = std::min(
        opt.scan_step_max,
        M_PI / (8.0 * scale(std::max(db.gap_angstrom, 1.0))));
    const int n =
        std::max(16, static_cast<int>(std::ceil((hi - k_min) / step)));
    double prev_k = k_min;
    double prev_t = target(prev_k);
    for (int i = 1; i <= n; ++i) {
      const double k = k_min + (hi - k_min) * i / n;
      const double t = target(k);
      // A genuine crossing moves through zero, not across the branch seam.
      if ((prev_t < 0.0) != (t < 0.0) && std::abs(t - prev_t) < M_PI) {
        roots.push_back(refine_root(target, prev_k, k, prev_t, t,
                                    opt.k_tolerance));
      }
      prev_k = k;
      prev_t = t;
    }
  } else {
    roots = scan_phase_roots(db, k_min, hi, 0.0, opt);
  }

  std::vector<ResonanceRecord> records;
  records.reserve(roots.size());
  for (const double root : roots) {
    ResonanceRecord rec;
    rec.k_res = root;
    const double phi = resonance_phase_general(root, db);
    rec.mode_index = static_cast<int>(std::llround(phi / M_PI));
    rec.peak_transmission = transmission_rate_general(root, db);
    records.push_back(rec);
  }
  std::sort(records.begin(), records.end(),
            [](const ResonanceRecord& a, const ResonanceRecord& b) {
              return a.k_res < b.k_res;
            });
  return records;
}

std::vector<double> find_antiresonances(const DoubleBarrier& db, double k_min,
                                        double k_max, const FindOptions& opt) {
  validate(db);
  const double k_top =
      std::sqrt(std::min(db.first.height_ev, db.second.height_ev));
  if (!(k_min > 0.0) || !(k_max > k_min)) {
    throw std::invalid_argument("find_antiresonances: empty wave-number range");
  }
  const double hi = std::min(k_max, k_top * (1.0 - 1e-9));
  if (hi <= k_min) return {};
  std::vector<double> roots = scan_phase_roots(db, k_min, hi, 0.5 * M_PI, opt);
  std::sort(roots.begin(), roots.end());
  return roots;
}

void measure_widths(const DoubleBarrier& db,
                    std::vector<ResonanceRecord>& records) {
  if (records.empty()) return;
  const double level = 0.5 * records.front().peak_transmission;
  const double k_ceiling = std::sqrt(
      std::max(db.first.height_ev, db.second.height_ev)) * (1.0 - 1e-9);

  auto above = [&db, level](double k) {
    return transmission_rate_general(k, db) - level;
  };

  for (std::size_t i = 0; i < records.size(); ++i) {
    ResonanceRecord& rec = records[i];
    rec.half_level = level;
    rec.width_valid = false;
    if (above(rec.k_res) <= 0.0) continue;  // peak below the trace level

    // March outward until below the level, then bisect back.
    const double lo_limit = (i > 0) ? records[i - 1].k_res : 1e-9;
    const double hi_limit =
        (i + 1 < records.size()) ? records[i + 1].k_res : k_ceiling;

    double step = 1e-5;
    double left = rec.k_res;
    while (above(left) > 0.0) {
      left -= step;
      step *= 1.4;
      if (left <= lo_limit) break;
    }
    if (above(left) > 0.0) continue;  // collided with the neighbour: overlap
    rec.k_half_left = refine_root(above, left, rec.k_res, above(left),
                                  above(rec.k_res), 1e-12);

    step = 1e-5;
    double right = rec.k_res;
    while (above(right) > 0.0) {
      right += step;
      step *= 1.4;
      if (right >= hi_limit) break;
    }
    if (above(right) > 0.0) continue;
    // refine_root expects f(a), f(b) of opposite sign in either order.
    rec.k_half_right =
        refine_root([&above](double k) { return -above(k); }, rec.k_res, right,
                    -above(rec.k_res), -above(right), 1e-12);

    rec.fwhm = rec.k_half_right - rec.k_half_left;
    rec.width_valid = rec.fwhm > 0.0;
  }
}

double free_spectral_distance(const std::vector<ResonanceRecord>& records) {
  if (records.empty()) {
    throw std::invalid_argument("free_spectral_distance: no resonances");
  }
  // Mean of consecutive spacings with the first spacing taken from k = 0;
  // the sum telescopes to the last resonance position.
  return records.back().k_res / static_cast<double>(records.size());
}

void fill_finesse(const DoubleBarrier& db,
                  std::vector<ResonanceRecord>& records) {
  if (records.empty()) return;
  const double spacing = free_spectral_distance(records);
  for (ResonanceRecord& rec : records) {
    rec.free_spectral = spacing;
    if (rec.width_valid) {
      if (!(rec.fwhm > 0.0)) {
        throw std::domain_error("fill_finesse: zero linewidth");
      }
      rec.finesse_numeric = spacing / rec.fwhm;
    }
    rec.finesse_analytic = interference::analytic_finesse(rec.k_res, db);
  }
}

std::vector<ResonanceRecord> analyze(const DoubleBarrier& db, double k_min,
                                     double k_max, const FindOptions& opt) {
  std::vector<ResonanceRecord> records = find_resonances(db, k_min, k_max, opt);
  measure_widths(db, records);
  fill_finesse(db, records);
  return records;
}

double fp_standing_wave(double k_per_m, double x_m,
                        const interference::OpticalCavity& cav) {
  interference::validate(cav);
  if (x_m < 0.0 || x_m > cav.plate_separation_m) {
    throw std::domain_error("fp_standing_wave: position outside the cavity");
  }
  const double r = cav.reflectivity;
  const double pre = (1.0 + r -
                      2.0 * std::sqrt(r) *
                          std::cos(2.0 * k_per_m * (cav.plate_separation_m - x_m))) /
                     (1.0 - r);
  return pre * interference::fp_transmission(k_per_m, cav);
}

double well_standing_wave(double k, double x_angstrom,
                          const DoubleBarrier& db) {
  validate(db);
  if (x_angstrom <= db.inner_left() || x_angstrom >= db.inner_right()) {
    throw std::domain_error(
        "well_standing_wave: position outside the inter-barrier region");
  }
  if (db.first.length_angstrom == 0.0 && db.second.length_angstrom == 0.0) {
    return 1.0;  // free propagation, alpha = 1, gamma = 0
  }
  const Kinematics k2 = kinematics(k, db.second.height_ev);
  kinematics(k, db.first.height_ev);  // regime check for the first barrier
  const double bl2 = 2.0 * k2.beta * scale(db.second.length_angstrom);
  detail::check_hyperbolic(bl2, "well_standing_wave");
  const double c2 = std::cosh(bl2);
  const double s2 = std::sinh(bl2);
  const double arg = 2.0 * k * scale(db.inner_right() - x_angstrom);
  const double pre =
      1.0 + k2.big_m * k2.big_m * (c2 - 1.0) +
      k2.big_m * (s2 * std::sin(arg) - k2.big_k * (c2 - 1.0) * std::cos(arg));
  return pre * transmission_rate_general(k, db);
}

}  // namespace qdb::resonance
