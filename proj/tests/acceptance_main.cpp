// Acceptance suite: reproduces the published benchmark tables and the
// internal consistency requirements, printing one line per criterion.
// Exits nonzero if any check fails.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qdb/interference.hpp"
#include "qdb/oracle.hpp"
#include "qdb/phase_time.hpp"
#include "qdb/presets.hpp"
#include "qdb/resonance.hpp"
#include "qdb/scattering.hpp"
#include "qdb/units.hpp"
#include "reference_values.hpp"

using namespace qdb;

namespace {

struct Reporter {
  int criterion_failures = 0;
  int value_failures = 0;
  bool current_ok = true;
  std::vector<std::string> notes;

  void begin() {
    current_ok = true;
    notes.clear();
  }

  void check_abs(const char* what, double got, double want, double tol) {
    const double err = std::abs(got - want);
    if (err > tol) {
      ++value_failures;
      current_ok = false;
      notes.push_back(std::string("    ") + what + ": got " +
                      std::to_string(got) + ", want " + std::to_string(want) +
                      " +- " + std::to_string(tol));
    }
  }

  void check_rel(const char* what, double got, double want, double tol) {
    const double err = std::abs(got - want) / std::abs(want);
    if (err > tol) {
      ++value_failures;
      current_ok = false;
      notes.push_back(std::string("    ") + what + ": got " +
                      std::to_string(got) + ", want " + std::to_string(want) +
                      " within " + std::to_string(tol * 100.0) + "%");
    }
  }

  void check_true(const char* what, bool ok) {
    if (!ok) {
      ++value_failures;
      current_ok = false;
      notes.push_back(std::string("    ") + what);
    }
  }

  void end(int index, const char* title, const char* remark = nullptr) {
    if (!current_ok) ++criterion_failures;
    std::printf("criterion %d [%s] %s\n", index, current_ok ? "PASS" : "FAIL",
                title);
    for (const std::string& note : notes) std::printf("%s\n", note.c_str());
    if (remark && !current_ok) std::printf("    note: %s\n", remark);
  }
};

// Published tables print wave numbers in units of 5.12e9 /m; the library
// uses k_e = 5.12289e9 /m. k-valued references are converted accordingly.
double axis(double published) { return refvals::axis(published); }

void criterion1(Reporter& r) {
  r.begin();
  const DoubleBarrier db = presets::symmetric();
  const auto records = resonance::analyze(db, 0.05, 3.2);
  r.check_true("four resonances found", records.size() == 4);
  if (records.size() == 4) {
    for (int i = 0; i < 4; ++i) {
      r.check_abs("resonance k", records[i].k_res,
                  axis(refvals::kSymResonances[i]), 1e-4);
      r.check_abs("fwhm", records[i].fwhm, axis(refvals::kSymFwhm[i]), 1e-4);
      r.check_rel("numeric finesse", records[i].finesse_numeric,
                  refvals::kSymFinesseNumeric[i], 0.002);
      r.check_rel("analytic finesse", records[i].finesse_analytic,
                  refvals::kSymFinesseAnalytic[i], 0.001);
    }
    r.check_abs("free spectral distance",
                resonance::free_spectral_distance(records),
                axis(refvals::kSymFreeSpectral), 1e-4);
  }
  r.end(1, "symmetric resonance table");
}

void criterion2(Reporter& r) {
  r.begin();
  const DoubleBarrier db = presets::asymmetric();
  const auto records = resonance::analyze(db, 0.05, 2.94);
  r.check_true("four resonances found", records.size() == 4);
  if (records.size() == 4) {
    for (int i = 0; i < 4; ++i) {
      r.check_abs("resonance k", records[i].k_res,
                  axis(refvals::kAsymResonances[i]), 1e-4);
      r.check_abs("fwhm", records[i].fwhm, axis(refvals::kAsymFwhm[i]), 1e-3);
      r.check_rel("numeric finesse", records[i].finesse_numeric,
                  refvals::kAsymFinesseNumeric[i], 0.005);
      r.check_rel("analytic finesse", records[i].finesse_analytic,
                  refvals::kAsymFinesseAnalytic[i], 0.005);
    }
  }
  r.end(2, "asymmetric resonance table");
}

void criterion3(Reporter& r) {
  r.begin();
  const DoubleBarrier sym = presets::symmetric();
  const auto sym_records = resonance::analyze(sym, 0.05, 3.2);
  const auto sym_table = phase_time::lifetime_report(sym, sym_records);
  r.check_true("symmetric lifetime rows", sym_table.size() == 4);
  if (sym_table.size() == 4) {
    for (int i = 0; i < 4; ++i) {
      r.check_abs("sym tau_db", sym_table[i].tau_phase_fs,
                  refvals::kSymTauPhase[i], 0.05);
      r.check_rel("sym 2*tau_uc", sym_table[i].two_tau_uncertainty_fs,
                  refvals::kSymTwoTauUncertainty[i], 0.005);
    }
  }
  const DoubleBarrier asym = presets::asymmetric();
  const auto asym_records = resonance::analyze(asym, 0.05, 2.94);
  const auto asym_table = phase_time::lifetime_report(asym, asym_records);
  r.check_true("asymmetric lifetime rows", asym_table.size() == 4);
  if (asym_table.size() == 4) {
    for (int i = 0; i < 4; ++i) {
      r.check_rel("asym tau_db", asym_table[i].tau_phase_fs,
                  refvals::kAsymTauPhase[i], 0.01);
      r.check_rel("asym 2*tau_uc", asym_table[i].two_tau_uncertainty_fs,
                  refvals::kAsymTwoTauUncertainty[i], 0.005);
    }
  }
  r.end(3, "lifetime table",
        "the reproduced asymmetric phase times differ from the published "
        "first two entries; those entries are inconsistent with the "
        "published linewidths of the same configuration (a sharp resonance "
        "pins tau ~ 2 tau_uc ~ 127 fs, not 134 fs), while this "
        "implementation's transmission function is confirmed to 1e-10 by "
        "three independent computation paths");
}

void criterion4(Reporter& r) {
  r.begin();
  r.check_abs("optical finesse at R = 0.8", interference::fp_finesse(0.8),
              refvals::kOpticalFinesse, 1e-3);
  r.end(4, "optical Fabry-Perot finesse");
}

void criterion5(Reporter& r) {
  r.begin();
  double worst = 0.0;
  const auto consider = [&worst](const DoubleBarrier& db, double k) {
    const ScatteringSolution closed = double_barrier_solution(k, db);
    const Complex t_interference = interference::transmission_closed(k, db);
    const Complex r_interference = interference::reflection_closed(k, db);
    const ScatteringSolution reference =
        oracle::transfer_matrix_solve(k, oracle::grid_from(db));
    const double residuals[] = {
        std::abs(closed.transmission - t_interference),
        std::abs(closed.reflection - r_interference),
        std::abs(closed.transmission - reference.transmission),
        std::abs(closed.reflection - reference.reflection),
        std::abs(t_interference - reference.transmission),
        std::abs(r_interference - reference.reflection)};
    for (const double res : residuals) {
      if (res > worst) worst = res;
    }
  };

  std::mt19937 rng(2718281u);
  std::uniform_real_distribution<double> height(2.0, 20.0);
  std::uniform_real_distribution<double> length(0.2, 3.0);
  std::uniform_real_distribution<double> gap(0.5, 12.0);
  std::uniform_real_distribution<double> frac(0.05, 0.999);
  for (int i = 0; i < 200; ++i) {
    const DoubleBarrier db{{height(rng), length(rng)},
                           {height(rng), length(rng)},
                           gap(rng)};
    const double top =
        std::sqrt(std::min(db.first.height_ev, db.second.height_ev));
    consider(db, frac(rng) * top);
  }
  for (const DoubleBarrier& db : {presets::symmetric(), presets::asymmetric()}) {
    const double top =
        std::sqrt(std::min(db.first.height_ev, db.second.height_ev));
    for (int i = 0; i < 2000; ++i) {
      consider(db, 0.05 + (0.9995 * top - 0.05) * i / 1999.0);
    }
  }
  r.check_abs("max pairwise residual (200 random + 2x2000 grid points)", worst,
              0.0, 1e-10);
  r.end(5, "three-way path equivalence");
}

void criterion6(Reporter& r) {
  r.begin();
  std::mt19937 rng(3141592u);
  std::uniform_real_distribution<double> height(2.0, 20.0);
  std::uniform_real_distribution<double> length(0.2, 3.0);
  std::uniform_real_distribution<double> gap(0.5, 12.0);
  std::uniform_real_distribution<double> frac(0.05, 0.999);

  double worst_flux = 0.0, worst_interior = 0.0, worst_swap = 0.0;
  double worst_phase = 0.0, worst_angle = 0.0, worst_mk = 0.0;
  double worst_degenerate = 0.0, worst_standing = 0.0;
  for (int i = 0; i < 400; ++i) {
    const DoubleBarrier db{{height(rng), length(rng)},
                           {height(rng), length(rng)},
                           gap(rng)};
    const double top =
        std::sqrt(std::min(db.first.height_ev, db.second.height_ev));
    const double k = frac(rng) * top;

    const ScatteringSolution sol = double_barrier_solution(k, db);
    const FluxReport flux = verify_flux_conservation(sol);
    worst_flux = std::max(worst_flux, flux.unitarity_residual);
    worst_interior = std::max(worst_interior, flux.interior_residual);

    const DoubleBarrier swapped{db.second, db.first, db.gap_angstrom};
    worst_swap = std::max(
        worst_swap,
        std::abs(sol.transmission_rate() -
                 double_barrier_solution(k, swapped).transmission_rate()));

    const auto one = interference::decompose(k, db.first);
    const auto two = interference::decompose(k, db.second);
    const double identity =
        one.transmission_phase + two.transmission_phase -
        (one.reflection_phase + two.reflection_phase) +
        k * units::kAngstromKe *
            (db.first.length_angstrom + db.second.length_angstrom);
    worst_phase = std::max(worst_phase, std::abs(identity - M_PI));

    const Kinematics kin = kinematics(k, db.first.height_ev);
    worst_mk = std::max(worst_mk, std::abs(kin.big_m * kin.big_m -
                                           kin.big_k * kin.big_k - 1.0));

    const double bl2 = 2.0 * kin.beta * units::kAngstromKe *
                       db.first.length_angstrom;
    if (bl2 < 250.0) {
      const double c2 = std::cosh(bl2);
      const double s2 = std::sinh(bl2);
      const double m2 = kin.big_m * kin.big_m;
      const double lhs = std::pow(kin.big_k * s2, 2) +
                         std::pow(c2 - 0.5 * m2 * (c2 - 1.0), 2);
      const double rhs = std::pow(1.0 + 0.5 * m2 * (c2 - 1.0), 2);
      worst_angle = std::max(worst_angle, std::abs(lhs / rhs - 1.0));
    }

    // d -> 0 with identical barriers degenerates to one barrier of length 2l.
    const DoubleBarrier merged_pair{db.first, db.first, 0.0};
    if (k * k < db.first.height_ev) {
      const Complex two_t = double_barrier_solution(k, merged_pair).transmission;
      const Complex one_t =
          single_barrier_solution(
              k, {db.first.height_ev, 2.0 * db.first.length_angstrom})
              .transmission;
      worst_degenerate =
          std::max(worst_degenerate, std::abs(two_t - one_t) / std::abs(one_t));
    }

    // Standing-wave closed form against the amplitude assembly.
    const double x = db.inner_left() + (db.inner_right() - db.inner_left()) *
                                           (0.05 + 0.9 * frac(rng));
    const Complex wave =
        sol.interior->alpha * std::polar(1.0, k * units::kAngstromKe * x) +
        sol.interior->gamma * std::polar(1.0, -k * units::kAngstromKe * x);
    worst_standing =
        std::max(worst_standing, std::abs(resonance::well_standing_wave(k, x, db) -
                                          std::norm(wave)));
  }
  r.check_abs("flux conservation", worst_flux, 0.0, 1e-12);
  r.check_abs("interior flux identity", worst_interior, 0.0, 1e-12);
  r.check_abs("left-right swap symmetry", worst_swap, 0.0, 1e-12);
  r.check_abs("transmission/reflection phase identity", worst_phase, 0.0, 1e-12);
  r.check_abs("angle identity (relative)", worst_angle, 0.0, 1e-10);
  r.check_abs("M^2 - K^2 - 1", worst_mk, 0.0, 1e-12);
  r.check_abs("d -> 0 degeneration (relative)", worst_degenerate, 0.0, 1e-10);
  r.check_abs("standing-wave cross-check", worst_standing, 0.0, 1e-12);
  r.end(6, "property suite");
}

void criterion7(Reporter& r) {
  r.begin();
  const double a = 10.0;
  const double k = 1.0;
  const double beta = std::sqrt(a - k * k);
  const double saturation = units::kHbarEvFs / (k * beta);  // 2/(v beta) in fs

  const double l20 = 20.0 / (beta * units::kAngstromKe);
  r.check_rel("tau_sb saturation at beta*l = 20",
              phase_time::single_barrier_phase_time(k, {a, l20}), saturation,
              1e-3);
  r.check_rel("tau_dbs saturation at beta*l = 20",
              phase_time::symmetric_double_phase_time(k, a, l20, 7.0),
              saturation, 1e-3);

  const double l_thin = 0.01 / (beta * units::kAngstromKe);
  const double free_time =
      units::kTauPrefactorFs * l_thin * units::kAngstromKe / k;
  r.check_rel("tau_sb thin limit (l/v)(2 + A/E)",
              phase_time::single_barrier_phase_time(k, {a, l_thin}),
              free_time * (2.0 + a / (k * k)), 0.01);

  const Kinematics kin = kinematics(k, a);
  const double d = 7.0;
  const double ki = k * units::kAngstromKe;
  const double effective =
      d + 2.0 * l_thin +
      2.0 * l_thin * kin.big_m *
          (kin.beta / k + kin.big_m * (ki * l_thin) * std::sin(2.0 * ki * d));
  r.check_rel("tau_dbs thin form",
              phase_time::symmetric_double_phase_time(k, a, l_thin, d),
              units::kTauPrefactorFs * effective * units::kAngstromKe / k, 0.02);
  r.end(7, "phase-time limits",
        "the thin-barrier reference (l/v)(2 + A/E) is twice the actual limit "
        "of the phase-time expression; the closed form, its "
        "finite-difference oracle, and the d -> 0 reduction of the "
        "double-barrier form all agree on (l/v)(1 + A/2E)");
}

void criterion8(Reporter& r) {
  r.begin();
  const DoubleBarrier db = presets::symmetric();
  double worst = 0.0;
  int compared = 0;
  for (int i = 0; i < 500; ++i) {
    const double k = 0.1 + (3.1 - 0.1) * i / 499.0;
    const double closed = phase_time::symmetric_double_phase_time(
        k, db.first.height_ev, db.first.length_angstrom, db.gap_angstrom);
    double numeric = 0.0;
    try {
      numeric = phase_time::asymmetric_phase_time(k, db, 1e-6);
    } catch (const std::domain_error&) {
      continue;  // wrap straddles the stencil
    }
    ++compared;
    worst = std::max(worst, std::abs(closed / numeric - 1.0));
  }
  r.check_true("compared at least 450 of 500 grid points", compared >= 450);
  r.check_abs("max relative disagreement", worst, 0.0, 1e-6);

  double worst_sym = 0.0;
  for (const double k : {0.5, 1.2, 2.0, 3.0}) {
    const double closed = phase_time::symmetric_double_phase_time(
        k, db.first.height_ev, db.first.length_angstrom, db.gap_angstrom);
    const double numeric = phase_time::asymmetric_phase_time(k, db, 1e-6);
    worst_sym = std::max(worst_sym, std::abs(numeric / closed - 1.0));
  }
  r.check_abs("general path on symmetric inputs", worst_sym, 0.0, 1e-6);
  r.end(8, "analytic vs finite-difference phase time");
}

void criterion9(Reporter& r) {
  r.begin();
  for (const DoubleBarrier& db : {presets::asymmetric(), presets::symmetric()}) {
    const double top = 0.999 * std::sqrt(std::min(db.first.height_ev,
                                                  db.second.height_ev));
    const auto records = resonance::find_resonances(db, 0.05, top);
    const auto valleys = resonance::find_antiresonances(db, 0.05, top);
    r.check_true("resonances available", records.size() >= 4);
    r.check_true("anti-resonances available", valleys.size() >= 4);
    double worst_max = 0.0, worst_min = 0.0;
    for (const auto& rec : records) {
      worst_max = std::max(
          worst_max,
          std::abs(rec.peak_transmission -
                   interference::transmission_rate_maximum(rec.k_res, db)));
    }
    for (const double k : valleys) {
      worst_min = std::max(
          worst_min,
          std::abs(transmission_rate_general(k, db) -
                   interference::transmission_rate_minimum(k, db)));
    }
    r.check_abs("peak transmission vs envelope maximum", worst_max, 0.0, 1e-6);
    r.check_abs("valley transmission vs envelope minimum", worst_min, 0.0, 1e-6);
  }
  r.end(9, "transmission extrema formulas");
}

}  // namespace

int main() {
  std::printf("acceptance suite: double-barrier tunneling toolkit\n");
  std::printf(
      "wave-number references converted from the published axis unit "
      "(5.12e9 /m) to k_e = 5.12289e9 /m\n\n");
  Reporter reporter;
  criterion1(reporter);
  criterion2(reporter);
  criterion3(reporter);
  criterion4(reporter);
  criterion5(reporter);
  criterion6(reporter);
  criterion7(reporter);
  criterion8(reporter);
  criterion9(reporter);
  std::printf("\n%d criterion(s) failed, %d value(s) outside tolerance\n",
              reporter.criterion_failures, reporter.value_failures);
  return reporter.criterion_failures == 0 ? 0 : 1;
}
