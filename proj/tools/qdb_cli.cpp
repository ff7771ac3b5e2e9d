// Command-line front end for the double-barrier tunneling library.
// Talks to the core exclusively through the C API (qdb.h).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdb.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitValidation = 3;

// 12 significant digits; scientific notation outside [1e-4, 1e6).
std::string format_number(double x) {
  if (x == 0.0) return "0";
  char buf[48];
  const double ax = std::fabs(x);
  if (ax < 1e-4 || ax >= 1e6) {
    std::snprintf(buf, sizeof buf, "%.11e", x);
  } else {
    std::snprintf(buf, sizeof buf, "%.12g", x);
  }
  return buf;
}

// Round through the text representation so JSON output carries the same
// 12-significant-digit values as CSV.
double rounded(double x) { return std::stod(format_number(x)); }

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(qdb_status status, const char* where) {
  if (status == QDB_OK) return;
  std::string message = std::string(where) + ": " +
                        qdb_status_message(status) + " (" + qdb_last_error() +
                        ")";
  if (status == QDB_ERROR_INVALID_ARGUMENT || status == QDB_ERROR_UNKNOWN_PRESET) {
    throw UsageError(message);
  }
  throw DomainError(message);
}

struct BarrierHandle {
  qdb_double_barrier* ptr = nullptr;
  ~BarrierHandle() { qdb_double_barrier_destroy(ptr); }
};

struct RunConfig {
  std::string preset;
  double a1 = 0.0, l1 = 0.0, a2 = 0.0, l2 = 0.0, d = 0.0;
  bool explicit_barriers = false;
  double k_min = 0.0, k_max = 0.0;
  int points = 2000;
  std::string format = "csv";
  std::string out_path;
  double tolerance = 1e-10;
  double dk = 1e-6;
  std::vector<double> x_positions;
};

bool optical_mode(const RunConfig& cfg) { return cfg.preset == "fp-optical"; }

BarrierHandle make_barrier(const RunConfig& cfg) {
  BarrierHandle handle;
  if (!cfg.preset.empty()) {
    check(qdb_double_barrier_preset(cfg.preset.c_str(), &handle.ptr), "preset");
  } else if (cfg.explicit_barriers) {
    check(qdb_double_barrier_create(cfg.a1, cfg.l1, cfg.a2, cfg.l2, cfg.d,
                                    &handle.ptr),
          "barrier parameters");
  } else {
    throw UsageError("give either --preset or all of --a1 --l1 --a2 --l2 --d");
  }
  return handle;
}

void default_range(const RunConfig& cfg, const BarrierHandle& db, double& lo,
                   double& hi) {
  lo = cfg.k_min;
  hi = cfg.k_max;
  if (lo > 0.0 && hi > lo) return;
  double a1 = 0, l1 = 0, a2 = 0, l2 = 0, d = 0;
  check(qdb_double_barrier_params(db.ptr, &a1, &l1, &a2, &l2, &d), "params");
  const double top = std::sqrt(a1 < a2 ? a1 : a2);
  lo = 0.05;
  hi = 0.9999 * top;
}

std::ostream& open_output(std::ofstream& file, const RunConfig& cfg) {
  if (cfg.out_path.empty() || cfg.out_path == "-") return std::cout;
  file.open(cfg.out_path, std::ios::binary);
  if (!file) throw UsageError("cannot open output file: " + cfg.out_path);
  return file;
}

void write_header(std::ostream& os, const RunConfig& cfg,
                  const std::string& command, const BarrierHandle* db) {
  os << "# qdb " << command << " v" << qdb_version() << "\n";
  os << "# units: k in k_e = 5.12289e9 /m (E[eV] = k^2); lengths in Angstrom; "
        "energies in eV; times in fs\n";
  if (db && db->ptr) {
    double a1 = 0, l1 = 0, a2 = 0, l2 = 0, d = 0;
    qdb_double_barrier_params(db->ptr, &a1, &l1, &a2, &l2, &d);
    os << "# barriers: a1=" << format_number(a1) << " l1=" << format_number(l1)
       << " a2=" << format_number(a2) << " l2=" << format_number(l2)
       << " d=" << format_number(d) << "\n";
  }
  if (!cfg.preset.empty()) os << "# preset: " << cfg.preset << "\n";
}

json config_json(const RunConfig& cfg, const std::string& command,
                 const BarrierHandle* db) {
  json j;
  j["command"] = command;
  j["version"] = qdb_version();
  j["units"] = {{"wavenumber", "k_e = 5.12289e9 /m"},
                {"energy", "eV"},
                {"length", "Angstrom"},
                {"time", "fs"}};
  if (!cfg.preset.empty()) j["preset"] = cfg.preset;
  if (db && db->ptr) {
    double a1 = 0, l1 = 0, a2 = 0, l2 = 0, d = 0;
    qdb_double_barrier_params(db->ptr, &a1, &l1, &a2, &l2, &d);
    j["barriers"] = {{"a1_ev", a1}, {"l1_angstrom", l1}, {"a2_ev", a2},
                     {"l2_angstrom", l2}, {"d_angstrom", d}};
  }
  return j;
}

int cmd_spectrum(const RunConfig& cfg) {
  std::ofstream file;
  std::ostream& os = open_output(file, cfg);

  if (optical_mode(cfg)) {
    double reflectivity = 0, separation = 0;
    qdb_preset_optical_cavity(&reflectivity, &separation);
    double lo = cfg.k_min > 0 ? cfg.k_min : 1e-5;
    double hi = cfg.k_max > lo ? cfg.k_max : 2e-3;
    json rows = json::array();
    std::ostringstream csv;
    for (int i = 0; i < cfg.points; ++i) {
      const double k = lo + (hi - lo) * i / (cfg.points - 1);  // 1e6/m units
      double t = 0;
      check(qdb_fp_transmission(reflectivity, k * 1e6 * separation, &t),
            "fp_transmission");
      if (cfg.format == "json") {
        rows.push_back({{"k_1e6_per_m", rounded(k)}, {"T", rounded(t)}});
      } else {
        csv << format_number(k) << "," << format_number(t) << "\n";
      }
    }
    if (cfg.format == "json") {
      json j;
      j["config"] = config_json(cfg, "spectrum", nullptr);
      j["config"]["cavity"] = {{"reflectivity", reflectivity},
                               {"plate_separation_m", separation}};
      j["rows"] = rows;
      os << j.dump(2) << "\n";
    } else {
      os << "# qdb spectrum v" << qdb_version() << "\n";
      os << "# optical cavity: reflectivity=" << format_number(reflectivity)
         << " plate_separation_m=" << format_number(separation) << "\n";
      os << "# units: k in 1e6 /m\n";
      os << "k,T\n" << csv.str();
    }
    return kExitOk;
  }

  BarrierHandle db = make_barrier(cfg);
  double lo = 0, hi = 0;
  default_range(cfg, db, lo, hi);
  const size_t n = static_cast<size_t>(cfg.points);
  std::vector<double> k(n), t(n), r(n), theta(n);
  check(qdb_spectrum(db.ptr, lo, hi, n, k.data(), t.data(), r.data(),
                     theta.data()),
        "spectrum");

  if (cfg.format == "json") {
    json rows = json::array();
    for (size_t i = 0; i < n; ++i) {
      rows.push_back({{"k", rounded(k[i])},
                      {"T", rounded(t[i])},
                      {"R", rounded(r[i])},
                      {"theta_rad", rounded(theta[i])}});
    }
    json j;
    j["config"] = config_json(cfg, "spectrum", &db);
    j["rows"] = rows;
    os << j.dump(2) << "\n";
  } else {
    write_header(os, cfg, "spectrum", &db);
    os << "k,T,R,theta_rad\n";
    for (size_t i = 0; i < n; ++i) {
      os << format_number(k[i]) << "," << format_number(t[i]) << ","
         << format_number(r[i]) << "," << format_number(theta[i]) << "\n";
    }
  }
  return kExitOk;
}

int cmd_resonances(const RunConfig& cfg) {
  BarrierHandle db = make_barrier(cfg);
  double lo = 0, hi = 0;
  default_range(cfg, db, lo, hi);

  size_t count = 0;
  check(qdb_resonances(db.ptr, lo, hi, nullptr, 0, &count), "resonances");
  std::vector<qdb_resonance_record> recs(count);
  if (count > 0) {
    check(qdb_resonances(db.ptr, lo, hi, recs.data(), recs.size(), &count),
          "resonances");
  }

  std::ofstream file;
  std::ostream& os = open_output(file, cfg);
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : recs) {
      rows.push_back({{"k_res", rounded(r.k_res)},
                      {"mode_index", r.mode_index},
                      {"peak_transmission", rounded(r.peak_transmission)},
                      {"k_half_left", rounded(r.k_half_left)},
                      {"k_half_right", rounded(r.k_half_right)},
                      {"fwhm", rounded(r.fwhm)},
                      {"half_level", rounded(r.half_level)},
                      {"free_spectral", rounded(r.free_spectral)},
                      {"finesse_numeric", rounded(r.finesse_numeric)},
                      {"finesse_analytic", rounded(r.finesse_analytic)},
                      {"width_valid", r.width_valid != 0}});
    }
    json j;
    j["config"] = config_json(cfg, "resonances", &db);
    j["note"] = "finesse_analytic evaluated at k_res";
    j["rows"] = rows;
    os << j.dump(2) << "\n";
  } else {
    write_header(os, cfg, "resonances", &db);
    os << "# note: finesse_analytic evaluated at k_res; fwhm traced at half "
          "the first peak\n";
    os << "k_res,mode_index,peak_transmission,k_half_left,k_half_right,fwhm,"
          "free_spectral,finesse_numeric,finesse_analytic,width_valid\n";
    for (const auto& r : recs) {
      os << format_number(r.k_res) << "," << r.mode_index << ","
         << format_number(r.peak_transmission) << ","
         << format_number(r.k_half_left) << ","
         << format_number(r.k_half_right) << "," << format_number(r.fwhm)
         << "," << format_number(r.free_spectral) << ","
         << format_number(r.finesse_numeric) << ","
         << format_number(r.finesse_analytic) << "," << r.width_valid << "\n";
    }
  }
  return kExitOk;
}

int cmd_standing_wave(const RunConfig& cfg) {
  std::ofstream file;
  std::ostream& os = open_output(file, cfg);

  if (optical_mode(cfg)) {
    double reflectivity = 0, separation = 0;
    qdb_preset_optical_cavity(&reflectivity, &separation);
    // Positions in meters; the bundled slices sit at 5.03 mm and 1 cm.
    std::vector<double> xs = cfg.x_positions;
    if (xs.empty()) xs = {5.03e-3, 1e-2};
    double lo = cfg.k_min > 0 ? cfg.k_min : 1e-5;
    double hi = cfg.k_max > lo ? cfg.k_max : 2e-3;

    json rows = json::array();
    std::ostringstream csv;
    for (int i = 0; i < cfg.points; ++i) {
      const double k = lo + (hi - lo) * i / (cfg.points - 1);  // 1e6/m
      json row;
      row["k_1e6_per_m"] = rounded(k);
      csv << format_number(k);
      for (size_t xi = 0; xi < xs.size(); ++xi) {
        double intensity = 0;
        check(qdb_fp_standing_wave(reflectivity, k * 1e6 * separation,
                                   k * 1e6 * xs[xi], &intensity),
              "fp_standing_wave");
        if (cfg.format == "json") {
          row["I"].push_back(rounded(intensity));
        } else {
          csv << "," << format_number(intensity);
        }
      }
      if (cfg.format == "json") rows.push_back(row);
      csv << "\n";
    }
    if (cfg.format == "json") {
      json j;
      j["config"] = config_json(cfg, "standing-wave", nullptr);
      j["config"]["cavity"] = {{"reflectivity", reflectivity},
                               {"plate_separation_m", separation}};
      j["x_positions_m"] = xs;
      j["rows"] = rows;
      os << j.dump(2) << "\n";
    } else {
      os << "# qdb standing-wave v" << qdb_version() << "\n";
      os << "# optical cavity: reflectivity=" << format_number(reflectivity)
         << " plate_separation_m=" << format_number(separation) << "\n";
      os << "# units: k in 1e6 /m; x in m\n";
      os << "k";
      for (const double x : xs) os << ",I(x=" << format_number(x) << ")";
      os << "\n" << csv.str();
    }
    return kExitOk;
  }

  BarrierHandle db = make_barrier(cfg);
  double a1 = 0, l1 = 0, a2 = 0, l2 = 0, d = 0;
  qdb_double_barrier_params(db.ptr, &a1, &l1, &a2, &l2, &d);
  std::vector<double> xs = cfg.x_positions;
  if (xs.empty()) xs = {3.25, 4.6};  // bundled slice positions (Angstrom)
  for (const double x : xs) {
    if (x <= l1 || x >= l1 + d) {
      throw UsageError("standing-wave position " + format_number(x) +
                       " is outside the inter-barrier region (" +
                       format_number(l1) + ", " + format_number(l1 + d) + ")");
    }
  }
  double lo = 0, hi = 0;
  default_range(cfg, db, lo, hi);

  json rows = json::array();
  std::ostringstream csv;
  for (int i = 0; i < cfg.points; ++i) {
    const double k = lo + (hi - lo) * i / (cfg.points - 1);
    json row;
    row["k"] = rounded(k);
    csv << format_number(k);
    for (const double x : xs) {
      double p = 0;
      check(qdb_well_standing_wave(db.ptr, k, x, &p), "well_standing_wave");
      if (cfg.format == "json") {
        row["P"].push_back(rounded(p));
      } else {
        csv << "," << format_number(p);
      }
    }
    if (cfg.format == "json") rows.push_back(row);
    csv << "\n";
  }
  if (cfg.format == "json") {
    json j;
    j["config"] = config_json(cfg, "standing-wave", &db);
    j["x_positions_angstrom"] = xs;
    j["rows"] = rows;
    os << j.dump(2) << "\n";
  } else {
    write_header(os, cfg, "standing-wave", &db);
    os << "k";
    for (const double x : xs) os << ",P(x=" << format_number(x) << ")";
    os << "\n" << csv.str();
  }
  return kExitOk;
}

int cmd_phase_time(const RunConfig& cfg) {
  BarrierHandle db = make_barrier(cfg);
  double lo = 0, hi = 0;
  default_range(cfg, db, lo, hi);

  const size_t n = static_cast<size_t>(cfg.points);
  std::vector<double> k(n), t(n), r(n), theta(n), tau(n);
  check(qdb_spectrum(db.ptr, lo, hi, n, k.data(), t.data(), r.data(),
                     theta.data()),
        "spectrum");
  for (size_t i = 0; i < n; ++i) {
    check(qdb_phase_time(db.ptr, k[i], cfg.dk, &tau[i]), "phase_time");
  }

  // Lifetime table over the same window.
  size_t count = 0;
  check(qdb_resonances(db.ptr, lo, hi, nullptr, 0, &count), "resonances");
  std::vector<qdb_resonance_record> recs(count);
  std::vector<qdb_lifetime_record> lifetimes(count);
  if (count > 0) {
    check(qdb_resonances(db.ptr, lo, hi, recs.data(), recs.size(), &count),
          "resonances");
    check(qdb_lifetimes(db.ptr, recs.data(), count, cfg.dk, lifetimes.data()),
          "lifetimes");
  }

  std::ofstream file;
  std::ostream& os = open_output(file, cfg);
  if (cfg.format == "json") {
    json rows = json::array();
    for (size_t i = 0; i < n; ++i) {
      rows.push_back({{"k", rounded(k[i])},
                      {"theta_rad", rounded(theta[i])},
                      {"tau_fs", rounded(tau[i])}});
    }
    json table = json::array();
    for (const auto& lt : lifetimes) {
      table.push_back({{"k_res", rounded(lt.k_res)},
                       {"fwhm", rounded(lt.fwhm)},
                       {"energy_width_ev", rounded(lt.energy_width_ev)},
                       {"two_tau_uncertainty_fs",
                        rounded(lt.two_tau_uncertainty_fs)},
                       {"tau_phase_fs", rounded(lt.tau_phase_fs)},
                       {"tau_corrected_fs", rounded(lt.tau_corrected_fs)}});
    }
    json j;
    j["config"] = config_json(cfg, "phase-time", &db);
    j["profile"] = rows;
    j["lifetimes"] = table;
    os << j.dump(2) << "\n";
  } else {
    write_header(os, cfg, "phase-time", &db);
    os << "# lifetime table (k_res, fwhm, 2*tau_uncertainty_fs, tau_phase_fs, "
          "tau_corrected_fs):\n";
    for (const auto& lt : lifetimes) {
      os << "#   " << format_number(lt.k_res) << "," << format_number(lt.fwhm)
         << "," << format_number(lt.two_tau_uncertainty_fs) << ","
         << format_number(lt.tau_phase_fs) << ","
         << format_number(lt.tau_corrected_fs) << "\n";
    }
    os << "k,theta_rad,tau_fs\n";
    for (size_t i = 0; i < n; ++i) {
      os << format_number(k[i]) << "," << format_number(theta[i]) << ","
         << format_number(tau[i]) << "\n";
    }
  }
  return kExitOk;
}

int cmd_validate(const RunConfig& cfg, unsigned seed, size_t samples) {
  BarrierHandle db = make_barrier(cfg);
  double lo = 0, hi = 0;
  default_range(cfg, db, lo, hi);
  double residual = 0.0;
  check(qdb_validate(db.ptr, lo, hi, samples, 2000, seed, &residual),
        "validate");
  std::cout << "three-way max residual (closed form / interference / transfer "
               "matrix): "
            << format_number(residual) << "\n";
  if (residual > cfg.tolerance) {
    std::cout << "FAIL: residual above tolerance " << format_number(cfg.tolerance)
              << "\n";
    return kExitValidation;
  }
  std::cout << "OK: residual within tolerance " << format_number(cfg.tolerance)
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double-barrier tunneling toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  unsigned seed = 20240817;
  size_t samples = 200;

  auto add_common = [&cfg](CLI::App* sub, bool with_range = true) {
    sub->add_option("--preset", cfg.preset,
                    "named configuration: fig4b-symmetric, fig6b-asymmetric, "
                    "fig7b-standing, fp-optical");
    auto* a1 = sub->add_option("--a1", cfg.a1, "first barrier height (eV)");
    auto* l1 = sub->add_option("--l1", cfg.l1, "first barrier length (Angstrom)");
    auto* a2 = sub->add_option("--a2", cfg.a2, "second barrier height (eV)");
    auto* l2 = sub->add_option("--l2", cfg.l2, "second barrier length (Angstrom)");
    auto* d = sub->add_option("--d", cfg.d, "gap between barriers (Angstrom)");
    sub->callback([&cfg, a1, l1, a2, l2, d] {
      cfg.explicit_barriers = a1->count() && l1->count() && a2->count() &&
                              l2->count() && d->count();
    });
    if (with_range) {
      sub->add_option("--k-min", cfg.k_min, "lower wave number (k_e units)");
      sub->add_option("--k-max", cfg.k_max, "upper wave number (k_e units)");
      sub->add_option("--points", cfg.points, "number of grid points")
          ->check(CLI::Range(2, 10000000));
    }
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
    sub->add_option("--tolerance", cfg.tolerance, "validation tolerance");
    sub->add_option("--dk", cfg.dk, "finite-difference step for phase times");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "transmission spectrum");
  add_common(spectrum);
  CLI::App* resonances =
      app.add_subcommand("resonances", "resonance table: positions, widths, finesse");
  add_common(resonances);
  CLI::App* standing =
      app.add_subcommand("standing-wave", "standing-wave spectra inside the well/cavity");
  add_common(standing);
  standing->add_option("--x", cfg.x_positions,
                       "slice positions (Angstrom for barriers, meters for "
                       "the optical cavity)");
  CLI::App* phase = app.add_subcommand("phase-time", "phase-time profile and lifetimes");
  add_common(phase);
  CLI::App* validate =
      app.add_subcommand("validate", "three-way consistency check, nonzero exit on failure");
  add_common(validate);
  validate->add_option("--samples", samples, "random sample count");
  validate->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg);
    if (resonances->parsed()) return cmd_resonances(cfg);
    if (standing->parsed()) return cmd_standing_wave(cfg);
    if (phase->parsed()) return cmd_phase_time(cfg);
    if (validate->parsed()) return cmd_validate(cfg, seed, samples);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
