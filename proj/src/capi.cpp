#include "qdb.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "qdb/barrier.hpp"
#include "qdb/interference.hpp"
#include "qdb/oracle.hpp"
#include "qdb/phase_time.hpp"
#include "qdb/presets.hpp"
#include "qdb/resonance.hpp"
#include "qdb/scattering.hpp"

struct qdb_double_barrier {
  qdb::DoubleBarrier value;
};

namespace {

thread_local std::string g_last_error;

qdb_status fail(qdb_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

template <typename Fn>
qdb_status guarded(Fn&& fn) {
  try {
    fn();
    return QDB_OK;
  } catch (const qdb::RegimeError& e) {
    return fail(QDB_ERROR_UNSUPPORTED_REGIME, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QDB_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(QDB_ERROR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(QDB_ERROR_NUMERIC, e.what());
  }
}

qdb_complex to_c(const qdb::Complex& z) { return {z.real(), z.imag()}; }

qdb_resonance_record to_c(const qdb::resonance::ResonanceRecord& r) {
  qdb_resonance_record out;
  out.k_res = r.k_res;
  out.mode_index = r.mode_index;
  out.peak_transmission = r.peak_transmission;
  out.k_half_left = r.k_half_left;
  out.k_half_right = r.k_half_right;
  out.fwhm = r.fwhm;
  out.half_level = r.half_level;
  out.free_spectral = r.free_spectral;
  out.finesse_numeric = r.finesse_numeric;
  out.finesse_analytic = r.finesse_analytic;
  out.width_valid = r.width_valid ? 1 : 0;
  return out;
}

qdb::resonance::ResonanceRecord from_c(const qdb_resonance_record& r) {
  qdb::resonance::ResonanceRecord out;
  out.k_res = r.k_res;
  out.mode_index = r.mode_index;
  out.peak_transmission = r.peak_transmission;
  out.k_half_left = r.k_half_left;
  out.k_half_right = r.k_half_right;
  out.fwhm = r.fwhm;
  out.half_level = r.half_level;
  out.free_spectral = r.free_spectral;
  out.finesse_numeric = r.finesse_numeric;
  out.finesse_analytic = r.finesse_analytic;
  out.width_valid = r.width_valid != 0;
  return out;
}

}  // namespace

extern "C" {

const char* qdb_version(void) { return "1.0.0"; }

const char* qdb_status_message(qdb_status status) {
  switch (status) {
    case QDB_OK:
      return "ok";
    case QDB_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case QDB_ERROR_UNSUPPORTED_REGIME:
      return "energy outside the supported regime";
    case QDB_ERROR_NUMERIC:
      return "numerical domain error";
    case QDB_ERROR_CAPACITY:
      return "output buffer too small";
    case QDB_ERROR_UNKNOWN_PRESET:
      return "unknown preset name";
  }
  return "unknown status";
}

const char* qdb_last_error(void) { return g_last_error.c_str(); }

qdb_status qdb_double_barrier_create(double height1_ev, double length1_angstrom,
                                     double height2_ev, double length2_angstrom,
                                     double gap_angstrom,
                                     qdb_double_barrier** out) {
  if (!out) return fail(QDB_ERROR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    qdb::DoubleBarrier db{{height1_ev, length1_angstrom},
                          {height2_ev, length2_angstrom},
                          gap_angstrom};
    qdb::validate(db);
    *out = new qdb_double_barrier{db};
  });
}

qdb_status qdb_double_barrier_preset(const char* name,
                                     qdb_double_barrier** out) {
  if (!out || !name) return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  *out = nullptr;
  const auto db = qdb::presets::double_barrier_by_name(name);
  if (!db) return fail(QDB_ERROR_UNKNOWN_PRESET, name);
  *out = new qdb_double_barrier{*db};
  return QDB_OK;
}

void qdb_double_barrier_destroy(qdb_double_barrier* handle) { delete handle; }

qdb_status qdb_double_barrier_params(const qdb_double_barrier* handle,
                                     double* height1_ev,
                                     double* length1_angstrom,
                                     double* height2_ev,
                                     double* length2_angstrom,
                                     double* gap_angstrom) {
  if (!handle) return fail(QDB_ERROR_INVALID_ARGUMENT, "null handle");
  if (height1_ev) *height1_ev = handle->value.first.height_ev;
  if (length1_angstrom) *length1_angstrom = handle->value.first.length_angstrom;
  if (height2_ev) *height2_ev = handle->value.second.height_ev;
  if (length2_angstrom) *length2_angstrom = handle->value.second.length_angstrom;
  if (gap_angstrom) *gap_angstrom = handle->value.gap_angstrom;
  return QDB_OK;
}

qdb_status qdb_solve(const qdb_double_barrier* handle, double k,
                     qdb_solution* out) {
  if (!handle || !out) return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    const qdb::ScatteringSolution sol =
        qdb::double_barrier_solution(k, handle->value);
    out->transmission = to_c(sol.transmission);
    out->reflection = to_c(sol.reflection);
    out->transmission_rate = sol.transmission_rate();
    out->reflection_rate = sol.reflection_rate();
    const qdb::InteriorAmplitudes& in = *sol.interior;
    out->c1 = to_c(in.c1);
    out->d1 = to_c(in.d1);
    out->alpha = to_c(in.alpha);
    out->gamma = to_c(in.gamma);
    out->c2 = to_c(in.c2);
    out->d2 = to_c(in.d2);
  });
}

qdb_status qdb_transmission_rate(const qdb_double_barrier* handle, double k,
                                 double* out) {
  if (!handle || !out) return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] { *out = qdb::transmission_rate_general(k, handle->value); });
}

qdb_status qdb_spectrum(const qdb_double_barrier* handle, double k_min,
                        double k_max, size_t n, double* k_out, double* t_out,
                        double* r_out, double* theta_out) {
  if (!handle || !k_out || !t_out || !r_out || !theta_out) {
    return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  }
  if (n < 2) return fail(QDB_ERROR_INVALID_ARGUMENT, "need at least two points");
  return guarded([&] {
    const std::vector<double> theta = qdb::phase_time::unwrapped_phase(
        handle->value, k_min, k_max, static_cast<int>(n));
    for (size_t i = 0; i < n; ++i) {
      const double k = k_min + (k_max - k_min) * i / (n - 1);
      const qdb::ScatteringSolution sol =
          qdb::double_barrier_solution(k, handle->value);
      k_out[i] = k;
      t_out[i] = sol.transmission_rate();
      r_out[i] = sol.reflection_rate();
      theta_out[i] = theta[i];
    }
  });
}

qdb_status qdb_resonances(const qdb_double_barrier* handle, double k_min,
                          double k_max, qdb_resonance_record* out,
                          size_t capacity, size_t* count) {
  if (!handle || !count) return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  *count = 0;
  std::vector<qdb::resonance::ResonanceRecord> records;
  const qdb_status status = guarded([&] {
    records = qdb::resonance::analyze(handle->value, k_min, k_max);
  });
  if (status != QDB_OK) return status;
  *count = records.size();
  if (!out) return QDB_OK;  // size query
  if (capacity < records.size()) {
    return fail(QDB_ERROR_CAPACITY, "resonance buffer too small");
  }
  for (size_t i = 0; i < records.size(); ++i) out[i] = to_c(records[i]);
  return QDB_OK;
}

qdb_status qdb_phase_time(const qdb_double_barrier* handle, double k,
                          double dk_hint, double* out_fs) {
  if (!handle || !out_fs) return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    const qdb::DoubleBarrier& db = handle->value;
    if (db.symmetric()) {
      *out_fs = qdb::phase_time::symmetric_double_phase_time(
          k, db.first.height_ev, db.first.length_angstrom, db.gap_angstrom);
    } else {
      const double dk = dk_hint > 0.0 ? dk_hint : 1e-6;
      *out_fs = qdb::phase_time::asymmetric_phase_time(k, db, dk);
    }
  });
}

qdb_status qdb_single_barrier_phase_time(double height_ev,
                                         double length_angstrom, double k,
                                         double* out_fs) {
  if (!out_fs) return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    *out_fs = qdb::phase_time::single_barrier_phase_time(
        k, qdb::Barrier{height_ev, length_angstrom});
  });
}

qdb_status qdb_lifetimes(const qdb_double_barrier* handle,
                         const qdb_resonance_record* records, size_t count,
                         double dk_hint, qdb_lifetime_record* out) {
  if (!handle || !records || !out) {
    return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  }
  return guarded([&] {
    std::vector<qdb::resonance::ResonanceRecord> recs;
    recs.reserve(count);
    for (size_t i = 0; i < count; ++i) recs.push_back(from_c(records[i]));
    const double dk = dk_hint > 0.0 ? dk_hint : 1e-6;
    const std::vector<qdb::phase_time::LifetimeRecord> table =
        qdb::phase_time::lifetime_report(handle->value, recs, dk);
    for (size_t i = 0; i < table.size(); ++i) {
      out[i].k_res = table[i].k_res;
      out[i].fwhm = table[i].fwhm;
      out[i].energy_width_ev = table[i].energy_width_ev;
      out[i].two_tau_uncertainty_fs = table[i].two_tau_uncertainty_fs;
      out[i].tau_phase_fs = table[i].tau_phase_fs;
      out[i].tau_corrected_fs = table[i].tau_corrected_fs;
    }
  });
}

qdb_status qdb_well_standing_wave(const qdb_double_barrier* handle, double k,
                                  double x_angstrom, double* out) {
  if (!handle || !out) return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    *out = qdb::resonance::well_standing_wave(k, x_angstrom, handle->value);
  });
}

qdb_status qdb_preset_optical_cavity(double* reflectivity,
                                     double* plate_separation_m) {
  const qdb::interference::OpticalCavity cav = qdb::presets::optical_cavity();
  if (reflectivity) *reflectivity = cav.reflectivity;
  if (plate_separation_m) *plate_separation_m = cav.plate_separation_m;
  return QDB_OK;
}

qdb_status qdb_fp_finesse(double reflectivity, double* out) {
  if (!out) return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] { *out = qdb::interference::fp_finesse(reflectivity); });
}

qdb_status qdb_fp_transmission(double reflectivity, double phase_kd0,
                               double* out) {
  if (!out) return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  return guarded([&] {
    const double f = qdb::interference::fp_finesse(reflectivity);
    const double term = 2.0 * f / M_PI * std::sin(phase_kd0);
    *out = 1.0 / (1.0 + term * term);
  });
}

qdb_status qdb_fp_standing_wave(double reflectivity, double phase_kd0,
                                double phase_kx, double* out) {
  if (!out) return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  if (phase_kx < 0.0 || phase_kx > phase_kd0) {
    return fail(QDB_ERROR_NUMERIC, "position outside the cavity");
  }
  return guarded([&] {
    const double f = qdb::interference::fp_finesse(reflectivity);
    const double term = 2.0 * f / M_PI * std::sin(phase_kd0);
    const double transmission = 1.0 / (1.0 + term * term);
    const double r = reflectivity;
    const double pre =
        (1.0 + r - 2.0 * std::sqrt(r) * std::cos(2.0 * (phase_kd0 - phase_kx))) /
        (1.0 - r);
    *out = pre * transmission;
  });
}

qdb_status qdb_validate(const qdb_double_barrier* handle, double k_min,
                        double k_max, size_t samples, size_t grid_points,
                        unsigned seed, double* max_residual) {
  if (!handle || !max_residual) {
    return fail(QDB_ERROR_INVALID_ARGUMENT, "null pointer");
  }
  return guarded([&] {
    const qdb::DoubleBarrier& db = handle->value;
    const double k_top =
        std::sqrt(std::min(db.first.height_ev, db.second.height_ev));
    const double lo = std::max(k_min, 1e-3);
    const double hi = std::min(k_max, k_top * (1.0 - 1e-6));
    if (!(hi > lo)) {
      throw std::invalid_argument("qdb_validate: empty wave-number range");
    }

    std::vector<double> ks;
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> pick(lo, hi);
    for (size_t i = 0; i < samples; ++i) ks.push_back(pick(rng));
    for (size_t i = 0; i < grid_points; ++i) {
      ks.push_back(lo + (hi - lo) * (i + 0.5) / grid_points);
    }

    const qdb::oracle::PotentialGrid grid = qdb::oracle::grid_from(db);
    double worst = 0.0;
    for (const double k : ks) {
      const qdb::ScatteringSolution closed = qdb::double_barrier_solution(k, db);
      const qdb::Complex t_interf =
          qdb::interference::transmission_closed(k, db);
      const qdb::Complex r_interf = qdb::interference::reflection_closed(k, db);
      const qdb::ScatteringSolution reference =
          qdb::oracle::transfer_matrix_solve(k, grid);
      const double residuals[] = {
          std::abs(closed.transmission - t_interf),
          std::abs(closed.reflection - r_interf),
          std::abs(closed.transmission - reference.transmission),
          std::abs(closed.reflection - reference.reflection),
          std::abs(t_interf - reference.transmission),
          std::abs(r_interf - reference.reflection),
          qdb::verify_flux_conservation(closed).max_residual()};
      for (const double r : residuals) {
        if (r > worst) worst = r;
      }
    }
    *max_residual = worst;
  });
}

} /* extern "C" */
