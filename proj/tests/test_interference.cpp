#include <doctest.h>

#include <cmath>
#include <random>

#include "qdb/interference.hpp"
#include "qdb/presets.hpp"
#include "qdb/scattering.hpp"
#include "qdb/units.hpp"
#include "reference_values.hpp"

using namespace qdb;
using namespace qdb::interference;

namespace {

DoubleBarrier random_barrier(std::mt19937& rng) {
  std::uniform_real_distribution<double> height(2.0, 20.0);
  std::uniform_real_distribution<double> length(0.2, 3.0);
  std::uniform_real_distribution<double> gap(0.5, 12.0);
  return {{height(rng), length(rng)}, {height(rng), length(rng)}, gap(rng)};
}

double random_k(std::mt19937& rng, const DoubleBarrier& db) {
  std::uniform_real_distribution<double> frac(0.05, 0.999);
  return frac(rng) *
         std::sqrt(std::min(db.first.height_ev, db.second.height_ev));
}

}  // namespace

TEST_CASE("decomposition reconstructs the single-barrier amplitudes") {
  const Barrier b{10.36, 1.2};
  for (const double k : {0.3, 1.0, 2.0, 3.0}) {
    const AmplitudePhaseDecomposition dec = decompose(k, b);
    const ScatteringSolution sol = single_barrier_solution(k, b);
    CHECK(std::abs(dec.transmission() - sol.transmission) < 1e-12);
    CHECK(std::abs(dec.reflection() - sol.reflection) < 1e-12);
    CHECK(std::abs(dec.transmission_magnitude * dec.transmission_magnitude +
                   dec.reflection_magnitude * dec.reflection_magnitude - 1.0) <
          1e-12);
  }
}

TEST_CASE("decomposition of a zero-length barrier") {
  const AmplitudePhaseDecomposition dec = decompose(0.8, {10.0, 0.0});
  CHECK(dec.transmission_magnitude == doctest::Approx(1.0));
  CHECK(dec.reflection_magnitude == doctest::Approx(0.0));
  CHECK(dec.transmission_phase == doctest::Approx(0.0));
  CHECK(dec.reflection_phase == doctest::Approx(-0.5 * M_PI));
}

TEST_CASE("phase identity: phi_t1 + phi_t2 - (phi_r1 + phi_r2) + k(l1+l2) = pi") {
  std::mt19937 rng(31);
  for (int i = 0; i < 300; ++i) {
    const DoubleBarrier db = random_barrier(rng);
    const double k = random_k(rng, db);
    const auto one = decompose(k, db.first);
    const auto two = decompose(k, db.second);
    const double sum = one.transmission_phase + two.transmission_phase -
                       (one.reflection_phase + two.reflection_phase) +
                       k * units::kAngstromKe *
                           (db.first.length_angstrom + db.second.length_angstrom);
    CHECK(std::abs(sum - M_PI) < 1e-12);
  }
}

TEST_CASE("first partial wave") {
  const DoubleBarrier db = presets::symmetric();
  const double k = 1.0;
  const auto one = decompose(k, db.first);
  const auto two = decompose(k, db.second);
  const double kd = k * units::kAngstromKe * db.gap_angstrom;
  const double kl = k * units::kAngstromKe *
                    (db.first.length_angstrom + db.second.length_angstrom);
  const Complex expected =
      std::polar(one.transmission_magnitude * two.transmission_magnitude,
                 one.transmission_phase + two.transmission_phase + kd + kl) *
      std::exp(Complex{0.0, -(kd + kl)});
  CHECK(std::abs(transmission_partial_sum(k, db, 1) - expected) < 1e-14);
}

TEST_CASE("closed interference path equals the direct solution") {
  std::mt19937 rng(37);
  for (int i = 0; i < 300; ++i) {
    const DoubleBarrier db = random_barrier(rng);
    const double k = random_k(rng, db);
    const ScatteringSolution sol = double_barrier_solution(k, db);
    CHECK(std::abs(transmission_closed(k, db) - sol.transmission) < 1e-12);
    CHECK(std::abs(reflection_closed(k, db) - sol.reflection) < 1e-12);
  }
}

TEST_CASE("reflection vanishes without barriers") {
  const DoubleBarrier db{{5.0, 0.0}, {5.0, 0.0}, 4.0};
  CHECK(std::abs(reflection_closed(0.9, db)) < 1e-14);
}

TEST_CASE("reflection nearly vanishes at a symmetric resonance") {
  const DoubleBarrier db = presets::symmetric();
  const double k_res = refvals::axis(refvals::kSymResonances[0]);
  CHECK(std::norm(reflection_closed(k_res, db)) < 1e-3);
}

TEST_CASE("partial-wave sum converges with the geometric tail bound") {
  const DoubleBarrier db = presets::symmetric();
  const double k = refvals::axis(refvals::kSymResonances[0]);
  const Complex closed = transmission_closed(k, db);
  for (const int terms : {1, 5, 20, 50}) {
    const double error = std::abs(transmission_partial_sum(k, db, terms) - closed);
    CHECK(error <= truncation_bound(k, db, terms) * (1.0 + 1e-9));
  }
  // 50 terms stay within |R1 R2|^50 of the closed form.
  const auto one = decompose(k, db.first);
  const auto two = decompose(k, db.second);
  const double r12 = one.reflection_magnitude * two.reflection_magnitude;
  CHECK(std::abs(transmission_partial_sum(k, db, 50) - closed) <=
        std::pow(r12, 50) * (1.0 + 1e-9));
}

TEST_CASE("resonance phase") {
  const DoubleBarrier db = presets::symmetric();

  SUBCASE("hits a multiple of pi at the resonances") {
    for (const double published : refvals::kSymResonances) {
      const double phi = resonance_phase(refvals::axis(published), db);
      CHECK(std::abs(phi - std::round(phi / M_PI) * M_PI) < 1e-3);
    }
  }

  SUBCASE("monotone increasing over the tunneling window") {
    double prev = resonance_phase(0.05, db);
    for (int i = 1; i <= 400; ++i) {
      const double k = 0.05 + (3.21 - 0.05) * i / 400.0;
      const double value = resonance_phase(k, db);
      CHECK(value > prev);
      prev = value;
    }
  }

  SUBCASE("doubling the gap adds exactly k d") {
    DoubleBarrier wide = db;
    wide.gap_angstrom = 2.0 * db.gap_angstrom;
    for (const double k : {0.3, 1.1, 2.6}) {
      const double shift = resonance_phase(k, wide) - resonance_phase(k, db);
      CHECK(shift ==
            doctest::Approx(k * units::kAngstromKe * db.gap_angstrom).epsilon(1e-12));
    }
  }
}

TEST_CASE("analytic finesse reference values") {
  const DoubleBarrier sym = presets::symmetric();
  CHECK(analytic_finesse(refvals::axis(refvals::kSymResonances[0]), sym) ==
        doctest::Approx(refvals::kSymFinesseAnalytic[0]).epsilon(1e-3));
  CHECK(analytic_finesse(refvals::axis(refvals::kSymResonances[3]), sym) ==
        doctest::Approx(refvals::kSymFinesseAnalytic[3]).epsilon(1e-3));
  const DoubleBarrier asym = presets::asymmetric();
  CHECK(analytic_finesse(refvals::axis(refvals::kAsymResonances[0]), asym) ==
        doctest::Approx(refvals::kAsymFinesseAnalytic[0]).epsilon(5e-3));
}

TEST_CASE("transmission extrema formulas at the envelope") {
  const DoubleBarrier db = presets::asymmetric();
  const double k_res = refvals::axis(refvals::kAsymResonances[1]);
  const double t = double_barrier_solution(k_res, db).transmission_rate();
  CHECK(std::abs(t - transmission_rate_maximum(k_res, db)) < 1e-6);
  CHECK(transmission_rate_minimum(k_res, db) < transmission_rate_maximum(k_res, db));
}

TEST_CASE("optical Fabry-Perot finesse") {
  CHECK(fp_finesse(0.8) == doctest::Approx(14.0496).epsilon(1e-5));
  CHECK(fp_finesse(0.0) == doctest::Approx(0.0));
  CHECK(fp_finesse(0.25) == doctest::Approx(M_PI * 0.5 / 0.75).epsilon(1e-12));
  CHECK_THROWS_AS((void)fp_finesse(1.0), std::domain_error);
  CHECK_THROWS_AS((void)fp_finesse(1.5), std::domain_error);
}

TEST_CASE("optical Fabry-Perot transmission") {
  const OpticalCavity cav = presets::optical_cavity();

  SUBCASE("unity at phase multiples of pi") {
    for (int m = 1; m <= 5; ++m) {
      const double k = m * M_PI / cav.plate_separation_m;
      CHECK(fp_transmission(k, cav) == doctest::Approx(1.0).epsilon(1e-9));
    }
  }

  SUBCASE("quarter-wave point: T = 1/81 for reflectivity 0.8") {
    // (2 F / pi)^2 = 4 R / (1 - R)^2 = 80 exactly at R = 0.8.
    const double k = 0.5 * M_PI / cav.plate_separation_m;
    CHECK(fp_transmission(k, cav) == doctest::Approx(1.0 / 81.0).epsilon(1e-12));
  }

  SUBCASE("no mirrors, no filtering") {
    const OpticalCavity open{0.0, 0.02};
    for (const double k : {10.0, 1234.5, 77777.0}) {
      CHECK(fp_transmission(k, open) == doctest::Approx(1.0));
    }
  }
}
