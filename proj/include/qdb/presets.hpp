#ifndef QDB_PRESETS_HPP
#define QDB_PRESETS_HPP

#include <optional>
#include <string_view>

#include "qdb/barrier.hpp"
#include "qdb/interference.hpp"

// Named configurations of the bundled reference spectra. These are the only
// place the benchmark parameters are spelled out; tests and the CLI refer to
// them by name.
namespace qdb::presets {

// Symmetric pair: A = 10.36 eV, l = 1.2 A, d = 7 A.
inline DoubleBarrier symmetric() {
  return {{10.36, 1.2}, {10.36, 1.2}, 7.0};
}

// Asymmetric pair: A1 = 10.6 eV, l1 = 1.5 A; A2 = 8.7 eV, l2 = 1.0 A; d = 7 A.
inline DoubleBarrier asymmetric() {
  return {{10.6, 1.5}, {8.7, 1.0}, 7.0};
}

// Standing-wave pair: A1 = 9.6 eV, l1 = 1.2 A; A2 = 25.8 eV, l2 = 0.8 A; d = 7 A.
inline DoubleBarrier standing_wave() {
  return {{9.6, 1.2}, {25.8, 0.8}, 7.0};
}

// Optical cavity: mirror reflectivity 0.8, plate separation 2 cm.
inline interference::OpticalCavity optical_cavity() { return {0.8, 0.02}; }

inline constexpr std::string_view kSymmetricName = "fig4b-symmetric";
inline constexpr std::string_view kAsymmetricName = "fig6b-asymmetric";
inline constexpr std::string_view kStandingName = "fig7b-standing";
inline constexpr std::string_view kOpticalName = "fp-optical";

inline std::optional<DoubleBarrier> double_barrier_by_name(
    std::string_view name) {
  if (name == kSymmetricName) return symmetric();
  if (name == kAsymmetricName) return asymmetric();
  if (name == kStandingName) return standing_wave();
  return std::nullopt;
}

}  // namespace qdb::presets

#endif  // QDB_PRESETS_HPP
