#ifndef QDB_UNITS_HPP
#define QDB_UNITS_HPP

#include <cmath>
#include <stdexcept>

// Natural unit conventions used throughout the library:
//   energy      eV
//   length      Angstrom (1e-10 m)
//   time        fs (1e-15 s)
//   wavenumber  k_e = sqrt(2 m E_s)/hbar with E_s = 1 eV, the wave number of
//               an electron-mass particle with 1 eV of kinetic energy.
//
// k_e is adopted at its reference value 5.12289e9 /m. The particle mass is
// derived from it (m = hbar^2 k_e^2 / 2 eV = 9.1084e-31 kg, within 1.1e-4 of
// the electron mass), which makes the map E = k^2 exact in these units.
namespace qdb::units {

// k_e in SI (1/m).
inline constexpr double kWavenumberUnitPerMeter = 5.12289e9;

// k_e * 1 Angstrom: converts (k in k_e) * (x in Angstrom) to a plain phase.
inline constexpr double kAngstromKe = kWavenumberUnitPerMeter * 1e-10;

// hbar in eV*fs and eV*s.
inline constexpr double kHbarEvFs = 0.6582119569;
inline constexpr double kHbarEvS = kHbarEvFs * 1e-15;
inline constexpr double kHbarSi = 1.054571817e-34;  // J*s

inline constexpr double kElectronVoltJoule = 1.602176634e-19;

// Particle mass implied by k_e (kg): hbar^2 k_e^2 / (2 * 1 eV).
inline constexpr double kMassKg =
    (kHbarSi * kWavenumberUnitPerMeter) * (kHbarSi * kWavenumberUnitPerMeter) /
    (2.0 * kElectronVoltJoule);

// m / (hbar k_e^2) in fs; the prefactor of every phase-time expression
// tau = (m / hbar k) dtheta/dk evaluated with k in k_e units.
inline constexpr double kTauPrefactorFs = 0.5 * kHbarEvFs;

// E = (hbar k)^2 / 2m with E in eV and k in k_e units reduces to E = k^2.
inline double wavenumber_from_energy(double energy_ev) {
  if (!(energy_ev > 0.0)) {
    throw std::domain_error("wavenumber_from_energy: energy must be positive");
  }
  return std::sqrt(energy_ev);
}

inline double energy_from_wavenumber(double k) {
  if (!(k > 0.0)) {
    throw std::domain_error("energy_from_wavenumber: wavenumber must be positive");
  }
  return k * k;
}

}  // namespace qdb::units

#endif  // QDB_UNITS_HPP
