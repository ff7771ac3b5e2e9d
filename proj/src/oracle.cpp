#include "qdb/oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "qdb/units.hpp"

namespace qdb::oracle {

namespace {

constexpr Complex kI{0.0, 1.0};

using Matrix2 = std::array<Complex, 4>;  // row-major [m00 m01; m10 m11]

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Local wavenumber q = sqrt(E - V): real above the segment, i*kappa below.
Complex local_wavenumber(double energy_ev, double height_ev) {
  return std::sqrt(Complex(energy_ev - height_ev, 0.0));
}

// Interface matrix at position x (scaled units) between media with local
// wavenumbers q1 (left) and q2 (right): maps (A1, B1) -> (A2, B2) for
// psi = A e^{iqx} + B e^{-iqx}. Its determinant is q1/q2, so the full
// product across the grid has unit determinant (free media on both ends).
Matrix2 interface_matrix(Complex q1, Complex q2, double x_scaled) {
  const Complex r = q1 / q2;
  return {0.5 * (1.0 + r) * std::exp(kI * (q1 - q2) * x_scaled),
          0.5 * (1.0 - r) * std::exp(-kI * (q1 + q2) * x_scaled),
          0.5 * (1.0 - r) * std::exp(kI * (q1 + q2) * x_scaled),
          0.5 * (1.0 + r) * std::exp(-kI * (q1 - q2) * x_scaled)};
}

// Accumulated matrix, renormalized whenever the entries grow large; the
// scale factor is returned separately. Entries of the raw matrix grow like
// 1/|T|, which overflows for long evanescent runs.
struct ScaledMatrix {
  Matrix2 m;
  double log_scale = 0.0;
};

ScaledMatrix total_matrix(double k, const PotentialGrid& grid) {
  const double energy = k * k;
  ScaledMatrix total{{1.0, 0.0, 0.0, 1.0}, 0.0};
  Complex q_prev = Complex(k, 0.0);
  double x = 0.0;
  double cumulative_decay = 0.0;
  for (const PotentialSegment& seg : grid.segments) {
    if (std::abs(energy - seg.height_ev) < 1e-12) {
      throw std::domain_error(
          "transfer_matrix_solve: energy coincides with a segment height; "
          "perturb the sample");
    }
    const Complex q = local_wavenumber(energy, seg.height_ev);
    const double decay = std::abs(q.imag()) * seg.width_angstrom *
                         units::kAngstromKe;
    detail::check_hyperbolic(decay, "transfer_matrix_solve");
    cumulative_decay += decay;
    if (cumulative_decay > 2.0 * kMaxHyperbolicArgument) {
      throw std::domain_error(
          "transfer_matrix_solve: total evanescent attenuation exceeds the "
          "overflow guard");
    }
    total.m = multiply(interface_matrix(q_prev, q, x * units::kAngstromKe),
                       total.m);
    double magnitude = 0.0;
    for (const Complex& entry : total.m) {
      magnitude = std::max(magnitude, std::abs(entry));
    }
    if (magnitude > 1e100) {
      for (Complex& entry : total.m) entry /= magnitude;
      total.log_scale += std::log(magnitude);
    }
    x += seg.width_angstrom;
    q_prev = q;
  }
  total.m = multiply(
      interface_matrix(q_prev, Complex(k, 0.0), x * units::kAngstromKe),
      total.m);
  return total;
}

}  // namespace

void validate(const PotentialGrid& grid) {
  if (grid.segments.empty()) {
    throw std::invalid_argument("potential grid needs at least one segment");
  }
  for (const PotentialSegment& s : grid.segments) {
    if (!(s.width_angstrom > 0.0)) {
      throw std::invalid_argument("potential segment widths must be positive");
    }
  }
}

PotentialGrid grid_from(const Barrier& b) {
  qdb::validate(b);
  PotentialGrid grid;
  if (b.length_angstrom > 0.0) {
    grid.segments.push_back({b.length_angstrom, b.height_ev});
  } else {
    grid.segments.push_back({1.0, 0.0});  // empty barrier: free segment
  }
  return grid;
}

PotentialGrid grid_from(const DoubleBarrier& db) {
  qdb::validate(db);
  PotentialGrid grid;
  if (db.first.length_angstrom > 0.0) {
    grid.segments.push_back({db.first.length_angstrom, db.first.height_ev});
  }
  if (db.gap_angstrom > 0.0) {
    grid.segments.push_back({db.gap_angstrom, 0.0});
  }
  if (db.second.length_angstrom > 0.0) {
    grid.segments.push_back({db.second.length_angstrom, db.second.height_ev});
  }
  if (grid.segments.empty()) {
    grid.segments.push_back({1.0, 0.0});
  }
  return grid;
}

PotentialGrid refined(const PotentialGrid& grid, int factor) {
  if (factor < 1) {
    throw std::invalid_argument("refined: factor must be >= 1");
  }
  PotentialGrid out;
  out.segments.reserve(grid.segments.size() * factor);
  for (const PotentialSegment& s : grid.segments) {
    for (int i = 0; i < factor; ++i) {
      out.segments.push_back({s.width_angstrom / factor, s.height_ev});
    }
  }
  return out;
}

ScatteringSolution transfer_matrix_solve(double k, const PotentialGrid& grid) {
  validate(grid);
  if (!(k > 0.0)) {
    throw std::domain_error("transfer_matrix_solve: wavenumber must be positive");
  }
  const ScaledMatrix total = total_matrix(k, grid);
  // Incident from the left: (T, 0)^T = M (1, R)^T. The quotient forms stay
  // well conditioned for deep barriers: det M = 1, so T = 1/m11 exactly.
  ScatteringSolution out;
  out.reflection = -total.m[2] / total.m[3];
  out.transmission = std::exp(-total.log_scale) / total.m[3];
  return out;
}

double determinant_drift(double k, const PotentialGrid& grid) {
  validate(grid);
  const ScaledMatrix total = total_matrix(k, grid);
  const Matrix2& m = total.m;
  // For a real potential between identical free leads the accumulated matrix
  // satisfies m00 = conj(m11), m01 = conj(m10) and det = |m11|^2 - |m10|^2
  // = 1. Measured in relative form so deep evanescent runs stay meaningful.
  const double scale = std::norm(m[3]) + std::norm(m[2]);
  const double expected_det =
      std::exp(-2.0 * total.log_scale);  // scaled det target
  const double det_residual =
      std::abs((std::norm(m[3]) - std::norm(m[2])) - expected_det) / scale;
  const double symmetry_residual =
      (std::abs(m[0] - std::conj(m[3])) + std::abs(m[1] - std::conj(m[2]))) /
      std::abs(m[3]);
  return std::max(det_residual, symmetry_residual);
}

ResidualReport validate_against_closed_form(const DoubleBarrier& db,
                                            std::span<const double> k_samples) {
  const PotentialGrid grid = grid_from(db);
  ResidualReport report;
  for (const double k : k_samples) {
    const ScatteringSolution closed = double_barrier_solution(k, db);
    const ScatteringSolution reference = transfer_matrix_solve(k, grid);
    const double dt = std::abs(closed.transmission - reference.transmission);
    const double dr = std::abs(closed.reflection - reference.reflection);
    if (dt > report.max_transmission_residual) {
      report.max_transmission_residual = dt;
    }
    if (dr > report.max_reflection_residual) {
      report.max_reflection_residual = dr;
    }
  }
  return report;
}

}  // namespace qdb::oracle
