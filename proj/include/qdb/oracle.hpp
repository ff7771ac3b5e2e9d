#ifndef QDB_ORACLE_HPP
#define QDB_ORACLE_HPP

#include <span>
#include <vector>

#include "qdb/barrier.hpp"
#include "qdb/scattering.hpp"

// Formula-independent verifier: exact 2x2 transfer-matrix propagation across
// a piecewise-constant potential. Used to validate every closed form.
namespace qdb::oracle {

struct PotentialSegment {
  double width_angstrom = 0.0;
  double height_ev = 0.0;
};

struct PotentialGrid {
  std::vector<PotentialSegment> segments;

  double extent() const {
    double total = 0.0;
    for (const PotentialSegment& s : segments) total += s.width_angstrom;
    return total;
  }
};

void validate(const PotentialGrid& grid);

// Exact segment representations (zero discretization error at the
// boundaries); the gap appears as an explicit zero-height segment.
PotentialGrid grid_from(const Barrier& b);
PotentialGrid grid_from(const DoubleBarrier& db);

// Splits every segment into `factor` equal-width pieces; the solution must
// be unchanged (composition invariance).
PotentialGrid refined(const PotentialGrid& grid, int factor);

// Propagates plane-wave coefficients across the grid: trigonometric in
// segments with E > V, evanescent where E < V. Throws when E coincides with
// a segment height (zero local wavenumber) or a decay argument exceeds the
// overflow guard. a1 = 0 convention: the grid starts at the origin.
ScatteringSolution transfer_matrix_solve(double k, const PotentialGrid& grid);

// Determinant drift of the accumulated transfer matrix for the same solve;
// |det - 1| stays tiny because every factor has unit determinant.
double determinant_drift(double k, const PotentialGrid& grid);

struct ResidualReport {
  double max_transmission_residual = 0.0;
  double max_reflection_residual = 0.0;
  double max_residual() const {
    return max_transmission_residual > max_reflection_residual
               ? max_transmission_residual
               : max_reflection_residual;
  }
};

// Max |T_oracle - T_closed| and |R_oracle - R_closed| over the samples.
ResidualReport validate_against_closed_form(const DoubleBarrier& db,
                                            std::span<const double> k_samples);

}  // namespace qdb::oracle

#endif  // QDB_ORACLE_HPP
