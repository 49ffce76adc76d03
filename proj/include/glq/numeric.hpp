#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "glq/chart.hpp"
#include "glq/report.hpp"

namespace glq {

using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

/// Finite-dimensional representation at q = exp(i pi / d), q^2 = omega = exp(2 pi i / d).
/// Generator i acts as scale_i * (Weyl-balanced monomial in clock/shift pairs),
/// routed through the symplectic reduction of C; central directions become
/// positive scalars.
struct ClockShiftRep {
  int d = 0;
  SignaturePtr signature;
  Eigen::Index dim = 1;
  Complex q;
  std::vector<CMatrix> generators;
  std::vector<CMatrix> inverses;

  const CMatrix& operator[](std::size_t i) const { return generators.at(i); }
};

/// `central` gives one positive scalar per kernel direction (default 1) and
/// `scales` one positive factor per generator (default 1). Throws
/// std::invalid_argument on non-positive scalars, a wrong count, or an
/// elementary divisor that is not coprime to d.
ClockShiftRep build_rep(const SignaturePtr& sig, int d, const std::vector<double>& central = {},
                        const std::vector<double>& scales = {});

/// Same with scales and central values drawn log-uniformly from [e^-1, e].
ClockShiftRep build_random_rep(const SignaturePtr& sig, int d, std::uint64_t seed);

Complex q_value(int d);

/// Max |X_i X_j - q^{2 C_ij} X_j X_i| over pairs, relative to |X_i X_j|.
double rep_relation_residual(const ClockShiftRep& rep);

CMatrix evaluate(const Polynomial& p, const ClockShiftRep& rep);

/// Relative Frobenius residual |a - b| / max(|a|, |b|), 0 if both vanish.
double relative_residual(const CMatrix& a, const CMatrix& b);

struct CommutationMeasurement {
  int k = 0;
  double residual = 0.0;
  /// d/(2 pi) arg(lambda) for the least-squares XY ~ lambda YX.
  double continuous = 0.0;
  /// |continuous - k| (mod d), the pre-rounding deviation.
  double deviation = 0.0;
  bool ill_conditioned = false;
};

/// k in [-(d-1)/2, (d-1)/2] minimizing |XY - q^{2k} YX|.
CommutationMeasurement measure_commutation(const CMatrix& x, const CMatrix& y, int d);

/// N x N grid of operators, 1-based like OperatorMatrix.
struct NumericMatrix {
  int n = 0;
  Eigen::Index dim = 0;
  std::vector<CMatrix> entries;

  NumericMatrix(int size, Eigen::Index block);
  CMatrix& at(int i, int j) { return entries[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
  const CMatrix& at(int i, int j) const { return entries[static_cast<std::size_t>((i - 1) * n + (j - 1))]; }
};

NumericMatrix evaluate_matrix(const OperatorMatrix& m, const ClockShiftRep& rep);

/// Same expansion as quantum_determinant, on operators.
CMatrix numeric_quantum_determinant(const NumericMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// Worst relative residual of the six GL_q(2) relations over all minors.
double numeric_glq2_residual(const NumericMatrix& m, Complex q);

}  // namespace glq
