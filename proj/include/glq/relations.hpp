#pragma once

#include <vector>

#include "glq/chart.hpp"
#include "glq/report.hpp"

namespace glq {

/// One of the six GL_q(2) relations on the minor
///   [a b]   a = z_{ij},  b = z_{ij'}
///   [c d]   c = z_{i'j}, d = z_{i'j'}
/// 1: ab = ba, 2: cd = dc, 3: ac = q^2 ca, 4: bd = q^2 db, 5: bc = q^2 cb,
/// 6: ad - bc = da - cb. The residual is lhs - rhs.
struct MinorResidual {
  int i, ip, j, jp;
  int relation;
  Polynomial residual;
};

Polynomial glq2_residual(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d, int relation);

/// Residuals for every minor i < i', j < j' and every relation, zero ones included.
std::vector<MinorResidual> glq2_residuals(const OperatorMatrix& m);

VerificationReport verify_glq2_relations(const OperatorMatrix& m);

/// sum over bijections rows -> cols of sign * z_{r_1,c_1} ... z_{r_k,c_k}, factors in the
/// listed row order. The sign is the parity of the bijection between sorted
/// positions. Throws std::invalid_argument on length mismatch, repeated or
/// out-of-range indices.
Polynomial quantum_determinant(const OperatorMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);
Polynomial quantum_determinant(const OperatorMatrix& m);

/// Recomputes det_q with every permutation of the row list (columns permuted
/// the same way) and compares with the listed order.
VerificationReport verify_row_order_independence(const OperatorMatrix& m, const std::vector<int>& rows,
                                                 const std::vector<int>& cols);

/// X*Y for two commuting copies of the full chart matrix, checked as a GL_q(N) matrix.
VerificationReport coproduct_stability_check(int n, int max_n = 4);

}  // namespace glq
