#pragma once

#include <vector>

#include "glq/algebra.hpp"

namespace glq {

/// Canonical form of an integer skew matrix under unimodular congruence:
/// S C S^T = diag([[0,d_1],[-d_1,0]], ..., [[0,d_r],[-d_r,0]], 0) with d_1 | d_2 | ...
struct SymplecticReduction {
  IntMatrix s;
  IntMatrix s_inverse;
  std::vector<long long> divisors;
  /// Rows 2r.. of S; they span the radical of C over Z.
  std::vector<IntVector> kernel_basis;

  std::size_t pairs() const { return divisors.size(); }
  std::size_t kernel_dim() const { return kernel_basis.size(); }
  IntMatrix canonical_form() const;
  bool all_unit() const;
};

/// Throws std::invalid_argument if c is not square and antisymmetric, and
/// std::overflow_error if an intermediate entry leaves the 64-bit range.
SymplecticReduction symplectic_reduce(const IntMatrix& c);

/// S C S^T equals the reported block form and S S^{-1} = I.
bool verify_reduction(const IntMatrix& c, const SymplecticReduction& r);

struct CommutationRank {
  int rank = 0;
  int minimal_tori = 0;
  int kernel_dim = 0;
};

/// Rank over Q by fraction-free (Bareiss) elimination, independent of symplectic_reduce.
CommutationRank commutation_rank(const AlgebraSignature& sig);
int rational_rank(const IntMatrix& m);

}  // namespace glq
