#pragma once

#include "glq/chart.hpp"
#include "glq/morphism.hpp"
#include "glq/report.hpp"

namespace glq {

/// det_q of rows 1..i, columns j-i+1..j of the upper-triangular matrix T^+U^+
/// (1 <= i < j <= N).
Polynomial initial_minor(const OperatorMatrix& upper, int i, int j);
Polynomial initial_minor(const LusztigChart& chart, int i, int j);

/// (a_11 a_22 ...)(a_21 a_32 ...)...(v_1 ... v_{i-1}) multiplied in exactly this order;
/// x_{i,i} = 1.
Polynomial cluster_monomial(const LusztigChart& chart, int i, int j);

/// Signed lattice count P(i,j;k,l) in the (i, i+j) labelling, antisymmetric by
/// construction (j > l goes through -P(k,l;i,j)).
int p_exponent(int i, int j, int k, int l);

/// x_{i,i+j} x_{k,k+l} = q^{2P(i,j;k,l)} x_{k,k+l} x_{i,i+j} for every cluster pair,
/// exponents measured on the normal forms. Records carry {i,j,k,l,symbolic,P,match}.
VerificationReport verify_cluster_commutation(const LusztigChart& chart);

struct RatioChart {
  SignaturePtr signature;  ///< a'_{mn} and v_m, induced commutation
  Morphism embedding;      ///< a'_{mn} -> q a_{mn} a_{m,n-1}^{-1}, v_m -> v_m
  IntMatrix expected;      ///< adjacency of the ratio-coordinate quiver
  bool matches = false;
};

/// Ratio coordinates a'_{m,1} = a_{m,1}, a'_{m,n} = q a_{m,n} a_{m,n-1}^{-1}. Expected
/// arrows x -> y (C(x,y) = +1): a'_{m+1,n} -> a'_{m,n}, a'_{m,n} -> a'_{m+1,n+1},
/// a'_{m,n+1} -> a'_{m,n} and a'_{m,1} -> v_m.
RatioChart ratio_chart(const LusztigChart& chart);

}  // namespace glq
