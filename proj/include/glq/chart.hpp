#pragma once

#include <string>
#include <vector>

#include "glq/algebra.hpp"

namespace glq {

/// Square matrix of polynomials over one signature. Indices are 1-based to
/// match the usual z_{ij} labelling.
class OperatorMatrix {
 public:
  OperatorMatrix(SignaturePtr sig, int rows, int cols);
  static OperatorMatrix identity(SignaturePtr sig, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SignaturePtr& signature() const { return sig_; }

  Polynomial& at(int i, int j);
  const Polynomial& at(int i, int j) const;

  OperatorMatrix with_signature(SignaturePtr sig) const;

  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b);

 private:
  SignaturePtr sig_;
  int rows_;
  int cols_;
  std::vector<Polynomial> entries_;
};

/// Generator layout of the Gauss-Lusztig parametrization of GL_q(N).
///
/// Upper half, in normal order: for m = 1..N-1 the block a_{m,1}, ..., a_{m,m}, v_m.
/// The lower half (full chart only) repeats the layout with b_{m,n}, u_m. The
/// commutation matrix is
///   a_{mn} v_m       = q^2 v_m a_{mn}
///   a_{mn} a_{mn'}   = q^2 a_{mn'} a_{mn}      (n > n')
///   a_{mn} a_{m-1,n'} = q^2 a_{m-1,n'} a_{mn}  (n <= n')
/// with every other pair commuting. With the lower unipotent factor labelled as
/// in lower_unipotent(), {b_{mn}, u_m} obey the same rules with q replaced by
/// q^{-1} (the only choice making U^- T^- a GL_q(N) matrix). The two halves commute.
class LusztigChart {
 public:
  static LusztigChart upper(int n);
  static LusztigChart full(int n);

  int n() const { return n_; }
  bool has_lower() const { return lower_; }
  const SignaturePtr& signature() const { return sig_; }
  std::size_t generator_count() const { return sig_->size(); }

  std::size_t a(int m, int k) const;
  std::size_t v(int m) const;
  std::size_t b(int m, int k) const;
  std::size_t u(int m) const;

  Polynomial gen(std::size_t index) const { return Polynomial::generator(sig_, index); }
  Polynomial one() const { return Polynomial::constant(sig_, 1); }

  /// Same layout, different commutation matrix (used by the converse probes).
  LusztigChart with_commutation(IntMatrix c) const;

  static std::size_t upper_size(int n) { return static_cast<std::size_t>((n - 1) * (n + 2) / 2); }

 private:
  LusztigChart(int n, bool lower, SignaturePtr sig) : n_(n), lower_(lower), sig_(std::move(sig)) {}
  std::size_t block_offset(int m) const { return static_cast<std::size_t>((m - 1) * (m + 2) / 2); }
  void check_a(int m, int k) const;

  int n_;
  bool lower_;
  SignaturePtr sig_;
};

/// Commutation exponent between two upper-chart generators given by kind
/// ('a' or 'v') and indices; the rules listed on LusztigChart.
int upper_chart_relation(char kind_x, int mx, int nx, char kind_y, int my, int ny);

struct ChartMatrix {
  LusztigChart chart;
  OperatorMatrix matrix;
};

/// T^+ U^+ as the literal product diag(1, v_1, ..., v_{N-1}) * B_1 * ... * B_{N-1},
/// B_n = I + sum_{m>=n} a_{m,n} E_{m,m+1}.
ChartMatrix build_upper(int n);

/// Z = U^- T U^+ with T_k = u_k v_{k-1}, v_0 = u_N = 1.
ChartMatrix build_full(int n);

/// Matrix factors used by build_full, exposed for the converse probes.
OperatorMatrix upper_unipotent(const LusztigChart& chart);
OperatorMatrix lower_unipotent(const LusztigChart& chart);
OperatorMatrix upper_torus(const LusztigChart& chart);
OperatorMatrix full_torus(const LusztigChart& chart);

/// z_{i,i+j} = v_{i-1} sum_{t_1<...<t_j} a_{i,t_1} a_{i+1,t_2} ... a_{i+j-1,t_j}; 1 on the
/// diagonal, 0 below it. Throws std::out_of_range for indices outside 1..N.
Polynomial entry_closed_form(const LusztigChart& chart, int row, int col);

/// Copies p into a larger signature whose generators [offset, offset + n) are
/// those of p's signature.
Polynomial embed_polynomial(const Polynomial& p, const SignaturePtr& big, std::size_t offset);

/// Disjoint union of two signatures (prefixing generator names); the halves commute.
SignaturePtr tensor_signature(const AlgebraSignature& x, const std::string& px, const AlgebraSignature& y,
                              const std::string& py);

}  // namespace glq
