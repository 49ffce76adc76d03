#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>

#include <Eigen/Dense>

#include "glq/report.hpp"

namespace glq {

/// Lusztig coordinates of a totally positive g = U^- T U^+ at q = 1:
/// a_{mn}, b_{mn} for 1 <= n <= m <= N-1 (packed row by row) and u_1..u_N.
template <typename Scalar>
struct PositiveParamT {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  int n = 1;
  Vector a, b, u;

  explicit PositiveParamT(int size = 1)
      : n(size), a(Vector::Zero(packed_size(size))), b(Vector::Zero(packed_size(size))), u(Vector::Ones(size)) {}

  static Eigen::Index packed_size(int size) { return size * (size - 1) / 2; }
  static Eigen::Index packed(int m, int k) { return (m - 1) * m / 2 + k - 1; }

  Scalar& a_at(int m, int k) { return a(packed(m, k)); }
  Scalar a_at(int m, int k) const { return a(packed(m, k)); }
  Scalar& b_at(int m, int k) { return b(packed(m, k)); }
  Scalar b_at(int m, int k) const { return b(packed(m, k)); }

  /// a, then b, then u.
  Vector flat() const {
    Vector out(a.size() + b.size() + u.size());
    out << a, b, u;
    return out;
  }
  static PositiveParamT from_flat(int size, const Vector& x) {
    PositiveParamT p(size);
    const Eigen::Index k = packed_size(size);
    p.a = x.head(k);
    p.b = x.segment(k, k);
    p.u = x.tail(size);
    return p;
  }
  bool positive() const { return (a.array() > 0).all() && (b.array() > 0).all() && (u.array() > 0).all(); }
};

using PositiveParam = PositiveParamT<double>;

template <typename Scalar>
using MatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// U^+ = B_1 ... B_{N-1}, B_n = I + sum_{m >= n} a_{m,n} E_{m,m+1}.
template <typename Scalar>
MatrixT<Scalar> upper_unipotent_classical(const PositiveParamT<Scalar>& p) {
  const int n = p.n;
  MatrixT<Scalar> out = MatrixT<Scalar>::Identity(n, n);
  for (int k = 1; k <= n - 1; ++k) {
    MatrixT<Scalar> f = MatrixT<Scalar>::Identity(n, n);
    for (int m = k; m <= n - 1; ++m) f(m - 1, m) = p.a_at(m, k);
    out = out * f;
  }
  return out;
}

/// U^- as printed: factor t = 1..N-1 carries b_{r, r-N+t+1} at (r+1, r), r = N-t..N-1.
template <typename Scalar>
MatrixT<Scalar> lower_unipotent_classical(const PositiveParamT<Scalar>& p) {
  const int n = p.n;
  MatrixT<Scalar> out = MatrixT<Scalar>::Identity(n, n);
  for (int t = 1; t <= n - 1; ++t) {
    MatrixT<Scalar> f = MatrixT<Scalar>::Identity(n, n);
    for (int r = n - t; r <= n - 1; ++r) f(r, r - 1) = p.b_at(r, r - n + t + 1);
    out = out * f;
  }
  return out;
}

/// g = U^- diag(u_1, ..., u_N) U^+.
template <typename Scalar>
MatrixT<Scalar> lusztig_matrix(const PositiveParamT<Scalar>& p) {
  return lower_unipotent_classical(p) * p.u.asDiagonal() * upper_unipotent_classical(p);
}

/// Parameters drawn log-uniformly from [e^-1, e].
PositiveParam random_param(int n, std::mt19937_64& rng);

/// (i, j) -> x_{ij}: top-anchored for i < j (rows 1..i, columns j-i+1..j), the
/// transposed left-anchored minor for i > j, leading principal for i = j.
using MinorMap = std::map<std::pair<int, int>, double>;
MinorMap initial_minors_classical(const Eigen::MatrixXd& g);

/// Inverse of the minor parametrization. Throws std::domain_error on a zero denominator.
PositiveParam params_from_minors(const MinorMap& x, int n);

/// X_ii = x_ii / x_{i-1,i-1}, X_ij = x_ij / x_ii (i < j), X_ij = x_ij / x_jj (i > j), row major.
Eigen::VectorXd x_coordinates(const Eigen::MatrixXd& g);
/// The parameters whose matrix has the given X coordinates.
PositiveParam params_from_x(const Eigen::VectorXd& x, int n);

/// Central finite-difference Jacobian of f at x with step rel_step * max(|x_k|, 1e-3).
template <typename F>
Eigen::MatrixXd numeric_jacobian(const F& f, const Eigen::VectorXd& x, double rel_step) {
  const Eigen::VectorXd f0 = f(x);
  Eigen::MatrixXd j(f0.size(), x.size());
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    const double h = rel_step * std::max(std::abs(x(k)), 1e-3);
    Eigen::VectorXd xp = x, xm = x;
    xp(k) += h;
    xm(k) -= h;
    j.col(k) = (f(xp) - f(xm)) / (2 * h);
  }
  return j;
}

VerificationReport round_trip_check(int n, int samples, std::uint64_t seed);
VerificationReport positivity_check(int n, int samples, std::uint64_t seed);

/// build_upper and build_full specialized to commuting variables and evaluated
/// at random parameters, against the float factors.
VerificationReport q1_consistency_check(int n, int samples, std::uint64_t seed);

/// For each coordinate system ("x" and "abu"), pulls the Haar density |det g|^{-N}
/// back along g(coords) and divides by the claimed density. The ratio must be the
/// same at every sample. Each system also gets a diagnostic record with the
/// monomial correction fitted to log(ratio) by least squares.
VerificationReport haar_density_check(int n, int samples, std::uint64_t seed, double rel_step = 1e-6);

/// Round trip, positivity, q = 1 consistency and (N <= 4) Haar density.
VerificationReport classical_suite(int n, int samples, std::uint64_t seed);

}  // namespace glq
