#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace glq {

using BigInt = boost::multiprecision::cpp_int;

/// Checked machine-integer arithmetic for generator and q exponents.
int checked_add(int a, int b);
int checked_mul(int a, int b);
int checked_narrow(long long v);

/// An element of Z[q, q^-1]. Zero coefficients are never stored, so the zero
/// scalar is the empty map and equality is structural.
class LaurentScalar {
 public:
  using CoefficientMap = std::map<int, BigInt>;

  LaurentScalar() = default;
  LaurentScalar(long long constant);  // NOLINT: implicit from integers is intended
  LaurentScalar(BigInt constant);     // NOLINT

  /// c * q^k
  static LaurentScalar q_power(int k, BigInt c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  const CoefficientMap& coefficients() const { return coeffs_; }

  /// Lowest / highest q exponent; undefined on zero.
  int min_degree() const;
  int max_degree() const;

  /// Multiplication by q^k.
  LaurentScalar shifted(int k) const;

  /// If the scalar is c*q^k, returns (k, c).
  std::optional<std::pair<int, BigInt>> as_term() const;

  /// Evaluation at q = 1.
  BigInt at_one() const;
  std::complex<double> evaluate(std::complex<double> q) const;

  void add_term(int k, const BigInt& c);

  LaurentScalar& operator+=(const LaurentScalar& o);
  LaurentScalar& operator-=(const LaurentScalar& o);
  LaurentScalar& operator*=(const LaurentScalar& o);
  LaurentScalar operator-() const;

  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  CoefficientMap coeffs_;
};

}  // namespace glq
