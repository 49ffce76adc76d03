#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "glq/laurent.hpp"

namespace glq {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

/// Generators x_1..x_n with x_i x_j = q^{2 C_ij} x_j x_i. The generator order
/// is the normal-form order x_1^{e_1} ... x_n^{e_n}.
class AlgebraSignature {
 public:
  AlgebraSignature(std::vector<std::string> names, IntMatrix commutation);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require(const std::string& name) const;
  const IntMatrix& commutation() const { return commutation_; }
  long long pairing(std::size_t i, std::size_t j) const { return commutation_(i, j); }

  friend bool operator==(const AlgebraSignature& a, const AlgebraSignature& b) {
    return a.names_ == b.names_ && a.commutation_ == b.commutation_;
  }

 private:
  std::vector<std::string> names_;
  IntMatrix commutation_;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;

/// Validating constructor; throws std::invalid_argument on a size mismatch or
/// a non-antisymmetric matrix.
SignaturePtr make_algebra(std::vector<std::string> names, IntMatrix commutation);

bool same_signature(const SignaturePtr& a, const SignaturePtr& b);

/// Laurent monomial x^e in normal order.
struct Monomial {
  std::vector<int> exponents;

  static Monomial unit(std::size_t n) { return Monomial{std::vector<int>(n, 0)}; }
  static Monomial generator(std::size_t n, std::size_t i, int power = 1);

  bool is_unit() const;
  std::size_t size() const { return exponents.size(); }
  auto operator<=>(const Monomial&) const = default;
};

/// Bilinear form e^T C f: x^e x^f = q^{2 e^T C f} x^f x^e.
long long commutation_pairing(const AlgebraSignature& sig, const Monomial& e, const Monomial& f);

/// Exponent k with x^e * x^f = q^{2k} x^{e+f} in normal order.
long long reordering_exponent(const AlgebraSignature& sig, const Monomial& e, const Monomial& f);

/// q^{q_power} * x^e. The building block of morphism images.
struct ScaledMonomial {
  int q_power = 0;
  Monomial monomial;

  friend bool operator==(const ScaledMonomial&, const ScaledMonomial&) = default;
};

ScaledMonomial multiply(const AlgebraSignature& sig, const ScaledMonomial& a, const ScaledMonomial& b);
ScaledMonomial inverse(const AlgebraSignature& sig, const ScaledMonomial& a);
ScaledMonomial power(const AlgebraSignature& sig, const ScaledMonomial& a, int k);

/// Product of generator powers taken in the listed (not necessarily normal)
/// order, e.g. {{"u_2",1},{"v_1",1}} for u_2 v_1.
ScaledMonomial ordered_product(const AlgebraSignature& sig, const std::vector<std::pair<std::string, int>>& factors);

/// q^{-sum_{i<j} e_i e_j C_ij} x^e: the symmetrically ordered monomial, the
/// formal counterpart of a positive operator.
ScaledMonomial weyl_balanced(const AlgebraSignature& sig, const Monomial& e);

/// Finite sum of normal-ordered monomials with Z[q,q^-1] coefficients.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, LaurentScalar>;

  explicit Polynomial(SignaturePtr sig);

  static Polynomial constant(SignaturePtr sig, const LaurentScalar& c);
  static Polynomial generator(SignaturePtr sig, std::size_t i);
  static Polynomial generator(SignaturePtr sig, const std::string& name);
  static Polynomial term(SignaturePtr sig, Monomial m, const LaurentScalar& c = 1);
  static Polynomial from(SignaturePtr sig, const ScaledMonomial& m);

  const SignaturePtr& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const LaurentScalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  Polynomial scaled(const LaurentScalar& c) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Same terms reinterpreted over another signature with the same generator count.
  Polynomial with_signature(SignaturePtr sig) const;

  std::string to_string() const;

 private:
  SignaturePtr sig_;
  TermMap terms_;
};

/// Normal-form product; throws std::invalid_argument on signature mismatch.
Polynomial normal_mul(const Polynomial& p, const Polynomial& r);

/// k with p*r = q^{2k} r*p, or nullopt if the pair does not q-commute uniformly.
std::optional<long long> q_commutation_exponent(const Polynomial& p, const Polynomial& r);

/// Image of p in the commutative algebra at q = 1 (same generator names, C = 0).
Polynomial specialize_classical(const Polynomial& p, const SignaturePtr& commutative);
SignaturePtr commutative_copy(const AlgebraSignature& sig);

/// Signature whose generators are the given monomials of `base`; the
/// commutation matrix is induced through the pairing.
SignaturePtr induced_signature(const AlgebraSignature& base, std::vector<std::string> names,
                               const std::vector<Monomial>& monomials);

}  // namespace glq
