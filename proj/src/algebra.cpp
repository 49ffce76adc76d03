#include "glq/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace glq {

AlgebraSignature::AlgebraSignature(std::vector<std::string> names, IntMatrix commutation)
    : names_(std::move(names)), commutation_(std::move(commutation)) {
  const auto n = static_cast<Eigen::Index>(names_.size());
  if (commutation_.rows() != n || commutation_.cols() != n)
    throw std::invalid_argument("commutation matrix size does not match the generator count");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (commutation_(i, j) != -commutation_(j, i))
        throw std::invalid_argument("commutation matrix is not antisymmetric at (" + names_[i] + ", " +
                                    names_[j] + ")");
  std::map<std::string, int> seen;
  for (const auto& s : names_)
    if (++seen[s] > 1) throw std::invalid_argument("duplicate generator name " + s);
}

std::optional<std::size_t> AlgebraSignature::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t AlgebraSignature::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown generator " + name);
  return *i;
}

SignaturePtr make_algebra(std::vector<std::string> names, IntMatrix commutation) {
  return std::make_shared<const AlgebraSignature>(std::move(names), std::move(commutation));
}

bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

Monomial Monomial::generator(std::size_t n, std::size_t i, int power) {
  Monomial m = unit(n);
  m.exponents.at(i) = power;
  return m;
}

bool Monomial::is_unit() const {
  for (int e : exponents)
    if (e != 0) return false;
  return true;
}

long long commutation_pairing(const AlgebraSignature& sig, const Monomial& e, const Monomial& f) {
  const auto& c = sig.commutation();
  long long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e.exponents[i] == 0) continue;
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f.exponents[j] != 0) s += static_cast<long long>(e.exponents[i]) * f.exponents[j] * c(i, j);
  }
  return s;
}

long long reordering_exponent(const AlgebraSignature& sig, const Monomial& e, const Monomial& f) {
  const auto& c = sig.commutation();
  long long s = 0;
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e.exponents[i] == 0) continue;
    for (std::size_t j = 0; j < i; ++j)
      if (f.exponents[j] != 0) s += static_cast<long long>(e.exponents[i]) * f.exponents[j] * c(i, j);
  }
  return s;
}

namespace {

Monomial merged(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m.exponents[i] = checked_add(m.exponents[i], b.exponents[i]);
  return m;
}

void require_size(const AlgebraSignature& sig, const Monomial& m) {
  if (m.size() != sig.size()) throw std::invalid_argument("monomial length does not match the signature");
}

}  // namespace

ScaledMonomial multiply(const AlgebraSignature& sig, const ScaledMonomial& a, const ScaledMonomial& b) {
  require_size(sig, a.monomial);
  require_size(sig, b.monomial);
  const long long k = reordering_exponent(sig, a.monomial, b.monomial);
  return {checked_add(checked_add(a.q_power, b.q_power), checked_narrow(2 * k)), merged(a.monomial, b.monomial)};
}

ScaledMonomial inverse(const AlgebraSignature& sig, const ScaledMonomial& a) {
  require_size(sig, a.monomial);
  Monomial neg = a.monomial;
  for (auto& e : neg.exponents) e = -e;
  const long long k = reordering_exponent(sig, a.monomial, neg);
  return {checked_add(-a.q_power, checked_narrow(-2 * k)), neg};
}

ScaledMonomial power(const AlgebraSignature& sig, const ScaledMonomial& a, int k) {
  if (k < 0) return power(sig, inverse(sig, a), -k);
  ScaledMonomial r{0, Monomial::unit(sig.size())};
  for (int i = 0; i < k; ++i) r = multiply(sig, r, a);
  return r;
}

ScaledMonomial ordered_product(const AlgebraSignature& sig,
                               const std::vector<std::pair<std::string, int>>& factors) {
  ScaledMonomial r{0, Monomial::unit(sig.size())};
  for (const auto& [name, k] : factors)
    r = multiply(sig, r, ScaledMonomial{0, Monomial::generator(sig.size(), sig.require(name), k)});
  return r;
}

ScaledMonomial weyl_balanced(const AlgebraSignature& sig, const Monomial& e) {
  require_size(sig, e);
  const auto& c = sig.commutation();
  long long s = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) s += static_cast<long long>(e.exponents[i]) * e.exponents[j] * c(i, j);
  return {checked_narrow(-s), e};
}

Polynomial::Polynomial(SignaturePtr sig) : sig_(std::move(sig)) {
  if (!sig_) throw std::invalid_argument("polynomial without a signature");
}

Polynomial Polynomial::constant(SignaturePtr sig, const LaurentScalar& c) {
  Polynomial p(std::move(sig));
  p.add_term(Monomial::unit(p.sig_->size()), c);
  return p;
}

Polynomial Polynomial::generator(SignaturePtr sig, std::size_t i) {
  Polynomial p(std::move(sig));
  p.add_term(Monomial::generator(p.sig_->size(), i), 1);
  return p;
}

Polynomial Polynomial::generator(SignaturePtr sig, const std::string& name) {
  const auto i = sig->require(name);
  return generator(std::move(sig), i);
}

Polynomial Polynomial::term(SignaturePtr sig, Monomial m, const LaurentScalar& c) {
  Polynomial p(std::move(sig));
  require_size(*p.sig_, m);
  p.add_term(m, c);
  return p;
}

Polynomial Polynomial::from(SignaturePtr sig, const ScaledMonomial& m) {
  return term(std::move(sig), m.monomial, LaurentScalar::q_power(m.q_power));
}

void Polynomial::add_term(const Monomial& m, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {
void require_same(const Polynomial& a, const Polynomial& b) {
  if (!same_signature(a.signature(), b.signature()))
    throw std::invalid_argument("polynomials live over different signatures");
}
}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::scaled(const LaurentScalar& c) const {
  Polynomial p(sig_);
  if (c.is_zero()) return p;
  for (const auto& [m, a] : terms_) p.terms_.emplace_hint(p.terms_.end(), m, a * c);
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return normal_mul(a, b); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_signature(a.sig_, b.sig_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::with_signature(SignaturePtr sig) const {
  if (sig->size() != sig_->size()) throw std::invalid_argument("generator count differs");
  Polynomial p(std::move(sig));
  p.terms_ = terms_;
  return p;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit = m.is_unit();
    const std::string cs = c.to_string();
    if (unit) {
      os << "(" << cs << ")";
      continue;
    }
    if (cs != "1") os << "(" << cs << ")*";
    bool firstg = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      if (!firstg) os << "*";
      firstg = false;
      os << sig_->name(i);
      if (m.exponents[i] != 1) os << "^" << m.exponents[i];
    }
  }
  return os.str();
}

Polynomial normal_mul(const Polynomial& p, const Polynomial& r) {
  require_same(p, r);
  const auto& sig = *p.signature();
  const auto& c = sig.commutation();
  const std::size_t n = sig.size();
  Polynomial out(p.signature());
  std::vector<long long> twist(n);
  for (const auto& [mp, cp] : p.terms()) {
    // twist_j = sum_{i>j} e_i C_ij, so the reordering exponent is twist . f
    for (std::size_t j = 0; j < n; ++j) {
      long long t = 0;
      for (std::size_t i = j + 1; i < n; ++i)
        if (mp.exponents[i] != 0) t += static_cast<long long>(mp.exponents[i]) * c(i, j);
      twist[j] = t;
    }
    for (const auto& [mr, cr] : r.terms()) {
      long long k = 0;
      for (std::size_t j = 0; j < n; ++j) k += twist[j] * mr.exponents[j];
      out.add_term(merged(mp, mr), (cp * cr).shifted(checked_narrow(2 * k)));
    }
  }
  return out;
}

std::optional<long long> q_commutation_exponent(const Polynomial& p, const Polynomial& r) {
  require_same(p, r);
  if (p.is_zero() || r.is_zero()) throw std::invalid_argument("q-commutation exponent of a zero polynomial");
  const Polynomial pr = p * r;
  const Polynomial rp = r * p;
  if (pr.term_count() != rp.term_count()) return std::nullopt;
  if (pr.is_zero()) return std::nullopt;
  const auto& [m0, c0] = *pr.terms().begin();
  auto it = rp.terms().find(m0);
  if (it == rp.terms().end()) return std::nullopt;
  const int shift = c0.min_degree() - it->second.min_degree();
  if (shift % 2 != 0) return std::nullopt;
  if (rp.scaled(LaurentScalar::q_power(shift)) != pr) return std::nullopt;
  return shift / 2;
}

SignaturePtr commutative_copy(const AlgebraSignature& sig) {
  const auto n = static_cast<Eigen::Index>(sig.size());
  return make_algebra(sig.names(), IntMatrix::Zero(n, n));
}

Polynomial specialize_classical(const Polynomial& p, const SignaturePtr& commutative) {
  Polynomial out(commutative);
  for (const auto& [m, c] : p.terms()) out.add_term(m, LaurentScalar(c.at_one()));
  return out;
}

SignaturePtr induced_signature(const AlgebraSignature& base, std::vector<std::string> names,
                               const std::vector<Monomial>& monomials) {
  if (names.size() != monomials.size()) throw std::invalid_argument("one monomial per generator expected");
  const auto n = static_cast<Eigen::Index>(names.size());
  IntMatrix c(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) c(i, j) = commutation_pairing(base, monomials[i], monomials[j]);
  return make_algebra(std::move(names), std::move(c));
}

}  // namespace glq
