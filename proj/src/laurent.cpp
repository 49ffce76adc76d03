#include "glq/laurent.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace glq {

int checked_add(int a, int b) {
  int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in addition");
  return r;
}

int checked_mul(int a, int b) {
  int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in multiplication");
  return r;
}

int checked_narrow(long long v) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw std::overflow_error("exponent does not fit a machine integer");
  return static_cast<int>(v);
}

LaurentScalar::LaurentScalar(long long constant) {
  if (constant != 0) coeffs_.emplace(0, BigInt(constant));
}

LaurentScalar::LaurentScalar(BigInt constant) {
  if (constant != 0) coeffs_.emplace(0, std::move(constant));
}

LaurentScalar LaurentScalar::q_power(int k, BigInt c) {
  LaurentScalar s;
  if (c != 0) s.coeffs_.emplace(k, std::move(c));
  return s;
}

int LaurentScalar::min_degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero scalar");
  return coeffs_.begin()->first;
}

int LaurentScalar::max_degree() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero scalar");
  return coeffs_.rbegin()->first;
}

LaurentScalar LaurentScalar::shifted(int k) const {
  if (k == 0) return *this;
  LaurentScalar s;
  for (const auto& [e, c] : coeffs_) s.coeffs_.emplace_hint(s.coeffs_.end(), checked_add(e, k), c);
  return s;
}

std::optional<std::pair<int, BigInt>> LaurentScalar::as_term() const {
  if (coeffs_.size() != 1) return std::nullopt;
  return *coeffs_.begin();
}

BigInt LaurentScalar::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

std::complex<double> LaurentScalar::evaluate(std::complex<double> q) const {
  std::complex<double> s = 0.0;
  for (const auto& [e, c] : coeffs_) s += c.convert_to<double>() * std::pow(q, e);
  return s;
}

void LaurentScalar::add_term(int k, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
  *this = *this * o;
  return *this;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar s = *this;
  for (auto& [e, c] : s.coeffs_) c = -c;
  return s;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(checked_add(ea, eb), ca * cb);
  return r;
}

std::string LaurentScalar::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace glq
