#include "glq/serialize.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace glq {

namespace {

Json bigint_json(const BigInt& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return c.convert_to<long long>();
  return c.str();
}

BigInt bigint_from(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or a decimal string");
}

std::vector<int> exponents_from(const Json& j) {
  std::vector<int> e;
  for (const auto& x : j) e.push_back(checked_narrow(x.get<long long>()));
  return e;
}

}  // namespace

Json to_json(const AlgebraSignature& sig) {
  Json c = Json::array();
  for (Eigen::Index i = 0; i < sig.commutation().rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < sig.commutation().cols(); ++k) row.push_back(sig.commutation()(i, k));
    c.push_back(row);
  }
  return Json{{"generators", sig.names()}, {"commutation", c}};
}

Json to_json(const LaurentScalar& c) {
  Json j = Json::object();
  for (const auto& [e, v] : c.coefficients()) j[std::to_string(e)] = bigint_json(v);
  return j;
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back(Json::array({m.exponents, to_json(c)}));
  return Json{{"signature", to_json(*p.signature())}, {"terms", terms}};
}

Json to_json(const Morphism& f) {
  Json images = Json::array();
  for (std::size_t i = 0; i < f.source()->size(); ++i) {
    const auto& im = f.image(i);
    images.push_back(Json{{"generator", f.source()->name(i)},
                          {"q_power", im.q_power},
                          {"exponents", im.monomial.exponents},
                          {"text", format_monomial(*f.target(), im)}});
  }
  return Json{{"source", to_json(*f.source())}, {"target", to_json(*f.target())}, {"images", images}};
}

SignaturePtr signature_from_json(const Json& j) {
  auto names = j.at("generators").get<std::vector<std::string>>();
  const auto& rows = j.at("commutation");
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n != static_cast<Eigen::Index>(names.size())) throw std::invalid_argument("commutation matrix size mismatch");
  IntMatrix c(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n) throw std::invalid_argument("commutation matrix is not square");
    for (Eigen::Index k = 0; k < n; ++k) c(i, k) = rows[i][k].get<long long>();
  }
  return make_algebra(std::move(names), std::move(c));
}

LaurentScalar scalar_from_json(const Json& j) {
  LaurentScalar s;
  for (const auto& [k, v] : j.items()) s.add_term(std::stoi(k), bigint_from(v));
  return s;
}

Polynomial polynomial_from_json(const Json& j) {
  auto sig = signature_from_json(j.at("signature"));
  Polynomial p(sig);
  for (const auto& t : j.at("terms")) {
    Monomial m{exponents_from(t.at(0))};
    if (m.size() != sig->size()) throw std::invalid_argument("term exponent vector has the wrong length");
    p.add_term(m, scalar_from_json(t.at(1)));
  }
  return p;
}

Morphism morphism_from_json(const Json& j) {
  auto src = signature_from_json(j.at("source"));
  auto tgt = signature_from_json(j.at("target"));
  std::vector<ScaledMonomial> images(src->size());
  std::vector<bool> seen(src->size(), false);
  for (const auto& im : j.at("images")) {
    const auto i = src->require(im.at("generator").get<std::string>());
    images[i] = ScaledMonomial{checked_narrow(im.at("q_power").get<long long>()), Monomial{exponents_from(im.at("exponents"))}};
    seen[i] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw std::invalid_argument("missing image for " + src->name(i));
  return Morphism(src, tgt, std::move(images));
}

std::string format_monomial(const AlgebraSignature& sig, const ScaledMonomial& m) {
  std::ostringstream os;
  bool first = true;
  if (m.q_power != 0) {
    os << "q";
    if (m.q_power != 1) os << "^" << m.q_power;
    first = false;
  }
  for (std::size_t i = 0; i < m.monomial.size(); ++i) {
    const int e = m.monomial.exponents[i];
    if (e == 0) continue;
    if (!first) os << "*";
    first = false;
    os << sig.name(i);
    if (e != 1) os << "^" << e;
  }
  if (first) os << "1";
  return os.str();
}

}  // namespace glq
