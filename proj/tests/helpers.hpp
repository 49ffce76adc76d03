#pragma once

#include <random>
#include <string>
#include <vector>

#include "glq/algebra.hpp"

namespace testing {

inline glq::SignaturePtr random_signature(std::mt19937_64& rng, int size) {
  std::uniform_int_distribution<int> entry(-2, 2);
  glq::IntMatrix c = glq::IntMatrix::Zero(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      c(i, j) = entry(rng);
      c(j, i) = -c(i, j);
    }
  std::vector<std::string> names;
  for (int i = 0; i < size; ++i) names.push_back("x" + std::to_string(i + 1));
  return glq::make_algebra(names, c);
}

inline glq::Monomial random_monomial(std::mt19937_64& rng, std::size_t size, int spread = 2) {
  std::uniform_int_distribution<int> e(-spread, spread);
  glq::Monomial m = glq::Monomial::unit(size);
  for (auto& x : m.exponents) x = e(rng);
  return m;
}

inline glq::LaurentScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(-3, 3), c(-4, 4);
  glq::LaurentScalar s;
  for (int t = 0; t < 2; ++t) s.add_term(k(rng), c(rng));
  return s;
}

inline glq::Polynomial random_polynomial(std::mt19937_64& rng, const glq::SignaturePtr& sig, int terms = 3) {
  glq::Polynomial p(sig);
  for (int t = 0; t < terms; ++t) p.add_term(random_monomial(rng, sig->size()), random_scalar(rng));
  return p;
}

}  // namespace testing
