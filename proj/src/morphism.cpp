#include "glq/morphism.hpp"

#include <stdexcept>

namespace glq {

Morphism::Morphism(SignaturePtr source, SignaturePtr target, std::vector<ScaledMonomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_ || !target_) throw std::invalid_argument("morphism needs both signatures");
  if (images_.size() != source_->size()) throw std::invalid_argument("one image per source generator expected");
  for (const auto& im : images_)
    if (im.monomial.size() != target_->size()) throw std::invalid_argument("image monomial has the wrong length");
}

Morphism Morphism::identity(const SignaturePtr& sig) {
  std::vector<ScaledMonomial> images;
  for (std::size_t i = 0; i < sig->size(); ++i) images.push_back({0, Monomial::generator(sig->size(), i)});
  return Morphism(sig, sig, std::move(images));
}

MorphismReport check_morphism(const Morphism& f) {
  MorphismReport rep;
  const auto& src = *f.source();
  const auto& tgt = *f.target();
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = i + 1; j < src.size(); ++j) {
      ++rep.pairs_checked;
      const long long observed = commutation_pairing(tgt, f.image(i).monomial, f.image(j).monomial);
      const long long expected = src.pairing(i, j);
      if (observed != expected) rep.violations.push_back({i, j, observed, expected});
    }
  return rep;
}

Polynomial apply_morphism(const Polynomial& p, const Morphism& f) {
  if (!same_signature(p.signature(), f.source()))
    throw std::invalid_argument("polynomial does not live over the morphism source");
  const auto& tgt = *f.target();
  Polynomial out(f.target());
  for (const auto& [m, c] : p.terms()) {
    ScaledMonomial acc{0, Monomial::unit(tgt.size())};
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.exponents[i] != 0) acc = multiply(tgt, acc, power(tgt, f.image(i), m.exponents[i]));
    out.add_term(acc.monomial, c.shifted(acc.q_power));
  }
  return out;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!same_signature(f.target(), g.source())) throw std::invalid_argument("morphisms are not composable");
  const auto& mid = *g.source();
  const auto& tgt = *g.target();
  std::vector<ScaledMonomial> images;
  for (const auto& im : f.images()) {
    ScaledMonomial acc{im.q_power, Monomial::unit(tgt.size())};
    for (std::size_t i = 0; i < mid.size(); ++i)
      if (im.monomial.exponents[i] != 0) acc = multiply(tgt, acc, power(tgt, g.image(i), im.monomial.exponents[i]));
    images.push_back(acc);
  }
  return Morphism(f.source(), g.target(), std::move(images));
}

Morphism weyl_balanced(const Morphism& f) {
  std::vector<ScaledMonomial> images;
  for (const auto& im : f.images()) images.push_back(weyl_balanced(*f.target(), im.monomial));
  return Morphism(f.source(), f.target(), std::move(images));
}

}  // namespace glq
