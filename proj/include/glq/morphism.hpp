#pragma once

#include <string>
#include <vector>

#include "glq/algebra.hpp"

namespace glq {

/// Sends every source generator to q^k times a Laurent monomial of the target.
class Morphism {
 public:
  Morphism(SignaturePtr source, SignaturePtr target, std::vector<ScaledMonomial> images);

  const SignaturePtr& source() const { return source_; }
  const SignaturePtr& target() const { return target_; }
  const std::vector<ScaledMonomial>& images() const { return images_; }
  const ScaledMonomial& image(std::size_t i) const { return images_.at(i); }
  const ScaledMonomial& image(const std::string& name) const { return images_.at(source_->require(name)); }

  static Morphism identity(const SignaturePtr& sig);

 private:
  SignaturePtr source_;
  SignaturePtr target_;
  std::vector<ScaledMonomial> images_;
};

struct MorphismViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  long long observed = 0;
  long long expected = 0;
};

struct MorphismReport {
  std::size_t pairs_checked = 0;
  std::vector<MorphismViolation> violations;
  bool pass() const { return violations.empty(); }
};

/// Checks image(x_i) image(x_j) = q^{2 C_ij} image(x_j) image(x_i) for all i < j.
MorphismReport check_morphism(const Morphism& f);

/// Ring-homomorphic extension of f to polynomials over f.source().
Polynomial apply_morphism(const Polynomial& p, const Morphism& f);

/// Composition g after f (f: A -> B, g: B -> C).
Morphism compose(const Morphism& g, const Morphism& f);

/// Replaces every image prefactor by its Weyl-balanced value.
Morphism weyl_balanced(const Morphism& f);

}  // namespace glq
