#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "glq/braid.hpp"
#include "glq/report.hpp"

namespace glq {

constexpr int kMaxVerifyN = 6;
constexpr int kMaxFullN = 5;
constexpr int kMaxCoproductN = 3;
constexpr int kMaxDeterminantN = 4;

/// Default root-of-unity order for word charts: 7 up to N = 3, then 3 to keep
/// d^{floor(N^2/4)} small.
int default_word_dimension(int n);

struct VerifyOptions {
  int n = 3;
  std::optional<ReducedWord> word;
  int d = 0;  ///< 0 picks default_word_dimension
  std::uint64_t seed = 1;
};

/// Symbolic suites for GL_q(N): minor relations of T^+U^+ and Z, closed-form
/// entries, cluster formula and exponents, det_q row order, coproduct; plus
/// the numeric word chart when a word is given.
VerificationReport verify_suite(const VerifyOptions& opt);

struct EmbedResult {
  Json morphism;
  VerificationReport report;
};

/// mode is one of thm61, full, reduced, minimal, example64. Throws
/// std::invalid_argument on an unknown mode or unsupported N and
/// std::domain_error when the minimal embedding does not exist.
EmbedResult embed_suite(int n, const std::string& mode);

/// Symbolic identities re-evaluated on clock/shift operators at q = exp(i pi / d):
/// minor relations and cluster formula of the upper chart (N = 3), det_q of the
/// full chart (N = 2), embedding images with at most two target pairs.
VerificationReport cross_backend_suite(int d = 7, std::uint64_t seed = 1, double tolerance = 1e-9);

}  // namespace glq
