#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glq/serialize.hpp"

namespace glq {

struct CheckRecord {
  std::string id;
  bool pass = false;
  std::optional<double> residual;
  /// Residual polynomial or any other structured payload.
  Json data;
  std::string detail;
};

/// Named list of check records; a suite passes iff every record passes.
struct VerificationReport {
  std::string suite;
  Json params = Json::object();
  std::vector<CheckRecord> checks;
  Json convention;

  void add(CheckRecord r) { checks.push_back(std::move(r)); }
  void add(std::string id, bool pass, std::string detail = {});
  void add_residual(std::string id, double residual, double tolerance, std::string detail = {});
  /// Appends every record of `sub`, prefixing ids with "<sub.suite>/".
  void absorb(const VerificationReport& sub);

  bool pass() const;
  std::size_t failures() const;
  double max_residual() const;

  Json to_json() const;
  /// Summary line plus the failing records (all records with verbose).
  std::string to_text(bool verbose = false) const;
};

}  // namespace glq
