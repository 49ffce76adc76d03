#include "glq/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace glq {

void VerificationReport::add(std::string id, bool pass, std::string detail) {
  checks.push_back(CheckRecord{std::move(id), pass, std::nullopt, Json(), std::move(detail)});
}

void VerificationReport::add_residual(std::string id, double residual, double tolerance, std::string detail) {
  const bool ok = std::isfinite(residual) && residual <= tolerance;
  checks.push_back(CheckRecord{std::move(id), ok, residual, Json(), std::move(detail)});
}

void VerificationReport::absorb(const VerificationReport& sub) {
  for (auto r : sub.checks) {
    r.id = sub.suite + "/" + r.id;
    checks.push_back(std::move(r));
  }
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckRecord& r) { return !r.pass; }));
}

double VerificationReport::max_residual() const {
  double m = 0.0;
  for (const auto& r : checks)
    if (r.residual) m = std::max(m, *r.residual);
  return m;
}

namespace {

// output order is by check id, independent of the order suites ran in
std::vector<const CheckRecord*> by_id(const std::vector<CheckRecord>& checks) {
  std::vector<const CheckRecord*> out;
  for (const auto& r : checks) out.push_back(&r);
  std::stable_sort(out.begin(), out.end(), [](const CheckRecord* a, const CheckRecord* b) { return a->id < b->id; });
  return out;
}

}  // namespace

Json VerificationReport::to_json() const {
  Json records = Json::array();
  for (const CheckRecord* rp : by_id(checks)) {
    const auto& r = *rp;
    Json j{{"check", r.id}, {"pass", r.pass}};
    if (r.residual) j["residual"] = *r.residual;
    if (!r.data.is_null()) j["data"] = r.data;
    if (!r.detail.empty()) j["detail"] = r.detail;
    records.push_back(std::move(j));
  }
  Json out{{"check", suite}, {"params", params}, {"pass", pass()}, {"failures", failures()}, {"records", records}};
  if (!convention.is_null()) out["convention"] = convention;
  return out;
}

std::string VerificationReport::to_text(bool verbose) const {
  std::ostringstream os;
  os << (pass() ? "PASS " : "FAIL ") << suite << "  (" << checks.size() << " checks, " << failures() << " failed)";
  if (!params.empty()) os << "  " << params.dump();
  os << "\n";
  for (const CheckRecord* rp : by_id(checks)) {
    const auto& r = *rp;
    if (r.pass && !verbose) continue;
    os << "  " << (r.pass ? "ok   " : "FAIL ") << r.id;
    if (r.residual) os << "  residual=" << *r.residual;
    if (!r.detail.empty()) os << "  " << r.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace glq
