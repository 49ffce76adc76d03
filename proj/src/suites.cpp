#include "glq/suites.hpp"

#include <stdexcept>

#include "glq/cluster.hpp"
#include "glq/numeric.hpp"
#include "glq/relations.hpp"
#include "glq/tori.hpp"

namespace glq {

int default_word_dimension(int n) { return n <= 3 ? 7 : 3; }

namespace {

VerificationReport closed_form_suite(const ChartMatrix& up) {
  VerificationReport rep;
  rep.suite = "closed-form";
  const int n = up.chart.n();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const bool ok = entry_closed_form(up.chart, i, j) == up.matrix.at(i, j);
      if (!ok || i < j) rep.add("z(" + std::to_string(i) + "," + std::to_string(j) + ")", ok);
    }
  return rep;
}

VerificationReport cluster_formula_suite(const ChartMatrix& up) {
  VerificationReport rep;
  rep.suite = "cluster-formula";
  const int n = up.chart.n();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Polynomial minor = initial_minor(up.matrix, i, j);
      const Polynomial mono = cluster_monomial(up.chart, i, j);
      CheckRecord r{"x(" + std::to_string(i) + "," + std::to_string(j) + ")", minor == mono, std::nullopt, Json(), {}};
      if (!r.pass) r.data = {{"minor", minor.to_string()}, {"monomial", mono.to_string()}};
      rep.add(std::move(r));
    }
  return rep;
}

// images of every generator pair obey the source relation as operators
void check_images(VerificationReport& rep, const std::string& id, const Morphism& f, int d, std::uint64_t seed,
                  double tolerance) {
  const auto target = build_random_rep(f.target(), d, seed);
  std::vector<CMatrix> ops;
  for (const auto& img : f.images()) ops.push_back(evaluate(Polynomial::from(f.target(), img), target));
  const auto& src = *f.source();
  const Complex q2 = target.q * target.q;
  double worst = 0.0;
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      worst = std::max(worst, relative_residual(ops[i] * ops[j],
                                                std::pow(q2, static_cast<double>(src.pairing(i, j))) * ops[j] * ops[i]));
  rep.add_residual(id, worst, tolerance);
}

}  // namespace

VerificationReport cross_backend_suite(int d, std::uint64_t seed, double tolerance) {
  VerificationReport rep;
  rep.suite = "cross-backend";
  rep.params = {{"d", d}, {"seed", seed}};

  const auto up = build_upper(3);
  const auto urep = build_random_rep(up.chart.signature(), d, seed);
  rep.add_residual("rep-relations", rep_relation_residual(urep), tolerance);
  const auto um = evaluate_matrix(up.matrix, urep);
  rep.add_residual("upper(3).minors", numeric_glq2_residual(um, urep.q), tolerance);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      std::vector<int> rows, cols;
      for (int t = 0; t < i; ++t) {
        rows.push_back(1 + t);
        cols.push_back(j - i + 1 + t);
      }
      // the symbolic side only enters through the cluster monomial
      const CMatrix minor = numeric_quantum_determinant(um, rows, cols);
      rep.add_residual("x(" + std::to_string(i) + "," + std::to_string(j) + ")",
                       relative_residual(minor, evaluate(cluster_monomial(up.chart, i, j), urep)), tolerance);
    }
  {
    const auto& chart = up.chart;
    std::vector<std::pair<int, int>> idx;
    std::vector<CMatrix> xs;
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j) {
        idx.push_back({i, j - i});
        xs.push_back(evaluate(cluster_monomial(chart, i, j), urep));
      }
    double worst = 0.0;
    const Complex q2 = urep.q * urep.q;
    for (std::size_t a = 0; a < xs.size(); ++a)
      for (std::size_t b = 0; b < xs.size(); ++b) {
        const int p = p_exponent(idx[a].first, idx[a].second, idx[b].first, idx[b].second);
        worst = std::max(worst, relative_residual(xs[a] * xs[b], std::pow(q2, static_cast<double>(p)) * xs[b] * xs[a]));
      }
    rep.add_residual("cluster-exponents", worst, tolerance);
  }

  const auto full = build_full(2);
  const auto frep = build_random_rep(full.chart.signature(), d, seed);
  const auto fm = evaluate_matrix(full.matrix, frep);
  rep.add_residual("full(2).minors", numeric_glq2_residual(fm, frep.q), tolerance);
  rep.add_residual("full(2).det",
                   relative_residual(numeric_quantum_determinant(fm, {1, 2}, {1, 2}),
                                     evaluate(quantum_determinant(full.matrix), frep)),
                   tolerance);
  const auto& fc = full.chart;
  rep.add_residual("full(2).det=u1v1",
                   relative_residual(numeric_quantum_determinant(fm, {1, 2}, {1, 2}),
                                     frep[fc.u(1)] * frep[fc.v(1)]),
                   tolerance);

  check_images(rep, "thm61(2)", thm61_embedding(2), d, seed, tolerance);
  check_images(rep, "full(2)", full_embedding(2), d, seed, tolerance);
  check_images(rep, "reduced(2)", reduced_embedding(2), d, seed, tolerance);
  check_images(rep, "minimal(3)", minimal_embedding(up.chart.signature()), d, seed, tolerance);
  return rep;
}

VerificationReport verify_suite(const VerifyOptions& opt) {
  const int n = opt.n;
  if (n < 1 || n > kMaxVerifyN) throw std::invalid_argument("N must be in 1.." + std::to_string(kMaxVerifyN));
  VerificationReport report;
  report.suite = "verify";
  report.params = {{"N", n}};

  const auto up = build_upper(n);
  auto rel = verify_glq2_relations(up.matrix);
  rel.suite = "upper-relations";
  report.absorb(rel);
  report.absorb(closed_form_suite(up));
  report.absorb(cluster_formula_suite(up));
  report.absorb(verify_cluster_commutation(up.chart));

  if (n <= kMaxFullN) {
    const auto full = build_full(n);
    auto frel = verify_glq2_relations(full.matrix);
    frel.suite = "full-relations";
    report.absorb(frel);
    if (n <= kMaxDeterminantN) {
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
      auto det = verify_row_order_independence(full.matrix, all, all);
      det.suite = "determinant";
      report.absorb(det);
    }
  }
  if (n <= kMaxCoproductN) report.absorb(coproduct_stability_check(n, kMaxCoproductN));

  if (opt.word) {
    const int d = opt.d > 0 ? opt.d : default_word_dimension(n);
    const auto wc = word_chart(n, *opt.word, d, opt.seed);
    report.absorb(wc.report);
    report.params["word"] = word_text(*opt.word);
    report.params["d"] = d;
    report.params["seed"] = opt.seed;
  }
  return report;
}

EmbedResult embed_suite(int n, const std::string& mode) {
  if (n < 2) throw std::invalid_argument("embeddings need N >= 2");
  Morphism f = [&] {
    if (mode == "thm61") return thm61_embedding(n);
    if (mode == "full") return full_embedding(n);
    if (mode == "reduced") return reduced_embedding(n);
    if (mode == "minimal") return minimal_embedding(LusztigChart::upper(n).signature());
    if (mode == "example64") {
      if (n > 6) throw std::invalid_argument("the published table covers N <= 6");
      return example64_table(n);
    }
    throw std::invalid_argument("unknown mode: " + mode);
  }();
  Json convention;
  if (mode == "thm61") convention = frozen_thm61_convention().to_json();
  if (mode == "full")
    convention = {{"upper", frozen_full_convention().first.to_json()}, {"lower", frozen_full_convention().second.to_json()}};
  if (mode == "reduced") convention = frozen_reduced_convention().to_json();
  if (mode == "example64") convention = frozen_example64_convention().to_json();
  EmbedResult out{to_json(f), embedding_report(mode, n, f, convention)};
  return out;
}

}  // namespace glq
