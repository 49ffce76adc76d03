#include "glq/tori.hpp"

#include <stdexcept>

namespace glq {

namespace {

std::string idx(int m) { return std::to_string(m); }
std::string idx(int m, int n) { return "{" + std::to_string(m) + "," + std::to_string(n) + "}"; }

using Factors = std::vector<std::pair<std::string, int>>;

void require_n(int n) {
  if (n < 2) throw std::invalid_argument("embedding needs N >= 2");
}

// Weyl pairs of one half: diagonal (x_m, y_m) then (x_{mn}, y_{mn}) without (N-1,N-1).
std::vector<std::pair<std::string, std::string>> half_pairs(int n, const std::string& prime, bool diagonal) {
  std::vector<std::pair<std::string, std::string>> p;
  if (diagonal)
    for (int m = 1; m <= n - 1; ++m) p.push_back({"u" + prime + "_" + idx(m), "v" + prime + "_" + idx(m)});
  for (int m = 1; m <= n - 1; ++m)
    for (int k = 1; k <= m; ++k)
      if (!(m == n - 1 && k == n - 1)) p.push_back({"u" + prime + "_" + idx(m, k), "v" + prime + "_" + idx(m, k)});
  return p;
}

// (prod_{k=n}^{m-1} v_{m-1,k}) (prod_{l<n} v_{m,l}) u_{m,n}
Factors off_diagonal_part(int n, int m, int k, const std::string& prime) {
  Factors f;
  for (int t = k; t <= m - 1; ++t) f.push_back({"v" + prime + "_" + idx(m - 1, t), 1});
  for (int l = 1; l <= k - 1; ++l) f.push_back({"v" + prime + "_" + idx(m, l), 1});
  if (!(m == n - 1 && k == n - 1)) f.push_back({"u" + prime + "_" + idx(m, k), 1});
  return f;
}

Factors prepend(std::pair<std::string, int> head, Factors rest) {
  rest.insert(rest.begin(), std::move(head));
  return rest;
}

// images of one chart half in chart index order (a/b block then v/u)
void half_images(int n, const std::string& prime, bool lower, const Convention& c, const AlgebraSignature& target,
                 std::vector<ScaledMonomial>& out) {
  for (int m = 1; m <= n - 1; ++m) {
    for (int k = 1; k <= m; ++k) {
      const std::string head = (lower ? "v" : "u") + prime + "_" + idx(m);
      out.push_back(ordered_product(target, prepend({head, 1}, off_diagonal_part(n, m, k, prime))));
    }
    const std::string diag = (lower ? "u" : "v") + prime + "_" + idx(m);
    out.push_back(ordered_product(target, {{diag, c.invert_diagonal ? -1 : 1}}));
  }
}

}  // namespace

SignaturePtr make_tori_signature(const std::vector<std::pair<std::string, std::string>>& pairs,
                                 const std::vector<int>& orientation, const std::vector<std::string>& central) {
  if (orientation.size() != pairs.size()) throw std::invalid_argument("one orientation per pair expected");
  std::vector<std::string> names;
  for (const auto& [u, v] : pairs) {
    names.push_back(u);
    names.push_back(v);
  }
  for (const auto& z : central) names.push_back(z);
  const auto size = static_cast<Eigen::Index>(names.size());
  IntMatrix c = IntMatrix::Zero(size, size);
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    const auto k = static_cast<Eigen::Index>(2 * t);
    c(k, k + 1) = orientation[t];
    c(k + 1, k) = -orientation[t];
  }
  return make_algebra(std::move(names), std::move(c));
}

std::string Convention::label() const {
  return std::string(orientation > 0 ? "+" : "-") + "," + (invert_diagonal ? "inverted" : "direct");
}

Json Convention::to_json() const {
  return Json{{"orientation", orientation}, {"diagonal", invert_diagonal ? "inverted" : "direct"}};
}

const std::array<Convention, 4>& convention_candidates() {
  static const std::array<Convention, 4> c{Convention{1, false}, Convention{1, true}, Convention{-1, false},
                                           Convention{-1, true}};
  return c;
}

Convention frozen_thm61_convention() { return {-1, true}; }
std::pair<Convention, Convention> frozen_full_convention() { return {{-1, true}, {1, false}}; }
Convention frozen_reduced_convention() { return {1, false}; }
Convention frozen_example64_convention() { return {-1, true}; }

Morphism thm61_embedding(int n, Convention c) {
  require_n(n);
  const auto pairs = half_pairs(n, "", true);
  auto target = make_tori_signature(pairs, std::vector<int>(pairs.size(), c.orientation));
  std::vector<ScaledMonomial> images;
  half_images(n, "", false, c, *target, images);
  return Morphism(LusztigChart::upper(n).signature(), target, std::move(images));
}

Morphism lower_embedding(int n, Convention c) {
  require_n(n);
  const auto pairs = half_pairs(n, "'", true);
  auto target = make_tori_signature(pairs, std::vector<int>(pairs.size(), c.orientation));
  std::vector<ScaledMonomial> images;
  half_images(n, "'", true, c, *target, images);
  // source: the lower half of the full chart, renamed
  const auto full = LusztigChart::full(n);
  const auto h = static_cast<Eigen::Index>(LusztigChart::upper_size(n));
  std::vector<std::string> names(full.signature()->names().begin() + h, full.signature()->names().end());
  auto source = make_algebra(std::move(names), full.signature()->commutation().bottomRightCorner(h, h));
  return Morphism(source, target, std::move(images));
}

Morphism full_embedding(int n, Convention upper, Convention lower) {
  require_n(n);
  auto pairs = half_pairs(n, "", true);
  std::vector<int> orient(pairs.size(), upper.orientation);
  for (const auto& p : half_pairs(n, "'", true)) {
    pairs.push_back(p);
    orient.push_back(lower.orientation);
  }
  auto target = make_tori_signature(pairs, orient);
  std::vector<ScaledMonomial> images;
  half_images(n, "", false, upper, *target, images);
  half_images(n, "'", true, lower, *target, images);
  return Morphism(LusztigChart::full(n).signature(), target, std::move(images));
}

MergedChart merged_chart(int n) {
  require_n(n);
  const auto full = LusztigChart::full(n);
  const auto& sig = *full.signature();
  std::vector<std::string> names;
  std::vector<ScaledMonomial> images;
  auto gen = [&](std::size_t i) { return ScaledMonomial{0, Monomial::generator(sig.size(), i)}; };
  for (int m = 1; m <= n - 1; ++m)
    for (int k = 1; k <= m; ++k) {
      names.push_back(sig.name(full.a(m, k)));
      images.push_back(gen(full.a(m, k)));
    }
  for (int k = 1; k <= n; ++k) {
    names.push_back("T_" + idx(k));
    Factors f;
    if (k <= n - 1) f.push_back({sig.name(full.u(k)), 1});
    if (k >= 2) f.push_back({sig.name(full.v(k - 1)), 1});
    images.push_back(ordered_product(sig, f));
  }
  for (int m = 1; m <= n - 1; ++m)
    for (int k = 1; k <= m; ++k) {
      names.push_back(sig.name(full.b(m, k)));
      images.push_back(gen(full.b(m, k)));
    }
  std::vector<Monomial> monos;
  for (const auto& im : images) monos.push_back(im.monomial);
  auto merged = induced_signature(sig, names, monos);
  return MergedChart{merged, Morphism(merged, full.signature(), std::move(images))};
}

Morphism reduced_embedding(int n, Convention diagonal) {
  require_n(n);
  const auto [up, low] = frozen_full_convention();
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<int> orient;
  for (int i = 1; i <= n; ++i) {
    pairs.push_back({"U_" + idx(i), "V_" + idx(i)});
    orient.push_back(diagonal.orientation);
  }
  for (const auto& p : half_pairs(n, "", false)) {
    pairs.push_back(p);
    orient.push_back(up.orientation);
  }
  for (const auto& p : half_pairs(n, "'", false)) {
    pairs.push_back(p);
    orient.push_back(low.orientation);
  }
  auto target = make_tori_signature(pairs, orient);
  const auto merged = merged_chart(n);
  std::vector<ScaledMonomial> images;
  for (int m = 1; m <= n - 1; ++m)
    for (int k = 1; k <= m; ++k)
      images.push_back(ordered_product(*target, prepend({"U_" + idx(m + 1), 1}, off_diagonal_part(n, m, k, ""))));
  for (int k = 1; k <= n; ++k)
    images.push_back(ordered_product(*target, {{"V_" + idx(k), diagonal.invert_diagonal ? -1 : 1}}));
  for (int m = 1; m <= n - 1; ++m)
    for (int k = 1; k <= m; ++k)
      images.push_back(ordered_product(*target, prepend({"U_" + idx(m), -1}, off_diagonal_part(n, m, k, "'"))));
  return Morphism(merged.signature, target, std::move(images));
}

std::string TableEntry::printed() const {
  std::string s = q_power == 0 ? "" : (q_power == 1 ? "q" : "q^" + std::to_string(q_power));
  for (const auto& l : letters) s += (s.empty() ? "" : "*") + l;
  return s;
}

const std::vector<TableEntry>& example64_entries() {
  static const std::vector<TableEntry> t{
      {"a_{1,1}", 0, {"U_1"}},
      {"u_1", 0, {"V_1"}},
      {"a_{2,1}", 0, {"V_1", "U_2"}},
      {"a_{2,2}", 1, {"V_2", "U_2", "U_3"}},
      {"u_2", 0, {"V_2"}},
      {"a_{3,1}", 0, {"V_2", "U_3", "U_4"}},
      {"a_{3,2}", 0, {"V_3", "U_4", "U_5"}},
      {"a_{3,3}", 1, {"V_4", "U_4", "U_5"}},
      {"u_3", 0, {"V_4"}},
      {"a_{4,1}", 0, {"V_4", "U_5", "U_6", "V_7", "V_8"}},
      {"a_{4,2}", 1, {"V_5", "U_5", "U_6", "V_7"}},
      {"a_{4,3}", 0, {"U_3", "V_5", "U_6"}},
      {"a_{4,4}", 1, {"V_6", "U_6"}},
      {"u_4", 0, {"V_6"}},
      {"a_{5,1}", 0, {"V_6", "U_9"}},
      {"a_{5,2}", 1, {"V_6", "U_8", "V_9", "U_9"}},
      {"a_{5,3}", 0, {"V_6", "U_7", "V_7", "V_9", "U_9"}},
      {"a_{5,4}", 0, {"U_5", "V_6", "V_7", "U_8", "V_8", "V_9", "U_9"}},
      {"a_{5,5}", 1, {"V_8", "V_9", "U_9"}},
      {"u_5", 0, {"V_9"}},
  };
  return t;
}

Morphism example64_table(int n, Convention c) {
  if (n < 2 || n > 6) throw std::invalid_argument("the published table covers 2 <= N <= 6");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 1; i <= 9; ++i) pairs.push_back({"U_" + idx(i), "V_" + idx(i)});
  auto target = make_tori_signature(pairs, std::vector<int>(9, c.orientation));
  const auto chart = LusztigChart::upper(n);
  const auto& src = *chart.signature();
  std::vector<ScaledMonomial> images(src.size());
  for (const auto& e : example64_entries()) {
    const bool diag = e.generator[0] == 'u';
    const std::string name = diag ? "v" + e.generator.substr(1) : e.generator;
    const auto at = src.index_of(name);
    if (!at) continue;  // row beyond this N
    Factors f;
    for (const auto& l : e.letters) f.push_back({l, 1});
    auto im = ordered_product(*target, f);
    im.q_power = checked_add(im.q_power, e.q_power);
    if (diag && c.invert_diagonal) im = inverse(*target, im);
    images[*at] = im;
  }
  return Morphism(chart.signature(), target, std::move(images));
}

std::vector<SweepEntry> sweep_conventions(const std::function<Morphism(const Convention&)>& build) {
  std::vector<SweepEntry> out;
  for (const auto& c : convention_candidates()) out.push_back({c.to_json(), check_morphism(build(c))});
  return out;
}

std::vector<SweepEntry> sweep_full_conventions(int n) {
  std::vector<SweepEntry> out;
  for (const auto& up : convention_candidates())
    for (const auto& low : convention_candidates())
      out.push_back({Json{{"upper", up.to_json()}, {"lower", low.to_json()}}, check_morphism(full_embedding(n, up, low))});
  return out;
}

Morphism minimal_embedding(const SignaturePtr& sig) {
  const auto red = symplectic_reduce(sig->commutation());
  for (auto d : red.divisors)
    if (d != 1)
      throw std::domain_error("elementary divisor " + std::to_string(d) +
                              " > 1: a monomial embedding would need fractional powers");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t t = 1; t <= red.pairs(); ++t) pairs.push_back({"U_" + idx(int(t)), "V_" + idx(int(t))});
  std::vector<std::string> central;
  for (std::size_t t = 1; t <= red.kernel_dim(); ++t) central.push_back("Z_" + idx(int(t)));
  auto target = make_tori_signature(pairs, std::vector<int>(pairs.size(), 1), central);
  std::vector<ScaledMonomial> images;
  for (Eigen::Index i = 0; i < red.s_inverse.rows(); ++i) {
    Monomial e = Monomial::unit(target->size());
    for (Eigen::Index j = 0; j < red.s_inverse.cols(); ++j) e.exponents[j] = checked_narrow(red.s_inverse(i, j));
    images.push_back(weyl_balanced(*target, e));
  }
  return Morphism(sig, target, std::move(images));
}

MinimalitySearch monomial_minimality_search(int n, long long budget) {
  require_n(n);
  const auto chart = LusztigChart::upper(n);
  const auto& c = chart.signature()->commutation();
  const int size = static_cast<int>(chart.generator_count());
  const int r = n * n / 4;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int t = 1; t <= r; ++t) pairs.push_back({"U_" + idx(t), "V_" + idx(t)});
  std::vector<std::string> central;
  for (int t = 1; t <= size - 2 * r; ++t) central.push_back("Z_" + idx(t));
  MinimalitySearch out;
  out.target = make_tori_signature(pairs, std::vector<int>(pairs.size(), 1), central);
  const IntMatrix& j = out.target->commutation();

  // candidates in lexicographic order of their 0/1 vectors
  std::vector<IntVector> cands;
  for (long long code = 1; code < (1LL << size); ++code) {
    IntVector w(size);
    for (int i = 0; i < size; ++i) w(i) = (code >> (size - 1 - i)) & 1;
    cands.push_back(w);
  }
  std::vector<IntVector> sol, jsol;  // chosen rows and J * row
  auto rec = [&](auto&& self, int i) -> bool {
    if (++out.nodes > budget) {
      out.budget_exhausted = true;
      return false;
    }
    if (i == size) return true;
    for (const auto& w : cands) {
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) ok = w.dot(jsol[k]) == c(i, k);
      if (!ok) continue;
      IntMatrix m(i + 1, size);
      for (int k = 0; k < i; ++k) m.row(k) = sol[k].transpose();
      m.row(i) = w.transpose();
      if (rational_rank(m) != i + 1) continue;
      sol.push_back(w);
      jsol.push_back(j * w);
      if (self(self, i + 1)) return true;
      if (out.budget_exhausted) return false;
      sol.pop_back();
      jsol.pop_back();
    }
    return false;
  };
  out.found = rec(rec, 0);
  if (out.found)
    for (const auto& w : sol) {
      std::vector<int> row;
      for (int i = 0; i < size; ++i) row.push_back(static_cast<int>(w(i)));
      out.images.push_back(row);
    }
  return out;
}

VerificationReport embedding_report(const std::string& family, int n, const Morphism& f, const Json& convention) {
  VerificationReport rep;
  rep.suite = "embed-" + family;
  std::size_t pair_count = 0;
  const auto& tc = f.target()->commutation();
  for (Eigen::Index i = 0; i + 1 < tc.rows(); i += 2)
    if (tc(i, i + 1) != 0) ++pair_count;
  rep.params = Json{{"N", n}, {"source_generators", f.source()->size()}, {"target_pairs", pair_count},
                    {"target_generators", f.target()->size()}};
  rep.convention = convention;
  const auto check = check_morphism(f);
  rep.add("relations", check.pass(),
          "pairs " + std::to_string(check.pairs_checked) + ", violated " + std::to_string(check.violations.size()));
  for (const auto& v : check.violations)
    rep.add("pair(" + f.source()->name(v.i) + "," + f.source()->name(v.j) + ")", false,
            "observed " + std::to_string(v.observed) + ", expected " + std::to_string(v.expected));
  return rep;
}

}  // namespace glq
