#include "glq/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace glq {

namespace {

CMatrix inverse_of_sum(const CMatrix& a, const CMatrix& c) {
  const CMatrix s = a + c;
  Eigen::PartialPivLU<CMatrix> lu(s);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-12)) throw std::domain_error("a + c is numerically singular");
  return lu.inverse();
}

// 3x3 operator matrix x_i(t) (i = 1, 2) as a dense 3d x 3d block matrix.
CMatrix elementary(int i, const CMatrix& t) {
  const Eigen::Index d = t.rows();
  CMatrix m = CMatrix::Identity(3 * d, 3 * d);
  m.block((i - 1) * d, i * d, d, d) = t;
  return m;
}

double max_of(std::initializer_list<double> xs) { return *std::max_element(xs.begin(), xs.end()); }

}  // namespace

BraidTriple braid_phi(const BraidTriple& in) {
  const CMatrix inv = inverse_of_sum(in.a, in.c);
  return {inv * in.c * in.b, in.a + in.c, inv * in.a * in.b};
}

double BraidCheck::worst() const { return max_of({input_relations, forms, primed, involution, matrix_identity}); }

BraidCheck check_braid_phi(const BraidTriple& in, Complex q) {
  const Complex q2 = q * q;
  const auto& [a, b, c] = in;
  BraidCheck out;
  out.input_relations = max_of({relative_residual(c * a, q2 * (a * c)), relative_residual(a * b, q2 * (b * a)),
                                relative_residual(b * c, c * b)});
  const BraidTriple p = braid_phi(in);
  const CMatrix inv = inverse_of_sum(a, c);
  out.forms = std::max(relative_residual(p.a, b * c * inv), relative_residual(p.c, b * a * inv));
  out.primed = std::max(relative_residual(p.b * p.c, q2 * (p.c * p.b)), relative_residual(p.c * p.a, q2 * (p.a * p.c)));
  const BraidTriple back = braid_phi(p);
  out.involution = max_of({relative_residual(back.a, a), relative_residual(back.b, b), relative_residual(back.c, c)});
  const CMatrix lhs = elementary(2, a) * elementary(1, b) * elementary(2, c);
  const CMatrix rhs = elementary(1, p.a) * elementary(2, p.b) * elementary(1, p.c);
  out.matrix_identity = relative_residual(lhs, rhs);
  return out;
}

BraidTriple random_braid_triple(int d, std::uint64_t seed) {
  IntMatrix c(3, 3);
  c << 0, 1, -1, -1, 0, 0, 1, 0, 0;
  static const auto sig = make_algebra({"a", "b", "c"}, c);
  const auto rep = build_random_rep(sig, d, seed);
  return {rep[0], rep[1], rep[2]};
}

ReducedWord parse_word(const std::string& text) {
  ReducedWord w;
  const bool separated = text.find_first_of(", ") != std::string::npos;
  if (!separated) {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw std::invalid_argument("bad letter in word: " + text);
      w.push_back(ch - '0');
    }
    return w;
  }
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, text.find(',') != std::string::npos ? ',' : ' ')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char ch) { return std::isspace(ch); }), token.end());
    if (token.empty()) continue;
    if (!std::all_of(token.begin(), token.end(), [](unsigned char ch) { return std::isdigit(ch); }))
      throw std::invalid_argument("bad letter in word: " + text);
    w.push_back(std::stoi(token));
  }
  return w;
}

std::string word_text(const ReducedWord& w) {
  const bool wide = !w.empty() && *std::max_element(w.begin(), w.end()) > 9;
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && wide) s += ',';
    s += std::to_string(w[i]);
  }
  return s;
}

bool is_reduced_word_of_w0(const ReducedWord& w, int n) {
  if (n < 1) return false;
  if (w.size() != static_cast<std::size_t>(n * (n - 1) / 2)) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int s : w) {
    if (s < 1 || s >= n) return false;
    auto& x = perm[static_cast<std::size_t>(s - 1)];
    auto& y = perm[static_cast<std::size_t>(s)];
    // right multiplication by s adds an inversion iff the pair is still in order
    if (x > y) return false;
    std::swap(x, y);
  }
  return true;
}

ReducedWord canonical_word(int n) {
  ReducedWord w;
  for (int k = 1; k <= n - 1; ++k)
    for (int letter = n - 1; letter >= k; --letter) w.push_back(letter);
  return w;
}

namespace {

std::vector<std::pair<ReducedWord, WordMove>> neighbours(const ReducedWord& w) {
  std::vector<std::pair<ReducedWord, WordMove>> out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    if (std::abs(w[p] - w[p + 1]) >= 2) {
      ReducedWord x = w;
      std::swap(x[p], x[p + 1]);
      out.push_back({x, {p, false}});
    }
    if (p + 2 < w.size() && w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
      ReducedWord x = w;
      std::swap(x[p], x[p + 1]);
      x[p + 2] = x[p];
      out.push_back({x, {p, true}});
    }
  }
  return out;
}

}  // namespace

std::vector<ReducedWord> all_reduced_words(int n) {
  std::vector<ReducedWord> out;
  if (n < 1) return out;
  std::map<ReducedWord, bool> seen;
  std::deque<ReducedWord> queue{canonical_word(n)};
  seen[queue.front()] = true;
  while (!queue.empty()) {
    ReducedWord w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (auto& [x, move] : neighbours(w))
      if (seen.emplace(x, true).second) queue.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WordMove> move_path(const ReducedWord& from, const ReducedWord& to) {
  std::map<ReducedWord, std::pair<ReducedWord, WordMove>> parent;
  std::deque<ReducedWord> queue{from};
  parent.emplace(from, std::make_pair(from, WordMove{0, false}));
  while (!queue.empty()) {
    ReducedWord w = queue.front();
    queue.pop_front();
    if (w == to) break;
    for (auto& [x, move] : neighbours(w))
      if (parent.emplace(x, std::make_pair(w, move)).second) queue.push_back(x);
  }
  if (!parent.count(to)) throw std::runtime_error("no sequence of moves connects " + word_text(from) + " to " + word_text(to));
  std::vector<WordMove> path;
  for (ReducedWord w = to; w != from;) {
    const auto& [prev, move] = parent.at(w);
    path.push_back(move);
    w = prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

int predicted_word_relation(int earlier, int later) {
  if (earlier == later) return -1;
  if (later == earlier - 1) return 1;
  return 0;
}

WordChart word_chart(int n, const ReducedWord& word, int d, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("word charts need N >= 2");
  if (!is_reduced_word_of_w0(word, n)) throw std::invalid_argument("not a reduced word of w0: " + word_text(word));

  const auto chart = LusztigChart::upper(n);
  const auto rep = build_random_rep(chart.signature(), d, seed);
  const Complex q = rep.q;

  WordChart out;
  out.word = word;
  out.d = d;
  VerificationReport& report = out.report;
  report.suite = "word-chart";
  report.params = {{"N", n}, {"word", word_text(word)}, {"d", d}, {"seed", seed}, {"dim", rep.dim}};
  report.add_residual("rep.relations", rep_relation_residual(rep), 1e-10);

  // canonical chart: parameters in word order a_{N-1,k}, ..., a_{k,k}
  ReducedWord current = canonical_word(n);
  std::vector<std::size_t> canonical_index;
  for (int k = 1; k <= n - 1; ++k)
    for (int m = n - 1; m >= k; --m) canonical_index.push_back(chart.a(m, k));
  for (auto i : canonical_index) out.params.push_back(rep[i]);
  for (int m = 1; m <= n - 1; ++m) out.v.push_back(rep[chart.v(m)]);

  const auto path = move_path(current, word);
  double move_residual = 0.0;
  for (const auto& mv : path) {
    const std::size_t p = mv.position;
    if (!mv.braid) {
      std::swap(current[p], current[p + 1]);
      std::swap(out.params[p], out.params[p + 1]);
      continue;
    }
    BraidTriple t{out.params[p], out.params[p + 1], out.params[p + 2]};
    const BraidTriple next = braid_phi(t);
    move_residual = std::max(move_residual, check_braid_phi(t, q).matrix_identity);
    out.params[p] = next.a;
    out.params[p + 1] = next.b;
    out.params[p + 2] = next.c;
    std::swap(current[p], current[p + 1]);
    current[p + 2] = current[p];
  }
  report.add_residual("transport.moves", move_residual, 1e-9, std::to_string(path.size()) + " moves");
  if (current != word) throw std::runtime_error("move sequence did not reach " + word_text(word));

  const std::size_t len = word.size();
  const std::size_t total = len + out.v.size();
  auto op = [&](std::size_t i) -> const CMatrix& { return i < len ? out.params[i] : out.v[i - len]; };
  out.measured = IntMatrix::Zero(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
  out.predicted = out.measured;
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = i + 1; j < total; ++j) {
      const auto m = measure_commutation(op(i), op(j), d);
      out.max_deviation = std::max(out.max_deviation, m.deviation);
      out.max_residual = std::max(out.max_residual, m.residual);
      if (m.ill_conditioned) report.add("ill-conditioned(" + std::to_string(i) + "," + std::to_string(j) + ")", false);
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      out.measured(ii, jj) = m.k;
      out.measured(jj, ii) = -m.k;
      int expect = 0;
      if (j < len)
        expect = predicted_word_relation(word[i], word[j]);
      else if (i < len)
        expect = word[i] == static_cast<int>(j - len) + 1 ? 1 : 0;
      out.predicted(ii, jj) = expect;
      out.predicted(jj, ii) = -expect;
    }
  report.add_residual("measure.deviation", out.max_deviation, 1e-6);
  report.add_residual("measure.residual", out.max_residual, 1e-9);
  {
    CheckRecord r{"measure.rule", out.measured == out.predicted, std::nullopt, Json::object(), {}};
    if (!r.pass) {
      Json diffs = Json::array();
      for (Eigen::Index i = 0; i < out.measured.rows(); ++i)
        for (Eigen::Index j = i + 1; j < out.measured.cols(); ++j)
          if (out.measured(i, j) != out.predicted(i, j)) diffs.push_back({i, j, out.measured(i, j), out.predicted(i, j)});
      r.data = {{"differences", diffs}};
    }
    report.add(std::move(r));
  }
  if (word == canonical_word(n)) {
    bool same = true;
    std::vector<std::size_t> idx = canonical_index;
    for (int m = 1; m <= n - 1; ++m) idx.push_back(chart.v(m));
    const auto& c = chart.signature()->commutation();
    for (std::size_t i = 0; i < total; ++i)
      for (std::size_t j = 0; j < total; ++j)
        same = same && out.measured(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) ==
                           c(static_cast<Eigen::Index>(idx[i]), static_cast<Eigen::Index>(idx[j]));
    report.add("canonical.chart", same, "measured matrix against the chart relations");
  }

  // local diagrams: occurrences p < r < s with letters i, j, i, |i - j| = 1, no i strictly between p and s
  int patterns = 0;
  for (std::size_t p = 0; p < len; ++p) {
    std::size_t s = p + 1;
    while (s < len && word[s] != word[p]) ++s;
    if (s >= len) continue;
    for (std::size_t r = p + 1; r < s; ++r) {
      if (std::abs(word[r] - word[p]) != 1) continue;
      const auto P = static_cast<Eigen::Index>(p), R = static_cast<Eigen::Index>(r), S = static_cast<Eigen::Index>(s);
      // j = i - 1: last -> first, first -> middle, middle and last commute;
      // j = i + 1: last -> first, middle -> last, first and middle commute
      const bool down = word[r] == word[p] - 1;
      const bool ok = out.measured(S, P) == 1 &&
                      (down ? out.measured(P, R) == 1 && out.measured(R, S) == 0
                            : out.measured(R, S) == 1 && out.measured(P, R) == 0);
      std::ostringstream id;
      id << "diagram(" << p << "," << r << "," << s << ")";
      report.add(id.str(), ok, down ? "unprimed" : "primed");
      ++patterns;
    }
  }
  report.params["patterns"] = patterns;

  // T^+ U^+ = diag(1, v_1, ..., v_{N-1}) x_{i_1}(t_1) ... x_{i_L}(t_L)
  NumericMatrix m(n, rep.dim);
  m.at(1, 1) = CMatrix::Identity(rep.dim, rep.dim);
  for (int i = 2; i <= n; ++i) m.at(i, i) = out.v[static_cast<std::size_t>(i - 2)];
  for (std::size_t k = 0; k < len; ++k) {
    const int i = word[k];
    for (int row = 1; row <= n; ++row) m.at(row, i + 1) += m.at(row, i) * out.params[k];
  }
  out.minor_residual = numeric_glq2_residual(m, q);
  report.add_residual("assembled.minors", out.minor_residual, 1e-9);
  return out;
}

}  // namespace glq
