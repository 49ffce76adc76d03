#include "glq/relations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace glq {

Polynomial glq2_residual(const Polynomial& a, const Polynomial& b, const Polynomial& c, const Polynomial& d, int relation) {
  const LaurentScalar q2 = LaurentScalar::q_power(2);
  switch (relation) {
    case 1: return a * b - b * a;
    case 2: return c * d - d * c;
    case 3: return a * c - (c * a).scaled(q2);
    case 4: return b * d - (d * b).scaled(q2);
    case 5: return b * c - (c * b).scaled(q2);
    case 6: return (a * d - b * c) - (d * a - c * b);
    default: throw std::invalid_argument("relation id must be 1..6");
  }
}

std::vector<MinorResidual> glq2_residuals(const OperatorMatrix& m) {
  std::vector<MinorResidual> out;
  for (int i = 1; i <= m.rows(); ++i)
    for (int ip = i + 1; ip <= m.rows(); ++ip)
      for (int j = 1; j <= m.cols(); ++j)
        for (int jp = j + 1; jp <= m.cols(); ++jp)
          for (int r = 1; r <= 6; ++r)
            out.push_back({i, ip, j, jp, r, glq2_residual(m.at(i, j), m.at(i, jp), m.at(ip, j), m.at(ip, jp), r)});
  return out;
}

VerificationReport verify_glq2_relations(const OperatorMatrix& m) {
  VerificationReport rep;
  rep.suite = "glq2-relations";
  rep.params = Json{{"N", m.rows()}};
  for (auto& r : glq2_residuals(m)) {
    CheckRecord rec;
    rec.id = "minor(" + std::to_string(r.i) + "," + std::to_string(r.ip) + ";" + std::to_string(r.j) + "," +
             std::to_string(r.jp) + ").z" + std::to_string(r.relation);
    rec.pass = r.residual.is_zero();
    if (!rec.pass) {
      rec.detail = r.residual.to_string();
      rec.data = to_json(r.residual)["terms"];
    }
    rep.add(std::move(rec));
  }
  return rep;
}

namespace {

int parity_of(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

void validate(const std::vector<int>& idx, int bound, const char* what) {
  std::vector<int> s = idx;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw std::invalid_argument(std::string("repeated ") + what + " index");
  for (int x : s)
    if (x < 1 || x > bound) throw std::invalid_argument(std::string(what) + " index out of range");
}

}  // namespace

Polynomial quantum_determinant(const OperatorMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("row and column lists differ in length");
  validate(rows, m.rows(), "row");
  validate(cols, m.cols(), "column");
  const std::size_t k = rows.size();
  if (k > 20) throw std::invalid_argument("minor too large");
  std::vector<int> sorted_cols = cols;
  std::sort(sorted_cols.begin(), sorted_cols.end());

  // expansion along the listed rows; memo keyed by the set of unused columns
  std::map<unsigned, Polynomial> memo;
  auto rec = [&](auto&& self, std::size_t depth, unsigned mask) -> Polynomial {
    if (depth == k) return Polynomial::constant(m.signature(), 1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    Polynomial acc(m.signature());
    int before = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if (!(mask & (1u << t))) continue;
      const auto& z = m.at(rows[depth], sorted_cols[t]);
      if (!z.is_zero()) {
        Polynomial term = z * self(self, depth + 1, mask & ~(1u << t));
        if (before % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      ++before;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  Polynomial det = rec(rec, 0, (1u << k) - 1);
  return parity_of(rows) > 0 ? det : -det;
}

Polynomial quantum_determinant(const OperatorMatrix& m) {
  std::vector<int> idx(static_cast<std::size_t>(m.rows()));
  std::iota(idx.begin(), idx.end(), 1);
  return quantum_determinant(m, idx, idx);
}

VerificationReport verify_row_order_independence(const OperatorMatrix& m, const std::vector<int>& rows,
                                                 const std::vector<int>& cols) {
  VerificationReport rep;
  rep.suite = "row-order";
  rep.params = Json{{"rows", rows}, {"cols", cols}};
  const Polynomial ref = quantum_determinant(m, rows, cols);
  std::vector<std::size_t> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> r, c;
    for (auto p : perm) {
      r.push_back(rows[p]);
      c.push_back(cols[p]);
    }
    const Polynomial diff = quantum_determinant(m, r, c) - ref;
    std::string id = "rows(";
    for (std::size_t t = 0; t < r.size(); ++t) id += (t ? "," : "") + std::to_string(r[t]);
    rep.add(id + ")", diff.is_zero(), diff.is_zero() ? "" : diff.to_string());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return rep;
}

VerificationReport coproduct_stability_check(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  if (n > max_n) throw std::invalid_argument("N exceeds the configured bound for the coproduct check");
  const auto z = build_full(n);
  const auto& sig = *z.chart.signature();
  auto big = tensor_signature(sig, "x.", sig, "y.");
  OperatorMatrix x(big, n, n), y(big, n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      x.at(i, j) = embed_polynomial(z.matrix.at(i, j), big, 0);
      y.at(i, j) = embed_polynomial(z.matrix.at(i, j), big, sig.size());
    }
  auto rep = verify_glq2_relations(x * y);
  rep.suite = "coproduct";
  rep.params = Json{{"N", n}};
  return rep;
}

}  // namespace glq
