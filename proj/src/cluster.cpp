#include "glq/cluster.hpp"

#include <stdexcept>

#include "glq/relations.hpp"

namespace glq {

namespace {

void check_cluster_index(int n, int i, int j) {
  if (i < 1 || j <= i || j > n) throw std::out_of_range("cluster index needs 1 <= i < j <= N");
}

std::string cluster_name(int i, int j) { return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

}  // namespace

Polynomial initial_minor(const OperatorMatrix& upper, int i, int j) {
  check_cluster_index(upper.rows(), i, j);
  std::vector<int> rows, cols;
  for (int t = 0; t < i; ++t) {
    rows.push_back(1 + t);
    cols.push_back(j - i + 1 + t);
  }
  return quantum_determinant(upper, rows, cols);
}

Polynomial initial_minor(const LusztigChart& chart, int i, int j) {
  return initial_minor(upper_torus(chart) * upper_unipotent(chart), i, j);
}

Polynomial cluster_monomial(const LusztigChart& chart, int i, int j) {
  if (i == j && i >= 1 && i <= chart.n()) return chart.one();
  check_cluster_index(chart.n(), i, j);
  const int len = j - i;
  Polynomial acc = chart.one();
  for (int m = 1; m <= i; ++m)
    for (int n = 1; n <= len; ++n) acc = acc * chart.gen(chart.a(m + n - 1, n));
  for (int k = 1; k <= i - 1; ++k) acc = acc * chart.gen(chart.v(k));
  return acc;
}

int p_exponent(int i, int j, int k, int l) {
  if (i < 1 || j < 1 || k < 1 || l < 1) throw std::invalid_argument("P needs positive indices");
  if (j > l) return -p_exponent(k, l, i, j);
  int first = 0;
  for (int m = 1; m <= i; ++m)
    for (int n = 1; n <= j; ++n)
      if (m + n >= l + 2 && m + n <= k + l + 1) ++first;
  int second = 0;
  for (int m = 1; m <= k; ++m)
    for (int n = 1; n <= l; ++n)
      if (m + n <= i) ++second;
  return first - second;
}

VerificationReport verify_cluster_commutation(const LusztigChart& chart) {
  const int n = chart.n();
  VerificationReport rep;
  rep.suite = "cluster-commutation";
  rep.params = Json{{"N", n}};
  const auto upper = upper_torus(chart) * upper_unipotent(chart);
  struct Entry {
    int i, len;
    Polynomial x;
  };
  std::vector<Entry> xs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) xs.push_back({i, j - i, initial_minor(upper, i, j)});
  for (std::size_t s = 0; s < xs.size(); ++s)
    for (std::size_t t = 0; t < xs.size(); ++t) {
      const auto& x = xs[s];
      const auto& y = xs[t];
      const auto k = q_commutation_exponent(x.x, y.x);
      const int p = p_exponent(x.i, x.len, y.i, y.len);
      CheckRecord rec;
      rec.id = cluster_name(x.i, x.i + x.len) + "*" + cluster_name(y.i, y.i + y.len);
      rec.pass = k && *k == p;
      rec.data = Json{{"i", x.i}, {"j", x.len}, {"k", y.i}, {"l", y.len}, {"P", p}, {"match", rec.pass}};
      rec.data["symbolic"] = k ? Json(*k) : Json(nullptr);
      if (!rec.pass) rec.detail = k ? "symbolic " + std::to_string(*k) + " vs P " + std::to_string(p) : "not quasi-commuting";
      rep.add(std::move(rec));
    }
  return rep;
}

RatioChart ratio_chart(const LusztigChart& chart) {
  const int n = chart.n();
  const auto& sig = *chart.signature();
  std::vector<std::string> names;
  std::vector<ScaledMonomial> images;
  for (int m = 1; m <= n - 1; ++m) {
    for (int k = 1; k <= m; ++k) {
      names.push_back("a'_{" + std::to_string(m) + "," + std::to_string(k) + "}");
      if (k == 1) {
        images.push_back({0, Monomial::generator(sig.size(), chart.a(m, 1))});
      } else {
        auto im = ordered_product(sig, {{sig.name(chart.a(m, k)), 1}, {sig.name(chart.a(m, k - 1)), -1}});
        im.q_power = checked_add(im.q_power, 1);
        images.push_back(im);
      }
    }
    names.push_back(sig.name(chart.v(m)));
    images.push_back({0, Monomial::generator(sig.size(), chart.v(m))});
  }
  std::vector<Monomial> monos;
  for (const auto& im : images) monos.push_back(im.monomial);
  auto ratio_sig = induced_signature(sig, names, monos);

  // same block layout as the chart: a'_{m,1..m}, v_m
  const auto size = static_cast<Eigen::Index>(names.size());
  IntMatrix expected = IntMatrix::Zero(size, size);
  auto at = [](int m, int k) { return static_cast<Eigen::Index>((m - 1) * (m + 2) / 2 + (k - 1)); };
  auto arrow = [&](Eigen::Index x, Eigen::Index y) {
    expected(x, y) = 1;
    expected(y, x) = -1;
  };
  for (int m = 1; m <= n - 1; ++m) {
    arrow(at(m, 1), at(m, m + 1));  // a'_{m,1} -> v_m; v_m sits right after the a' block
    for (int k = 1; k <= m; ++k) {
      if (m + 1 <= n - 1) {
        arrow(at(m + 1, k), at(m, k));
        arrow(at(m, k), at(m + 1, k + 1));
      }
      if (k + 1 <= m) arrow(at(m, k + 1), at(m, k));
    }
  }
  RatioChart out{ratio_sig, Morphism(ratio_sig, chart.signature(), std::move(images)), expected, false};
  out.matches = ratio_sig->commutation() == expected;
  return out;
}

}  // namespace glq
