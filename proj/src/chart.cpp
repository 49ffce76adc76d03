#include "glq/chart.hpp"

#include <functional>
#include <stdexcept>

namespace glq {

OperatorMatrix::OperatorMatrix(SignaturePtr sig, int rows, int cols)
    : sig_(std::move(sig)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Polynomial(sig_));
}

OperatorMatrix OperatorMatrix::identity(SignaturePtr sig, int n) {
  OperatorMatrix m(sig, n, n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = Polynomial::constant(sig, 1);
  return m;
}

Polynomial& OperatorMatrix::at(int i, int j) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("matrix index out of range");
  return entries_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
}

const Polynomial& OperatorMatrix::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("matrix index out of range");
  return entries_[static_cast<std::size_t>((i - 1) * cols_ + (j - 1))];
}

OperatorMatrix OperatorMatrix::with_signature(SignaturePtr sig) const {
  OperatorMatrix out(sig, rows_, cols_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].with_signature(sig);
  return out;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
  if (!same_signature(a.sig_, b.sig_)) throw std::invalid_argument("matrices live over different algebras");
  OperatorMatrix out(a.sig_, a.rows_, b.cols_);
  for (int i = 1; i <= a.rows_; ++i)
    for (int j = 1; j <= b.cols_; ++j) {
      Polynomial acc(a.sig_);
      for (int k = 1; k <= a.cols_; ++k) {
        const auto& x = a.at(i, k);
        const auto& y = b.at(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y;
      }
      out.at(i, j) = std::move(acc);
    }
  return out;
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

int upper_chart_relation(char kx, int mx, int nx, char ky, int my, int ny) {
  if (kx == 'v' && ky == 'v') return 0;
  if (kx == 'a' && ky == 'v') return mx == my ? 1 : 0;
  if (kx == 'v' && ky == 'a') return -upper_chart_relation(ky, my, ny, kx, mx, nx);
  if (mx == my) return nx > ny ? 1 : (nx < ny ? -1 : 0);
  if (mx == my + 1 && nx <= ny) return 1;
  if (my == mx + 1 && ny <= nx) return -1;
  return 0;
}

namespace {

struct Slot {
  char kind;
  int m;
  int n;
};

std::vector<Slot> upper_slots(int n) {
  std::vector<Slot> s;
  for (int m = 1; m <= n - 1; ++m) {
    for (int k = 1; k <= m; ++k) s.push_back({'a', m, k});
    s.push_back({'v', m, 0});
  }
  return s;
}

std::string slot_name(const Slot& s, bool lower) {
  if (s.kind == 'a') return std::string(lower ? "b" : "a") + "_{" + std::to_string(s.m) + "," + std::to_string(s.n) + "}";
  return std::string(lower ? "u" : "v") + "_" + std::to_string(s.m);
}

SignaturePtr chart_signature(int n, bool lower) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  const auto up = upper_slots(n);
  const std::size_t h = up.size();
  const std::size_t total = lower ? 2 * h : h;
  std::vector<std::string> names;
  for (const auto& s : up) names.push_back(slot_name(s, false));
  if (lower)
    for (const auto& s : up) names.push_back(slot_name(s, true));
  IntMatrix c = IntMatrix::Zero(static_cast<Eigen::Index>(total), static_cast<Eigen::Index>(total));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      const int r = upper_chart_relation(up[i].kind, up[i].m, up[i].n, up[j].kind, up[j].m, up[j].n);
      c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = r;
      // {b, u} carry the {a, v} relations with q -> q^{-1}
      if (lower) c(static_cast<Eigen::Index>(h + i), static_cast<Eigen::Index>(h + j)) = -r;
    }
  return make_algebra(std::move(names), std::move(c));
}

}  // namespace

LusztigChart LusztigChart::upper(int n) { return LusztigChart(n, false, chart_signature(n, false)); }
LusztigChart LusztigChart::full(int n) { return LusztigChart(n, true, chart_signature(n, true)); }

void LusztigChart::check_a(int m, int k) const {
  if (m < 1 || m > n_ - 1 || k < 1 || k > m) throw std::out_of_range("chart index out of range");
}

std::size_t LusztigChart::a(int m, int k) const {
  check_a(m, k);
  return block_offset(m) + static_cast<std::size_t>(k - 1);
}

std::size_t LusztigChart::v(int m) const {
  if (m < 1 || m > n_ - 1) throw std::out_of_range("chart index out of range");
  return block_offset(m) + static_cast<std::size_t>(m);
}

std::size_t LusztigChart::b(int m, int k) const {
  if (!lower_) throw std::logic_error("upper chart has no b generators");
  return upper_size(n_) + a(m, k);
}

std::size_t LusztigChart::u(int m) const {
  if (!lower_) throw std::logic_error("upper chart has no u generators");
  return upper_size(n_) + v(m);
}

LusztigChart LusztigChart::with_commutation(IntMatrix c) const {
  return LusztigChart(n_, lower_, make_algebra(sig_->names(), std::move(c)));
}

OperatorMatrix upper_unipotent(const LusztigChart& chart) {
  const int n = chart.n();
  auto out = OperatorMatrix::identity(chart.signature(), n);
  for (int k = 1; k <= n - 1; ++k) {
    auto f = OperatorMatrix::identity(chart.signature(), n);
    for (int m = k; m <= n - 1; ++m) f.at(m, m + 1) = chart.gen(chart.a(m, k));
    out = out * f;
  }
  return out;
}

OperatorMatrix lower_unipotent(const LusztigChart& chart) {
  const int n = chart.n();
  auto out = OperatorMatrix::identity(chart.signature(), n);
  // factor t carries b_{r, r-N+t+1} at (r+1, r) for r = N-t..N-1
  for (int t = 1; t <= n - 1; ++t) {
    auto f = OperatorMatrix::identity(chart.signature(), n);
    for (int r = n - t; r <= n - 1; ++r) f.at(r + 1, r) = chart.gen(chart.b(r, r - n + t + 1));
    out = out * f;
  }
  return out;
}

OperatorMatrix upper_torus(const LusztigChart& chart) {
  auto t = OperatorMatrix::identity(chart.signature(), chart.n());
  for (int m = 1; m <= chart.n() - 1; ++m) t.at(m + 1, m + 1) = chart.gen(chart.v(m));
  return t;
}

OperatorMatrix full_torus(const LusztigChart& chart) {
  const int n = chart.n();
  auto t = OperatorMatrix::identity(chart.signature(), n);
  for (int k = 1; k <= n; ++k) {
    Polynomial d = chart.one();
    if (k <= n - 1) d = d * chart.gen(chart.u(k));
    if (k >= 2) d = d * chart.gen(chart.v(k - 1));
    t.at(k, k) = d;
  }
  return t;
}

ChartMatrix build_upper(int n) {
  auto chart = LusztigChart::upper(n);
  auto m = upper_torus(chart) * upper_unipotent(chart);
  return {std::move(chart), std::move(m)};
}

ChartMatrix build_full(int n) {
  auto chart = LusztigChart::full(n);
  auto m = lower_unipotent(chart) * full_torus(chart) * upper_unipotent(chart);
  return {std::move(chart), std::move(m)};
}

Polynomial entry_closed_form(const LusztigChart& chart, int row, int col) {
  const int n = chart.n();
  if (row < 1 || row > n || col < 1 || col > n) throw std::out_of_range("matrix index out of range");
  if (col < row) return Polynomial(chart.signature());
  Polynomial prefix = row >= 2 ? chart.gen(chart.v(row - 1)) : chart.one();
  if (col == row) return prefix;
  const int len = col - row;
  Polynomial sum(chart.signature());
  std::function<void(int, int, Polynomial)> rec = [&](int step, int last, Polynomial acc) {
    if (step == len) {
      sum += acc;
      return;
    }
    const int m = row + step;
    for (int t = last + 1; t <= m; ++t) rec(step + 1, t, acc * chart.gen(chart.a(m, t)));
  };
  rec(0, 0, prefix);
  return sum;
}

Polynomial embed_polynomial(const Polynomial& p, const SignaturePtr& big, std::size_t offset) {
  const std::size_t n = p.signature()->size();
  if (offset + n > big->size()) throw std::invalid_argument("embedding does not fit");
  Polynomial out(big);
  for (const auto& [m, c] : p.terms()) {
    Monomial e = Monomial::unit(big->size());
    for (std::size_t i = 0; i < n; ++i) e.exponents[offset + i] = m.exponents[i];
    out.add_term(e, c);
  }
  return out;
}

SignaturePtr tensor_signature(const AlgebraSignature& x, const std::string& px, const AlgebraSignature& y,
                              const std::string& py) {
  std::vector<std::string> names;
  for (const auto& s : x.names()) names.push_back(px + s);
  for (const auto& s : y.names()) names.push_back(py + s);
  const auto nx = static_cast<Eigen::Index>(x.size());
  const auto ny = static_cast<Eigen::Index>(y.size());
  IntMatrix c = IntMatrix::Zero(nx + ny, nx + ny);
  c.topLeftCorner(nx, nx) = x.commutation();
  c.bottomRightCorner(ny, ny) = y.commutation();
  return make_algebra(std::move(names), std::move(c));
}

}  // namespace glq
