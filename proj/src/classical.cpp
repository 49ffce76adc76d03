#include "glq/classical.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "glq/chart.hpp"

namespace glq {

namespace {

double minor_det(const Eigen::MatrixXd& g, int r0, int c0, int k) {
  if (k == 0) return 1.0;
  return g.block(r0, c0, k, k).partialPivLu().determinant();
}

// unipotent-normalized top-anchored minors of one triangular factor, with the
// boundary values x_{0,c} = x_{r,r} = 1
using Normalized = std::function<double(int, int)>;

// a_{M,s} = y(i,c) y(i-1,c-2) / (y(i,c-1) y(i-1,c-1)), i = M-s+1, c = M+1
double ratio_param(const Normalized& y, int m, int s) {
  const int i = m - s + 1, c = m + 1;
  auto at = [&](int r, int col) { return (r == 0 || col <= r) ? 1.0 : y(r, col); };
  const double den = at(i, c - 1) * at(i - 1, c - 1);
  if (den == 0.0 || !std::isfinite(den)) throw std::domain_error("zero minor in a denominator");
  return at(i, c) * at(i - 1, c - 2) / den;
}

double relative_error(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

std::string index_name(const char* base, int i, int j) {
  return std::string(base) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

Eigen::VectorXd flatten(const Eigen::MatrixXd& g) {
  Eigen::VectorXd out(g.size());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) out(i * g.cols() + j) = g(i, j);
  return out;
}

double evaluate_classical(const Polynomial& p, const SignaturePtr& commutative, const std::vector<double>& values) {
  const Polynomial s = specialize_classical(p, commutative);
  double acc = 0.0;
  for (const auto& [m, c] : s.terms()) {
    double term = c.evaluate(1.0).real();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.exponents[i] != 0) term *= std::pow(values[i], m.exponents[i]);
    acc += term;
  }
  return acc;
}

}  // namespace

PositiveParam random_param(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PositiveParam p(n);
  for (auto& x : p.a) x = std::exp(u(rng));
  for (auto& x : p.b) x = std::exp(u(rng));
  for (auto& x : p.u) x = std::exp(u(rng));
  return p;
}

MinorMap initial_minors_classical(const Eigen::MatrixXd& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("initial minors need a square matrix");
  const int n = static_cast<int>(g.rows());
  MinorMap x;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < j)
        x[{i, j}] = minor_det(g, 0, j - i, i);
      else if (i > j)
        x[{i, j}] = minor_det(g, i - j, 0, j);
      else
        x[{i, i}] = minor_det(g, 0, 0, i);
    }
  return x;
}

PositiveParam params_from_minors(const MinorMap& x, int n) {
  auto get = [&](int i, int j) {
    auto it = x.find({i, j});
    if (it == x.end()) throw std::invalid_argument("missing minor x_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    return it->second;
  };
  auto diag = [&](int i) {
    const double v = i == 0 ? 1.0 : get(i, i);
    if (v == 0.0) throw std::domain_error("zero minor in a denominator");
    return v;
  };
  const Normalized upper = [&](int r, int c) { return get(r, c) / diag(r); };
  const Normalized lower = [&](int r, int c) { return get(c, r) / diag(r); };
  PositiveParam p(n);
  for (int k = 1; k <= n; ++k) p.u(k - 1) = diag(k) / diag(k - 1);
  for (int m = 1; m <= n - 1; ++m)
    for (int s = 1; s <= m; ++s) {
      p.a_at(m, s) = ratio_param(upper, m, s);
      // the transpose of U^- is U^+ with a_{m,s} replaced by b_{m,m-s+1}
      p.b_at(m, m - s + 1) = ratio_param(lower, m, s);
    }
  return p;
}

Eigen::VectorXd x_coordinates(const Eigen::MatrixXd& g) {
  const int n = static_cast<int>(g.rows());
  const MinorMap x = initial_minors_classical(g);
  Eigen::VectorXd out(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      double den = i == j ? (i == 1 ? 1.0 : x.at({i - 1, i - 1})) : x.at({std::min(i, j), std::min(i, j)});
      if (den == 0.0) throw std::domain_error("zero minor in a denominator");
      out((i - 1) * n + (j - 1)) = x.at({i, j}) / den;
    }
  return out;
}

PositiveParam params_from_x(const Eigen::VectorXd& xs, int n) {
  if (xs.size() != n * n) throw std::invalid_argument("expected N^2 coordinates");
  auto at = [&](int i, int j) { return xs((i - 1) * n + (j - 1)); };
  MinorMap x;
  double diag = 1.0;
  for (int i = 1; i <= n; ++i) {
    diag *= at(i, i);
    x[{i, i}] = diag;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) x[{i, j}] = at(i, j) * x.at({std::min(i, j), std::min(i, j)});
  return params_from_minors(x, n);
}

VerificationReport round_trip_check(int n, int samples, std::uint64_t seed) {
  VerificationReport report;
  report.suite = "round-trip";
  report.params = {{"N", n}, {"samples", samples}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  double worst = 0.0, worst_x = 0.0;
  for (int s = 0; s < samples; ++s) {
    const PositiveParam p = random_param(n, rng);
    const Eigen::MatrixXd g = lusztig_matrix(p);
    const PositiveParam r = params_from_minors(initial_minors_classical(g), n);
    const auto want = p.flat(), got = r.flat();
    for (Eigen::Index k = 0; k < want.size(); ++k) worst = std::max(worst, relative_error(got(k), want(k)));
    const PositiveParam rx = params_from_x(x_coordinates(g), n);
    const auto gotx = rx.flat();
    for (Eigen::Index k = 0; k < want.size(); ++k) worst_x = std::max(worst_x, relative_error(gotx(k), want(k)));
  }
  report.add_residual("minors", worst, 1e-10, "max relative parameter error");
  report.add_residual("x-coordinates", worst_x, 1e-10, "max relative parameter error");
  return report;
}

VerificationReport positivity_check(int n, int samples, std::uint64_t seed) {
  VerificationReport report;
  report.suite = "positivity";
  report.params = {{"N", n}, {"samples", samples}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  int bad = 0;
  double smallest = INFINITY;
  for (int s = 0; s < samples; ++s) {
    const MinorMap x = initial_minors_classical(lusztig_matrix(random_param(n, rng)));
    bool ok = true;
    for (const auto& [ij, v] : x) {
      ok = ok && v > 0;
      smallest = std::min(smallest, v);
    }
    if (!ok) ++bad;
  }
  CheckRecord r{"initial-minors", bad == 0, std::nullopt, {{"negative_samples", bad}, {"smallest", smallest}}, {}};
  report.add(std::move(r));
  return report;
}

VerificationReport q1_consistency_check(int n, int samples, std::uint64_t seed) {
  VerificationReport report;
  report.suite = "q1-consistency";
  report.params = {{"N", n}, {"samples", samples}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> lu(-1.0, 1.0);
  const auto upper = build_upper(n);
  const auto full = build_full(n);
  const auto upper_comm = commutative_copy(*upper.chart.signature());
  const auto full_comm = commutative_copy(*full.chart.signature());
  double worst_upper = 0.0, worst_full = 0.0;
  for (int s = 0; s < samples; ++s) {
    const PositiveParam p = random_param(n, rng);
    std::vector<double> v(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (auto& x : v) x = std::exp(lu(rng));

    // upper: diag(1, v) U^+
    std::vector<double> vals(upper.chart.generator_count());
    for (int m = 1; m <= n - 1; ++m) {
      vals[upper.chart.v(m)] = v[static_cast<std::size_t>(m - 1)];
      for (int k = 1; k <= m; ++k) vals[upper.chart.a(m, k)] = p.a_at(m, k);
    }
    Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
    for (int m = 1; m <= n - 1; ++m) d(m) = v[static_cast<std::size_t>(m - 1)];
    const Eigen::MatrixXd want_upper = d.asDiagonal() * upper_unipotent_classical(p);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        worst_upper = std::max(worst_upper, std::abs(evaluate_classical(upper.matrix.at(i, j), upper_comm, vals) -
                                                     want_upper(i - 1, j - 1)) /
                                                std::max(1.0, std::abs(want_upper(i - 1, j - 1))));

    // full: T_k = u_k v_{k-1}; the float parameters take the products
    std::vector<double> fv(full.chart.generator_count());
    std::vector<double> uu(static_cast<std::size_t>(n - 1));
    for (auto& x : uu) x = std::exp(lu(rng));
    PositiveParam q = p;
    for (int k = 1; k <= n; ++k)
      q.u(k - 1) = (k <= n - 1 ? uu[static_cast<std::size_t>(k - 1)] : 1.0) * (k >= 2 ? v[static_cast<std::size_t>(k - 2)] : 1.0);
    for (int m = 1; m <= n - 1; ++m) {
      fv[full.chart.v(m)] = v[static_cast<std::size_t>(m - 1)];
      fv[full.chart.u(m)] = uu[static_cast<std::size_t>(m - 1)];
      for (int k = 1; k <= m; ++k) {
        fv[full.chart.a(m, k)] = p.a_at(m, k);
        fv[full.chart.b(m, k)] = p.b_at(m, k);
      }
    }
    const Eigen::MatrixXd want_full = lusztig_matrix(q);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        worst_full = std::max(worst_full, std::abs(evaluate_classical(full.matrix.at(i, j), full_comm, fv) -
                                                   want_full(i - 1, j - 1)) /
                                              std::max(1.0, std::abs(want_full(i - 1, j - 1))));
  }
  report.add_residual("upper", worst_upper, 1e-12);
  report.add_residual("full", worst_full, 1e-12);
  return report;
}

namespace {

struct CoordinateSystem {
  std::string name;
  std::vector<std::string> labels;
  std::function<Eigen::VectorXd(const PositiveParam&)> coords;
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> matrix;
  std::function<double(const Eigen::VectorXd&)> claimed;
};

CoordinateSystem x_system(int n) {
  CoordinateSystem s;
  s.name = "x";
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) s.labels.push_back(index_name("X", i, j));
  s.coords = [](const PositiveParam& p) { return x_coordinates(lusztig_matrix(p)); };
  s.matrix = [n](const Eigen::VectorXd& x) { return lusztig_matrix(params_from_x(x, n)); };
  // prod_{i,j <= N-1} X_ij^{-1} times X_NN^{-1}; the X_{N,k}, X_{k,N} carry weight 1
  s.claimed = [n](const Eigen::VectorXd& x) {
    double w = 1.0 / x(n * n - 1);
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j) w /= x(i * n + j);
    return w;
  };
  return s;
}

CoordinateSystem abu_system(int n) {
  CoordinateSystem s;
  s.name = "abu";
  for (int m = 1; m <= n - 1; ++m)
    for (int k = 1; k <= m; ++k) s.labels.push_back(index_name("a", m, k));
  for (int m = 1; m <= n - 1; ++m)
    for (int k = 1; k <= m; ++k) s.labels.push_back(index_name("b", m, k));
  for (int k = 1; k <= n; ++k) s.labels.push_back("u_" + std::to_string(k));
  s.coords = [](const PositiveParam& p) { return p.flat(); };
  s.matrix = [n](const Eigen::VectorXd& x) { return lusztig_matrix(PositiveParam::from_flat(n, x)); };
  // prod du_k / u_k prod (a_ij b_ij)^{N-1-i}
  s.claimed = [n](const Eigen::VectorXd& x) {
    const PositiveParam p = PositiveParam::from_flat(n, x);
    double w = 1.0;
    for (int k = 0; k < n; ++k) w /= p.u(k);
    for (int m = 1; m <= n - 1; ++m)
      for (int k = 1; k <= m; ++k) w *= std::pow(p.a_at(m, k) * p.b_at(m, k), n - 1 - m);
    return w;
  };
  return s;
}

}  // namespace

VerificationReport haar_density_check(int n, int samples, std::uint64_t seed, double rel_step) {
  if (n < 1 || n > 4) throw std::invalid_argument("Haar density checks are limited to 1 <= N <= 4");
  if (samples < 1) throw std::invalid_argument("at least one sample is needed");
  VerificationReport report;
  report.suite = "haar";
  const double tolerance = n <= 3 ? 1e-5 : 1e-4;
  report.params = {{"N", n}, {"samples", samples}, {"seed", seed}, {"step", rel_step}, {"tolerance", tolerance}};

  for (const CoordinateSystem& sys : {x_system(n), abu_system(n)}) {
    std::mt19937_64 rng(seed);
    std::vector<double> ratios;
    std::vector<Eigen::VectorXd> points;
    int resampled = 0;
    while (static_cast<int>(ratios.size()) < samples) {
      const Eigen::VectorXd c = sys.coords(random_param(n, rng));
      auto g_of = [&](const Eigen::VectorXd& x) { return flatten(sys.matrix(x)); };
      const Eigen::MatrixXd jac = numeric_jacobian(g_of, c, rel_step);
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
      const auto& sv = svd.singularValues();
      if (sv.size() && !(sv(sv.size() - 1) > 1e-8 * sv(0))) {
        if (++resampled > 10 * samples) throw std::runtime_error("Jacobian is singular at every sample");
        continue;
      }
      const double det_g = sys.matrix(c).determinant();
      const double pulled = std::abs(jac.determinant()) * std::pow(std::abs(det_g), -n);
      ratios.push_back(pulled / sys.claimed(c));
      points.push_back(c);
    }
    double spread = 0.0;
    for (double r : ratios) spread = std::max(spread, std::abs(r / ratios[0] - 1.0));
    CheckRecord rec{sys.name + ".ratio", std::isfinite(spread) && spread <= tolerance, spread, Json::object(), {}};
    rec.data = {{"constant", ratios[0]}, {"resampled", resampled}};
    rec.detail = "max |ratio / ratio_0 - 1| over samples";
    report.add(std::move(rec));

    // diagnostic: log(ratio) = c + sum e_k log(coord_k) by least squares
    const auto dim = static_cast<Eigen::Index>(sys.labels.size());
    CheckRecord fit{sys.name + ".fitted-correction", false, std::nullopt, Json::object(), {}};
    if (static_cast<Eigen::Index>(ratios.size()) < dim + 2) {
      fit.pass = true;
      fit.detail = "too few samples for a fit";
    } else {
      Eigen::MatrixXd design(static_cast<Eigen::Index>(ratios.size()), dim + 1);
      Eigen::VectorXd rhs(design.rows());
      for (Eigen::Index s = 0; s < design.rows(); ++s) {
        design(s, 0) = 1.0;
        for (Eigen::Index k = 0; k < dim; ++k) design(s, k + 1) = std::log(points[static_cast<std::size_t>(s)](k));
        rhs(s) = std::log(ratios[static_cast<std::size_t>(s)]);
      }
      const Eigen::VectorXd e = design.colPivHouseholderQr().solve(rhs);
      Eigen::VectorXd rounded = e;
      for (Eigen::Index k = 1; k <= dim; ++k) rounded(k) = std::round(e(k));
      const double integrality = (e.tail(dim) - rounded.tail(dim)).cwiseAbs().maxCoeff();
      const Eigen::VectorXd resid = design.rightCols(dim) * rounded.tail(dim) - rhs;
      const double corrected = (resid.array() - resid(0)).abs().maxCoeff();
      Json exps = Json::object();
      std::ostringstream factor;
      for (Eigen::Index k = 0; k < dim; ++k) {
        const auto ek = static_cast<long long>(rounded(k + 1));
        if (ek == 0) continue;
        exps[sys.labels[static_cast<std::size_t>(k)]] = ek;
        factor << (factor.tellp() ? " " : "") << sys.labels[static_cast<std::size_t>(k)] << "^" << ek;
      }
      fit.residual = corrected;
      fit.pass = integrality < 1e-3 && corrected < tolerance;
      fit.data = {{"exponents", exps}, {"integrality", integrality}, {"corrected_log_spread", corrected}};
      fit.detail = exps.empty() ? "ratio is constant" : "ratio ~ " + factor.str();
    }
    report.add(std::move(fit));
  }
  return report;
}

VerificationReport classical_suite(int n, int samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  VerificationReport report;
  report.suite = "classical";
  report.params = {{"N", n}, {"samples", samples}, {"seed", seed}};
  report.absorb(round_trip_check(n, samples, seed));
  report.absorb(positivity_check(n, samples, seed));
  report.absorb(q1_consistency_check(n, std::min(samples, 20), seed));
  if (n <= 4) report.absorb(haar_density_check(n, samples, seed));
  return report;
}

}  // namespace glq
