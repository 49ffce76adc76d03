#include "glq/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "glq/symplectic.hpp"

namespace glq {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr Eigen::Index kMaxDim = 4096;

int mod(long long x, int d) {
  const long long r = x % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

}  // namespace

Complex q_value(int d) { return std::polar(1.0, kPi / d); }

ClockShiftRep build_rep(const SignaturePtr& sig, int d, const std::vector<double>& central,
                        const std::vector<double>& scales) {
  if (d < 2) throw std::invalid_argument("dimension d must be at least 2");
  const auto red = symplectic_reduce(sig->commutation());
  for (auto div : red.divisors)
    if (std::gcd(div, static_cast<long long>(d)) != 1)
      throw std::invalid_argument("elementary divisor " + std::to_string(div) + " is not coprime to d");
  const std::size_t n = sig->size();
  const std::size_t r = red.pairs();
  const std::size_t k = red.kernel_dim();
  std::vector<double> lambda = central.empty() ? std::vector<double>(k, 1.0) : central;
  std::vector<double> scale = scales.empty() ? std::vector<double>(n, 1.0) : scales;
  if (lambda.size() != k) throw std::invalid_argument("one central scalar per kernel direction expected");
  if (scale.size() != n) throw std::invalid_argument("one scale per generator expected");
  for (double x : lambda)
    if (!(x > 0)) throw std::invalid_argument("central scalars must be positive");
  for (double x : scale)
    if (!(x > 0)) throw std::invalid_argument("generator scales must be positive");

  ClockShiftRep rep;
  rep.d = d;
  rep.signature = sig;
  rep.q = q_value(d);
  for (std::size_t t = 0; t < r; ++t) {
    rep.dim *= d;
    if (rep.dim > kMaxDim) throw std::invalid_argument("representation dimension d^pairs is too large");
  }
  const Complex omega = rep.q * rep.q;

  for (std::size_t i = 0; i < n; ++i) {
    const auto e = red.s_inverse.row(static_cast<Eigen::Index>(i));
    double s = scale[i];
    for (std::size_t j = 0; j < k; ++j) s *= std::pow(lambda[j], static_cast<double>(e(static_cast<Eigen::Index>(2 * r + j))));
    long long balance = 0;
    for (std::size_t t = 0; t < r; ++t) balance += e(2 * t) * e(2 * t + 1) * red.divisors[t];
    const Complex prefactor = s * std::pow(rep.q, static_cast<double>(-mod(balance, 2 * d)));

    CMatrix m = CMatrix::Zero(rep.dim, rep.dim);
    for (Eigen::Index col = 0; col < rep.dim; ++col) {
      // mixed radix digits, pair 0 least significant
      Eigen::Index rest = col, row = 0, place = 1;
      long long phase = 0;
      for (std::size_t t = 0; t < r; ++t) {
        const int digit = static_cast<int>(rest % d);
        rest /= d;
        const long long a = e(2 * t), b = e(2 * t + 1) * red.divisors[t];
        const int shifted = mod(digit + b, d);
        phase += a * shifted;
        row += shifted * place;
        place *= d;
      }
      m(row, col) = prefactor * std::pow(omega, static_cast<double>(mod(phase, d)));
    }
    rep.inverses.push_back(m.adjoint() / (s * s));
    rep.generators.push_back(std::move(m));
  }
  return rep;
}

ClockShiftRep build_random_rep(const SignaturePtr& sig, int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto kernel = sig->size() - static_cast<std::size_t>(rational_rank(sig->commutation()));
  std::vector<double> central(kernel), scales(sig->size());
  for (auto& x : central) x = std::exp(u(rng));
  for (auto& x : scales) x = std::exp(u(rng));
  return build_rep(sig, d, central, scales);
}

double relative_residual(const CMatrix& a, const CMatrix& b) {
  const double den = std::max(a.norm(), b.norm());
  if (den == 0.0) return 0.0;
  return (a - b).norm() / den;
}

double rep_relation_residual(const ClockShiftRep& rep) {
  double worst = 0.0;
  const auto& c = rep.signature->commutation();
  for (std::size_t i = 0; i < rep.generators.size(); ++i)
    for (std::size_t j = i + 1; j < rep.generators.size(); ++j) {
      const CMatrix xy = rep[i] * rep[j];
      const CMatrix yx = rep[j] * rep[i];
      const Complex f = std::pow(rep.q, static_cast<double>(2 * c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
      worst = std::max(worst, relative_residual(xy, f * yx));
    }
  return worst;
}

CMatrix evaluate(const Polynomial& p, const ClockShiftRep& rep) {
  if (p.signature()->size() != rep.generators.size()) throw std::invalid_argument("polynomial and representation differ");
  CMatrix out = CMatrix::Zero(rep.dim, rep.dim);
  for (const auto& [m, c] : p.terms()) {
    CMatrix acc = CMatrix::Identity(rep.dim, rep.dim);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const int e = m.exponents[i];
      const CMatrix& g = e > 0 ? rep.generators[i] : rep.inverses[i];
      for (int t = 0; t < std::abs(e); ++t) acc = acc * g;
    }
    out += c.evaluate(rep.q) * acc;
  }
  return out;
}

CommutationMeasurement measure_commutation(const CMatrix& x, const CMatrix& y, int d) {
  const CMatrix xy = x * y;
  const CMatrix yx = y * x;
  const Complex q = q_value(d);
  CommutationMeasurement out;
  const double scale = x.norm() * y.norm();
  out.ill_conditioned = !(xy.norm() > 1e-12 * scale) || !(yx.norm() > 1e-12 * scale);
  double best = INFINITY;
  for (int k = -(d - 1) / 2; k <= d / 2; ++k) {
    const double res = (xy - std::pow(q, 2.0 * k) * yx).norm() / std::max(xy.norm(), 1e-300);
    if (res < best) {
      best = res;
      out.k = k;
    }
  }
  out.residual = best;
  const Complex lambda = (yx.adjoint() * xy).trace() / std::max(yx.squaredNorm(), 1e-300);
  out.continuous = std::arg(lambda) * d / (2 * kPi);
  double dev = std::fmod(std::abs(out.continuous - out.k), static_cast<double>(d));
  out.deviation = std::min(dev, d - dev);
  return out;
}

NumericMatrix::NumericMatrix(int size, Eigen::Index block) : n(size), dim(block) {
  entries.assign(static_cast<std::size_t>(size * size), CMatrix::Zero(block, block));
}

NumericMatrix evaluate_matrix(const OperatorMatrix& m, const ClockShiftRep& rep) {
  NumericMatrix out(m.rows(), rep.dim);
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j) out.at(i, j) = evaluate(m.at(i, j), rep);
  return out;
}

CMatrix numeric_quantum_determinant(const NumericMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("row and column lists differ in length");
  const std::size_t k = rows.size();
  std::vector<int> sorted_cols = cols;
  std::sort(sorted_cols.begin(), sorted_cols.end());
  std::map<unsigned, CMatrix> memo;
  auto rec = [&](auto&& self, std::size_t depth, unsigned mask) -> CMatrix {
    if (depth == k) return CMatrix::Identity(m.dim, m.dim);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    CMatrix acc = CMatrix::Zero(m.dim, m.dim);
    int before = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if (!(mask & (1u << t))) continue;
      const CMatrix term = m.at(rows[depth], sorted_cols[t]) * self(self, depth + 1, mask & ~(1u << t));
      if (before % 2 == 0)
        acc += term;
      else
        acc -= term;
      ++before;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  int inv = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (rows[a] > rows[b]) ++inv;
  CMatrix det = rec(rec, 0, (1u << k) - 1);
  return inv % 2 == 0 ? det : CMatrix(-det);
}

double numeric_glq2_residual(const NumericMatrix& m, Complex q) {
  const Complex q2 = q * q;
  double worst = 0.0;
  for (int i = 1; i <= m.n; ++i)
    for (int ip = i + 1; ip <= m.n; ++ip)
      for (int j = 1; j <= m.n; ++j)
        for (int jp = j + 1; jp <= m.n; ++jp) {
          const CMatrix &a = m.at(i, j), &b = m.at(i, jp), &c = m.at(ip, j), &d = m.at(ip, jp);
          worst = std::max(worst, relative_residual(a * b, b * a));
          worst = std::max(worst, relative_residual(c * d, d * c));
          worst = std::max(worst, relative_residual(a * c, q2 * (c * a)));
          worst = std::max(worst, relative_residual(b * d, q2 * (d * b)));
          worst = std::max(worst, relative_residual(b * c, q2 * (c * b)));
          worst = std::max(worst, relative_residual(a * d - b * c, d * a - c * b));
        }
  return worst;
}

}  // namespace glq
