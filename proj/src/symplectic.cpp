#include "glq/symplectic.hpp"

#include <cstdlib>
#include <stdexcept>

namespace glq {

namespace {

long long add_ll(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in symplectic reduction");
  return r;
}

long long mul_ll(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in symplectic reduction");
  return r;
}

// Congruence by elementary matrices, with S and S^{-1} tracked alongside.
struct Reducer {
  IntMatrix a, s, si;

  void swap(Eigen::Index x, Eigen::Index y) {
    if (x == y) return;
    a.row(x).swap(a.row(y));
    a.col(x).swap(a.col(y));
    s.row(x).swap(s.row(y));
    si.col(x).swap(si.col(y));
  }

  // index t += c * index s
  void add(Eigen::Index t, Eigen::Index from, long long c) {
    if (c == 0) return;
    const auto n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) a(t, k) = add_ll(a(t, k), mul_ll(c, a(from, k)));
    for (Eigen::Index k = 0; k < n; ++k) a(k, t) = add_ll(a(k, t), mul_ll(c, a(k, from)));
    for (Eigen::Index k = 0; k < n; ++k) s(t, k) = add_ll(s(t, k), mul_ll(c, s(from, k)));
    for (Eigen::Index k = 0; k < n; ++k) si(k, from) = add_ll(si(k, from), mul_ll(-c, si(k, t)));
  }
};

long long floor_div(long long x, long long d) {
  long long q = x / d;
  if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
  return q;
}

}  // namespace

IntMatrix SymplecticReduction::canonical_form() const {
  const auto n = s.rows();
  IntMatrix f = IntMatrix::Zero(n, n);
  for (std::size_t t = 0; t < divisors.size(); ++t) {
    const auto k = static_cast<Eigen::Index>(2 * t);
    f(k, k + 1) = divisors[t];
    f(k + 1, k) = -divisors[t];
  }
  return f;
}

bool SymplecticReduction::all_unit() const {
  for (auto d : divisors)
    if (d != 1) return false;
  return true;
}

SymplecticReduction symplectic_reduce(const IntMatrix& c) {
  if (c.rows() != c.cols()) throw std::invalid_argument("commutation matrix must be square");
  if (c != -c.transpose()) throw std::invalid_argument("commutation matrix must be antisymmetric");
  const auto n = c.rows();
  Reducer r{c, IntMatrix::Identity(n, n), IntMatrix::Identity(n, n)};
  SymplecticReduction out;

  Eigen::Index k = 0;
  while (k + 1 < n) {
    // smallest nonzero |entry| in the trailing block
    Eigen::Index pi = -1, pj = -1;
    long long best = 0;
    for (Eigen::Index i = k; i < n; ++i)
      for (Eigen::Index j = k; j < n; ++j)
        if (r.a(i, j) != 0 && (best == 0 || std::llabs(r.a(i, j)) < best)) {
          best = std::llabs(r.a(i, j));
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    r.swap(k, pi);
    if (pj == k) pj = pi;
    r.swap(k + 1, pj);
    if (r.a(k, k + 1) < 0) r.swap(k, k + 1);
    const long long d = r.a(k, k + 1);

    bool restart = false;
    for (Eigen::Index l = k + 2; l < n && !restart; ++l) {
      // A(k,l) += c*d via index l += c * index (k+1)
      r.add(l, k + 1, -floor_div(r.a(k, l), d));
      // A(k+1,l) += c*(-d) via index l += c * index k
      r.add(l, k, floor_div(r.a(k + 1, l), d));
      if (r.a(k, l) != 0 || r.a(k + 1, l) != 0) restart = true;
    }
    if (restart) continue;

    // every trailing entry must be a multiple of d, else fold it into row k
    bool clean = true;
    for (Eigen::Index i = k + 2; i < n && clean; ++i)
      for (Eigen::Index j = k + 2; j < n && clean; ++j)
        if (r.a(i, j) % d != 0) {
          r.add(k, i, 1);
          clean = false;
        }
    if (!clean) continue;

    out.divisors.push_back(d);
    k += 2;
  }
  out.s = r.s;
  out.s_inverse = r.si;
  for (Eigen::Index i = static_cast<Eigen::Index>(2 * out.divisors.size()); i < n; ++i)
    out.kernel_basis.push_back(out.s.row(i).transpose());
  return out;
}

bool verify_reduction(const IntMatrix& c, const SymplecticReduction& r) {
  const auto n = c.rows();
  if (r.s.rows() != n || r.s_inverse.rows() != n) return false;
  if (r.s * r.s_inverse != IntMatrix::Identity(n, n)) return false;
  if (r.s * c * r.s.transpose() != r.canonical_form()) return false;
  for (std::size_t t = 1; t < r.divisors.size(); ++t)
    if (r.divisors[t] % r.divisors[t - 1] != 0) return false;
  return true;
}

int rational_rank(const IntMatrix& m) {
  const auto rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(rows), std::vector<BigInt>(static_cast<std::size_t>(cols)));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a[i][j] = m(i, j);
  BigInt prev = 1;
  int rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = rank; i < rows; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

CommutationRank commutation_rank(const AlgebraSignature& sig) {
  CommutationRank out;
  out.rank = rational_rank(sig.commutation());
  out.minimal_tori = out.rank / 2;
  out.kernel_dim = static_cast<int>(sig.size()) - out.rank;
  return out;
}

}  // namespace glq
