#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination routines.

#include <oscroll/scroll.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using oscroll::exact::QMatrix;
using oscroll::exact::Rat;
using oscroll::exact::UniPoly;

inline Rat rat(long n, long d = 1) {
  Rat q(n, d);
  q.canonicalize();
  return q;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
  Rat rational(long nb = 20, long db = 6) { return rat(integer(-nb, nb), integer(1, db)); }
  Rat nonzero(long nb = 20, long db = 6) {
    Rat q;
    do q = rational(nb, db);
    while (q == 0);
    return q;
  }
};

// Textbook Gaussian elimination on a copy.
inline std::size_t gauss_rank(QMatrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rat f = m(i, c) / m(rank, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

// Leibniz expansion; only for small matrices.
template <typename T>
T leibniz_det(const oscroll::exact::Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total{};
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    T term{Rat(inversions % 2 ? -1 : 1)};
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Largest r with a nonzero r x r minor, by exhaustive search.
inline std::size_t minor_rank(const QMatrix& m) {
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r) {
    std::vector<bool> rs(m.rows(), false), cs(m.cols(), false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(r), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(r), true);
      do {
        std::vector<std::size_t> ri, ci;
        for (std::size_t i = 0; i < rs.size(); ++i)
          if (rs[i]) ri.push_back(i);
        for (std::size_t j = 0; j < cs.size(); ++j)
          if (cs[j]) ci.push_back(j);
        if (leibniz_det(m.submatrix(ri, ci)) != 0) return r;
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
  }
  return 0;
}

inline Rat eval(const UniPoly& p, const Rat& t) {
  Rat acc = 0, pw = 1;
  for (const auto& c : p.coefficients()) {
    acc += c * pw;
    pw *= t;
  }
  return acc;
}

// j-th derivative of p at t, from the coefficient list.
inline Rat derivative_at(const UniPoly& p, std::size_t j, const Rat& t) {
  Rat acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t e = j; e < c.size(); ++e) {
    Rat falling = 1;
    for (std::size_t q = 0; q < j; ++q) falling *= static_cast<long>(e - q);
    Rat pw = 1;
    for (std::size_t q = 0; q < e - j; ++q) pw *= t;
    acc += c[e] * falling * pw;
  }
  return acc;
}

// Osculating dimension of a curve at an affine parameter: span of the
// derivatives of order <= k of the affine coordinate polynomials.
inline std::size_t curve_osc_dim(const oscroll::curves::RationalCurve& c, std::size_t k, const Rat& t) {
  const auto polys = c.chart_polys(oscroll::curves::Chart::affine);
  QMatrix m(k + 1, polys.size());
  for (std::size_t j = 0; j <= k; ++j)
    for (std::size_t i = 0; i < polys.size(); ++i) m(j, i) = derivative_at(polys[i], j, t);
  return gauss_rank(m) - 1;
}

// Osculating dimension of the scroll at x = sum v_i p_i (affine base t) from
// the parametrisation X(t, v) = sum_i v_i C_i(t): partial derivatives of
// order <= k. X is linear in v, so the only nonzero mixed partials are
// d/dv_j d^a/dt^a X = C_j^(a) (a <= k-1) and d^a/dt^a X = sum v_i C_i^(a).
inline std::size_t scroll_osc_dim(const oscroll::scrolls::DecomposableScroll& sc, std::size_t k, const Rat& t,
                                  const std::vector<Rat>& v) {
  const std::size_t big_n = sc.ambient_dim();
  std::vector<std::vector<UniPoly>> polys;
  for (const auto& c : sc.curves()) polys.push_back(c.chart_polys(oscroll::curves::Chart::affine));
  QMatrix m(0, big_n + 1);
  for (std::size_t a = 0; a <= k; ++a) {
    std::vector<Rat> row(big_n + 1, Rat(0));
    for (std::size_t i = 0; i < sc.n(); ++i)
      for (std::size_t q = 0; q < polys[i].size(); ++q) row[sc.offset(i) + q] = v[i] * derivative_at(polys[i][q], a, t);
    m.append_row(row);
  }
  // The pivot direction (largest nonzero v) is fixed to 1 in the chart, so
  // only the other v_j are local coordinates.
  std::size_t pivot = v.size();
  while (pivot-- > 0 && v[pivot] == 0) {
  }
  for (std::size_t j = 0; j < sc.n(); ++j) {
    if (j == pivot) continue;
    for (std::size_t a = 0; a + 1 <= k; ++a) {
      std::vector<Rat> row(big_n + 1, Rat(0));
      for (std::size_t q = 0; q < polys[j].size(); ++q) row[sc.offset(j) + q] = derivative_at(polys[j][q], a, t);
      m.append_row(row);
    }
  }
  return gauss_rank(m) - 1;
}

inline QMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, std::size_t target_rank) {
  // Product of random r x target and target x c factors, so rank <= target.
  QMatrix a(r, target_rank), b(target_rank, c), out(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < target_rank; ++j) a(i, j) = rng.rational(5, 3);
  for (std::size_t i = 0; i < target_rank; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = rng.rational(5, 3);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      for (std::size_t q = 0; q < target_rank; ++q) out(i, j) += a(i, q) * b(q, j);
  return out;
}

}  // namespace oracle
