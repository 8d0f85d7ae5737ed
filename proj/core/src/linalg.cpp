#include <oscroll/linalg.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oscroll::exact {

namespace {

using IntMatrix = Matrix<BigInt>;

// Scale every row by the lcm of its denominators. Row scaling changes
// neither rank nor which minors vanish.
IntMatrix clear_denominators(const QMatrix& m, BigInt* det_scale = nullptr) {
  IntMatrix out(m.rows(), m.cols());
  if (det_scale) *det_scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    const BigInt l = denominator_lcm(row.data(), row.data() + row.size());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = row[j].get_num() * (l / row[j].get_den());
    if (det_scale) *det_scale *= l;
  }
  return out;
}

}  // namespace

Elimination bareiss_eliminate(const QMatrix& m) {
  IntMatrix a = clear_denominators(m);
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> orig(rows);
  std::iota(orig.begin(), orig.end(), 0);
  Elimination out;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      std::swap(orig[p], orig[r]);
    }
    const BigInt piv = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt lead = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt v = piv * a(i, j) - lead * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    prev = piv;
    out.pivot_rows.push_back(orig[r]);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank_exact(const QMatrix& m) { return bareiss_eliminate(m).rank; }

Rat determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  BigInt scale;
  IntMatrix a = clear_denominators(m, &scale);
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Rat d(BigInt(sign * a(n - 1, n - 1)), scale);
  d.canonicalize();
  return d;
}

UniPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return UniPoly::constant(Rat(1));
  PolyMatrix a = m;
  UniPoly prev = UniPoly::constant(Rat(1));
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    // Prefer the lowest-degree nonzero pivot to keep intermediate degrees small.
    for (std::size_t i = k; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      if (a(p, k).is_zero() || a(i, k).degree() < a(p, k).degree()) p = i;
    }
    if (a(p, k).is_zero()) return {};
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_quotient(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
      a(i, k) = UniPoly{};
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

QMatrix rref(const QMatrix& m) {
  QMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rat inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  QMatrix out(0, cols);
  for (std::size_t i = 0; i < r; ++i) out.append_row(a.row(i));
  return out;
}

QMatrix nullspace(const QMatrix& m) {
  const QMatrix e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t i = 0; i < e.rows(); ++i) {
    std::size_t c = 0;
    while (e(i, c) == 0) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  QMatrix out(0, cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows(); ++i) v[pivot_of_row[i]] = -e(i, f);
    out.append_row(v);
  }
  return out;
}

QMatrix evaluate(const PolyMatrix& m, const Rat& t) {
  return m.map([&](const UniPoly& p) { return p(t); });
}

bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& f) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

UniPoly minors_gcd(const PolyMatrix& m, std::size_t size) {
  if (size > std::min(m.rows(), m.cols())) throw std::invalid_argument("minors_gcd: size exceeds matrix dimensions");
  if (size == 0) return UniPoly::constant(Rat(1));
  UniPoly g;
  for_each_combination(m.rows(), size, [&](std::span<const std::size_t> rows) {
    return for_each_combination(m.cols(), size, [&](std::span<const std::size_t> cols) {
      const UniPoly d = determinant(m.submatrix(rows, cols));
      if (d.is_zero()) return true;
      g = gcd(g, d);
      return !g.is_constant();
    });
  });
  return g;
}

namespace {

// 0, 1, -1, 2, -2, ...
Rat grid_value(std::size_t i) {
  const long h = static_cast<long>((i + 1) / 2);
  return Rat(i % 2 == 1 ? h : -h);
}

}  // namespace

CertifiedRank certified_generic_rank(std::size_t rows, std::size_t cols,
                                     std::span<const std::size_t> degree_bounds,
                                     const std::function<QMatrix(std::span<const Rat>)>& eval) {
  const std::size_t full = std::min(rows, cols);
  const std::size_t nvars = degree_bounds.size();
  CertifiedRank best;
  auto consider = [&](std::vector<Rat> point) {
    const QMatrix a = eval(point);
    ++best.evaluations;
    Elimination e = bareiss_eliminate(a);
    if (best.evaluations == 1 || e.rank > best.rank) {
      best.rank = e.rank;
      best.witness_point = std::move(point);
      best.witness_rows = std::move(e.pivot_rows);
      best.witness_cols = std::move(e.pivot_cols);
    }
    return best.rank == full;
  };

  // An off-grid probe first: at a random-looking point the rank is usually
  // already maximal, and full rank needs no further certificate.
  std::vector<Rat> probe(nvars);
  for (std::size_t v = 0; v < nvars; ++v) probe[v] = Rat(static_cast<long>(37 + 11 * v), static_cast<long>(13 + 4 * v));
  for (auto& q : probe) q.canonicalize();
  if (consider(probe)) {
    best.full_rank_shortcut = true;
    return best;
  }

  std::vector<std::size_t> counter(nvars, 0);
  while (true) {
    std::vector<Rat> point(nvars);
    for (std::size_t v = 0; v < nvars; ++v) point[v] = grid_value(counter[v]);
    if (consider(std::move(point))) {
      best.full_rank_shortcut = true;
      return best;
    }
    std::size_t v = 0;
    while (v < nvars && ++counter[v] > degree_bounds[v]) counter[v++] = 0;
    if (v == nvars) break;
  }
  return best;
}

GenericRank generic_rank(const PolyMatrix& m) {
  const std::size_t full = std::min(m.rows(), m.cols());
  auto top_sum = [full](std::vector<std::size_t> d) {
    std::sort(d.rbegin(), d.rend());
    std::size_t s = 0;
    for (std::size_t i = 0; i < full && i < d.size(); ++i) s += d[i];
    return s;
  };
  std::vector<std::size_t> col_deg(m.cols(), 0), row_deg(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const int d = m(i, j).degree();
      if (d > 0) {
        col_deg[j] = std::max(col_deg[j], static_cast<std::size_t>(d));
        row_deg[i] = std::max(row_deg[i], static_cast<std::size_t>(d));
      }
    }
  const std::size_t bound = std::min(top_sum(col_deg), top_sum(row_deg));
  const std::size_t bounds[1] = {bound};
  const CertifiedRank cr =
      certified_generic_rank(m.rows(), m.cols(), bounds, [&](std::span<const Rat> p) { return evaluate(m, p[0]); });
  GenericRank out;
  out.rank = cr.rank;
  out.witness_rows = cr.witness_rows;
  out.witness_cols = cr.witness_cols;
  out.certificate_points = cr.full_rank_shortcut ? 0 : bound + 1;
  out.witness_determinant = determinant(m.submatrix(out.witness_rows, out.witness_cols));
  if (out.rank > 0 && out.witness_determinant.is_zero())
    throw std::logic_error("generic_rank: witness minor vanished identically");
  return out;
}

}  // namespace oscroll::exact
