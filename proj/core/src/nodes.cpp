// Node search for a parametrized curve. Two distinct parameters s, t map to
// the same point iff every 2x2 minor F_ij(s, t) = x_i(s) x_j(t) - x_j(s) x_i(t)
// vanishes. Each F_ij is divisible by (s - t); on an unramified curve the
// quotients G_ij have no zeros on the diagonal, so their common zeros are
// exactly the nodes with both parameters affine.

#include <oscroll/curve_ops.hpp>

#include <random>

namespace oscroll::curves {

namespace {

// Polynomial in t with coefficients in Q[s]; index = power of t.
using BiPoly = std::vector<UniPoly>;

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BiPoly divided_minor(const UniPoly& xi, const UniPoly& xj, std::size_t d) {
  BiPoly g(d, UniPoly{});
  for (std::size_t a = 0; a <= d; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const Rat cab = xi.coeff(a) * xj.coeff(b) - xj.coeff(a) * xi.coeff(b);
      if (cab == 0) continue;
      // (s^a t^b - s^b t^a) / (s - t) = sum_i s^(b+i) t^(a-1-i)
      for (std::size_t i = 0; i + b < a; ++i) g[a - 1 - i] += UniPoly::monomial(cab, b + i);
    }
  }
  trim(g);
  return g;
}

BiPoly combine(const std::vector<BiPoly>& gs, const std::vector<long>& weights) {
  BiPoly out;
  for (std::size_t k = 0; k < gs.size(); ++k) {
    if (gs[k].size() > out.size()) out.resize(gs[k].size());
    for (std::size_t i = 0; i < gs[k].size(); ++i) out[i] += gs[k][i] * Rat(weights[k]);
  }
  trim(out);
  return out;
}

// Sylvester resultant in t over Q[s].
UniPoly resultant_t(const BiPoly& p, const BiPoly& q) {
  if (p.empty() || q.empty()) return {};
  const std::size_t m = p.size() - 1;
  const std::size_t n = q.size() - 1;
  if (m == 0 && n == 0) return UniPoly::constant(Rat(1));
  if (m == 0 || n == 0) {
    const UniPoly& base = m == 0 ? p[0] : q[0];
    UniPoly r = UniPoly::constant(Rat(1));
    for (std::size_t i = 0; i < (m == 0 ? n : m); ++i) r *= base;
    return r;
  }
  PolyMatrix s(m + n, m + n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s(i, i + j) = p[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s(n + i, i + j) = q[n - j];
  return exact::determinant(s);
}

UniPoly specialize_s(const BiPoly& p, const Rat& s0) {
  std::vector<Rat> c;
  for (const auto& coeff : p) c.push_back(coeff(s0));
  return UniPoly(std::move(c));
}

}  // namespace

Check injectivity(const RationalCurve& c, std::optional<NodePair>* node) {
  if (c.degree() > kNodeCheckMaxDegree) return Check::not_checked;
  const std::size_t d = static_cast<std::size_t>(c.degree());
  const auto x = c.chart_polys(Chart::affine);

  // Pairs (t, infinity): x(t) proportional to the top coefficients.
  {
    std::vector<Rat> top;
    for (const auto& f : c.forms()) top.push_back(f.coeff(f.degree()));
    UniPoly g;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) g = exact::gcd(g, x[i] * top[j] - x[j] * top[i]);
    if (g.is_zero() || !g.is_constant()) {
      if (node && !g.is_zero()) {
        const auto roots = exact::rational_roots(g);
        if (!roots.empty()) *node = NodePair{CurvePoint::affine(roots.front()), CurvePoint::infinity()};
      }
      return Check::fail;
    }
  }

  std::vector<BiPoly> gs;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      BiPoly g = divided_minor(x[i], x[j], d);
      if (!g.empty()) gs.push_back(std::move(g));
    }
  if (gs.empty()) return Check::fail;
  if (gs.size() == 1) return gs[0].size() == 1 && gs[0][0].is_constant() ? Check::pass : Check::fail;

  // Random combinations cut the common zero set down to finitely many
  // s-values. A constant gcd of the resultants certifies no common zero. A
  // nonconstant one is refined over several rounds so that coincidences
  // between different t-roots drop out.
  std::mt19937_64 rng(0x5eed0dd5ULL);
  std::uniform_int_distribution<long> coef(-9, 9);
  auto draw = [&] {
    std::vector<long> w(gs.size());
    for (auto& v : w) v = coef(rng);
    return combine(gs, w);
  };
  UniPoly acc;
  for (int round = 0; round < 3; ++round) {
    const BiPoly g1 = draw();
    for (int k = 0; k < 2; ++k) acc = exact::gcd(acc, resultant_t(g1, draw()));
    if (!acc.is_zero() && acc.is_constant()) return Check::pass;
  }

  if (node && !acc.is_zero()) {
    for (const auto& s0 : exact::rational_roots(acc)) {
      UniPoly h;
      for (const auto& g : gs) h = exact::gcd(h, specialize_s(g, s0));
      if (h.is_zero() || h.is_constant()) continue;
      for (const auto& t0 : exact::rational_roots(h)) {
        if (t0 == s0) continue;
        *node = NodePair{CurvePoint::affine(std::min(s0, t0)), CurvePoint::affine(std::max(s0, t0))};
        return Check::fail;
      }
    }
  }
  return Check::fail;
}

}  // namespace oscroll::curves
