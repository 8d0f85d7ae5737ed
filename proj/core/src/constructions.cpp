#include <oscroll/constructions.hpp>
#include <oscroll/errors.hpp>

#include "sampling.hpp"

#include <algorithm>
#include <set>

namespace oscroll::constructions {

using curves::BinForm;
using curves::CurvePoint;
using exact::QMatrix;
using exact::Rat;

RationalCurve rational_normal_curve(int d) {
  if (d < 1) throw InputError("rational_normal_curve: degree must be at least 1");
  std::vector<BinForm> forms;
  for (int j = 0; j <= d; ++j) forms.push_back(BinForm::monomial(d, j));
  std::string label = d == 1 ? "line" : d == 2 ? "conic" : "rnc" + std::to_string(d);
  return RationalCurve(std::move(forms), std::move(label));
}

RationalCurve monomial_curve(std::vector<int> exponents, int degree) {
  if (exponents.size() < 2) throw InputError("monomial_curve: need at least two exponents");
  std::sort(exponents.begin(), exponents.end());
  if (std::adjacent_find(exponents.begin(), exponents.end()) != exponents.end())
    throw InputError("monomial_curve: exponents must be distinct");
  if (exponents.front() != 0 || exponents.back() != degree)
    throw InputError("monomial_curve: exponents must include 0 and the degree");
  std::vector<BinForm> forms;
  std::string label = "mono(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    forms.push_back(BinForm::monomial(degree, exponents[i]));
    label += (i ? "," : "") + std::to_string(exponents[i]);
  }
  RationalCurve c(std::move(forms), label + ")");
  curves::require_embedding(c);
  return c;
}

DecomposableScroll rational_normal_scroll(const std::vector<int>& rs) {
  std::vector<RationalCurve> cs;
  for (int r : rs) cs.push_back(rational_normal_curve(r));
  return scrolls::build_scroll(std::move(cs));
}

LinearSubspace center_off_developable(const RationalCurve& c, std::size_t m, std::size_t center_dim,
                                      std::uint64_t seed) {
  constexpr int kMaxAttempts = 50;
  constexpr int kProbes = 20;
  const std::size_t r = c.ambient_dim();
  detail::Rng rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    QMatrix rows(center_dim + 1, r + 1);
    for (std::size_t i = 0; i <= center_dim; ++i)
      for (std::size_t j = 0; j <= r; ++j) rows(i, j) = Rat(detail::uniform_int(rng, -20, 20));
    const LinearSubspace t(r, rows);
    if (t.rank() != center_dim + 1) continue;
    if (curves::osculating_meets(c, m, t).mode != curves::LocusMode::empty) continue;
    // Independent spot check: the stacked matrix has full rank at random
    // parameters.
    bool ok = true;
    for (int probe = 0; probe < kProbes && ok; ++probe) {
      QMatrix stacked = curves::jet_matrix(c, m, CurvePoint::affine(detail::random_rat(rng, 50, 9)));
      stacked.append_rows(t.basis());
      ok = exact::rank_exact(stacked) == m + 1 + t.rank();
    }
    if (ok) return t;
  }
  throw MathError("center_off_developable: no admissible center after retries");
}

std::pair<LinearSubspace, Rat> point_on_developable(const RationalCurve& c, std::size_t m, std::uint64_t seed) {
  detail::Rng rng(seed);
  const Rat t_star = detail::random_rat(rng, 5, 3);
  const QMatrix jets = curves::jet_matrix(c, m, CurvePoint::affine(t_star));
  std::vector<Rat> q(c.ambient_dim() + 1, Rat(0));
  for (std::size_t j = 0; j <= m; ++j) {
    const Rat a = j == m ? detail::random_nonzero_rat(rng, 9, 3) : detail::random_rat(rng, 9, 3);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += a * jets(j, i);
  }
  return {LinearSubspace::point(q), t_star};
}

}  // namespace oscroll::constructions
