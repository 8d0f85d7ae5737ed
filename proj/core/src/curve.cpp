#include <oscroll/curve.hpp>

#include <stdexcept>

namespace oscroll::curves {

CurvePoint CurvePoint::in_chart(Chart chart, const Rat& value) {
  if (chart == Chart::affine) return affine(value);
  if (value == 0) return infinity();
  return affine(1 / value);
}

std::pair<Rat, Rat> CurvePoint::homogeneous() const {
  if (chart == Chart::affine) return {Rat(1), param};
  return {param, Rat(1)};
}

std::string to_string(const CurvePoint& p) {
  if (p.chart == Chart::infinity) return "inf";
  return "t=" + exact::to_string(p.param);
}

RationalCurve::RationalCurve(std::vector<BinForm> forms, std::string label)
    : forms_(std::move(forms)), label_(std::move(label)) {
  if (forms_.size() < 2) throw std::invalid_argument("RationalCurve: need at least two forms");
  const int d = forms_.front().degree();
  if (d < 1) throw std::invalid_argument("RationalCurve: form degree must be at least 1");
  for (const auto& f : forms_)
    if (f.degree() != d) throw std::invalid_argument("RationalCurve: forms must share one degree");

  // Base points: a common affine root, or all forms vanishing at (0 : 1).
  UniPoly g;
  bool all_vanish_at_infinity = true;
  for (const auto& f : forms_) {
    g = exact::gcd(g, f.affine());
    all_vanish_at_infinity = all_vanish_at_infinity && f.vanishes_at_infinity();
  }
  if (g.is_zero()) throw std::invalid_argument("RationalCurve: all forms are zero");
  if (!g.is_constant() || all_vanish_at_infinity)
    throw std::invalid_argument("RationalCurve: forms have a common zero (base point)");
}

std::vector<UniPoly> RationalCurve::chart_polys(Chart chart) const {
  std::vector<UniPoly> out;
  out.reserve(forms_.size());
  for (const auto& f : forms_) out.push_back(chart == Chart::affine ? f.affine() : f.at_infinity());
  return out;
}

std::vector<Rat> RationalCurve::evaluate(const CurvePoint& p) const {
  const auto [t0, t1] = p.homogeneous();
  std::vector<Rat> out;
  out.reserve(forms_.size());
  for (const auto& f : forms_) out.push_back(f.evaluate(t0, t1));
  return out;
}

QMatrix RationalCurve::coefficient_matrix() const {
  const std::size_t w = static_cast<std::size_t>(degree()) + 1;
  QMatrix m(forms_.size(), w);
  for (std::size_t i = 0; i < forms_.size(); ++i)
    for (std::size_t j = 0; j < w; ++j) m(i, j) = forms_[i].coefficients()[j];
  return m;
}

}  // namespace oscroll::curves
