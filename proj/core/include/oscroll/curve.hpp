#pragma once

#include <oscroll/binform.hpp>
#include <oscroll/linalg.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace oscroll::curves {

using exact::BinForm;
using exact::PolyMatrix;
using exact::QMatrix;
using exact::Rat;
using exact::UniPoly;

enum class Chart { affine, infinity };

/// A point of P^1. In the affine chart the parameter is t = t1/t0; in the
/// chart at infinity it is s = t0/t1. Only (0 : 1) is kept in the infinity
/// chart; every other point is canonicalised to the affine chart.
struct CurvePoint {
  Chart chart = Chart::affine;
  Rat param;

  static CurvePoint affine(const Rat& t) { return {Chart::affine, t}; }
  static CurvePoint infinity() { return {Chart::infinity, Rat(0)}; }
  static CurvePoint in_chart(Chart chart, const Rat& value);

  // Homogeneous coordinates (t0, t1).
  std::pair<Rat, Rat> homogeneous() const;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    return a.chart == b.chart && a.param == b.param;
  }
  friend bool operator<(const CurvePoint& a, const CurvePoint& b) {
    if (a.chart != b.chart) return a.chart == Chart::affine;
    return a.param < b.param;
  }
};

std::string to_string(const CurvePoint& p);

/// Rational curve in P^r given by r+1 binary forms of a common degree d.
/// Construction enforces the shape and base-point freeness; embedding
/// properties are checked separately (check_embedding) by the factories.
class RationalCurve {
 public:
  RationalCurve(std::vector<BinForm> forms, std::string label = {});

  std::size_t ambient_dim() const { return forms_.size() - 1; }
  int degree() const { return forms_.front().degree(); }
  const std::vector<BinForm>& forms() const { return forms_; }
  const std::string& label() const { return label_; }
  bool is_line() const { return ambient_dim() == 1; }

  // Dehomogenised coordinate polynomials in the given chart.
  std::vector<UniPoly> chart_polys(Chart chart) const;
  std::vector<Rat> evaluate(const CurvePoint& p) const;

  // Coefficient matrix: (r+1) x (d+1).
  QMatrix coefficient_matrix() const;

 private:
  std::vector<BinForm> forms_;
  std::string label_;
};

}  // namespace oscroll::curves
