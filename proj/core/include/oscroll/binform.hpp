#pragma once

#include <oscroll/unipoly.hpp>

#include <string>
#include <vector>

namespace oscroll::exact {

// Binary form of degree d: sum_j c_j t0^(d-j) t1^j.
class BinForm {
 public:
  BinForm() = default;
  BinForm(int degree, std::vector<Rat> coeffs);

  static BinForm zero(int degree);
  static BinForm monomial(int degree, int t1_exponent);
  // Homogenize p(t) (t = t1/t0) to the given degree >= deg p.
  static BinForm homogenize(const UniPoly& p, int degree);

  int degree() const { return degree_; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  const Rat& coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  bool is_zero() const;

  // t0 = 1, t = t1.
  UniPoly affine() const;
  // t1 = 1, s = t0; the coefficient of s^(d-j) is c_j.
  UniPoly at_infinity() const;
  Rat evaluate(const Rat& t0, const Rat& t1) const;
  // True iff (t0 : t1) = (0 : 1) is a root.
  bool vanishes_at_infinity() const { return coeffs_.back() == 0; }

  BinForm& operator+=(const BinForm& o);
  BinForm& operator*=(const Rat& c);
  friend BinForm operator+(BinForm a, const BinForm& b) { return a += b; }
  friend BinForm operator*(const Rat& c, BinForm a) { return a *= c; }
  friend bool operator==(const BinForm& a, const BinForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int degree_ = 0;
  std::vector<Rat> coeffs_{Rat(0)};
};

std::string to_string(const BinForm& f);

}  // namespace oscroll::exact
