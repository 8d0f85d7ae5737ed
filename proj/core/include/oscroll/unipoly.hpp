#pragma once

#include <oscroll/rational.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace oscroll::exact {

/// Dense univariate polynomial over Q. coefficients()[j] is the coefficient
/// of t^j; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs);
  UniPoly(std::initializer_list<Rat> coeffs);

  static UniPoly constant(const Rat& c);
  static UniPoly monomial(const Rat& c, std::size_t degree);
  static UniPoly variable() { return monomial(Rat(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coefficients() const { return coeffs_; }
  Rat coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Rat(0); }
  const Rat& leading() const { return coeffs_.back(); }

  Rat operator()(const Rat& t) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  // Largest m with t^m | p; 0 for the zero polynomial.
  std::size_t vanishing_order_at_zero() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rat& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rat& c) { return a *= c; }
  friend UniPoly operator*(const Rat& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
// Throws std::domain_error unless b divides a exactly.
UniPoly exact_quotient(const UniPoly& a, const UniPoly& b);

// Monic gcd; zero only when both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Monic p / gcd(p, p'). Its degree counts the distinct complex roots of p.
// Throws std::invalid_argument on the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);

// Distinct rational roots in ascending order, via the rational-root test on
// the primitive integer form. Throws std::invalid_argument on zero input.
std::vector<Rat> rational_roots(const UniPoly& p);

// Sylvester resultant with p's coefficients in the top deg(q) rows, highest
// degree first. Conventions for degenerate inputs: res(c, q) = c^deg(q) for a
// nonzero constant c (and symmetrically), res(0, q) = 0 for q != 0.
// Throws std::invalid_argument when both inputs are zero.
Rat resultant(const UniPoly& p, const UniPoly& q);

// Multiply through by the lcm of denominators and divide by the content, so
// the result has coprime integer coefficients and a positive leading term.
UniPoly primitive_integer_form(const UniPoly& p);

std::string to_string(const UniPoly& p, char var = 't');

}  // namespace oscroll::exact
