#include <oscroll/binform.hpp>

#include <sstream>
#include <stdexcept>

namespace oscroll::exact {

BinForm::BinForm(int degree, std::vector<Rat> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree_ < 0) throw std::invalid_argument("BinForm: negative degree");
  if (coeffs_.size() != static_cast<std::size_t>(degree_) + 1)
    throw std::invalid_argument("BinForm: expected degree+1 coefficients");
}

BinForm BinForm::zero(int degree) {
  return BinForm(degree, std::vector<Rat>(static_cast<std::size_t>(degree) + 1, Rat(0)));
}

BinForm BinForm::monomial(int degree, int t1_exponent) {
  if (t1_exponent < 0 || t1_exponent > degree) throw std::invalid_argument("BinForm::monomial: exponent out of range");
  BinForm f = zero(degree);
  f.coeffs_[static_cast<std::size_t>(t1_exponent)] = 1;
  return f;
}

BinForm BinForm::homogenize(const UniPoly& p, int degree) {
  if (p.degree() > degree) throw std::invalid_argument("BinForm::homogenize: degree too small");
  BinForm f = zero(degree);
  for (std::size_t j = 0; j < p.coefficients().size(); ++j) f.coeffs_[j] = p.coefficients()[j];
  return f;
}

bool BinForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

UniPoly BinForm::affine() const { return UniPoly(coeffs_); }

UniPoly BinForm::at_infinity() const { return UniPoly(std::vector<Rat>(coeffs_.rbegin(), coeffs_.rend())); }

Rat BinForm::evaluate(const Rat& t0, const Rat& t1) const {
  Rat acc = 0;
  Rat p1 = 1;
  for (int j = 0; j <= degree_; ++j) {
    Rat p0 = 1;
    for (int i = 0; i < degree_ - j; ++i) p0 *= t0;
    acc += coeffs_[static_cast<std::size_t>(j)] * p0 * p1;
    p1 *= t1;
  }
  return acc;
}

BinForm& BinForm::operator+=(const BinForm& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("BinForm: degree mismatch in sum");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

BinForm& BinForm::operator*=(const Rat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string to_string(const BinForm& f) {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j <= f.degree(); ++j) {
    const Rat& c = f.coeff(j);
    if (c == 0) continue;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Rat mag = abs(c);
    const int e0 = f.degree() - j;
    const bool bare = e0 == 0 && j == 0;
    if (mag != 1 || bare) os << mag.get_str() << (bare ? "" : "*");
    if (e0 > 0) os << "t0" << (e0 > 1 ? "^" + std::to_string(e0) : "");
    if (e0 > 0 && j > 0) os << '*';
    if (j > 0) os << "t1" << (j > 1 ? "^" + std::to_string(j) : "");
  }
  return first ? "0" : os.str();
}

}  // namespace oscroll::exact
