#include <oscroll/linalg.hpp>
#include <oscroll/unipoly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oscroll::exact {

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
UniPoly::UniPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1, Rat(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::operator()(const Rat& t) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = coeffs_[j] * static_cast<long>(j);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly out = *this;
  const Rat lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

std::size_t UniPoly::vanishing_order_at_zero() const {
  std::size_t m = 0;
  while (m < coeffs_.size() && coeffs_[m] == 0) ++m;
  return is_zero() ? 0 : m;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> prod(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(prod);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rat> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rat> quot(rem.size() - db, Rat(0));
  const Rat& lc = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const Rat f = rem[i] / lc;
    quot[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coefficients()[j];
  }
  rem.resize(db);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("exact_quotient: nonzero remainder");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a.monic();
  UniPoly y = b.monic();
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part of the zero polynomial");
  if (p.is_constant()) return UniPoly::constant(Rat(1));
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

UniPoly primitive_integer_form(const UniPoly& p) {
  if (p.is_zero()) return {};
  const auto& c = p.coefficients();
  const BigInt l = denominator_lcm(c.data(), c.data() + c.size());
  BigInt content = 0;
  std::vector<BigInt> ints;
  ints.reserve(c.size());
  for (const auto& q : c) {
    BigInt v = q.get_num() * (l / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rat> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(BigInt(v / content));
  return UniPoly(std::move(out));
}

namespace {

// Positive divisors by trial division. The inputs here are leading and
// trailing coefficients of small jet minors.
std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::invalid_argument("positive_divisors(0)");
  std::vector<std::pair<BigInt, unsigned>> factors;
  BigInt m = n;
  for (BigInt p = 2; p * p <= m; ++p) {
    if (p > 100000000) throw std::runtime_error("rational_roots: coefficient too large to factor");
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) factors.emplace_back(p, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto& [p, e] : factors) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::vector<Rat> roots;
  UniPoly f = primitive_integer_form(squarefree_part(p));
  const std::size_t z = f.vanishing_order_at_zero();
  if (z > 0) {
    roots.emplace_back(0);
    f = UniPoly(std::vector<Rat>(f.coefficients().begin() + static_cast<long>(z), f.coefficients().end()));
  }
  if (f.degree() >= 1) {
    const auto& c = f.coefficients();
    const std::size_t n = c.size() - 1;
    const auto num_divs = positive_divisors(c.front().get_num());
    const auto den_divs = positive_divisors(c.back().get_num());
    for (const auto& v : den_divs) {
      for (const auto& u : num_divs) {
        if (gcd(u, v) != 1) continue;
        for (int sign : {1, -1}) {
          const BigInt uu = sign * u;
          // sum_j c_j uu^j v^(n-j)
          BigInt acc = 0;
          BigInt upow = 1;
          for (std::size_t j = 0; j <= n; ++j) {
            BigInt vpow;
            mpz_pow_ui(vpow.get_mpz_t(), v.get_mpz_t(), n - j);
            acc += c[j].get_num() * upow * vpow;
            upow *= uu;
          }
          if (acc == 0) roots.emplace_back(uu, v);
        }
      }
    }
  }
  for (auto& r : roots) r.canonicalize();
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Rat resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return 0;
  const int m = p.degree();
  const int n = q.degree();
  if (m == 0) {
    Rat r = 1;
    for (int i = 0; i < n; ++i) r *= p.leading();
    return r;
  }
  if (n == 0) {
    Rat r = 1;
    for (int i = 0; i < m; ++i) r *= q.leading();
    return r;
  }
  const std::size_t size = static_cast<std::size_t>(m + n);
  QMatrix s(size, size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = p.coeff(static_cast<std::size_t>(m - j));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      s(static_cast<std::size_t>(n + i), static_cast<std::size_t>(i + j)) = q.coeff(static_cast<std::size_t>(n - j));
  return determinant(s);
}

std::string to_string(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = p.coefficients().size(); j-- > 0;) {
    const Rat& c = p.coefficients()[j];
    if (c == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0 || mag != 1) {
      os << mag.get_str();
      if (j > 0) os << '*';
    }
    if (j >= 1) os << var;
    if (j >= 2) os << '^' << j;
  }
  return os.str();
}

}  // namespace oscroll::exact
