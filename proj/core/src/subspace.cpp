#include <oscroll/subspace.hpp>

#include <sstream>
#include <stdexcept>

namespace oscroll::exact {

LinearSubspace::LinearSubspace(std::size_t ambient_dim, const QMatrix& spanning_rows)
    : ambient_dim_(ambient_dim) {
  if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient_dim + 1)
    throw std::invalid_argument("LinearSubspace: row width must be ambient_dim + 1");
  basis_ = rref(spanning_rows);
  if (basis_.rows() == 0) basis_ = QMatrix(0, ambient_dim + 1);
}

LinearSubspace LinearSubspace::empty(std::size_t ambient_dim) {
  return LinearSubspace(ambient_dim, QMatrix(0, ambient_dim + 1));
}

LinearSubspace LinearSubspace::whole(std::size_t ambient_dim) {
  QMatrix id(ambient_dim + 1, ambient_dim + 1);
  for (std::size_t i = 0; i <= ambient_dim; ++i) id(i, i) = 1;
  return LinearSubspace(ambient_dim, id);
}

LinearSubspace LinearSubspace::point(const std::vector<Rat>& coords) {
  if (coords.empty()) throw std::invalid_argument("LinearSubspace::point: no coordinates");
  bool nonzero = false;
  for (const auto& c : coords) nonzero = nonzero || c != 0;
  if (!nonzero) throw std::invalid_argument("LinearSubspace::point: zero vector is not a point");
  return LinearSubspace(coords.size() - 1, QMatrix(1, coords.size(), coords));
}

bool LinearSubspace::contains(const std::vector<Rat>& coords) const {
  if (coords.size() != ambient_dim_ + 1) throw std::invalid_argument("LinearSubspace::contains: width mismatch");
  QMatrix m = basis_;
  m.append_row(coords);
  return rank_exact(m) == basis_.rows();
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("LinearSubspace::contains: ambient mismatch");
  QMatrix m = basis_;
  m.append_rows(other.basis_);
  return rank_exact(m) == basis_.rows();
}

std::vector<std::size_t> LinearSubspace::pivot_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t j = 0;
    while (basis_(i, j) == 0) ++j;
    out.push_back(j);
  }
  return out;
}

LinearSubspace join(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("join: ambient mismatch");
  QMatrix m = a.basis();
  m.append_rows(b.basis());
  return LinearSubspace(a.ambient_dim(), m);
}

LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  const std::size_t ra = a.rank();
  const std::size_t rb = b.rank();
  if (ra == 0 || rb == 0) return LinearSubspace::empty(a.ambient_dim());
  // x A = y B  <=>  (x, -y) [A; B] = 0, i.e. left kernel of the stacked basis.
  const std::size_t w = a.ambient_dim() + 1;
  QMatrix stacked_t(w, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < w; ++j) stacked_t(j, i) = a.basis()(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < w; ++j) stacked_t(j, ra + i) = b.basis()(i, j);
  const QMatrix ker = nullspace(stacked_t);
  QMatrix rows(ker.rows(), w);
  for (std::size_t k = 0; k < ker.rows(); ++k)
    for (std::size_t i = 0; i < ra; ++i)
      for (std::size_t j = 0; j < w; ++j) rows(k, j) += ker(k, i) * a.basis()(i, j);
  return LinearSubspace(a.ambient_dim(), rows);
}

LinearSubspace embed_block(const LinearSubspace& s, std::size_t ambient_dim, std::size_t offset) {
  if (offset + s.ambient_dim() > ambient_dim) throw std::invalid_argument("embed_block: block does not fit");
  QMatrix m(s.rank(), ambient_dim + 1);
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j <= s.ambient_dim(); ++j) m(i, offset + j) = s.basis()(i, j);
  return LinearSubspace(ambient_dim, m);
}

std::string to_string(const LinearSubspace& s) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (i) os << ", ";
    os << '(';
    for (std::size_t j = 0; j <= s.ambient_dim(); ++j) {
      if (j) os << ',';
      os << to_string(s.basis()(i, j));
    }
    os << ')';
  }
  os << '>';
  return os.str();
}

}  // namespace oscroll::exact
