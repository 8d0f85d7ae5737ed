#pragma once

#include <oscroll/linalg.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace oscroll::exact {

/// Projective linear subspace of P^ambient_dim, stored as the reduced row
/// echelon form of a spanning set of homogeneous coordinate vectors. The
/// echelon form is canonical, so equality of subspaces is equality of bases.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  // Any spanning rows; dependent and zero rows are dropped.
  LinearSubspace(std::size_t ambient_dim, const QMatrix& spanning_rows);

  static LinearSubspace empty(std::size_t ambient_dim);
  static LinearSubspace whole(std::size_t ambient_dim);
  static LinearSubspace point(const std::vector<Rat>& coords);

  std::size_t ambient_dim() const { return ambient_dim_; }
  const QMatrix& basis() const { return basis_; }
  // Vector-space dimension (number of basis rows).
  std::size_t rank() const { return basis_.rows(); }
  // Projective dimension; -1 for the empty subspace.
  long dim() const { return static_cast<long>(basis_.rows()) - 1; }
  bool is_empty() const { return basis_.rows() == 0; }

  bool contains(const std::vector<Rat>& coords) const;
  bool contains(const LinearSubspace& other) const;
  std::vector<std::size_t> pivot_columns() const;

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  QMatrix basis_;
};

LinearSubspace join(const LinearSubspace& a, const LinearSubspace& b);
LinearSubspace intersect(const LinearSubspace& a, const LinearSubspace& b);

// Place a subspace of P^r into P^N on coordinates offset .. offset + r.
LinearSubspace embed_block(const LinearSubspace& s, std::size_t ambient_dim, std::size_t offset);

std::string to_string(const LinearSubspace& s);

}  // namespace oscroll::exact
