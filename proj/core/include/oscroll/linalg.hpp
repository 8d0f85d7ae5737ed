#pragma once

#include <oscroll/matrix.hpp>
#include <oscroll/unipoly.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace oscroll::exact {

using QMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<UniPoly>;

struct Elimination {
  std::size_t rank = 0;
  // The submatrix on (pivot_rows, pivot_cols) is nonsingular. Indices refer to
  // the input matrix and are listed in elimination order.
  std::vector<std::size_t> pivot_rows;
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free (Bareiss) elimination after clearing row denominators.
Elimination bareiss_eliminate(const QMatrix& m);
std::size_t rank_exact(const QMatrix& m);

Rat determinant(const QMatrix& m);
// Bareiss over Q[t]; every division is exact.
UniPoly determinant(const PolyMatrix& m);

// Reduced row echelon form with zero rows dropped.
QMatrix rref(const QMatrix& m);
// Basis of {x : m x = 0}, one basis vector per row.
QMatrix nullspace(const QMatrix& m);

QMatrix evaluate(const PolyMatrix& m, const Rat& t);

// Generic rank over Q(t). The witness minor's determinant is a nonzero
// polynomial; `certificate_points` distinct evaluations of rank <= rank prove
// every (rank+1)-minor vanishes identically (each such minor has degree below
// that count). No certificate is needed when rank = min(rows, cols).
struct GenericRank {
  std::size_t rank = 0;
  std::vector<std::size_t> witness_rows;
  std::vector<std::size_t> witness_cols;
  UniPoly witness_determinant;
  std::size_t certificate_points = 0;
};
GenericRank generic_rank(const PolyMatrix& m);

// Monic gcd of all size x size minors; zero if all vanish identically; 1 for
// size 0. Stops as soon as the running gcd is a nonzero constant.
UniPoly minors_gcd(const PolyMatrix& m, std::size_t size);

// Visit k-subsets of {0..n-1} in lexicographic order until f returns false.
// Returns false iff the visit was cut short.
bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& f);

// Generic rank of a matrix whose entries are polynomials in several
// variables, seen only through an evaluator. degree_bounds[v] must bound the
// degree in variable v of every minor of size min(rows, cols). The rank is
// maximised over a product grid with degree_bounds[v] + 1 values in variable
// v; a polynomial of those partial degrees vanishing on such a grid is zero,
// so the result is exact.
struct CertifiedRank {
  std::size_t rank = 0;
  std::vector<Rat> witness_point;
  std::vector<std::size_t> witness_rows;
  std::vector<std::size_t> witness_cols;
  std::size_t evaluations = 0;
  bool full_rank_shortcut = false;
};
CertifiedRank certified_generic_rank(std::size_t rows, std::size_t cols,
                                     std::span<const std::size_t> degree_bounds,
                                     const std::function<QMatrix(std::span<const Rat>)>& eval);

}  // namespace oscroll::exact
