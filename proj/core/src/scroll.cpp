#include <oscroll/errors.hpp>
#include <oscroll/scroll.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oscroll::scrolls {

using curves::Chart;
using exact::PolyMatrix;
using exact::UniPoly;

DecomposableScroll::DecomposableScroll(std::vector<RationalCurve> curves) : curves_(std::move(curves)) {
  if (curves_.size() < 2) throw std::invalid_argument("DecomposableScroll: need at least two curves");
  std::size_t off = 0;
  for (const auto& c : curves_) {
    offsets_.push_back(off);
    off += c.ambient_dim() + 1;
  }
  ambient_dim_ = off - 1;
}

std::vector<int> DecomposableScroll::degrees() const {
  std::vector<int> out;
  for (const auto& c : curves_) out.push_back(c.degree());
  return out;
}

std::vector<std::size_t> DecomposableScroll::spans() const {
  std::vector<std::size_t> out;
  for (const auto& c : curves_) out.push_back(c.ambient_dim());
  return out;
}

std::vector<std::size_t> DecomposableScroll::line_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < curves_.size(); ++i)
    if (curves_[i].is_line()) out.push_back(i);
  return out;
}

std::vector<std::string> DecomposableScroll::labels() const {
  std::vector<std::string> out;
  for (const auto& c : curves_) out.push_back(c.label());
  return out;
}

DecomposableScroll build_scroll(std::vector<RationalCurve> curves) {
  for (const auto& c : curves) curves::require_embedding(c);
  return DecomposableScroll(std::move(curves));
}

ScrollPoint ScrollPoint::make(const CurvePoint& base, std::vector<Rat> fiber) {
  std::size_t piv = fiber.size();
  for (std::size_t i = fiber.size(); i-- > 0;)
    if (fiber[i] != 0) {
      piv = i;
      break;
    }
  if (piv == fiber.size()) throw std::invalid_argument("ScrollPoint: fibre coordinates are all zero");
  const Rat scale = fiber[piv];
  for (auto& v : fiber) v /= scale;
  return ScrollPoint{CurvePoint::in_chart(base.chart, base.param), std::move(fiber)};
}

ScrollPoint ScrollPoint::vertex(const CurvePoint& base, std::size_t n, std::size_t i) {
  std::vector<Rat> f(n, Rat(0));
  f.at(i) = 1;
  return make(base, std::move(f));
}

std::size_t ScrollPoint::pivot() const {
  for (std::size_t i = fiber.size(); i-- > 0;)
    if (fiber[i] != 0) return i;
  throw std::logic_error("ScrollPoint: no pivot");
}

std::vector<std::size_t> ScrollPoint::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fiber.size(); ++i)
    if (fiber[i] != 0) out.push_back(i);
  return out;
}

std::string to_string(const ScrollPoint& x) {
  std::ostringstream os;
  os << to_string(x.base) << ';';
  for (std::size_t i = 0; i < x.fiber.size(); ++i) os << (i ? "," : "") << exact::to_string(x.fiber[i]);
  return os.str();
}

std::vector<Rat> coordinates(const DecomposableScroll& sc, const ScrollPoint& x) {
  if (x.fiber.size() != sc.n()) throw std::invalid_argument("coordinates: fibre length != n");
  std::vector<Rat> out;
  out.reserve(sc.ambient_dim() + 1);
  for (std::size_t i = 0; i < sc.n(); ++i)
    for (const auto& v : sc.curve(i).evaluate(x.base)) out.push_back(x.fiber[i] * v);
  return out;
}

namespace {

// Shared block recipe. `jets(i, order)` returns M^i_order evaluated (or
// symbolic); `scale(i)` the top-block multiplier of block i.
template <typename T, typename Jets, typename Scale>
exact::Matrix<T> assemble(const DecomposableScroll& sc, std::size_t k, std::size_t pivot, Jets&& jets,
                          Scale&& scale) {
  const std::size_t n = sc.n();
  const std::size_t cols = sc.ambient_dim() + 1;
  exact::Matrix<T> m(k + 1, cols);
  for (std::size_t i = 0; i < n; ++i) {
    const auto top = jets(i, k);
    const auto lam = scale(i);
    for (std::size_t r = 0; r <= k; ++r)
      for (std::size_t c = 0; c < top.cols(); ++c) m(r, sc.offset(i) + c) = top(r, c) * lam;
  }
  if (k == 0) return m;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t order = std::min(k - 1, sc.curve(i).ambient_dim());
    exact::Matrix<T> block(order + 1, cols);
    if (i != pivot) {
      const auto low = jets(i, order);
      for (std::size_t r = 0; r <= order; ++r)
        for (std::size_t c = 0; c < low.cols(); ++c) block(r, sc.offset(i) + c) = low(r, c);
    }
    m.append_rows(block);
  }
  return m;
}

}  // namespace

QMatrix scroll_jet_matrix(const DecomposableScroll& sc, std::size_t k, const ScrollPoint& x,
                          std::optional<std::size_t> pivot) {
  if (x.fiber.size() != sc.n()) throw std::invalid_argument("scroll_jet_matrix: fibre length != n");
  const std::size_t s = pivot.value_or(x.pivot());
  if (s >= sc.n() || x.fiber[s] == 0) throw std::invalid_argument("scroll_jet_matrix: pivot coordinate is zero");
  const Rat norm = x.fiber[s];
  return assemble<Rat>(
      sc, k, s, [&](std::size_t i, std::size_t order) { return curves::jet_matrix(sc.curve(i), order, x.base); },
      [&](std::size_t i) { return x.fiber[i] / norm; });
}

std::size_t scroll_osc_dim(const DecomposableScroll& sc, std::size_t k, const ScrollPoint& x) {
  return exact::rank_exact(scroll_jet_matrix(sc, k, x)) - 1;
}

LinearSubspace scroll_osc_subspace(const DecomposableScroll& sc, std::size_t k, const ScrollPoint& x) {
  return LinearSubspace(sc.ambient_dim(), scroll_jet_matrix(sc, k, x));
}

GenericOscDim generic_osc_dim_certified(const DecomposableScroll& sc, std::size_t k) {
  const std::size_t n = sc.n();
  const std::size_t pivot = n - 1;
  std::vector<PolyMatrix> sym;
  for (std::size_t i = 0; i < n; ++i) sym.push_back(curves::jet_matrix(sc.curve(i), k, Chart::affine));

  // Degree pattern of the symbolic matrix in t (fibre variables set to 1).
  const PolyMatrix shape = assemble<UniPoly>(
      sc, k, pivot,
      [&](std::size_t i, std::size_t order) {
        std::vector<std::size_t> rows(order + 1), cols(sym[i].cols());
        for (std::size_t r = 0; r <= order; ++r) rows[r] = r;
        for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
        return sym[i].submatrix(rows, cols);
      },
      [](std::size_t) { return Rat(1); });
  const std::size_t full = std::min(shape.rows(), shape.cols());
  auto top_sum = [full](std::vector<std::size_t> d) {
    std::sort(d.rbegin(), d.rend());
    std::size_t s = 0;
    for (std::size_t i = 0; i < full && i < d.size(); ++i) s += d[i];
    return s;
  };
  std::vector<std::size_t> col_deg(shape.cols(), 0), row_deg(shape.rows(), 0);
  for (std::size_t r = 0; r < shape.rows(); ++r)
    for (std::size_t c = 0; c < shape.cols(); ++c) {
      const int d = shape(r, c).degree();
      if (d > 0) {
        col_deg[c] = std::max(col_deg[c], static_cast<std::size_t>(d));
        row_deg[r] = std::max(row_deg[r], static_cast<std::size_t>(d));
      }
    }
  // Variables: t, then the fibre coordinates of curves 0..n-2. A fibre
  // variable only multiplies the k+1 top rows of its own column block.
  std::vector<std::size_t> bounds{std::min(top_sum(col_deg), top_sum(row_deg))};
  for (std::size_t i = 0; i + 1 < n; ++i) bounds.push_back(std::min(k + 1, sc.curve(i).ambient_dim() + 1));

  GenericOscDim out;
  out.certificate = exact::certified_generic_rank(
      shape.rows(), shape.cols(), bounds, [&](std::span<const Rat> v) {
        std::vector<Rat> fiber(n, Rat(1));
        for (std::size_t i = 0; i + 1 < n; ++i) fiber[i] = v[i + 1];
        const ScrollPoint x{CurvePoint::affine(v[0]), fiber};
        return scroll_jet_matrix(sc, k, x, pivot);
      });
  out.value = out.certificate.rank - 1;
  return out;
}

std::size_t generic_osc_dim(const DecomposableScroll& sc, std::size_t k) {
  return generic_osc_dim_certified(sc, k).value;
}

bool is_flex(const DecomposableScroll& sc, const ScrollPoint& x, std::size_t k) {
  return is_flex(sc, x, k, generic_osc_dim(sc, k));
}

bool is_flex(const DecomposableScroll& sc, const ScrollPoint& x, std::size_t k, std::size_t generic_dim) {
  return scroll_osc_dim(sc, k, x) < generic_dim;
}

std::size_t rns_osc_dim_formula(std::size_t r1, std::size_t r2, std::size_t k) {
  if (r1 < 1 || r1 > r2 || k < 1) throw std::invalid_argument("rns_osc_dim_formula: need 1 <= r1 <= r2 and k >= 1");
  // Rank of the block jet matrix minus one. The three-case summary
  // (2k / k+r1+1 / r1+r2+1) disagrees with it when r1 = r2 and k is r1 or r1+1.
  return std::min(k, r2) + std::min(k, r1 + 1);
}

}  // namespace oscroll::scrolls
