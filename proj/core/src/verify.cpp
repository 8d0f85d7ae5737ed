#include <oscroll/verify.hpp>

#include "sampling.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace oscroll::scrolls {

std::string to_string(StatementStatus s) {
  switch (s) {
    case StatementStatus::pass:
      return "pass";
    case StatementStatus::fail:
      return "fail";
    case StatementStatus::vacuous:
      return "vacuous";
  }
  return "?";
}

bool VerificationReport::all_passed() const {
  return std::none_of(statements.begin(), statements.end(),
                      [](const StatementResult& s) { return s.failures > 0; });
}

namespace {

constexpr std::size_t kMinOrder = 2;
constexpr std::size_t kMaxOrder = 4;

struct Ledger {
  std::vector<StatementResult> results;
  std::map<std::string, std::size_t> index;

  void declare(const std::string& id, const std::string& claim) {
    index[id] = results.size();
    results.push_back(StatementResult{id, claim, 0, 0, {}});
  }
  void record(const std::string& id, bool ok, const std::string& witness) {
    auto& r = results.at(index.at(id));
    ++r.checked;
    if (!ok && r.failures++ == 0) r.first_failure = witness;
  }
};

struct Sample {
  ScrollPoint x;
  bool interior = false;  // every fibre coordinate nonzero
  std::optional<std::size_t> vertex;
};

bool subset_of(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::all_of(a.begin(), a.end(), [&](std::size_t i) { return std::find(b.begin(), b.end(), i) != b.end(); });
}

}  // namespace

VerificationReport verify_scroll_properties(const DecomposableScroll& sc, std::size_t sample_budget,
                                            std::uint64_t seed) {
  detail::Rng rng(seed);
  const std::size_t n = sc.n();
  const std::size_t big_n = sc.ambient_dim();
  const bool surface = n == 2;

  Ledger L;
  L.declare("fiber-flex-equivalence",
            "k=2: a flexed fibre point off the coordinate hyperplanes <=> every p_i is a flex of C_i <=> the whole fibre is flexed");
  L.declare("vertex-flex-iff-curve-flex", "k=2: p_i is a flex of the scroll iff it is a flex of C_i");
  L.declare("pivot-flex-implies-curve-flex", "k=2: a flexed point with nonzero i-th fibre coordinate has p_i a flex of C_i");
  L.declare("uninflected-iff-curves-uninflected", "k=2: the scroll is uninflected iff every C_i is");
  L.declare("flex-osculating-span-fixed",
            "k=2: at every flex over p the osculating space is the span of the tangent lines of the C_i at p_i");
  L.declare("flex-osc-dim", "k=2: every flex has osculating dimension 2n-1 unless all curves are lines");
  L.declare("vertex-osculating-span",
            "Osc^k at p_s is spanned by Osc^k_{p_s}(C_s) and Osc^{k-1}_{p_i}(C_i) for i != s");
  L.declare("vertex-flex-origin",
            "p_s in Phi_k(C_s) => p_s flexed; p_s flexed => p_s in Phi_k(C_s) or some p_j in Phi_{k-1}(C_j), j != s");
  L.declare("fiber-span-osculating",
            "if Osc^k_{p_i}(C_i) = Osc^{k-1}_{p_i}(C_i) for all i != s, then Osc^k_x equals the vertex span at every x "
            "with nonzero s-th coordinate");
  L.declare("flexed-vertex-span-in-locus",
            "the span of the p_i in Phi_k(C_i) is flexed, and is exactly the flexed part of the fibre under the strict hypotheses");
  L.declare("fiber-flexed-implies-some-vertex",
            "all p_i in Phi_k(C_i) => fibre flexed; fibre flexed => some p_i in Phi_k(C_i)");
  L.declare("surface-fiber-flex-criterion",
            "n=2: fibre flexed iff some p_i in Phi_{k-1}(C_i) or both p_i in Phi_k(C_i)");
  L.declare("surface-flex-propagation",
            "n=2: a flexed point other than p_1, p_2 forces the whole fibre; a flexed p_i forces the fibre or p_i in Phi_k(C_i)");
  L.declare("surface-empty-locus-iff-curves", "n=2: Phi_k of the scroll is empty iff Phi_k(C_1) and Phi_k(C_2) are");
  L.declare("surface-line-plus-fibres",
            "n=2, r_a <= r_b, Phi_{k-1}(C_a) empty and Phi_k(C_a) = C_a: Phi_k is C_a plus the fibres over Phi_k(C_b)");
  L.declare("osc-dim-upper-bound", "osculating dimension <= min(nk, N)");
  L.declare("osc-dim-lower-bound",
            "k=2: dimension >= n+1; n=2 rational normal curves with r_1 >= k-1, N >= 2k, k >= 3: dimension >= k+2");
  L.declare("pivot-independence", "every admissible pivot gives the same osculating space");
  L.declare("generic-osc-dim-attained", "sampled dimensions never exceed s(k) and general samples attain it");

  // Global data: curve loci and generic dimensions per order.
  std::map<std::size_t, std::vector<FlexLocus>> loci;  // order -> per curve
  for (std::size_t k = 1; k <= kMaxOrder; ++k)
    for (std::size_t i = 0; i < n; ++i) loci[k].push_back(curves::inflectional_locus(sc.curve(i), k));
  auto locus_nonempty = [&](std::size_t k, std::size_t i) { return loci[k][i].mode != curves::LocusMode::empty; };
  std::map<std::size_t, std::size_t> generic;
  for (std::size_t k = kMinOrder; k <= kMaxOrder; ++k) generic[k] = generic_osc_dim(sc, k);
  std::map<std::size_t, std::size_t> sampled_max;

  // Rational normal curves have degree equal to their span.
  bool rns_surface = surface;
  for (const auto& c : sc.curves()) rns_surface = rns_surface && static_cast<std::size_t>(c.degree()) == c.ambient_dim();
  const std::size_t r_min = std::min(sc.curve(0).ambient_dim(), sc.curve(1).ambient_dim());

  // Base points: rational flex witnesses first, then random ones.
  std::vector<std::pair<CurvePoint, bool>> bases;  // (point, random)
  std::set<CurvePoint> seen;
  for (std::size_t k = kMinOrder; k <= kMaxOrder; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& p : loci[k][i].rational_points)
        if (seen.insert(p).second) bases.emplace_back(p, false);
  for (std::size_t b = 0; b < sample_budget; ++b) {
    const CurvePoint p = CurvePoint::affine(detail::random_rat(rng));
    if (seen.insert(p).second) bases.emplace_back(p, true);
  }

  VerificationReport report;
  report.base_points = bases.size();

  for (const auto& [p, random_base] : bases) {
    // Curve memberships p_i in Phi_k(C_i), k = 1..kMaxOrder.
    std::map<std::size_t, std::vector<bool>> c;
    for (std::size_t k = 1; k <= kMaxOrder; ++k)
      for (std::size_t i = 0; i < n; ++i) c[k].push_back(curves::is_flexed_at(sc.curve(i), k, p));

    std::vector<Sample> base_samples;
    for (std::size_t i = 0; i < n; ++i) base_samples.push_back({ScrollPoint::vertex(p, n, i), false, i});
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<Rat> f(n, Rat(0));
        f[i] = detail::random_nonzero_rat(rng);
        f[j] = 1;
        base_samples.push_back({ScrollPoint::make(p, f), n == 2, std::nullopt});
      }
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<Rat> f(n);
      for (auto& v : f) v = detail::random_nonzero_rat(rng);
      base_samples.push_back({ScrollPoint::make(p, f), true, std::nullopt});
    }

    for (std::size_t k = kMinOrder; k <= kMaxOrder; ++k) {
      const std::size_t nk = n * k;
      std::vector<std::size_t> s_k;
      for (std::size_t i = 0; i < n; ++i)
        if (c[k][i]) s_k.push_back(i);

      std::vector<Sample> samples = base_samples;
      if (s_k.size() >= 2 && s_k.size() < n) {
        std::vector<Rat> f(n, Rat(0));
        for (auto i : s_k) f[i] = detail::random_nonzero_rat(rng);
        samples.push_back({ScrollPoint::make(p, f), false, std::nullopt});
      }

      // Vertex spans: Osc^k_{p_s}(C_s) joined with Osc^{k-1}_{p_i}(C_i).
      std::vector<LinearSubspace> vertex_span;
      for (std::size_t s = 0; s < n; ++s) {
        LinearSubspace acc = LinearSubspace::empty(big_n);
        for (std::size_t i = 0; i < n; ++i)
          acc = exact::join(acc, exact::embed_block(curves::osc_subspace(sc.curve(i), i == s ? k : k - 1, p), big_n,
                                                    sc.offset(i)));
        vertex_span.push_back(std::move(acc));
      }
      std::vector<bool> stable;
      for (std::size_t i = 0; i < n; ++i)
        stable.push_back(curves::osc_subspace(sc.curve(i), k, p) == curves::osc_subspace(sc.curve(i), k - 1, p));
      LinearSubspace tangent_span = LinearSubspace::empty(big_n);
      for (std::size_t i = 0; i < n; ++i)
        tangent_span = exact::join(
            tangent_span, exact::embed_block(curves::osc_subspace(sc.curve(i), 1, p), big_n, sc.offset(i)));

      std::vector<LinearSubspace> osc;
      std::vector<std::size_t> dims;
      std::vector<bool> flexed;
      for (const auto& smp : samples) {
        osc.push_back(scroll_osc_subspace(sc, k, smp.x));
        dims.push_back(osc.back().rank() - 1);
        flexed.push_back(dims.back() < nk);
        ++report.scroll_points;
      }
      auto where = [&](std::size_t idx) {
        std::ostringstream os;
        os << "k=" << k << " x=" << to_string(samples[idx].x) << " dim=" << dims[idx];
        return os.str();
      };
      std::ostringstream fiber_tag;
      fiber_tag << "k=" << k << " over " << to_string(p);
      const bool whole_sampled = std::all_of(flexed.begin(), flexed.end(), [](bool b) { return b; });
      const bool all_ck = s_k.size() == n;
      bool any_km1 = false;
      for (std::size_t i = 0; i < n; ++i) any_km1 = any_km1 || c[k - 1][i];

      for (std::size_t idx = 0; idx < samples.size(); ++idx) {
        const auto& x = samples[idx].x;
        const auto support = x.support();
        L.record("osc-dim-upper-bound", dims[idx] <= std::min(nk, big_n), where(idx));
        if (k == 2) L.record("osc-dim-lower-bound", dims[idx] >= n + 1, where(idx));
        if (k >= 3 && rns_surface && r_min + 1 >= k && big_n >= 2 * k)
          L.record("osc-dim-lower-bound", dims[idx] >= k + 2, where(idx));
        bool same = true;
        for (auto s : support) {
          if (s == x.pivot()) continue;
          same = same && LinearSubspace(big_n, scroll_jet_matrix(sc, k, x, s)) == osc[idx];
        }
        L.record("pivot-independence", same, where(idx));
        L.record("generic-osc-dim-attained", dims[idx] <= generic[k], where(idx));
        if (random_base && samples[idx].interior) sampled_max[k] = std::max(sampled_max[k], dims[idx]);

        // All other curves have Osc^k = Osc^{k-1} at p. Membership in
        // Phi_k alone is not enough: at a point of Phi_{k-1} the k-th
        // osculating space can still grow.
        for (auto s : support) {
          bool others = true;
          for (std::size_t i = 0; i < n; ++i) others = others && (i == s || stable[i]);
          if (others) L.record("fiber-span-osculating", osc[idx] == vertex_span[s], where(idx));
        }
        // Span of the p_i in Phi_k.
        if (!s_k.empty() && subset_of(support, s_k)) L.record("flexed-vertex-span-in-locus", flexed[idx], where(idx));
        bool strict = s_k.size() < n;
        for (auto i : s_k) strict = strict && !c[k - 1][i];
        if (strict && !subset_of(support, s_k)) L.record("flexed-vertex-span-in-locus", !flexed[idx], where(idx));

        if (surface) {
          bool any_flex_curve = locus_nonempty(k, 0) || locus_nonempty(k, 1);
          if (flexed[idx]) L.record("surface-empty-locus-iff-curves", any_flex_curve, where(idx));
          if (flexed[idx]) {
            if (!samples[idx].vertex)
              L.record("surface-flex-propagation", whole_sampled, where(idx));
            else
              L.record("surface-flex-propagation", whole_sampled || c[k][*samples[idx].vertex], where(idx));
          }
        }
      }

      for (std::size_t s = 0; s < n; ++s) {
        const std::size_t idx = s;  // vertices come first
        L.record("vertex-osculating-span", osc[idx] == vertex_span[s], where(idx));
        if (c[k][s]) L.record("vertex-flex-origin", flexed[idx], where(idx));
        if (flexed[idx]) {
          bool other_km1 = false;
          for (std::size_t j = 0; j < n; ++j) other_km1 = other_km1 || (j != s && c[k - 1][j]);
          L.record("vertex-flex-origin", c[k][s] || other_km1, where(idx));
        }
      }
      if (all_ck) L.record("fiber-flexed-implies-some-vertex", whole_sampled, fiber_tag.str());
      if (whole_sampled) L.record("fiber-flexed-implies-some-vertex", !s_k.empty(), fiber_tag.str());

      if (surface) {
        const bool criterion = any_km1 || all_ck;
        L.record("surface-fiber-flex-criterion", whole_sampled == criterion, fiber_tag.str());
        if (!locus_nonempty(k, 0) && !locus_nonempty(k, 1))
          L.record("surface-empty-locus-iff-curves", std::none_of(flexed.begin(), flexed.end(), [](bool b) { return b; }),
                   fiber_tag.str());
        for (std::size_t a = 0; a < 2; ++a) {
          const std::size_t b = 1 - a;
          if (sc.curve(a).ambient_dim() > sc.curve(b).ambient_dim()) continue;
          const bool hyp = k > sc.curve(a).ambient_dim() && !locus_nonempty(k - 1, a);
          if (!hyp) continue;
          bool ok = true;
          for (std::size_t idx = 0; idx < samples.size(); ++idx) {
            const auto support = samples[idx].x.support();
            const bool expect = c[k][b] || (support.size() == 1 && support[0] == a);
            ok = ok && flexed[idx] == expect;
          }
          L.record("surface-line-plus-fibres", ok, fiber_tag.str());
        }
      }

      if (k == 2) {
        bool interior_flexed = false;
        for (std::size_t idx = 0; idx < samples.size(); ++idx)
          interior_flexed = interior_flexed || (samples[idx].interior && flexed[idx]);
        L.record("fiber-flex-equivalence", interior_flexed == all_ck && all_ck == whole_sampled, fiber_tag.str());
        const bool some_curve_flexed = std::any_of(loci[2].begin(), loci[2].end(), [](const FlexLocus& l) {
          return l.mode != curves::LocusMode::empty;
        });
        for (std::size_t idx = 0; idx < samples.size(); ++idx) {
          if (samples[idx].vertex)
            L.record("vertex-flex-iff-curve-flex", flexed[idx] == c[2][*samples[idx].vertex], where(idx));
          if (!flexed[idx]) continue;
          bool piv_ok = true;
          for (auto s : samples[idx].x.support()) piv_ok = piv_ok && c[2][s];
          L.record("pivot-flex-implies-curve-flex", piv_ok, where(idx));
          L.record("uninflected-iff-curves-uninflected", some_curve_flexed, where(idx));
          L.record("flex-osculating-span-fixed", osc[idx] == tangent_span && dims[idx] == 2 * n - 1, where(idx));
          if (!sc.all_lines()) L.record("flex-osc-dim", dims[idx] == 2 * n - 1, where(idx));
        }
        for (std::size_t i = 0; i < n; ++i)
          if (c[2][i]) L.record("uninflected-iff-curves-uninflected", flexed[i], where(i));
      }
    }
  }

  for (std::size_t k = kMinOrder; k <= kMaxOrder; ++k) {
    if (!sampled_max.count(k)) continue;
    L.record("generic-osc-dim-attained", sampled_max[k] == generic[k],
             "k=" + std::to_string(k) + " sampled max " + std::to_string(sampled_max[k]) + " vs s(k)=" +
                 std::to_string(generic[k]));
  }

  report.statements = std::move(L.results);
  return report;
}

}  // namespace oscroll::scrolls
