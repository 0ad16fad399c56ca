#include "wti/assoc.hpp"

#include <algorithm>

namespace wti {

namespace {

void require_increasing(const WeightedGraph& g) {
  if (!is_increasing_tree(g))
    fail(errc::not_increasing_tree, "the formula side requires an increasing weighted tree");
}

void require_power(std::uint64_t t) {
  if (t < 1) fail(errc::invalid_power, "power must be >= 1");
}

// Sweep all covers of an increasing tree, reporting each with its analysis.
template <typename Fn>
void for_each_cover(const WeightedGraph& g, Fn&& fn) {
  const std::size_t n = g.vertex_count();
  if (n > 24)
    fail(errc::too_many_vertices,
         "cover sweep capped at 24 vertices, got " + std::to_string(n));
  std::vector<std::uint32_t> edge_masks;
  for (const WeightedEdge& e : g.edges())
    edge_masks.push_back((1u << e.u.index) | (1u << e.v.index));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool covers = true;
    for (std::uint32_t em : edge_masks)
      if ((mask & em) == 0) {
        covers = false;
        break;
      }
    if (!covers) continue;
    fn(detail::analyze_cover_unchecked(g, VertexSet::from_mask(mask)));
  }
}

} // namespace

bool is_associated(const WeightedGraph& g, const VertexSet& C, std::uint64_t t) {
  require_power(t);
  require_increasing(g);
  if (!is_vertex_cover(g, C)) fail(errc::not_a_cover, "C misses an edge");
  if (g.edge_count() == 0) return false; // zero ideal
  CoverReport r = detail::analyze_cover_unchecked(g, C);
  return r.strong && r.s + 1 <= t;
}

AssResult ass_power(const WeightedGraph& g, std::uint64_t t) {
  require_power(t);
  require_increasing(g);
  AssResult result;
  result.t = t;
  if (g.edge_count() == 0) return result;
  for_each_cover(g, [&](const CoverReport& r) {
    if (r.strong && r.s + 1 <= t) result.primes.push_back(r.cover);
  });
  std::sort(result.primes.begin(), result.primes.end());
  return result;
}

std::vector<VertexSet> ass_infinity(const WeightedGraph& g) {
  return astab(g).ass_infinity;
}

StabilityReport astab(const WeightedGraph& g) {
  require_increasing(g);
  if (g.edge_count() == 0)
    fail(errc::trivial_tree, "astab of the zero ideal is undefined");
  StabilityReport report;
  report.astab = 1; // minimal covers are strong with s = 0
  for_each_cover(g, [&](const CoverReport& r) {
    if (!r.strong) return;
    report.ass_infinity.push_back(r.cover);
    report.per_cover.emplace_back(r.cover, r.s + 1);
    report.astab = std::max<std::uint64_t>(report.astab, r.s + 1);
  });
  std::sort(report.ass_infinity.begin(), report.ass_infinity.end());
  std::sort(report.per_cover.begin(), report.per_cover.end());
  return report;
}

} // namespace wti
