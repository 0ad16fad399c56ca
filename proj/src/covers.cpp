#include "wti/covers.hpp"

#include <algorithm>

namespace wti {

namespace {

void check_subset(const WeightedGraph& g, const VertexSet& W) {
  for (VertexId v : W)
    if (v.index >= g.vertex_count())
      fail(errc::unknown_vertex, "vertex index " + std::to_string(v.index) + " out of range");
}

bool is_independent(const WeightedGraph& g, const VertexSet& S) {
  for (const WeightedEdge& e : g.edges())
    if (S.contains(e.u) && S.contains(e.v)) return false;
  return true;
}

void check_independent(const WeightedGraph& g, const VertexSet& S) {
  check_subset(g, S);
  if (!is_independent(g, S))
    fail(errc::not_independent, "S contains both endpoints of an edge");
}

VertexSet neighborhood_of(const WeightedGraph& g, const VertexSet& S) {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
    VertexId u{i};
    if (S.contains(u)) continue;
    for (const Neighbor& nb : g.adjacent(u))
      if (S.contains(nb.to)) {
        out.push_back(u);
        break;
      }
  }
  return VertexSet(std::move(out));
}

std::uint64_t nu_unchecked(const WeightedGraph& g, const VertexSet& S, VertexId u) {
  std::uint64_t best = 0;
  bool found = false;
  for (const Neighbor& nb : g.adjacent(u))
    if (S.contains(nb.to) && (!found || nb.w < best)) {
      best = nb.w;
      found = true;
    }
  if (!found) fail(errc::not_in_neighborhood, g.label(u) + " has no neighbor in S");
  return best;
}

} // namespace

bool is_vertex_cover(const WeightedGraph& g, const VertexSet& C) {
  check_subset(g, C);
  for (const WeightedEdge& e : g.edges())
    if (!C.contains(e.u) && !C.contains(e.v)) return false;
  return true;
}

std::vector<VertexSet> enumerate_vertex_covers(const WeightedGraph& g,
                                               bool minimal_only) {
  const std::size_t n = g.vertex_count();
  if (n > 24)
    fail(errc::too_many_vertices,
         "cover enumeration capped at 24 vertices, got " + std::to_string(n));
  std::vector<std::uint32_t> edge_masks;
  edge_masks.reserve(g.edge_count());
  for (const WeightedEdge& e : g.edges())
    edge_masks.push_back((1u << e.u.index) | (1u << e.v.index));

  auto covers = [&](std::uint32_t mask) {
    for (std::uint32_t em : edge_masks)
      if ((mask & em) == 0) return false;
    return true;
  };
  // mask is a minimal cover iff dropping any of its vertices uncovers an edge
  auto minimal = [&](std::uint32_t mask) {
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      std::uint32_t v = rest & (~rest + 1);
      if (covers(mask & ~v)) return false;
    }
    return true;
  };

  std::vector<VertexSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!covers(mask)) continue;
    if (minimal_only && !minimal(mask)) continue;
    out.push_back(VertexSet::from_mask(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t nu(const WeightedGraph& g, const VertexSet& S, VertexId u) {
  check_independent(g, S);
  g.label(u); // bounds check
  return nu_unchecked(g, S, u);
}

WeightedGraph build_G_S(const WeightedGraph& g, const VertexSet& S) {
  check_independent(g, S);
  VertexSet nbhd = neighborhood_of(g, S);
  std::vector<std::uint64_t> nu_at(g.vertex_count(), 0);
  for (VertexId u : nbhd) nu_at[u.index] = nu_unchecked(g, S, u);

  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
    if (!S.contains(VertexId{i})) labels.push_back(g.labels()[i]);

  std::vector<EdgeSpec> edges;
  for (const WeightedEdge& e : g.edges()) {
    if (S.contains(e.u) || S.contains(e.v)) continue;
    if (nbhd.contains(e.u) && e.w >= nu_at[e.u.index]) continue;
    if (nbhd.contains(e.v) && e.w >= nu_at[e.v.index]) continue;
    edges.push_back(EdgeSpec{g.label(e.u), g.label(e.v), e.w});
  }
  return WeightedGraph::build(labels, edges);
}

std::vector<RootedComponent> decompose(const WeightedGraph& g, const VertexSet& S) {
  if (!is_increasing_tree(g))
    fail(errc::not_increasing_tree, "decompose requires an increasing weighted tree");
  check_independent(g, S);
  std::vector<VertexId> cover_ids;
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
    if (!S.contains(VertexId{i})) cover_ids.push_back(VertexId{i});
  return detail::analyze_cover_unchecked(g, VertexSet(std::move(cover_ids))).components;
}

namespace detail {

CoverReport analyze_cover_unchecked(const WeightedGraph& g, const VertexSet& C) {
  if (!is_vertex_cover(g, C)) fail(errc::not_a_cover, "C misses an edge");
  CoverReport r;
  r.cover = C;
  std::vector<VertexId> comp_ids;
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
    if (!C.contains(VertexId{i})) comp_ids.push_back(VertexId{i});
  r.complement = VertexSet(std::move(comp_ids));
  r.full_cover = r.complement.empty() && g.vertex_count() > 0;
  r.neighborhood = neighborhood_of(g, r.complement);
  for (VertexId u : r.neighborhood)
    r.nu.emplace_back(u, nu_unchecked(g, r.complement, u));

  WeightedGraph gs = build_G_S(g, r.complement);
  std::vector<VertexId> specials;
  std::size_t rooted = 0;
  for (const VertexSet& comp : gs.connected_components()) {
    WeightedGraph sub = gs.induced_subgraph(comp);
    std::optional<VertexId> root;
    for (std::uint32_t i = 0; i < sub.vertex_count(); ++i) {
      VertexId orig = g.vertex(sub.labels()[i]);
      if (!r.neighborhood.contains(orig)) continue;
      if (root)
        fail(errc::multiple_roots,
             "component holds both " + sub.label(*root) + " and " + sub.labels()[i]);
      root = VertexId{i};
    }
    if (root) {
      ++rooted;
      // a rooted component of an increasing tree is itself increasing;
      // construction re-verifies that
      RootedIncreasingTree rit(sub, *root);
      for (VertexId w : special_vertices_rooted(rit))
        specials.push_back(g.vertex(rit.tree().labels()[w.index]));
    }
    r.components.push_back(RootedComponent{std::move(sub), root});
  }
  r.strong = !r.full_cover && rooted == r.components.size() &&
             r.components.size() == r.neighborhood.size();
  r.special = VertexSet(std::move(specials));
  r.s = r.special.size();
  return r;
}

} // namespace detail

CoverReport analyze_cover(const WeightedGraph& g, const VertexSet& C) {
  if (!is_increasing_tree(g))
    fail(errc::not_increasing_tree, "analyze_cover requires an increasing weighted tree");
  return detail::analyze_cover_unchecked(g, C);
}

bool is_strong_cover_by_definition(const WeightedGraph& g, const VertexSet& C) {
  if (!is_increasing_tree(g))
    fail(errc::not_increasing_tree,
         "is_strong_cover_by_definition requires an increasing weighted tree");
  if (!is_vertex_cover(g, C)) fail(errc::not_a_cover, "C misses an edge");
  if (C.size() == g.vertex_count()) return false; // C != V required

  std::vector<VertexId> s_ids;
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i)
    if (!C.contains(VertexId{i})) s_ids.push_back(VertexId{i});
  VertexSet S(std::move(s_ids));

  // minimal <=> no member is redundant
  bool minimal = true;
  for (VertexId v : C) {
    std::vector<VertexId> rest;
    for (VertexId u : C)
      if (u != v) rest.push_back(u);
    if (is_vertex_cover(g, VertexSet(std::move(rest)))) {
      minimal = false;
      break;
    }
  }
  if (minimal) return true;

  VertexSet nbhd = neighborhood_of(g, S);
  for (VertexId w : C) {
    if (nbhd.contains(w)) continue;
    bool reached = false;
    for (VertexId x : nbhd) {
      auto path = g.unique_path(w, x); // w ... x, interior must avoid N_G(S)
      bool interior_clear = true;
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (nbhd.contains(path[i])) {
          interior_clear = false;
          break;
        }
      if (!interior_clear) continue;
      std::uint64_t last = *g.edge_weight(path[path.size() - 2], path.back());
      if (last < nu_unchecked(g, S, x)) {
        reached = true;
        break;
      }
    }
    if (!reached) return false;
  }
  return true;
}

} // namespace wti
