#include "wti/graph.hpp"

#include <algorithm>

namespace wti {

const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::duplicate_vertex: return "DuplicateVertex";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::self_loop: return "SelfLoop";
    case errc::unknown_endpoint: return "UnknownEndpoint";
    case errc::nonpositive_weight: return "NonpositiveWeight";
    case errc::unknown_vertex: return "UnknownVertex";
    case errc::not_a_tree: return "NotATree";
    case errc::not_a_path: return "NotAPath";
    case errc::isolated_vertex: return "IsolatedVertex";
    case errc::not_independent: return "NotIndependent";
    case errc::not_in_neighborhood: return "NotInNeighborhood";
    case errc::not_increasing_tree: return "NotIncreasingTree";
    case errc::multiple_roots: return "MultipleRoots";
    case errc::not_a_cover: return "NotACover";
    case errc::invalid_power: return "InvalidPower";
    case errc::overflow: return "Overflow";
    case errc::ambient_mismatch: return "AmbientMismatch";
    case errc::zero_ideal: return "ZeroIdeal";
    case errc::unit_ideal: return "UnitIdeal";
    case errc::search_space_too_large: return "SearchSpaceTooLarge";
    case errc::trivial_tree: return "TrivialTree";
    case errc::too_many_vertices: return "TooManyVertices";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  for (std::uint32_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) s.ids_.push_back(VertexId{i});
  return s;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

std::uint64_t VertexSet::to_mask() const {
  std::uint64_t m = 0;
  for (VertexId v : ids_) {
    if (v.index >= 64) fail(errc::too_many_vertices, "mask limited to 64 vertices");
    m |= std::uint64_t{1} << v.index;
  }
  return m;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.ids_ < b.ids_;
}

WeightedGraph WeightedGraph::build(const std::vector<std::string>& vertices,
                                   const std::vector<EdgeSpec>& edges) {
  WeightedGraph g;
  g.labels_ = vertices;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto [it, fresh] = g.index_.emplace(vertices[i], static_cast<std::uint32_t>(i));
    if (!fresh) fail(errc::duplicate_vertex, "vertex '" + vertices[i] + "' declared twice");
  }
  g.adj_.resize(vertices.size());
  for (const EdgeSpec& e : edges) {
    auto iu = g.index_.find(e.u);
    auto iv = g.index_.find(e.v);
    if (iu == g.index_.end()) fail(errc::unknown_endpoint, "edge endpoint '" + e.u + "' not declared");
    if (iv == g.index_.end()) fail(errc::unknown_endpoint, "edge endpoint '" + e.v + "' not declared");
    if (iu->second == iv->second) fail(errc::self_loop, "self-loop at '" + e.u + "'");
    if (e.w == 0) fail(errc::nonpositive_weight, "edge " + e.u + " " + e.v + " has weight 0");
    VertexId a{std::min(iu->second, iv->second)};
    VertexId b{std::max(iu->second, iv->second)};
    for (const Neighbor& nb : g.adj_[a.index])
      if (nb.to == b) fail(errc::duplicate_edge, "edge " + e.u + " " + e.v + " declared twice");
    g.edges_.push_back(WeightedEdge{a, b, e.w});
    g.adj_[a.index].push_back(Neighbor{b, e.w});
    g.adj_[b.index].push_back(Neighbor{a, e.w});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const WeightedEdge& x, const WeightedEdge& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
  for (auto& lst : g.adj_)
    std::sort(lst.begin(), lst.end(),
              [](const Neighbor& x, const Neighbor& y) { return x.to < y.to; });
  return g;
}

void WeightedGraph::check_vertex(VertexId v) const {
  if (v.index >= labels_.size())
    fail(errc::unknown_vertex, "vertex index " + std::to_string(v.index) + " out of range");
}

const std::string& WeightedGraph::label(VertexId v) const {
  check_vertex(v);
  return labels_[v.index];
}

VertexId WeightedGraph::vertex(std::string_view label) const {
  auto v = find_vertex(label);
  if (!v) fail(errc::unknown_vertex, "no vertex '" + std::string(label) + "'");
  return *v;
}

std::optional<VertexId> WeightedGraph::find_vertex(std::string_view label) const noexcept {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return VertexId{it->second};
}

std::span<const Neighbor> WeightedGraph::adjacent(VertexId u) const {
  check_vertex(u);
  return adj_[u.index];
}

std::optional<std::uint64_t> WeightedGraph::edge_weight(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  for (const Neighbor& nb : adj_[u.index])
    if (nb.to == v) return nb.w;
  return std::nullopt;
}

VertexSet WeightedGraph::neighbors(VertexId u) const {
  check_vertex(u);
  std::vector<VertexId> out;
  out.reserve(adj_[u.index].size());
  for (const Neighbor& nb : adj_[u.index]) out.push_back(nb.to);
  return VertexSet(std::move(out));
}

std::size_t WeightedGraph::degree(VertexId u) const {
  check_vertex(u);
  return adj_[u.index].size();
}

VertexSet WeightedGraph::leaves() const {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < labels_.size(); ++i)
    if (adj_[i].size() == 1) out.push_back(VertexId{i});
  return VertexSet(std::move(out));
}

VertexSet WeightedGraph::leaf_neighbors(VertexId u) const {
  check_vertex(u);
  std::vector<VertexId> out;
  for (const Neighbor& nb : adj_[u.index])
    if (adj_[nb.to.index].size() == 1) out.push_back(nb.to);
  return VertexSet(std::move(out));
}

VertexSet WeightedGraph::all_vertices() const {
  std::vector<VertexId> out;
  out.reserve(labels_.size());
  for (std::uint32_t i = 0; i < labels_.size(); ++i) out.push_back(VertexId{i});
  return VertexSet(std::move(out));
}

bool WeightedGraph::is_connected() const {
  if (labels_.empty()) return true;
  std::vector<char> seen(labels_.size(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::uint32_t u = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : adj_[u])
      if (!seen[nb.to.index]) {
        seen[nb.to.index] = 1;
        ++reached;
        stack.push_back(nb.to.index);
      }
  }
  return reached == labels_.size();
}

bool WeightedGraph::is_tree() const {
  return !labels_.empty() && edges_.size() == labels_.size() - 1 && is_connected();
}

std::vector<VertexId> WeightedGraph::unique_path(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (!is_tree()) fail(errc::not_a_tree, "unique_path requires a tree");
  if (u == v) return {u};
  // BFS parents from u; trees are small enough that this is never hot.
  constexpr std::uint32_t kNone = 0xffffffffu;
  std::vector<std::uint32_t> parent(labels_.size(), kNone);
  std::vector<std::uint32_t> queue{u.index};
  parent[u.index] = u.index;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t p = queue[head];
    if (p == v.index) break;
    for (const Neighbor& nb : adj_[p])
      if (parent[nb.to.index] == kNone) {
        parent[nb.to.index] = p;
        queue.push_back(nb.to.index);
      }
  }
  std::vector<VertexId> path;
  std::uint32_t cur = v.index;
  while (cur != u.index) {
    path.push_back(VertexId{cur});
    cur = parent[cur];
  }
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

WeightedGraph WeightedGraph::induced_subgraph(const VertexSet& W) const {
  std::vector<std::string> labels;
  labels.reserve(W.size());
  for (VertexId v : W) {
    check_vertex(v);
    labels.push_back(labels_[v.index]);
  }
  std::vector<EdgeSpec> edges;
  for (const WeightedEdge& e : edges_)
    if (W.contains(e.u) && W.contains(e.v))
      edges.push_back(EdgeSpec{labels_[e.u.index], labels_[e.v.index], e.w});
  return build(labels, edges);
}

std::vector<VertexSet> WeightedGraph::connected_components() const {
  std::vector<char> seen(labels_.size(), 0);
  std::vector<VertexSet> out;
  for (std::uint32_t s = 0; s < labels_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    std::vector<std::uint32_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::uint32_t u = stack.back();
      stack.pop_back();
      comp.push_back(VertexId{u});
      for (const Neighbor& nb : adj_[u])
        if (!seen[nb.to.index]) {
          seen[nb.to.index] = 1;
          stack.push_back(nb.to.index);
        }
    }
    out.push_back(VertexSet(std::move(comp)));
  }
  return out;
}

bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.labels_ != b.labels_) return false;
  if (a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const WeightedEdge& x = a.edges_[i];
    const WeightedEdge& y = b.edges_[i];
    if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
  }
  return true;
}

} // namespace wti
