#ifndef WTI_GRAPH_HPP
#define WTI_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wti/error.hpp"

namespace wti {

/// Dense internal vertex handle. Labels are the external identity; indices
/// follow the graph's declared vertex order and are stable after build.
struct VertexId {
  std::uint32_t index = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

/// Canonically ordered vertex set (sorted unique indices). The ordering
/// between two sets is graded: smaller sets first, ties broken
/// lexicographically by index sequence. All result lists in the library are
/// sorted by this order so outputs are byte-deterministic.
class VertexSet {
public:
  VertexSet() = default;
  explicit VertexSet(std::vector<VertexId> ids);
  static VertexSet from_mask(std::uint64_t mask);

  bool contains(VertexId v) const;
  bool subset_of(const VertexSet& other) const;
  std::uint64_t to_mask() const; // requires all indices < 64

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  const std::vector<VertexId>& ids() const noexcept { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend bool operator<(const VertexSet& a, const VertexSet& b);

private:
  std::vector<VertexId> ids_;
};

struct WeightedEdge {
  VertexId u;
  VertexId v;
  std::uint64_t w = 1;
};

struct Neighbor {
  VertexId to;
  std::uint64_t w;
};

/// An edge spec by external labels, used by the builder and the file parsers.
struct EdgeSpec {
  std::string u;
  std::string v;
  std::uint64_t w = 1;
};

/// Immutable edge-weighted simple graph. Vertices keep their declared order;
/// edges are normalized (u < v) and sorted; adjacency lists are sorted by
/// neighbor index. Weights are positive 64-bit integers.
class WeightedGraph {
public:
  /// Validating builder. Rejects duplicate labels/edges, self-loops,
  /// endpoints that were not declared, and zero weights.
  static WeightedGraph build(const std::vector<std::string>& vertices,
                             const std::vector<EdgeSpec>& edges);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(VertexId v) const;
  VertexId vertex(std::string_view label) const; // throws unknown_vertex
  std::optional<VertexId> find_vertex(std::string_view label) const noexcept;

  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> adjacent(VertexId u) const;
  std::optional<std::uint64_t> edge_weight(VertexId u, VertexId v) const;

  VertexSet neighbors(VertexId u) const;
  std::size_t degree(VertexId u) const;
  VertexSet leaves() const;
  VertexSet leaf_neighbors(VertexId u) const; // L_G(u)
  VertexSet all_vertices() const;

  bool is_tree() const;
  bool is_connected() const;

  /// Unique simple path in a tree, endpoints included ([u] when u == v).
  std::vector<VertexId> unique_path(VertexId u, VertexId v) const;

  /// Subgraph induced on W: exactly the edges with both endpoints in W,
  /// weights preserved. Vertex order of the result is the restriction of
  /// this graph's order.
  WeightedGraph induced_subgraph(const VertexSet& W) const;

  std::vector<VertexSet> connected_components() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&);

private:
  WeightedGraph() = default;

  void check_vertex(VertexId v) const;

  std::vector<std::string> labels_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

} // namespace wti

#endif
