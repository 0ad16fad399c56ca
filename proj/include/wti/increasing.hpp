#ifndef WTI_INCREASING_HPP
#define WTI_INCREASING_HPP

#include <span>

#include "wti/graph.hpp"

namespace wti {

/// True iff successive edge weights along the path never decrease
/// (never stay equal either, when strict). Paths with at most one edge are
/// vacuously increasing. Throws not_a_path if consecutive entries are not
/// adjacent or a vertex repeats.
bool is_increasing_path(const WeightedGraph& g, std::span<const VertexId> path,
                        bool strict = false);

/// All vertices v such that every leaf-to-v simple path is increasing.
/// Nonempty exactly when the tree is an increasing weighted tree; the
/// one-vertex tree yields its single vertex. Brute force over
/// (candidate, leaf) pairs; trees here are desk-sized.
VertexSet valid_roots(const WeightedGraph& g); // throws not_a_tree

bool is_increasing_tree(const WeightedGraph& g);

/// A weighted tree together with a verified root: construction checks that
/// every leaf-to-root path is increasing.
class RootedIncreasingTree {
public:
  RootedIncreasingTree(WeightedGraph tree, VertexId root);

  const WeightedGraph& tree() const noexcept { return tree_; }
  VertexId root() const noexcept { return root_; }

private:
  WeightedGraph tree_;
  VertexId root_;
};

/// Vertices w (never the root) having a neighbor u, distinct from the next
/// vertex x on the path from w to the root, with weight(uw) == weight(wx).
/// Equivalent on trees to the path-based description: some simple path to
/// the root enters w over an edge of the same weight as the one it leaves by.
VertexSet special_vertices_rooted(const RootedIncreasingTree& t);
std::size_t special_count_rooted(const RootedIncreasingTree& t);

/// Largest weight incident to x. Throws isolated_vertex when deg(x) == 0.
std::uint64_t mu(const WeightedGraph& g, VertexId x);

} // namespace wti

#endif
