#include "wti/increasing.hpp"

#include <algorithm>

namespace wti {

bool is_increasing_path(const WeightedGraph& g, std::span<const VertexId> path,
                        bool strict) {
  std::vector<VertexId> seen(path.begin(), path.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    fail(errc::not_a_path, "repeated vertex");
  std::vector<std::uint64_t> w;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto ew = g.edge_weight(path[i], path[i + 1]);
    if (!ew)
      fail(errc::not_a_path, g.label(path[i]) + " and " + g.label(path[i + 1]) +
                                 " are not adjacent");
    w.push_back(*ew);
  }
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (strict ? w[i] >= w[i + 1] : w[i] > w[i + 1]) return false;
  }
  return true;
}

VertexSet valid_roots(const WeightedGraph& g) {
  if (!g.is_tree()) fail(errc::not_a_tree, "valid_roots requires a tree");
  VertexSet lv = g.leaves();
  std::vector<VertexId> roots;
  for (std::uint32_t c = 0; c < g.vertex_count(); ++c) {
    VertexId cand{c};
    bool ok = true;
    for (VertexId leaf : lv) {
      if (leaf == cand) continue;
      auto path = g.unique_path(leaf, cand);
      if (!is_increasing_path(g, path, false)) {
        ok = false;
        break;
      }
    }
    if (ok) roots.push_back(cand);
  }
  return VertexSet(std::move(roots));
}

bool is_increasing_tree(const WeightedGraph& g) {
  return g.is_tree() && !valid_roots(g).empty();
}

RootedIncreasingTree::RootedIncreasingTree(WeightedGraph tree, VertexId root)
    : tree_(std::move(tree)), root_(root) {
  if (!tree_.is_tree())
    fail(errc::not_increasing_tree, "rooted tree construction on a non-tree");
  tree_.label(root_); // bounds check
  for (VertexId leaf : tree_.leaves()) {
    if (leaf == root_) continue;
    auto path = tree_.unique_path(leaf, root_);
    if (!is_increasing_path(tree_, path, false))
      fail(errc::not_increasing_tree,
           "path from leaf " + tree_.label(leaf) + " to " + tree_.label(root_) +
               " is not increasing");
  }
}

VertexSet special_vertices_rooted(const RootedIncreasingTree& t) {
  const WeightedGraph& g = t.tree();
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
    VertexId w{i};
    if (w == t.root()) continue;
    auto to_root = g.unique_path(w, t.root());
    VertexId x = to_root[1]; // next vertex toward the root
    std::uint64_t wx = *g.edge_weight(w, x);
    for (const Neighbor& nb : g.adjacent(w)) {
      if (nb.to == x) continue;
      if (nb.w == wx) {
        out.push_back(w);
        break;
      }
    }
  }
  return VertexSet(std::move(out));
}

std::size_t special_count_rooted(const RootedIncreasingTree& t) {
  return special_vertices_rooted(t).size();
}

std::uint64_t mu(const WeightedGraph& g, VertexId x) {
  auto nbs = g.adjacent(x);
  if (nbs.empty()) fail(errc::isolated_vertex, "mu undefined at isolated " + g.label(x));
  std::uint64_t best = 0;
  for (const Neighbor& nb : nbs) best = std::max(best, nb.w);
  return best;
}

} // namespace wti
