#ifndef WTI_RANDOM_TREE_HPP
#define WTI_RANDOM_TREE_HPP

#include "wti/graph.hpp"

namespace wti {

struct RandomTreeResult {
  WeightedGraph tree;
  std::uint64_t resamples = 0; // rejected draws before the returned one
};

/// Uniformly random labeled tree on vertices x1..xn (decoded from a uniform
/// Prüfer sequence) with i.i.d. weights in [1, wmax]. With increasing_only,
/// whole draws are rejected until the tree is an increasing weighted tree;
/// rejection keeps the distribution the uniform one conditioned on that
/// event. Fully determined by the seed.
RandomTreeResult random_weighted_tree(std::uint32_t n, std::uint64_t wmax,
                                      std::uint64_t seed, bool increasing_only);

} // namespace wti

#endif
