#ifndef WTI_ASSOC_HPP
#define WTI_ASSOC_HPP

#include "wti/covers.hpp"

namespace wti {

/// Whether (C) is an associated prime of the t-th power of the weighted edge
/// ideal of an increasing weighted tree: true iff C is a strong vertex cover
/// with s(C) + 1 <= t. The full vertex set is never associated, and a tree
/// without edges has no associated primes at all.
bool is_associated(const WeightedGraph& g, const VertexSet& C, std::uint64_t t);

struct AssResult {
  std::uint64_t t = 1;
  std::vector<VertexSet> primes; // canonically sorted supports
};

/// All covers whose prime is associated to the t-th power, by sweeping the
/// 2^n subsets (n <= 24).
AssResult ass_power(const WeightedGraph& g, std::uint64_t t);

/// The stable set: all strong vertex covers.
std::vector<VertexSet> ass_infinity(const WeightedGraph& g);

struct StabilityReport {
  std::uint64_t astab = 1;
  std::vector<VertexSet> ass_infinity;
  /// strong cover -> first power at which it appears (s(C) + 1)
  std::vector<std::pair<VertexSet, std::uint64_t>> per_cover;
};

/// astab = max of s(C) + 1 over strong covers; requires at least one edge.
StabilityReport astab(const WeightedGraph& g);

} // namespace wti

#endif
