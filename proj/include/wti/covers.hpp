#ifndef WTI_COVERS_HPP
#define WTI_COVERS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wti/increasing.hpp"

namespace wti {

bool is_vertex_cover(const WeightedGraph& g, const VertexSet& C);

/// All vertex covers (or only the inclusion-minimal ones), canonically
/// sorted. Enumeration is over all 2^n subsets; graphs with more than 24
/// vertices are rejected.
std::vector<VertexSet> enumerate_vertex_covers(const WeightedGraph& g,
                                               bool minimal_only);

/// Minimum weight from u into the independent set S.
std::uint64_t nu(const WeightedGraph& g, const VertexSet& S, VertexId u);

/// The reduced graph on V \ S: starting from G \ S, an edge uz is dropped
/// whenever an endpoint lies in N_G(S) and the edge weighs at least nu there.
/// Both endpoints are tested.
WeightedGraph build_G_S(const WeightedGraph& g, const VertexSet& S);

/// A connected component of the reduced graph, tagged with the unique
/// N_G(S)-vertex it contains, if any. `root` is a vertex of `subtree`.
struct RootedComponent {
  WeightedGraph subtree;
  std::optional<VertexId> root;
};

/// Components of build_G_S with their roots. A component holding two
/// N_G(S)-vertices is structurally impossible for an increasing tree and
/// reported as multiple_roots.
std::vector<RootedComponent> decompose(const WeightedGraph& g, const VertexSet& S);

struct CoverReport {
  VertexSet cover;        // C
  VertexSet complement;   // S = V \ C, an independent set
  VertexSet neighborhood; // N_G(S)
  std::vector<std::pair<VertexId, std::uint64_t>> nu; // on N_G(S), sorted
  std::vector<RootedComponent> components;
  bool strong = false;
  bool full_cover = false; // C == V(G); strong is false and s is 0 by convention
  VertexSet special;       // union over rooted components, in G's vertex ids
  std::size_t s = 0;       // == special.size()
};

/// Full cover analysis. Strong means every component of the reduced graph
/// carries a root, equivalently #components == |N_G(S)|; minimal covers
/// satisfy this automatically. s is the total special-vertex count
/// sum over rooted components.
CoverReport analyze_cover(const WeightedGraph& g, const VertexSet& C);

/// Literal reading of the strong-cover condition: C is minimal, or every
/// w in C \ N_G(S) reaches some x in N_G(S) along a path whose interior
/// avoids N_G(S) and whose last edge weighs less than nu at x. Exists only
/// to cross-check analyze_cover.
bool is_strong_cover_by_definition(const WeightedGraph& g, const VertexSet& C);

namespace detail {
// Skips the increasing-tree validation; for enumeration loops that have
// already checked it once.
CoverReport analyze_cover_unchecked(const WeightedGraph& g, const VertexSet& C);
} // namespace detail

} // namespace wti

#endif
