// Shared fixtures and instance generators for the test suites.
#ifndef WTI_TESTS_SUPPORT_HPP
#define WTI_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wti/graph.hpp"

namespace wti::testing {

inline std::vector<std::string> x_labels(std::uint32_t n) {
  std::vector<std::string> v;
  for (std::uint32_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

/// Path x1-...-xn with the given n-1 weights.
inline WeightedGraph path(const std::vector<std::uint64_t>& weights) {
  auto labels = x_labels(static_cast<std::uint32_t>(weights.size() + 1));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < weights.size(); ++i)
    edges.push_back(EdgeSpec{labels[i], labels[i + 1], weights[i]});
  return WeightedGraph::build(labels, edges);
}

inline WeightedGraph p4() { return path({1, 1, 2}); }          // increasing
inline WeightedGraph p5_3223() { return path({3, 2, 2, 3}); }  // not increasing
inline WeightedGraph e2() { return path({2}); }                // single edge

/// Center v with leaves a (weight 1) and b (weight 2).
inline WeightedGraph star_vab() {
  return WeightedGraph::build({"v", "a", "b"},
                              {EdgeSpec{"v", "a", 1}, EdgeSpec{"v", "b", 2}});
}

inline WeightedGraph trivial_tree() { return WeightedGraph::build({"x1"}, {}); }

inline VertexSet set_of(const WeightedGraph& g, const std::vector<std::string>& labels) {
  std::vector<VertexId> ids;
  for (const auto& l : labels) ids.push_back(g.vertex(l));
  return VertexSet(std::move(ids));
}

/// Decode a Prüfer sequence over vertices 0..n-1 into tree edges.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> prufer_decode(
    const std::vector<std::uint32_t>& seq) {
  const std::uint32_t n = static_cast<std::uint32_t>(seq.size() + 2);
  std::vector<std::uint32_t> deg(n, 1);
  for (std::uint32_t s : seq) ++deg[s];
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<char> used(n, 0);
  for (std::uint32_t s : seq) {
    std::uint32_t leaf = 0;
    while (deg[leaf] != 1 || used[leaf]) ++leaf;
    edges.emplace_back(leaf, s);
    used[leaf] = 1;
    --deg[s];
  }
  std::uint32_t a = 0;
  while (deg[a] != 1 || used[a]) ++a;
  std::uint32_t b = a + 1;
  while (deg[b] != 1 || used[b]) ++b;
  edges.emplace_back(a, b);
  return edges;
}

/// Every labeled tree on n >= 2 vertices exactly once (all n^(n-2) Prüfer
/// sequences), with every weight assignment in [1, wmax]^(n-1).
inline void for_each_weighted_tree(std::uint32_t n, std::uint64_t wmax,
                                   const std::function<void(const WeightedGraph&)>& fn) {
  auto labels = x_labels(n);
  std::vector<std::uint32_t> seq(n >= 2 ? n - 2 : 0, 0);
  while (true) {
    auto skeleton = prufer_decode(seq);
    std::vector<std::uint64_t> w(n - 1, 1);
    while (true) {
      std::vector<EdgeSpec> edges;
      for (std::size_t i = 0; i < skeleton.size(); ++i)
        edges.push_back(
            EdgeSpec{labels[skeleton[i].first], labels[skeleton[i].second], w[i]});
      fn(WeightedGraph::build(labels, edges));
      std::size_t i = 0;
      while (i < w.size() && w[i] == wmax) w[i++] = 1;
      if (i == w.size()) break;
      ++w[i];
    }
    std::size_t i = 0;
    while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
    if (i == seq.size()) break;
    ++seq[i];
  }
}

} // namespace wti::testing

#endif
