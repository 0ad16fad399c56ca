#include "wti/random_tree.hpp"

#include <random>

#include "wti/increasing.hpp"

namespace wti {

namespace {

// mt19937_64 output is pinned by the standard; rejection keeps the draw
// unbiased, so generated trees are identical across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

WeightedGraph draw(std::mt19937_64& rng, std::uint32_t n, std::uint64_t wmax) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));

  // Prüfer decode
  std::vector<std::uint32_t> seq(n >= 2 ? n - 2 : 0);
  for (auto& s : seq) s = static_cast<std::uint32_t>(bounded(rng, n));
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
  while (b < n && (deg[b] != 1 || used[b])) ++b;
  edges.emplace_back(a, b);

  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (auto [u, v] : edges)
    specs.push_back(EdgeSpec{labels[u], labels[v], 1 + bounded(rng, wmax)});
  return WeightedGraph::build(labels, specs);
}

} // namespace

RandomTreeResult random_weighted_tree(std::uint32_t n, std::uint64_t wmax,
                                      std::uint64_t seed, bool increasing_only) {
  if (n < 2) fail(errc::invalid_argument, "random trees need n >= 2");
  if (wmax < 1) fail(errc::invalid_argument, "wmax must be >= 1");
  std::mt19937_64 rng(seed);
  RandomTreeResult result{draw(rng, n, wmax), 0};
  while (increasing_only && !is_increasing_tree(result.tree)) {
    ++result.resamples;
    result.tree = draw(rng, n, wmax);
  }
  return result;
}

} // namespace wti
