#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"
#include "wti/increasing.hpp"
#include "wti/oracle.hpp"

using namespace wti;
using namespace wti::testing;

namespace {

Monomial mono(std::vector<std::uint64_t> e) { return Monomial(std::move(e)); }

std::vector<VertexSet> prime_sets(const std::vector<PrimeSupport>& ps) {
  std::vector<VertexSet> out;
  for (const auto& p : ps) out.push_back(p.variables);
  return out;
}

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t k,
                           std::uint64_t emax) {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint64_t> e(n, 0);
    bool nonzero = false;
    for (auto& x : e) {
      x = rng() % (emax + 1);
      nonzero = nonzero || x > 0;
    }
    if (!nonzero) e[rng() % n] = 1 + rng() % emax;
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(x_labels(static_cast<std::uint32_t>(n)), std::move(gens));
}

WeightedGraph random_increasing_tree(std::mt19937_64& rng, std::uint32_t n,
                                     std::uint64_t wmax) {
  while (true) {
    std::vector<std::uint32_t> seq(n >= 2 ? n - 2 : 0);
    for (auto& s : seq) s = static_cast<std::uint32_t>(rng() % n);
    auto labels = x_labels(n);
    std::vector<EdgeSpec> edges;
    for (auto [u, v] : prufer_decode(seq))
      edges.push_back(EdgeSpec{labels[u], labels[v], 1 + rng() % wmax});
    WeightedGraph g = WeightedGraph::build(labels, edges);
    if (is_increasing_tree(g)) return g;
  }
}

// Pads I into a larger ambient at the given variable offset.
MonomialIdeal embed(const MonomialIdeal& i, std::uint32_t total, std::uint32_t offset) {
  std::vector<Monomial> gens;
  for (const Monomial& g : i.gens()) {
    std::vector<std::uint64_t> e(total, 0);
    for (std::size_t j = 0; j < g.nvars(); ++j) e[offset + j] = g.deg(j);
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal(x_labels(total), std::move(gens));
}

VertexSet shift(const VertexSet& s, std::uint32_t offset) {
  std::vector<VertexId> ids;
  for (VertexId v : s) ids.push_back(VertexId{v.index + offset});
  return VertexSet(std::move(ids));
}

} // namespace

TEST_CASE("associated primes by witness search, hand-checked instances") {
  MonomialIdeal i = minimalize({"x1", "x2"}, {mono({2, 0}), mono({1, 1})});
  auto primes = prime_sets(associated_primes(i));
  REQUIRE(primes.size() == 2);
  CHECK(primes[0] == VertexSet::from_mask(0b01)); // {x1}
  CHECK(primes[1] == VertexSet::from_mask(0b11)); // {x1,x2}

  auto e2_primes = prime_sets(associated_primes(edge_ideal(e2())));
  REQUIRE(e2_primes.size() == 2);
  CHECK(e2_primes[0] == VertexSet::from_mask(0b01));
  CHECK(e2_primes[1] == VertexSet::from_mask(0b10));
}

TEST_CASE("oracle membership tests") {
  CHECK(is_associated_oracle(edge_ideal(e2()), PrimeSupport{VertexSet::from_mask(0b01)}));
  WeightedGraph g = p4();
  CHECK_FALSE(
      is_associated_oracle(edge_ideal(g), PrimeSupport{g.all_vertices()}));
  CHECK_FALSE(is_associated_oracle(edge_ideal(g), PrimeSupport{}));

  // the Macaulay2-verified membership: full support at the fifth power of
  // the (3,2,2,3)-weighted path
  MonomialIdeal i5 = ideal_power(edge_ideal(p5_3223()), 5);
  CHECK(is_associated_oracle(i5, PrimeSupport{p5_3223().all_vertices()}));
  CHECK_FALSE(is_associated_oracle(ideal_power(edge_ideal(p5_3223()), 4),
                                   PrimeSupport{p5_3223().all_vertices()}));
}

TEST_CASE("degenerate ideals are rejected") {
  CHECK_THROWS_AS(associated_primes(MonomialIdeal::zero({"x1"})), error);
  CHECK_THROWS_AS(associated_primes(minimalize({"x1"}, {Monomial(1)})), error);
  try {
    (void)associated_primes(edge_ideal(p4()), {.budget = 3, .threads = 0});
    FAIL("budget ignored");
  } catch (const error& e) {
    CHECK(e.code() == errc::search_space_too_large);
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
}

TEST_CASE("witness search is independent of the block count") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 20; ++iter) {
    MonomialIdeal i = random_ideal(rng, 4, 4, 3);
    if (i.is_unit()) continue;
    auto seq = associated_primes(i, {.budget = 1'000'000'000, .threads = 1});
    auto par = associated_primes(i, {.budget = 1'000'000'000, .threads = 5});
    CHECK(prime_sets(seq) == prime_sets(par));
  }
}

TEST_CASE("capping exponents above the generator maximum changes nothing") {
  std::mt19937_64 rng(91);
  for (int iter = 0; iter < 200; ++iter) {
    MonomialIdeal i = random_ideal(rng, 4, 3, 3);
    std::vector<std::uint64_t> caps(4, 0);
    for (const Monomial& g : i.gens())
      for (std::size_t j = 0; j < 4; ++j) caps[j] = std::max(caps[j], g.deg(j));
    std::vector<std::uint64_t> e(4);
    for (std::size_t j = 0; j < 4; ++j) e[j] = rng() % (caps[j] + 1);
    std::size_t bump = rng() % 4;
    std::vector<std::uint64_t> raised = e;
    e[bump] = caps[bump];
    raised[bump] = caps[bump] + 1 + rng() % 5;
    CHECK(contains(i, mono(e)) == contains(i, mono(raised)));
    CHECK(colon(i, mono(e)) == colon(i, mono(raised)));
  }
}

TEST_CASE("colon by a dominant corner generator peels one power") {
  // hypotheses: y appears only in x^p y^q; every generator divisible by x
  // has x-degree at least p
  std::mt19937_64 rng(92);
  int built = 0;
  while (built < 60) {
    const std::size_t n = 4;
    std::uint64_t p = 1 + rng() % 3, q = 1 + rng() % 3;
    std::vector<Monomial> gens;
    std::vector<std::uint64_t> corner(n, 0);
    corner[0] = p;
    corner[1] = q;
    gens.push_back(mono(corner));
    for (int extra = 1 + rng() % 3; extra > 0; --extra) {
      std::vector<std::uint64_t> e(n, 0);
      if (rng() % 2) e[0] = p + rng() % 2; // x-degree >= p when x divides
      e[2] = rng() % 3;
      e[3] = rng() % 3;
      if (e[0] + e[2] + e[3] == 0) e[2] = 1;
      gens.push_back(mono(e));
    }
    MonomialIdeal i = MonomialIdeal(x_labels(n), gens);
    // the corner generator must have survived minimalization
    if (std::find(i.gens().begin(), i.gens().end(), mono(corner)) == i.gens().end())
      continue;
    ++built;
    for (std::uint64_t t = 2; t <= 3; ++t)
      CHECK(colon(ideal_power(i, t), mono(corner)) == ideal_power(i, t - 1));
  }
}

TEST_CASE("localization union covers every non-maximal associated prime") {
  std::mt19937_64 rng(93);
  for (int iter = 0; iter < 25; ++iter) {
    WeightedGraph g = random_increasing_tree(rng, 3 + rng() % 2, 3);
    MonomialIdeal i = ideal_power(edge_ideal(g), 1 + rng() % 2);

    std::set<VertexSet> expected;
    for (const auto& p : associated_primes(i))
      if (p.variables.size() < i.ambient().size()) expected.insert(p.variables);

    std::set<VertexSet> from_localizations;
    for (std::uint32_t j = 0; j < i.ambient().size(); ++j) {
      MonomialIdeal lj = localize(i, VertexSet::from_mask(std::uint64_t{1} << j));
      if (lj.is_unit()) continue;
      for (const auto& p : associated_primes(lj)) from_localizations.insert(p.variables);
    }
    CHECK(expected == from_localizations);
  }
}

TEST_CASE("powers of variable-disjoint sums mix componentwise") {
  std::mt19937_64 rng(94);
  for (int iter = 0; iter < 12; ++iter) {
    WeightedGraph ga = random_increasing_tree(rng, 2 + rng() % 2, 2);
    WeightedGraph gb = random_increasing_tree(rng, 2 + rng() % 2, 2);
    auto na = static_cast<std::uint32_t>(ga.vertex_count());
    auto nb = static_cast<std::uint32_t>(gb.vertex_count());
    MonomialIdeal ia = embed(edge_ideal(ga), na + nb, 0);
    MonomialIdeal ib = embed(edge_ideal(gb), na + nb, na);
    MonomialIdeal sum = ideal_sum(ia, ib);

    for (std::uint64_t t = 1; t <= 3; ++t) {
      std::set<VertexSet> expected;
      for (std::uint64_t ta = 1; ta <= t; ++ta) {
        auto pa = associated_primes(ideal_power(ia, ta));
        auto pb = associated_primes(ideal_power(ib, t - ta + 1));
        for (const auto& p : pa)
          for (const auto& q : pb) {
            std::vector<VertexId> merged(p.variables.begin(), p.variables.end());
            merged.insert(merged.end(), q.variables.begin(), q.variables.end());
            expected.insert(VertexSet(std::move(merged)));
          }
      }
      std::set<VertexSet> actual;
      for (const auto& p : associated_primes(ideal_power(sum, t)))
        actual.insert(p.variables);
      CHECK(expected == actual);
    }
  }
}

TEST_CASE("adding a high pure power at a star center traps the full support") {
  std::mt19937_64 rng(95);
  for (int iter = 0; iter < 60; ++iter) {
    const std::uint32_t leaves = 1 + rng() % 4;
    auto labels = x_labels(leaves + 1);
    std::vector<EdgeSpec> edges;
    for (std::uint32_t l = 1; l <= leaves; ++l)
      edges.push_back(EdgeSpec{labels[0], labels[l], 1 + rng() % 3});
    WeightedGraph star = WeightedGraph::build(labels, edges);
    std::uint64_t m = mu(star, VertexId{0}) + 1 + rng() % 2;
    MonomialIdeal j = add_pure_power(edge_ideal(star), VertexId{0}, m);
    CHECK(is_associated_oracle(j, PrimeSupport{star.all_vertices()}));
  }
}

TEST_CASE("rooted threshold: full support enters at the special count plus one") {
  std::mt19937_64 rng(96);
  int built = 0;
  while (built < 50) {
    WeightedGraph g = random_increasing_tree(rng, 2 + rng() % 3, 2);
    VertexSet roots = valid_roots(g);
    auto it = roots.begin();
    std::advance(it, static_cast<long>(rng() % roots.size()));
    VertexId v = *it;
    ++built;
    std::uint64_t m = mu(g, v) + 1;
    std::uint64_t s = special_count_rooted(RootedIncreasingTree(g, v));
    MonomialIdeal j = add_pure_power(edge_ideal(g), v, m);
    for (std::uint64_t t = 1; t <= s + 2; ++t)
      CHECK(is_associated_oracle(ideal_power(j, t),
                                 PrimeSupport{g.all_vertices()}) == (t >= s + 1));
  }
}

TEST_CASE("every oracle prime of an edge-ideal power is a vertex cover") {
  std::mt19937_64 rng(97);
  for (int iter = 0; iter < 20; ++iter) {
    WeightedGraph g = random_increasing_tree(rng, 3 + rng() % 3, 3);
    MonomialIdeal i = ideal_power(edge_ideal(g), 1 + rng() % 2);
    for (const auto& p : associated_primes(i)) {
      bool covers = true;
      for (const WeightedEdge& e : g.edges())
        if (!p.variables.contains(e.u) && !p.variables.contains(e.v)) covers = false;
      CHECK(covers);
    }
  }
}
