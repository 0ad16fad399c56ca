#include "wti/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <thread>

namespace wti {

namespace {

// Witness search restricted to the support variables of the ideal: no prime
// can involve a variable absent from every generator.
struct SearchProblem {
  std::vector<std::uint32_t> support; // ambient indices, ascending
  std::vector<std::uint64_t> caps;    // per support variable
  std::vector<std::uint64_t> gens;    // m x s, row-major
  std::size_t m = 0;
  std::size_t s = 0;
  std::uint64_t box = 1; // prod (caps + 1)
};

SearchProblem make_problem(const MonomialIdeal& I, std::uint64_t budget) {
  SearchProblem p;
  const std::size_t n = I.ambient().size();
  std::vector<std::uint64_t> cap_full(n, 0);
  for (const Monomial& g : I.gens())
    for (std::size_t i = 0; i < n; ++i) cap_full[i] = std::max(cap_full[i], g.deg(i));
  for (std::size_t i = 0; i < n; ++i)
    if (cap_full[i] > 0) {
      p.support.push_back(static_cast<std::uint32_t>(i));
      p.caps.push_back(cap_full[i]);
    }
  p.s = p.support.size();
  p.m = I.gens().size();
  bool too_big = p.s > 63;
  for (std::size_t j = 0; !too_big && j < p.s; ++j)
    too_big = __builtin_mul_overflow(p.box, p.caps[j] + 1, &p.box);
  if (too_big)
    fail(errc::search_space_too_large,
         "witness box exceeds 2^64 vectors (budget " + std::to_string(budget) + ")");
  if (p.box > budget)
    fail(errc::search_space_too_large,
         "witness box of " + std::to_string(p.box) + " vectors exceeds budget " +
             std::to_string(budget) + "; raise --budget to search anyway");
  return p;
}

// Scans colex positions [lo, hi). Each step maintains, per generator, the
// set of coordinates where it exceeds the current vector f:
//   cnt == 0            -> f lies in I, nothing to record
//   cnt == 1 at j, tight-> x_j * f lies in I, so x_j belongs to (I : f)
// f witnesses the prime P = {tight singleton coords} iff every generator
// still exceeds f somewhere inside P.
// target != 0 stops the scan as soon as that one mask is witnessed.
std::set<std::uint64_t> scan_range(const SearchProblem& p, std::uint64_t lo,
                                   std::uint64_t hi, std::uint64_t target) {
  std::set<std::uint64_t> found;
  if (lo >= hi || p.m == 0) return found;
  const std::size_t s = p.s;
  const std::size_t m = p.m;

  std::vector<std::uint64_t> f(s);
  std::uint64_t rem = lo;
  for (std::size_t j = 0; j < s; ++j) {
    f[j] = rem % (p.caps[j] + 1);
    rem /= p.caps[j] + 1;
  }
  std::vector<std::uint32_t> cnt(m, 0);
  std::vector<std::uint64_t> mask(m, 0);
  for (std::size_t g = 0; g < m; ++g) {
    const std::uint64_t* row = &p.gens[g * s];
    for (std::size_t j = 0; j < s; ++j)
      if (row[j] > f[j]) {
        ++cnt[g];
        mask[g] |= std::uint64_t{1} << j;
      }
  }

  for (std::uint64_t pos = lo; pos < hi; ++pos) {
    std::uint64_t prime = 0;
    bool in_ideal = false;
    for (std::size_t g = 0; g < m; ++g) {
      if (cnt[g] == 0) {
        in_ideal = true;
        break;
      }
      if (cnt[g] == 1) {
        unsigned j = static_cast<unsigned>(std::countr_zero(mask[g]));
        if (p.gens[g * s + j] == f[j] + 1) prime |= std::uint64_t{1} << j;
      }
    }
    if (!in_ideal && prime != 0 && (target == 0 || prime == target)) {
      bool contained = true;
      for (std::size_t g = 0; g < m; ++g)
        if ((mask[g] & prime) == 0) {
          contained = false;
          break;
        }
      if (contained) {
        found.insert(prime);
        if (target != 0) return found;
      }
    }
    if (pos + 1 == hi) break;
    // colex increment with incremental exceed-state updates
    std::size_t j = 0;
    while (f[j] == p.caps[j]) {
      f[j] = 0;
      for (std::size_t g = 0; g < m; ++g)
        if (p.gens[g * s + j] > 0) {
          ++cnt[g];
          mask[g] |= std::uint64_t{1} << j;
        }
      ++j;
    }
    ++f[j];
    const std::uint64_t bit = std::uint64_t{1} << j;
    for (std::size_t g = 0; g < m; ++g)
      if ((mask[g] & bit) != 0 && p.gens[g * s + j] == f[j]) {
        --cnt[g];
        mask[g] &= ~bit;
      }
  }
  return found;
}

std::set<std::uint64_t> scan_all(const SearchProblem& p, std::uint64_t target,
                                 unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t blocks = std::min<std::uint64_t>(threads, p.box);
  if (blocks <= 1) return scan_range(p, 0, p.box, target);

  std::vector<std::set<std::uint64_t>> partial(blocks);
  std::vector<std::thread> pool;
  pool.reserve(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    std::uint64_t lo = p.box / blocks * b + std::min(b, p.box % blocks);
    std::uint64_t hi = p.box / blocks * (b + 1) + std::min(b + 1, p.box % blocks);
    pool.emplace_back(
        [&p, &partial, b, lo, hi, target] { partial[b] = scan_range(p, lo, hi, target); });
  }
  for (auto& th : pool) th.join();
  std::set<std::uint64_t> merged;
  for (const auto& part : partial) merged.insert(part.begin(), part.end());
  return merged;
}

void check_searchable(const MonomialIdeal& I) {
  if (I.is_zero()) fail(errc::zero_ideal, "associated primes of the zero ideal");
  if (I.is_unit()) fail(errc::unit_ideal, "associated primes of the unit ideal");
}

VertexSet mask_to_ambient(const SearchProblem& p, std::uint64_t mask) {
  std::vector<VertexId> ids;
  for (std::size_t j = 0; j < p.s; ++j)
    if (mask & (std::uint64_t{1} << j)) ids.push_back(VertexId{p.support[j]});
  return VertexSet(std::move(ids));
}

} // namespace

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I,
                                            const OracleOptions& opts) {
  check_searchable(I);
  SearchProblem p = make_problem(I, opts.budget);
  for (const Monomial& g : I.gens())
    for (std::size_t j = 0; j < p.s; ++j) p.gens.push_back(g.deg(p.support[j]));

  std::set<std::uint64_t> masks = scan_all(p, 0, opts.threads);
  std::vector<PrimeSupport> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) out.push_back(PrimeSupport{mask_to_ambient(p, mask)});
  std::sort(out.begin(), out.end());
  return out;
}

bool is_associated_oracle(const MonomialIdeal& I, const PrimeSupport& P,
                          const OracleOptions& opts) {
  check_searchable(I);
  if (P.variables.empty()) return false;
  for (VertexId v : P.variables)
    if (v.index >= I.ambient().size())
      fail(errc::unknown_vertex, "variable index " + std::to_string(v.index) + " out of range");
  std::vector<VertexId> complement;
  for (std::uint32_t i = 0; i < I.ambient().size(); ++i)
    if (!P.variables.contains(VertexId{i})) complement.push_back(VertexId{i});

  MonomialIdeal J = localize(I, VertexSet(std::move(complement)));
  if (J.is_unit()) return false;
  SearchProblem p = make_problem(J, opts.budget);
  // the maximal ideal of the localized ring must use every variable of P
  if (p.s != P.variables.size()) return false;
  for (const Monomial& g : J.gens())
    for (std::size_t j = 0; j < p.s; ++j) p.gens.push_back(g.deg(p.support[j]));

  const std::uint64_t target = (std::uint64_t{1} << p.s) - 1;
  return !scan_all(p, target, opts.threads).empty();
}

} // namespace wti
