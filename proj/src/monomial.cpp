#include "wti/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace wti {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(errc::overflow, "exponent arithmetic exceeds 64 bits");
  return r;
}

} // namespace

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (std::uint64_t e : e_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_unit() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](std::uint64_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& f) const {
  if (e_.size() != f.e_.size()) fail(errc::ambient_mismatch, "variable counts differ");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > f.e_[i]) return false;
  return true;
}

Monomial Monomial::quotient_by_gcd(const Monomial& f) const {
  if (e_.size() != f.e_.size()) fail(errc::ambient_mismatch, "variable counts differ");
  std::vector<std::uint64_t> out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i)
    out[i] = e_[i] > f.e_[i] ? e_[i] - f.e_[i] : 0;
  return Monomial(std::move(out));
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (e_.size() != rhs.e_.size()) fail(errc::ambient_mismatch, "variable counts differ");
  std::vector<std::uint64_t> out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) out[i] = checked_add(e_[i], rhs.e_[i]);
  return Monomial(std::move(out));
}

bool operator<(const Monomial& a, const Monomial& b) {
  std::uint64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.e_ < b.e_;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> ambient,
                             std::vector<Monomial> gens)
    : ambient_(std::move(ambient)) {
  for (const Monomial& m : gens)
    if (m.nvars() != ambient_.size())
      fail(errc::ambient_mismatch, "generator arity does not match ambient");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // sorted by degree, so a divisor always precedes its multiples
  for (const Monomial& m : gens) {
    bool redundant = false;
    for (const Monomial& kept : gens_)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(m);
  }
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> ambient) {
  return MonomialIdeal(std::move(ambient), {});
}

MonomialIdeal edge_ideal(const WeightedGraph& g) {
  std::vector<Monomial> gens;
  gens.reserve(g.edge_count());
  for (const WeightedEdge& e : g.edges()) {
    std::vector<std::uint64_t> exps(g.vertex_count(), 0);
    exps[e.u.index] = e.w;
    exps[e.v.index] = e.w;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(g.labels(), std::move(gens));
}

MonomialIdeal minimalize(std::vector<std::string> ambient, std::vector<Monomial> gens) {
  return MonomialIdeal(std::move(ambient), std::move(gens));
}

bool contains(const MonomialIdeal& I, const Monomial& f) {
  for (const Monomial& g : I.gens())
    if (g.divides(f)) return true;
  return false;
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.ambient() != J.ambient())
    fail(errc::ambient_mismatch, "ideal_sum over different ambients");
  std::vector<Monomial> gens = I.gens();
  gens.insert(gens.end(), J.gens().begin(), J.gens().end());
  return MonomialIdeal(I.ambient(), std::move(gens));
}

MonomialIdeal add_pure_power(const MonomialIdeal& I, VertexId v, std::uint64_t m) {
  if (v.index >= I.ambient().size())
    fail(errc::unknown_vertex, "variable index " + std::to_string(v.index) + " out of range");
  if (m == 0) fail(errc::invalid_power, "pure power must be positive");
  std::vector<Monomial> gens = I.gens();
  std::vector<std::uint64_t> exps(I.ambient().size(), 0);
  exps[v.index] = m;
  gens.emplace_back(std::move(exps));
  return MonomialIdeal(I.ambient(), std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& I, std::uint64_t t) {
  if (t < 1) fail(errc::invalid_power, "power must be >= 1");
  if (I.is_zero()) return I;
  // combinations with repetition over the generators
  std::vector<Monomial> products;
  std::vector<std::size_t> pick(t, 0);
  const std::size_t m = I.gens().size();
  while (true) {
    Monomial prod(I.ambient().size());
    for (std::size_t j : pick) prod = prod * I.gens()[j];
    products.push_back(std::move(prod));
    std::size_t i = t;
    while (i > 0 && pick[i - 1] == m - 1) --i;
    if (i == 0) break;
    std::size_t next = pick[i - 1] + 1;
    for (std::size_t j = i - 1; j < t; ++j) pick[j] = next;
  }
  return MonomialIdeal(I.ambient(), std::move(products));
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f) {
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) gens.push_back(g.quotient_by_gcd(f));
  return MonomialIdeal(I.ambient(), std::move(gens));
}

MonomialIdeal localize(const MonomialIdeal& I, const VertexSet& W) {
  for (VertexId v : W)
    if (v.index >= I.ambient().size())
      fail(errc::unknown_vertex, "variable index " + std::to_string(v.index) + " out of range");
  std::vector<Monomial> gens;
  gens.reserve(I.gens().size());
  for (const Monomial& g : I.gens()) {
    std::vector<std::uint64_t> exps = g.exponents();
    for (VertexId v : W) exps[v.index] = 0;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(I.ambient(), std::move(gens));
}

std::string to_string(const Monomial& m, const std::vector<std::string>& ambient) {
  if (m.is_unit()) return "1";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.deg(i) == 0) continue;
    if (!first) out << '*';
    first = false;
    out << ambient.at(i);
    if (m.deg(i) > 1) out << '^' << m.deg(i);
  }
  return out.str();
}

} // namespace wti
