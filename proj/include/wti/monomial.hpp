#ifndef WTI_MONOMIAL_HPP
#define WTI_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wti/graph.hpp"

namespace wti {

/// Dense exponent vector over the ambient variables. The all-zero vector is
/// the unit monomial. Products are overflow-checked; exponents never wrap.
class Monomial {
public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint64_t> exps) : e_(std::move(exps)) {}

  std::size_t nvars() const noexcept { return e_.size(); }
  std::uint64_t deg(std::size_t i) const { return e_.at(i); }
  const std::vector<std::uint64_t>& exponents() const noexcept { return e_; }

  std::uint64_t total_degree() const; // overflow-checked
  bool is_unit() const noexcept;
  bool divides(const Monomial& f) const;

  /// this / gcd(this, f): the generator image under colon by f.
  Monomial quotient_by_gcd(const Monomial& f) const;

  Monomial operator*(const Monomial& rhs) const; // overflow-checked

  /// Canonical order: total degree first, ties lexicographic.
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<std::uint64_t> e_;
};

/// A monomial ideal held by its unique minimal generating set, canonically
/// sorted. No generators = the zero ideal; the single unit generator = the
/// whole ring.
class MonomialIdeal {
public:
  MonomialIdeal(std::vector<std::string> ambient, std::vector<Monomial> gens);
  static MonomialIdeal zero(std::vector<std::string> ambient);

  const std::vector<std::string>& ambient() const noexcept { return ambient_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_unit(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  std::vector<std::string> ambient_;
  std::vector<Monomial> gens_;
};

/// Generators (x_u x_v)^w, one per edge; ambient = the graph's vertex list.
MonomialIdeal edge_ideal(const WeightedGraph& g);

/// Drops every generator that another one divides (equal duplicates keep one
/// copy) and sorts canonically.
MonomialIdeal minimalize(std::vector<std::string> ambient, std::vector<Monomial> gens);

bool contains(const MonomialIdeal& I, const Monomial& f);

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal add_pure_power(const MonomialIdeal& I, VertexId v, std::uint64_t m);

/// All products of t generators with repetition, minimalized.
MonomialIdeal ideal_power(const MonomialIdeal& I, std::uint64_t t);

/// (I : f), minimalized.
MonomialIdeal colon(const MonomialIdeal& I, const Monomial& f);

/// I with the W-coordinates of every generator zeroed: the saturation of I
/// by the product of the W variables.
MonomialIdeal localize(const MonomialIdeal& I, const VertexSet& W);

std::string to_string(const Monomial& m, const std::vector<std::string>& ambient);

} // namespace wti

#endif
