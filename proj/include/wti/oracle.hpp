#ifndef WTI_ORACLE_HPP
#define WTI_ORACLE_HPP

#include "wti/monomial.hpp"

namespace wti {

/// Support of an associated prime: the variables generating it.
struct PrimeSupport {
  VertexSet variables;

  friend bool operator==(const PrimeSupport&, const PrimeSupport&) = default;
  friend bool operator<(const PrimeSupport& a, const PrimeSupport& b) {
    return a.variables < b.variables;
  }
};

struct OracleOptions {
  /// Cap on the witness box size prod_i (D_i + 1).
  std::uint64_t budget = 1'000'000'000ULL;
  /// 0 = one block per hardware thread. Results do not depend on this.
  unsigned threads = 0;
};

/// Exact associated primes of a nonzero proper monomial ideal, by witness
/// search: P is associated iff (I : f) = (P) for some monomial f not in I.
///
/// The search runs over exponent vectors capped componentwise at
/// D_i = max exponent of x_i over the minimal generators. The cap loses
/// nothing: divisibility by a generator, the quotients g/gcd(g,f), and
/// membership of x_i*f all depend on f_i only through min(f_i, D_i), so any
/// witness can be capped coordinatewise and stays a witness for the same
/// prime. Enumeration is colexicographic and the result is canonically
/// sorted, independent of the thread count.
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& I,
                                            const OracleOptions& opts = {});

/// Membership test for one prime support without enumerating all primes:
/// localizes away the complement of P and searches for a witness of the
/// maximal ideal among exponent vectors of P's variables only.
bool is_associated_oracle(const MonomialIdeal& I, const PrimeSupport& P,
                          const OracleOptions& opts = {});

} // namespace wti

#endif
