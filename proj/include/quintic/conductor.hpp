#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quintic/arith.hpp"

namespace quintic {

enum class SpeciesKind { s1a, s1b, s2 };

/// Dedekind species of a radicand, refined by the exponent e0 of 5 in f^4:
/// species 1a (5 | D, e0=6), 1b (5-free, D != +-1,+-7 mod 25, e0=2),
/// 2 (D = +-1,+-7 mod 25, e0=0).
struct Species {
  SpeciesKind kind = SpeciesKind::s1b;
  int e0 = 2;

  bool operator==(const Species&) const = default;
};

std::string species_name(const Species& s);

/// The counter tuple of a conductor: t primes != 5, split as u free + v
/// restrictive and as n non-split + s2 2-split + s4 4-split. The two
/// u_free_* fields subdivide u by split degree (the primed counters that
/// distinguish otherwise identical profiles).
struct Counters {
  int t = 0;
  int u = 0;
  int v = 0;
  int n = 0;
  int s2 = 0;
  int s4 = 0;
  int u_free_split2 = 0;  // free primes = -1 (mod 25)
  int u_free_split4 = 0;  // free primes = +1 (mod 25)

  bool operator==(const Counters&) const = default;
};

/// Everything the conductor f of Q(zeta5, D^(1/5)) depends on:
/// f^4 = 5^e0 * q1^4 * ... * qt^4.
struct ConductorProfile {
  Species species;
  std::vector<std::uint64_t> primes;  // ascending, never contains 5
  Counters counters;

  bool operator==(const ConductorProfile&) const = default;
};

/// Species of an arbitrary positive integer by the congruence rule.
Species species_of(u128 d);

/// Compute the conductor profile of a normalized radicand.
ConductorProfile profile(const Factorization& d);

/// Convenience overload: factorizes first.
ConductorProfile profile_of(std::uint64_t d);

/// X_j = (4^j - (-1)^j) / 5 for j >= 0: 0, 1, 3, 13, 51, 205, ...
std::uint64_t sequence_X(int j);

/// Closed-form multiplicity of a conductor: the number of non-isomorphic
/// fields sharing it. Species 1a: 4^t; 1b: 4^u * X_v; 2: 4^u * X_{v-1},
/// where the v=0 case folds the fractional X_{-1} into 4^(u-1) (and yields
/// 0 when u=0: no such conductor shape exists). m=0 is a legal result.
std::uint64_t multiplicity(const Species& species, int t, int u, int v);

inline std::uint64_t multiplicity(const ConductorProfile& p) {
  return multiplicity(p.species, p.counters.t, p.counters.u, p.counters.v);
}

/// Brute-force the multiplet: all normalized radicands sharing the
/// profile's conductor, ascending. Values can exceed 64 bits for large
/// prime sets, hence u128. Throws TooManyPrimes for t > 6.
std::vector<u128> enumerate_multiplet(const ConductorProfile& p);

/// Render f^4 as "5^2·2^4·3^4·11^4" (5-part first when present).
std::string f4_string(const ConductorProfile& p);

}  // namespace quintic
