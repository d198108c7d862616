#include "quintic/conductor.hpp"

#include <algorithm>

namespace quintic {

std::string species_name(const Species& s) {
  switch (s.kind) {
    case SpeciesKind::s1a: return "1a";
    case SpeciesKind::s1b: return "1b";
    case SpeciesKind::s2: return "2";
  }
  return "?";
}

Species species_of(u128 d) {
  if (d % 5 == 0) return {SpeciesKind::s1a, 6};
  int r = int(d % 25);
  if (r == 1 || r == 7 || r == 18 || r == 24) return {SpeciesKind::s2, 0};
  return {SpeciesKind::s1b, 2};
}

ConductorProfile profile(const Factorization& d) {
  ConductorProfile p;
  p.species = species_of(d.value());
  for (const auto& [q, e] : d.factors) {
    (void)e;
    if (q == 5) continue;
    p.primes.push_back(q);
    PrimeClass c = classify_prime(q);
    ++p.counters.t;
    if (c.is_free)
      ++p.counters.u;
    else
      ++p.counters.v;
    switch (c.split_degree) {
      case SplitDegree::non_split: ++p.counters.n; break;
      case SplitDegree::split2:
        ++p.counters.s2;
        if (c.is_free) ++p.counters.u_free_split2;
        break;
      case SplitDegree::split4:
        ++p.counters.s4;
        if (c.is_free) ++p.counters.u_free_split4;
        break;
    }
  }
  return p;
}

ConductorProfile profile_of(std::uint64_t d) { return profile(factorize(d)); }

std::uint64_t sequence_X(int j) {
  // (4^j - (-1)^j) / 5, exact in integers for j >= 0
  std::uint64_t pow4 = 1;
  for (int i = 0; i < j; ++i) pow4 *= 4;
  return (j % 2 == 0) ? (pow4 - 1) / 5 : (pow4 + 1) / 5;
}

std::uint64_t multiplicity(const Species& species, int t, int u, int v) {
  if (t != u + v || t < 0 || u < 0 || v < 0)
    throw InvalidCounters("counters must satisfy t = u + v, got t=" +
                          std::to_string(t) + " u=" + std::to_string(u) +
                          " v=" + std::to_string(v));
  auto pow4 = [](int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= 4;
    return r;
  };
  switch (species.kind) {
    case SpeciesKind::s1a:
      return pow4(t);
    case SpeciesKind::s1b:
      return pow4(u) * sequence_X(v);
    case SpeciesKind::s2:
      // X_{v-1}; for v=0 the identity 4^u * X_{-1} = 4^(u-1) applies,
      // and u=0 means no conductor of this shape exists at all
      if (v == 0) return u >= 1 ? pow4(u - 1) : 0;
      return pow4(u) * sequence_X(v - 1);
  }
  return 0;
}

std::vector<u128> enumerate_multiplet(const ConductorProfile& p) {
  const int t = p.counters.t;
  if (t > 6) throw TooManyPrimes(t);
  const bool has5 = p.species.kind == SpeciesKind::s1a;
  const int slots = t + (has5 ? 1 : 0);

  std::vector<std::uint64_t> primes = p.primes;
  if (has5) primes.push_back(5);

  std::vector<u128> members;
  std::vector<int> e(slots, 1);
  for (;;) {
    u128 v = 1;
    for (int i = 0; i < slots; ++i)
      for (int k = 0; k < e[i]; ++k) v *= primes[i];

    // normalized <=> minimal within its power class {reduce(v^n)}; the
    // class never drops a prime because n*e is invertible mod 5
    bool minimal = true;
    for (int n = 2; n <= 4 && minimal; ++n) {
      u128 w = 1;
      for (int i = 0; i < slots; ++i) {
        int r = (e[i] * n) % 5;
        for (int k = 0; k < r; ++k) w *= primes[i];
      }
      if (w < v) minimal = false;
    }
    if (v >= 2 && minimal && species_of(v) == p.species) members.push_back(v);

    int i = 0;
    while (i < slots && e[i] == 4) e[i++] = 1;
    if (i == slots) break;
    ++e[i];
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::string f4_string(const ConductorProfile& p) {
  std::string out;
  auto add = [&](const std::string& part) {
    if (!out.empty()) out += "·";
    out += part;
  };
  if (p.species.e0 > 0) add("5^" + std::to_string(p.species.e0));
  for (auto q : p.primes) add(std::to_string(q) + "^4");
  return out;
}

}  // namespace quintic
