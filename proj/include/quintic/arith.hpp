#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quintic/errors.hpp"

namespace quintic {

// 128-bit helper type for products that can exceed 64 bits
// (e.g. fourth powers of multi-prime radicands).
using u128 = unsigned __int128;

std::string to_decimal(u128 v);

/// One factor q^e of a radicand. Normalized radicands have 1 <= e <= 4.
struct PrimePower {
  std::uint64_t prime = 0;
  int exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Prime-power decomposition with primes strictly ascending.
struct Factorization {
  std::vector<PrimePower> factors;

  u128 value() const;
  bool operator==(const Factorization&) const = default;
};

enum class SplitDegree { non_split, split2, split4 };

/// Residue-class data of a prime that drives the whole classification:
/// free means q = +-1 or +-7 (mod 25); the split degree is the number of
/// primes above q in the quintic subfield (1, 2 or 4 for q = +-2, -1, +1
/// mod 5 respectively).
struct PrimeClass {
  std::uint64_t q = 0;
  int mod5 = 0;
  int mod25 = 0;
  bool is_free = false;
  SplitDegree split_degree = SplitDegree::non_split;
  bool special_five = false;  // q == 5; is_free/split_degree unused then
};

/// Deterministic primality test for 64-bit integers (Miller-Rabin over the
/// first twelve prime bases, which is exact for this width).
bool is_prime(std::uint64_t n);

/// Factor n by trial division. In strict mode an exponent >= 5 raises
/// NotFifthPowerFree; raw mode keeps exponents as found (used by
/// normalization, which reduces them itself).
Factorization factorize(std::uint64_t n, bool strict = true);

struct Normalization {
  std::uint64_t dstar = 0;  // the normalized radicand
  int power = 0;            // smallest n in 1..4 with reduce(D^n) == dstar

  bool operator==(const Normalization&) const = default;
};

/// Normalize a radicand: the minimum over n in 1..4 of D^n with all prime
/// exponents reduced mod 5. Fifth powers collapse to 1 and are rejected
/// (DegenerateRadicand).
Normalization normalize_radicand(std::uint64_t d);

/// Classify a prime by its residues mod 5 and mod 25. Throws NotPrime.
PrimeClass classify_prime(std::uint64_t q);

}  // namespace quintic
