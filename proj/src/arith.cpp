#include "quintic/arith.hpp"

#include <algorithm>
#include <array>

namespace quintic {

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

u128 Factorization::value() const {
  u128 v = 1;
  for (const auto& [p, e] : factors)
    for (int i = 0; i < e; ++i) v *= p;
  return v;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return std::uint64_t(u128(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  // the twelve bases below make Miller-Rabin deterministic for all n < 2^64
  constexpr std::array<std::uint64_t, 12> bases{2,  3,  5,  7,  11, 13,
                                                17, 19, 23, 29, 31, 37};
  for (auto p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n, bool strict) {
  if (n == 0) throw Error("0 has no prime factorization");
  Factorization f;
  auto push = [&](std::uint64_t p, int e) {
    if (strict && e >= 5) throw NotFifthPowerFree(p);
    f.factors.push_back({p, e});
  };
  for (std::uint64_t p : {std::uint64_t(2), std::uint64_t(3)}) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) push(p, e);
  }
  // wheel over 6k +- 1
  for (std::uint64_t p = 5; p * p <= n; p += (p % 6 == 5) ? 2 : 4) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) push(p, e);
  }
  if (n > 1) push(n, 1);
  return f;
}

Normalization normalize_radicand(std::uint64_t d) {
  if (d < 2) throw DegenerateRadicand(d);
  Factorization raw = factorize(d, /*strict=*/false);
  // all exponents divisible by 5 <=> d is a perfect fifth power
  bool fifth_power = true;
  for (const auto& [p, e] : raw.factors)
    if (e % 5 != 0) fifth_power = false;
  if (fifth_power || raw.factors.empty()) throw DegenerateRadicand(d);

  u128 best = 0;
  int best_n = 0;
  for (int n = 1; n <= 4; ++n) {
    u128 v = 1;
    for (const auto& [p, e] : raw.factors) {
      int r = int(u128(e) * n % 5);
      for (int i = 0; i < r; ++i) v *= p;
    }
    if (best_n == 0 || v < best) {
      best = v;
      best_n = n;
    }
  }
  return {std::uint64_t(best), best_n};
}

PrimeClass classify_prime(std::uint64_t q) {
  if (!is_prime(q)) throw NotPrime(q);
  PrimeClass c;
  c.q = q;
  c.mod5 = int(q % 5);
  c.mod25 = int(q % 25);
  if (q == 5) {
    c.special_five = true;
    return c;
  }
  c.is_free = c.mod25 == 1 || c.mod25 == 7 || c.mod25 == 18 || c.mod25 == 24;
  if (c.mod5 == 1)
    c.split_degree = SplitDegree::split4;
  else if (c.mod5 == 4)
    c.split_degree = SplitDegree::split2;
  else
    c.split_degree = SplitDegree::non_split;
  return c;
}

}  // namespace quintic
