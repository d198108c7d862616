#include <doctest.h>

#include <cstdint>

#include "quintic/arith.hpp"

using namespace quintic;

TEST_CASE("is_prime handles small numbers and known composites") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(5));
  CHECK_FALSE(is_prime(561));         // Carmichael number 3*11*17
  CHECK_FALSE(is_prime(3215031751));  // strong pseudoprime to bases 2,3,5,7
  CHECK(is_prime(2147483647));        // 2^31 - 1
  CHECK(is_prime(2305843009213693951ull));  // 2^61 - 1
  CHECK(is_prime(18446744073709551557ull)); // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ull));
}

TEST_CASE("factorize produces ascending prime powers") {
  auto f = factorize(360);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == PrimePower{2, 3});
  CHECK(f.factors[1] == PrimePower{3, 2});
  CHECK(f.factors[2] == PrimePower{5, 1});
  CHECK(f.value() == 360);

  auto p = factorize(97);
  REQUIRE(p.factors.size() == 1);
  CHECK(p.factors[0] == PrimePower{97, 1});

  CHECK(factorize(1).factors.empty());
  CHECK(factorize(1).value() == 1);
}

TEST_CASE("factorize strictness against fifth powers") {
  CHECK_THROWS_AS(factorize(32), NotFifthPowerFree);
  CHECK_THROWS_AS(factorize(2 * 3 * 3 * 3 * 3 * 3), NotFifthPowerFree);

  auto raw = factorize(32, /*strict=*/false);
  REQUIRE(raw.factors.size() == 1);
  CHECK(raw.factors[0] == PrimePower{2, 5});
}

TEST_CASE("factorize rejects zero") {
  CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("normalize_radicand picks the minimal power representative") {
  // powers of a single prime all collapse onto the first power
  CHECK(normalize_radicand(2) == Normalization{2, 1});
  CHECK(normalize_radicand(8) == Normalization{2, 2});   // 8^2 = 2^6 -> 2
  CHECK(normalize_radicand(4) == Normalization{2, 3});   // 4^3 = 2^6 -> 2
  CHECK(normalize_radicand(16) == Normalization{2, 4});  // 16^4 = 2^16 -> 2

  // mixed exponents can shrink below the input
  CHECK(normalize_radicand(50) == Normalization{40, 3});  // 2*5^2 -> 2^3*5

  // already-minimal values are their own representative with witness 1
  CHECK(normalize_radicand(12) == Normalization{12, 1});
  CHECK(normalize_radicand(18) == Normalization{18, 1});
  CHECK(normalize_radicand(66) == Normalization{66, 1});
}

TEST_CASE("normalize_radicand rejects degenerate inputs") {
  CHECK_THROWS_AS(normalize_radicand(0), DegenerateRadicand);
  CHECK_THROWS_AS(normalize_radicand(1), DegenerateRadicand);
  CHECK_THROWS_AS(normalize_radicand(32), DegenerateRadicand);    // 2^5
  CHECK_THROWS_AS(normalize_radicand(7776), DegenerateRadicand);  // 6^5
}

TEST_CASE("normalize_radicand is idempotent over a broad range") {
  for (std::uint64_t d = 2; d < 5000; ++d) {
    Normalization n;
    try {
      n = normalize_radicand(d);
    } catch (const DegenerateRadicand&) {
      continue;
    }
    auto again = normalize_radicand(n.dstar);
    CHECK(again.dstar == n.dstar);
    CHECK(again.power == 1);
  }
}

TEST_CASE("classify_prime decodes the residue data") {
  auto seven = classify_prime(7);
  CHECK(seven.mod5 == 2);
  CHECK(seven.mod25 == 7);
  CHECK(seven.is_free);
  CHECK(seven.split_degree == SplitDegree::non_split);
  CHECK_FALSE(seven.special_five);

  auto two = classify_prime(2);
  CHECK_FALSE(two.is_free);
  CHECK(two.split_degree == SplitDegree::non_split);

  auto eleven = classify_prime(11);
  CHECK_FALSE(eleven.is_free);
  CHECK(eleven.split_degree == SplitDegree::split4);

  auto nineteen = classify_prime(19);
  CHECK_FALSE(nineteen.is_free);
  CHECK(nineteen.split_degree == SplitDegree::split2);

  auto hundred_one = classify_prime(101);  // 101 = 1 (mod 25)
  CHECK(hundred_one.is_free);
  CHECK(hundred_one.split_degree == SplitDegree::split4);

  auto one_forty_nine = classify_prime(149);  // 149 = 24 (mod 25)
  CHECK(one_forty_nine.is_free);
  CHECK(one_forty_nine.split_degree == SplitDegree::split2);

  auto forty_three = classify_prime(43);  // 43 = 18 (mod 25), non-split free
  CHECK(forty_three.is_free);
  CHECK(forty_three.split_degree == SplitDegree::non_split);

  auto five = classify_prime(5);
  CHECK(five.special_five);

  CHECK_THROWS_AS(classify_prime(4), NotPrime);
  CHECK_THROWS_AS(classify_prime(1), NotPrime);
}

TEST_CASE("to_decimal renders 128-bit values") {
  CHECK(to_decimal(0) == "0");
  CHECK(to_decimal(12345) == "12345");
  CHECK(to_decimal(u128(1) << 100) == "1267650600228229401496703205376");
  u128 big = u128(29ull * 31 * 101);
  big = big * big * big * big;  // (29*31*101)^4, beyond 64 bits
  CHECK(to_decimal(big) == "67971094325819476801");
}
