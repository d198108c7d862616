#include <doctest.h>

#include <set>

#include "quintic/dpf.hpp"

using namespace quintic;

TEST_CASE("the thirteen types round-trip through names") {
  const auto& all = all_dpf_types();
  REQUIRE(all.size() == kDpfTypeCount);
  CHECK(all.front() == DpfType::a1);
  CHECK(all.back() == DpfType::t);

  std::set<std::string> seen;
  for (DpfType ty : all) {
    DpfType back;
    REQUIRE(type_from_name(type_name(ty), back));
    CHECK(back == ty);
    seen.insert(type_name(ty));
  }
  CHECK(seen.size() == kDpfTypeCount);

  DpfType out;
  CHECK_FALSE(type_from_name("x9", out));
  CHECK_FALSE(type_from_name("", out));
  CHECK_FALSE(type_from_name("alpha1", out));
}

TEST_CASE("signatures are a bijection onto the table") {
  for (DpfType ty : all_dpf_types()) {
    auto sig = signature_from_type(ty);
    CHECK(type_from_signature(sig) == ty);
    // the defining identity of the signature table
    CHECK(sig.U + 1 == sig.A + sig.I + sig.R);
  }

  CHECK(signature_from_type(DpfType::a1) ==
        DpfSignature{2, NormKind::none, 1, 0, 2});
  CHECK(signature_from_type(DpfType::g) ==
        DpfSignature{2, NormKind::none, 3, 0, 0});
  CHECK(signature_from_type(DpfType::d2) ==
        DpfSignature{1, NormKind::eta, 1, 1, 0});
  CHECK(signature_from_type(DpfType::e) ==
        DpfSignature{1, NormKind::eta, 2, 0, 0});
  CHECK(signature_from_type(DpfType::z1) ==
        DpfSignature{1, NormKind::zeta, 1, 0, 1});
  CHECK(signature_from_type(DpfType::t) ==
        DpfSignature{0, NormKind::both, 1, 0, 0});

  CHECK_THROWS_AS(type_from_signature(DpfSignature{2, NormKind::none, 1, 0, 0}),
                  NoSuchSignature);
  CHECK_THROWS_AS(type_from_signature(DpfSignature{1, NormKind::none, 1, 0, 1}),
                  NoSuchSignature);
  CHECK_THROWS_AS(type_from_signature(DpfSignature{3, NormKind::both, 2, 1, 1}),
                  NoSuchSignature);
}

TEST_CASE("state vector derives the real-subfield index") {
  CHECK(StateVector{0, 0, 1, 6}.e_plus() == 2);
  CHECK(StateVector{1, 3, 4, 5}.e_plus() == 3);
  CHECK(StateVector{0, 0, 0, 5}.e_plus() == 2);
}

TEST_CASE("dimension bounds follow the conductor shape") {
  auto check = [](std::uint64_t d, int a, int i, int r) {
    auto p = profile_of(d);
    auto b = dimension_bounds(p.counters, p.species);
    CHECK(b.a_max == a);
    CHECK(b.i_max == i);
    CHECK(b.r_max == r);
  };
  check(5, 1, 0, 0);
  check(7, 1, 0, 0);
  check(2, 2, 0, 0);
  check(11, 2, 2, 2);
  check(19, 2, 2, 0);
  check(6, 3, 0, 0);
  check(26, 2, 0, 0);   // 2 * 13, species 2
  check(66, 3, 2, 2);   // T = 4 capped at 3
  check(110, 3, 2, 2);  // 2 * 5 * 11
}

TEST_CASE("conductor_prime_count adds the ramified five") {
  auto count = [](std::uint64_t d) {
    auto p = profile_of(d);
    return conductor_prime_count(p.counters, p.species);
  };
  CHECK(count(5) == 1);
  CHECK(count(7) == 1);   // species 2: no extra five
  CHECK(count(2) == 2);
  CHECK(count(11) == 2);
  CHECK(count(66) == 4);
  CHECK(count(77) == 3);
  CHECK(count(7 * 43) == 2);  // species 2 composite
}

TEST_CASE("admissible types for prime radicands") {
  auto admissible = [](std::uint64_t q) {
    auto p = profile_of(q);
    return admissible_types(p.counters, p.species, /*prime_radicand=*/true);
  };
  using T = DpfType;

  // 5, and free non-split primes, force the full-norm type
  CHECK(admissible(5) == std::set<T>{T::t});
  CHECK(admissible(7) == std::set<T>{T::t});
  CHECK(admissible(43) == std::set<T>{T::t});

  // restrictive non-split primes force the eta-norm singleton
  CHECK(admissible(2) == std::set<T>{T::e});
  CHECK(admissible(3) == std::set<T>{T::e});

  // split primes leave a genuine choice, narrowed by the residue class
  CHECK(admissible(19) == std::set<T>{T::b2, T::d2, T::e});
  CHECK(admissible(11) ==
        std::set<T>{T::a1, T::a2, T::b1, T::b2, T::d1, T::d2, T::e});
  CHECK(admissible(149) == std::set<T>{T::d2, T::z2, T::t});
  CHECK(admissible(101) ==
        std::set<T>{T::a1, T::a2, T::d1, T::d2, T::z1, T::z2, T::t});
}

TEST_CASE("admissible types for composite radicands") {
  auto admissible = [](std::uint64_t d) {
    auto p = profile_of(d);
    return admissible_types(p.counters, p.species, /*prime_radicand=*/false);
  };
  using T = DpfType;

  // two restrictive non-split primes: only the A-heavy norm-free type and
  // the eta-norm type survive bounds plus the zeta exclusion
  CHECK(admissible(6) == std::set<T>{T::g, T::e});
  CHECK(admissible(30) == std::set<T>{T::g, T::e});  // 5 * 2 * 3

  // a one-prime conductor beside 5 caps A at 2, leaving epsilon alone
  CHECK(admissible(10) == std::set<T>{T::e});
  CHECK(admissible(15) == std::set<T>{T::e});

  // all-free conductors keep the zeta-norm types available
  CHECK(admissible(35) == std::set<T>{T::e, T::h, T::t});
  CHECK(admissible(7 * 43) == std::set<T>{T::e, T::h, T::t});

  // a 4-split prime with v >= 1 opens everything except the zeta-norm types
  CHECK(admissible(66) == std::set<T>{T::a1, T::a2, T::a3, T::b1, T::b2, T::g,
                                      T::d1, T::d2, T::e});
}

TEST_CASE("index pairs per type") {
  using P = std::pair<int, int>;
  CHECK(index_pairs_for_type(DpfType::a1) == std::vector<P>{{2, 1}});
  CHECK(index_pairs_for_type(DpfType::a2) == std::vector<P>{{1, 0}, {3, 1}});
  CHECK(index_pairs_for_type(DpfType::b1) == std::vector<P>{{3, 1}, {5, 2}});
  CHECK(index_pairs_for_type(DpfType::d1) == std::vector<P>{{2, 1}, {4, 2}});
  CHECK(index_pairs_for_type(DpfType::g) == std::vector<P>{{6, 2}});
  CHECK(index_pairs_for_type(DpfType::t) == std::vector<P>{{5, 2}});
}

TEST_CASE("polya predicate compares A against the prime count") {
  auto p7 = profile_of(7);
  CHECK(polya_predicate(1, p7.counters, p7.species));

  auto p6 = profile_of(6);  // T = 3
  CHECK(polya_predicate(3, p6.counters, p6.species));
  CHECK_FALSE(polya_predicate(2, p6.counters, p6.species));

  auto p66 = profile_of(66);  // T = 4 exceeds any reachable A
  CHECK_FALSE(polya_predicate(3, p66.counters, p66.species));
}
