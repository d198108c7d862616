#include "quintic/classify.hpp"

#include <algorithm>

#include "quintic/arith.hpp"
#include "quintic/errors.hpp"

namespace quintic {

namespace {

bool is_prime_radicand(const Factorization& f) {
  return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

// Restrictive and inert in K: q = +-2 (mod 5) but q != +-7 (mod 25).
bool restrictive_non_split(uint64_t q) {
  const PrimeClass pc = classify_prime(q);
  return !pc.special_five && !pc.is_free &&
         pc.split_degree == SplitDegree::non_split;
}

// Free and inert in K: q = +-7 (mod 25).
bool free_non_split(uint64_t q) {
  const PrimeClass pc = classify_prime(q);
  return !pc.special_five && pc.is_free &&
         pc.split_degree == SplitDegree::non_split;
}

}  // namespace

std::string step_name(Step step) {
  switch (step) {
    case Step::step1:
      return "1";
    case Step::step2:
      return "2";
    case Step::step3:
      return "3";
    case Step::step4:
      return "4";
    case Step::step5:
      return "5";
    case Step::theorem_shortcut:
      return "shortcut";
  }
  return "?";
}

std::optional<DpfType> deterministic_classify(uint64_t d) {
  const Factorization f = factorize(d);

  if (is_prime_radicand(f)) {
    const PrimeClass pc = classify_prime(f.factors[0].prime);
    if (pc.special_five) return DpfType::t;
    if (pc.split_degree == SplitDegree::non_split)
      return pc.is_free ? DpfType::t : DpfType::e;
    return std::nullopt;  // split primes need the oracle
  }

  const ConductorProfile p = profile(f);
  const Counters& c = p.counters;
  // f^4 = 5^6 q^4: the quartet over {5, q} with q restrictive and inert.
  if (p.species.kind == SpeciesKind::s1a && c.t == 1 &&
      restrictive_non_split(p.primes[0]))
    return DpfType::e;
  // f = q1 q2 with both primes restrictive and inert.
  if (p.species.kind == SpeciesKind::s2 && c.t == 2 &&
      restrictive_non_split(p.primes[0]) && restrictive_non_split(p.primes[1]))
    return DpfType::e;
  return std::nullopt;
}

ClassificationTrace classify(uint64_t d, ArithmeticOracle& oracle,
                             bool shortcuts_enabled) {
  const Factorization f = factorize(d);
  {
    const Normalization norm = normalize_radicand(d);
    if (norm.dstar != d)
      throw Error("radicand " + std::to_string(d) +
                  " is not normalized (the class minimum is " +
                  to_decimal(norm.dstar) + ")");
  }
  const ConductorProfile p = profile(f);
  const Counters& c = p.counters;
  const Species& s = p.species;
  const DimensionBounds bounds = dimension_bounds(c, s);
  const bool prime_rad = is_prime_radicand(f);

  ClassificationTrace trace;
  trace.radicand = d;
  trace.steps_visited.push_back(Step::step1);

  const auto finish = [&](DpfType type, Step at) -> ClassificationTrace& {
    if (at != trace.steps_visited.back()) trace.steps_visited.push_back(at);
    trace.stop_step = at;
    trace.final_type = type;
    const auto admissible = admissible_types(c, s, prime_rad);
    if (!admissible.contains(type))
      throw InconsistentOracle("derived type " + type_name(type) +
                               " for radicand " + std::to_string(d) +
                               " is not admissible for its conductor");
    return trace;
  };

  // Step 1: the rational prime-radicand rules.  Both stops give Polya fields.
  if (prime_rad) {
    const PrimeClass pc = classify_prime(f.factors[0].prime);
    const bool inert = pc.split_degree == SplitDegree::non_split;
    if (pc.special_five || (inert && pc.is_free)) {
      trace.polya = true;
      return finish(DpfType::t, Step::step1);
    }
    if (inert) {
      trace.polya = true;
      return finish(DpfType::e, Step::step1);
    }
  }

  // Theorem layer: conductor families with a forced type, still rational.
  if (shortcuts_enabled) {
    if (const auto forced = deterministic_classify(d)) {
      trace.polya = true;
      return finish(*forced, Step::theorem_shortcut);
    }
  }

  const auto record = [&trace](QueryKind kind, int answer) {
    trace.oracle_queries.push_back({kind, answer});
  };

  // Step 2: dimension of absolute principal factors.
  trace.steps_visited.push_back(Step::step2);
  const int A = oracle.abs_dim(d);
  record(QueryKind::abs, A);
  if (A < 1 || A > bounds.a_max)
    throw InconsistentOracle("ABS " + std::to_string(d) + " = " +
                             std::to_string(A) + " outside 1.." +
                             std::to_string(bounds.a_max));
  trace.resolved_A = A;
  trace.polya = polya_predicate(A, c, s);

  // Dimensions that cannot be positive are fixed without a query.
  if (c.s2 + c.s4 == 0) trace.resolved_I = 0;
  if (c.s4 == 0) trace.resolved_R = 0;

  if (A == 3) return finish(DpfType::g, Step::step2);
  if (c.s2 == 0 && c.s4 == 0) {
    if (A == 2 && c.v >= 1) return finish(DpfType::e, Step::step2);
    if (A == 1) return finish(DpfType::t, Step::step2);
  }

  // Step 3: dimension of intermediate principal factors.
  int I = 0;
  if (c.s2 + c.s4 >= 1) {
    trace.steps_visited.push_back(Step::step3);
    I = oracle.int_dim(d);
    record(QueryKind::int_, I);
    if (I < 0 || I > bounds.i_max)
      throw InconsistentOracle("INT " + std::to_string(d) + " = " +
                               std::to_string(I) + " above " +
                               std::to_string(bounds.i_max));
    trace.resolved_I = I;
    if (I == 2) return finish(DpfType::a3, Step::step3);
    if (I == 1 && A == 2) return finish(DpfType::b2, Step::step3);
  }

  // Step 4: dimension of relative principal factors.
  int R = 0;
  if (c.s4 >= 1) {
    trace.steps_visited.push_back(Step::step4);
    R = oracle.rel_dim(d);
    record(QueryKind::rel, R);
    if (R < 0 || R > bounds.r_max)
      throw InconsistentOracle("REL " + std::to_string(d) + " = " +
                               std::to_string(R) + " above " +
                               std::to_string(bounds.r_max));
    trace.resolved_R = R;
    if (R == 2) return finish(DpfType::a1, Step::step4);
    if (R == 1 && I == 1) return finish(DpfType::a2, Step::step4);
    if (R == 1 && A == 2) return finish(DpfType::b1, Step::step4);
  }

  // Step 5: U = 1.  With a restrictive prime the norm group is forced; in the
  // all-free case one unit-norm computation decides between the zeta types
  // and their eta-side mirrors.
  trace.steps_visited.push_back(Step::step5);
  bool zeta_norm = false;
  if (c.v == 0) {
    zeta_norm = oracle.zeta_is_unit_norm(d);
    record(QueryKind::znorm, zeta_norm ? 1 : 0);
  }
  DpfType type;
  if (zeta_norm) {
    type = R == 1 ? DpfType::z1 : I == 1 ? DpfType::z2 : DpfType::h;
  } else {
    type = R == 1 ? DpfType::d1 : I == 1 ? DpfType::d2 : DpfType::e;
  }
  return finish(type, Step::step5);
}

PatternVerdict multiplet_type_pattern_check(const ConductorProfile& profile,
                                            const std::vector<DpfType>& types) {
  const uint64_t m = multiplicity(profile);
  if (types.size() != m) throw LengthMismatch(types.size(), m);

  const Counters& c = profile.counters;
  const auto all_in = [&types](std::initializer_list<DpfType> allowed) {
    return std::all_of(types.begin(), types.end(), [&](DpfType ty) {
      return std::find(allowed.begin(), allowed.end(), ty) != allowed.end();
    });
  };

  // Homogeneous epsilon families: 5^2 q^4, 5^6 q^4, q1 q2, every prime
  // restrictive and inert.
  const bool all_restrictive_inert =
      c.t >= 1 && std::all_of(profile.primes.begin(), profile.primes.end(),
                              restrictive_non_split);
  if (all_restrictive_inert && c.t == 1 &&
      (profile.species.kind == SpeciesKind::s1b ||
       profile.species.kind == SpeciesKind::s1a))
    return all_in({DpfType::e}) ? PatternVerdict::ok : PatternVerdict::violation;
  if (all_restrictive_inert && c.t == 2 &&
      profile.species.kind == SpeciesKind::s2)
    return all_in({DpfType::e}) ? PatternVerdict::ok : PatternVerdict::violation;

  // Free quartets: 5^6 q^4 or q1 q2 with every prime = +-7 (mod 25); only
  // epsilon and eta can occur.
  const bool all_free_inert = std::all_of(profile.primes.begin(),
                                          profile.primes.end(), free_non_split);
  if (all_free_inert &&
      ((profile.species.kind == SpeciesKind::s1a && c.t == 1) ||
       (profile.species.kind == SpeciesKind::s2 && c.t == 2)))
    return all_in({DpfType::e, DpfType::h}) ? PatternVerdict::ok
                                            : PatternVerdict::violation;

  // Hexadecuplets 5^6 q1^4 q2^4 with both primes inert, at most one free;
  // only epsilon and gamma can occur.
  if (profile.species.kind == SpeciesKind::s1a && c.t == 2 &&
      c.s2 == 0 && c.s4 == 0 && c.v >= 1)
    return all_in({DpfType::e, DpfType::g}) ? PatternVerdict::ok
                                            : PatternVerdict::violation;

  return PatternVerdict::not_applicable;
}

}  // namespace quintic
