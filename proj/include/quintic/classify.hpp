#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quintic/conductor.hpp"
#include "quintic/dpf.hpp"
#include "quintic/oracle.hpp"

namespace quintic {

// Stages of the classification algorithm.  Steps 2-5 ask the oracle for
// progressively more expensive invariants; `theorem_shortcut` marks a stop
// forced by one of the deterministic conductor families.
enum class Step {
  step1,
  step2,
  step3,
  step4,
  step5,
  theorem_shortcut,
};

std::string step_name(Step step);

struct QueryRecord {
  QueryKind kind;
  int answer;  // dimensions 0..3; ZNORM stores 0 or 1
};

struct ClassificationTrace {
  uint64_t radicand = 0;
  std::vector<Step> steps_visited;
  std::vector<QueryRecord> oracle_queries;
  std::optional<int> resolved_A;
  std::optional<int> resolved_I;
  std::optional<int> resolved_R;
  DpfType final_type = DpfType::t;
  Step stop_step = Step::step1;
  bool polya = false;
};

// Classification by rational data alone: the two prime-radicand rules of
// Step 1 and the three conductor families that are provably of type epsilon
// (5^2 q^4, 5^6 q^4, and q1 q2 with all primes +-2 mod 5 but not +-7 mod 25).
// Returns nullopt whenever the type is not forced.
std::optional<DpfType> deterministic_classify(uint64_t d);

// Runs the staged algorithm for a normalized radicand.  Each oracle answer is
// validated against the dimension bounds on receipt and the final type
// against the admissible set; violations raise InconsistentOracle.  Queries
// follow the algorithm's discipline: INT only when s2+s4 >= 1, REL only when
// s4 >= 1, ZNORM only when v = 0.
ClassificationTrace classify(uint64_t d, ArithmeticOracle& oracle,
                             bool shortcuts_enabled = true);

enum class PatternVerdict {
  ok,
  violation,
  not_applicable,
};

// Checks a multiplet's list of types (one per member, in any order) against
// the theorem families that constrain them: the epsilon families must be
// homogeneous (all epsilon); the free quartets 5^6 q^4 and q1 q2 with
// q = +-7 mod 25 allow only {epsilon, eta}; the hexadecuplets
// 5^6 q1^4 q2^4 with non-split qi, at most one free, allow only
// {epsilon, gamma}.  Conductors outside these families yield not_applicable.
// The list length must equal the multiplicity of the profile.
PatternVerdict multiplet_type_pattern_check(const ConductorProfile& profile,
                                            const std::vector<DpfType>& types);

}  // namespace quintic
