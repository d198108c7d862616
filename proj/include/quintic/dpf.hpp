#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quintic/conductor.hpp"

namespace quintic {

// The thirteen differential principal factorization (DPF) types of a pure
// metacyclic field N = Q(zeta5, D^(1/5)).  ASCII spellings: the Greek letters
// alpha1..alpha3, beta1..beta2, gamma, delta1..delta2, epsilon, zeta1..zeta2,
// eta, theta become a1,a2,a3,b1,b2,g,d1,d2,e,z1,z2,h,t.
enum class DpfType {
  a1,
  a2,
  a3,
  b1,
  b2,
  g,
  d1,
  d2,
  e,
  z1,
  z2,
  h,
  t,
};

inline constexpr int kDpfTypeCount = 13;

// All thirteen types in canonical table order (a1..t).
const std::vector<DpfType>& all_dpf_types();

std::string type_name(DpfType type);

// Inverse of type_name; returns false if `name` is not one of the thirteen
// canonical spellings.
bool type_from_name(const std::string& name, DpfType& out);

// Which roots of unity lie in the norm group N_{N/K}(U_N): `eta` and `zeta`
// encode exactly one of the two generators, so U = 2 - (number present).
enum class NormKind {
  none,
  eta,
  zeta,
  both,
};

// One row of the type table: U is the 5-valuation of the unit norm index,
// A/I/R are the F_5-dimensions of the spaces of absolute, intermediate, and
// relative differential principal factors.  Every row obeys U+1 = A+I+R.
struct DpfSignature {
  int U = 0;
  NormKind norm_kind = NormKind::none;
  int A = 0;
  int I = 0;
  int R = 0;

  bool operator==(const DpfSignature&) const = default;
};

// Bijection between the thirteen types and their signatures.
// type_from_signature throws NoSuchSignature for any tuple outside the table.
DpfType type_from_signature(const DpfSignature& sig);
DpfSignature signature_from_type(DpfType type);

// Class-number valuations of L, M, N together with the logarithmic index E of
// subfield units.  E_plus is the real-subfield variant and is derived, not
// stored.
struct StateVector {
  int VL = 0;
  int VM = 0;
  int VN = 0;
  int E = 0;

  int e_plus() const { return 2 + VM - 2 * VL; }

  bool operator==(const StateVector&) const = default;
};

// Upper bounds for the dimensions A, I, R implied by the conductor shape:
//   1 <= A <= min(3, T),  0 <= I <= min(2, 2(s2+s4)),  0 <= R <= min(2, 4 s4),
// where T counts all primes dividing the conductor (t plus one for the prime 5
// whenever e0 > 0).
struct DimensionBounds {
  int a_max = 0;
  int i_max = 0;
  int r_max = 0;
};

DimensionBounds dimension_bounds(const Counters& c, const Species& s);

// Number of distinct primes dividing the conductor: t, plus the prime 5 when
// it ramifies in N/K beyond the cyclotomic part (e0 > 0).
int conductor_prime_count(const Counters& c, const Species& s);

// The set of types compatible with a conductor profile.  Three filters are
// intersected: the dimension bounds above; the exclusion of zeta1, zeta2, eta,
// theta when a restrictive prime divides the conductor (v >= 1); and, for
// prime radicands, the sharper case analysis that also forces I <= 1 when the
// radicand splits in M.
std::set<DpfType> admissible_types(const Counters& c, const Species& s,
                                   bool prime_radicand);

// Admissible (E, E+) pairs per type.  These connections are heuristic
// observations over the computed range, exposed as a consistency check only.
const std::vector<std::pair<int, int>>& index_pairs_for_type(DpfType type);

// N is a Polya field exactly when every prime dividing the conductor
// contributes an absolute principal factor, i.e. A equals the count T.
bool polya_predicate(int A, const Counters& c, const Species& s);

}  // namespace quintic
