#include "quintic/dpf.hpp"

#include <algorithm>
#include <array>

#include "quintic/errors.hpp"

namespace quintic {

namespace {

struct TableRow {
  DpfType type;
  const char* name;
  DpfSignature sig;
};

// The defining table of the thirteen types.  Order matters: it is the
// canonical presentation order used by reports and iteration.
constexpr std::array<TableRow, kDpfTypeCount> kTable{{
    {DpfType::a1, "a1", {2, NormKind::none, 1, 0, 2}},
    {DpfType::a2, "a2", {2, NormKind::none, 1, 1, 1}},
    {DpfType::a3, "a3", {2, NormKind::none, 1, 2, 0}},
    {DpfType::b1, "b1", {2, NormKind::none, 2, 0, 1}},
    {DpfType::b2, "b2", {2, NormKind::none, 2, 1, 0}},
    {DpfType::g, "g", {2, NormKind::none, 3, 0, 0}},
    {DpfType::d1, "d1", {1, NormKind::eta, 1, 0, 1}},
    {DpfType::d2, "d2", {1, NormKind::eta, 1, 1, 0}},
    {DpfType::e, "e", {1, NormKind::eta, 2, 0, 0}},
    {DpfType::z1, "z1", {1, NormKind::zeta, 1, 0, 1}},
    {DpfType::z2, "z2", {1, NormKind::zeta, 1, 1, 0}},
    {DpfType::h, "h", {1, NormKind::zeta, 2, 0, 0}},
    {DpfType::t, "t", {0, NormKind::both, 1, 0, 0}},
}};

const TableRow& row_of(DpfType type) {
  return kTable[static_cast<int>(type)];
}

std::string describe(const DpfSignature& sig) {
  const char* norm = "?";
  switch (sig.norm_kind) {
    case NormKind::none:
      norm = "none";
      break;
    case NormKind::eta:
      norm = "eta";
      break;
    case NormKind::zeta:
      norm = "zeta";
      break;
    case NormKind::both:
      norm = "both";
      break;
  }
  return "(U=" + std::to_string(sig.U) + ", " + norm +
         ", A=" + std::to_string(sig.A) + ", I=" + std::to_string(sig.I) +
         ", R=" + std::to_string(sig.R) + ")";
}

}  // namespace

const std::vector<DpfType>& all_dpf_types() {
  static const std::vector<DpfType> types = [] {
    std::vector<DpfType> v;
    for (const auto& row : kTable) v.push_back(row.type);
    return v;
  }();
  return types;
}

std::string type_name(DpfType type) { return row_of(type).name; }

bool type_from_name(const std::string& name, DpfType& out) {
  for (const auto& row : kTable) {
    if (name == row.name) {
      out = row.type;
      return true;
    }
  }
  return false;
}

DpfType type_from_signature(const DpfSignature& sig) {
  for (const auto& row : kTable) {
    if (row.sig == sig) return row.type;
  }
  throw NoSuchSignature(describe(sig));
}

DpfSignature signature_from_type(DpfType type) { return row_of(type).sig; }

int conductor_prime_count(const Counters& c, const Species& s) {
  return c.t + (s.e0 > 0 ? 1 : 0);
}

DimensionBounds dimension_bounds(const Counters& c, const Species& s) {
  DimensionBounds b;
  b.a_max = std::min(3, conductor_prime_count(c, s));
  b.i_max = std::min(2, 2 * (c.s2 + c.s4));
  b.r_max = std::min(2, 4 * c.s4);
  return b;
}

std::set<DpfType> admissible_types(const Counters& c, const Species& s,
                                   bool prime_radicand) {
  const DimensionBounds b = dimension_bounds(c, s);
  std::set<DpfType> out;
  for (const auto& row : kTable) {
    if (row.sig.A > b.a_max || row.sig.I > b.i_max || row.sig.R > b.r_max)
      continue;
    // A restrictive prime divisor rules out every type whose norm group
    // contains zeta (the column marked for zeta1, zeta2, eta, theta).
    if (c.v >= 1 && (row.sig.norm_kind == NormKind::zeta ||
                     row.sig.norm_kind == NormKind::both))
      continue;
    out.insert(row.type);
  }

  if (!prime_radicand) return out;

  // For a prime radicand that splits in M the radical spans a 1-dimensional
  // subspace of the differential factors over the split prime, leaving room
  // for at most a 1-dimensional intermediate complement.
  if (c.s2 + c.s4 >= 1) {
    std::erase_if(out,
                  [](DpfType ty) { return signature_from_type(ty).I > 1; });
  }

  // Case analysis for prime radicands D = q: the admissible set depends only
  // on the residue of q modulo 25 (equivalently on species and the split
  // counters).  Intersecting keeps the function honest if the bounds above
  // were ever loosened.
  std::set<DpfType> allowed;
  if (s.kind == SpeciesKind::s1a) {
    // q = 5.
    allowed = {DpfType::t};
  } else if (s.kind == SpeciesKind::s2) {
    if (c.s2 >= 1) {
      // q = -1 (mod 25)
      allowed = {DpfType::d2, DpfType::z2, DpfType::t};
    } else if (c.s4 >= 1) {
      // q = +1 (mod 25)
      allowed = {DpfType::a1, DpfType::a2, DpfType::d1, DpfType::d2,
                 DpfType::z1, DpfType::z2, DpfType::t};
    } else {
      // q = +-7 (mod 25)
      allowed = {DpfType::t};
    }
  } else {
    if (c.s2 >= 1) {
      // q = -1 (mod 5) but not -1 (mod 25)
      allowed = {DpfType::b2, DpfType::d2, DpfType::e};
    } else if (c.s4 >= 1) {
      // q = +1 (mod 5) but not +1 (mod 25)
      allowed = {DpfType::a1, DpfType::a2, DpfType::b1, DpfType::b2,
                 DpfType::d1, DpfType::d2, DpfType::e};
    } else {
      // q = +-2 (mod 5) but not +-7 (mod 25)
      allowed = {DpfType::e};
    }
  }
  std::set<DpfType> result;
  std::set_intersection(out.begin(), out.end(), allowed.begin(), allowed.end(),
                        std::inserter(result, result.begin()));
  return result;
}

const std::vector<std::pair<int, int>>& index_pairs_for_type(DpfType type) {
  static const std::array<std::vector<std::pair<int, int>>, kDpfTypeCount>
      pairs{{
          /* a1 */ {{2, 1}},
          /* a2 */ {{1, 0}, {3, 1}},
          /* a3 */ {{2, 0}},
          /* b1 */ {{3, 1}, {5, 2}},
          /* b2 */ {{4, 1}},
          /* g  */ {{6, 2}},
          /* d1 */ {{2, 1}, {4, 2}},
          /* d2 */ {{3, 1}},
          /* e  */ {{5, 2}},
          /* z1 */ {{5, 2}},
          /* z2 */ {{4, 1}},
          /* h  */ {{6, 2}},
          /* t  */ {{5, 2}},
      }};
  return pairs[static_cast<int>(type)];
}

bool polya_predicate(int A, const Counters& c, const Species& s) {
  return A == conductor_prime_count(c, s);
}

}  // namespace quintic
