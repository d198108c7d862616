#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "quintic/dataset.hpp"
#include "quintic/dpf.hpp"

namespace quintic {

// The full invariant multiplet shared by all members of a similarity class:
// the refined Dedekind data (with the free split primes counted separately,
// so that classes agreeing in u but not in its composition stay apart), the
// decoded type signature, the class-number state, and the abelian type
// invariants when some 5-class group is not elementary.
struct SimilarityKey {
  int e0 = 0;
  int t = 0;
  int u = 0;
  int v = 0;
  uint64_t m = 0;
  int n = 0;
  int s2 = 0;
  int s4 = 0;
  int u_free_split2 = 0;
  int u_free_split4 = 0;
  DpfSignature dpf;
  StateVector state;
  std::string abelian;

  auto as_tuple() const {
    return std::tie(e0, t, u, v, m, n, s2, s4, u_free_split2, u_free_split4,
                    dpf.U, dpf.norm_kind, dpf.A, dpf.I, dpf.R, state.VL,
                    state.VM, state.VN, state.E, abelian);
  }

  friend bool operator==(const SimilarityKey& a, const SimilarityKey& b) {
    return a.as_tuple() == b.as_tuple();
  }
  friend bool operator<(const SimilarityKey& a, const SimilarityKey& b) {
    return a.as_tuple() < b.as_tuple();
  }
};

SimilarityKey similarity_key(const FieldRecord& record);

struct SimilarityClass {
  SimilarityKey key;
  std::vector<uint64_t> members;  // ascending; all below the grouping bound
  uint64_t prototype = 0;         // the minimal member
  std::size_t cardinality = 0;
};

// Partitions the records with D < bound by similarity key.  The result is
// ordered by prototype.
std::vector<SimilarityClass> group_into_classes(
    const std::vector<FieldRecord>& records, uint64_t bound = 1000);

// One row of the per-type splitting table.
struct RefinementRow {
  SpeciesKind species = SpeciesKind::s1b;
  int e0 = 0;
  int t = 0;
  int u = 0;
  int v = 0;
  uint64_t m = 0;
  int n = 0;
  int s2 = 0;
  int s4 = 0;
  int u_free_split2 = 0;
  int u_free_split4 = 0;
  StateVector state;
  std::string abelian;
  uint64_t prototype = 0;
  std::size_t cardinality = 0;
};

std::vector<RefinementRow> refinement_table(
    DpfType type, const std::vector<SimilarityClass>& classes);

// Tab-separated rendering of a refinement row.  Free split primes are marked
// with an apostrophe on u/s2/s4; class-number entries for non-elementary
// groups carry a trailing asterisk.
std::string refinement_row_line(const RefinementRow& row);

struct ConsistencyVerdict {
  bool ok = true;
  std::vector<std::string> problems;
};

// Cross-checks the grouping against the table's own annotations: the class
// minima must be exactly the rows flagged as prototypes, and the number of
// classes per type must match the known splitting counts.
ConsistencyVerdict prototype_consistency(
    const std::vector<FieldRecord>& records,
    const std::vector<SimilarityClass>& classes);

}  // namespace quintic
