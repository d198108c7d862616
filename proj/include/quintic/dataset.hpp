#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quintic/conductor.hpp"
#include "quintic/dpf.hpp"

namespace quintic {

// One position of the condition quartet (1,2,4,5): not applicable, marked,
// marked as partially used, or marked as fully used.  Rendered -, x, p, o in
// the TSV (the table symbols are "-", "x", "(x)", and a circled "x").
enum class FlagState {
  absent,
  enabled,
  partial,
  full,
};

char flag_char(FlagState state);
bool flag_from_char(char ch, FlagState& out);

// The four condition markers attached to every table row: c1 = no split prime
// but a restrictive one (forces type gamma or epsilon), c2 = a 2-split prime
// divides D, c4 = a 4-split prime divides D, c5 = every prime divisor is free
// or 5 (zeta may be a unit norm; "full" when it is).
struct FlagQuartet {
  FlagState c1 = FlagState::absent;
  FlagState c2 = FlagState::absent;
  FlagState c4 = FlagState::absent;
  FlagState c5 = FlagState::absent;

  std::string to_string() const;
  bool operator==(const FlagQuartet&) const = default;
};

struct FieldRecord {
  int index = 0;  // 1-based row number
  uint64_t d = 0;
  Species species;
  uint64_t m = 0;
  StateVector state;
  FlagQuartet flags;
  DpfType dpf_type = DpfType::t;
  std::string principal_factors;  // opaque text, not validated
  bool is_prototype = false;
  bool nonelementary = false;
  // Abelian type invariants of the 5-class groups when not elementary;
  // filled from the built-in table keyed by radicand, empty otherwise.
  std::string abelian_invariants;
};

// Abelian type invariants for the rows whose 5-class groups are not
// elementary.  A bare list such as "25,5,5,5" describes Cl5(N); rows where
// M or L also deviate use labelled segments "N=...;M=...;L=...".
const std::map<uint64_t, std::string>& nonelementary_invariants();

// Parses the TSV transcription.  The file must carry the exact header
//   no D species m VL VM VN E flags type pf proto nonelem
// (tab-separated), exactly 900 data rows, strictly ascending radicands, and
// row numbers 1..900 in order.
std::vector<FieldRecord> parse_dataset(const std::string& text);

std::vector<FieldRecord> load_dataset(const std::string& path);

// Inverse of parse_dataset; reproduces the shipped file byte for byte.
std::string serialize_dataset(const std::vector<FieldRecord>& records);

struct Violation {
  int index = 0;
  uint64_t d = 0;
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Re-derives every checkable relation: normalization, species, multiplicity,
// the E identity, (E, E+) membership for the row's type, dimension bounds,
// type admissibility (with the sharper prime-radicand rules), flag presence
// against the factorization, the fixed list of non-elementary rows, and the
// theorem constraints on every multiplet fully contained in the table.
ValidationReport validate(const std::vector<FieldRecord>& records);

struct TypeFrequencyRow {
  DpfType type = DpfType::t;
  std::vector<int> cumulative;  // counts with D < edge, one per edge
  int percent_tenths = 0;       // share of the full range, rounded half-up
};

struct FrequencyTable {
  std::vector<uint64_t> edges;
  std::vector<TypeFrequencyRow> rows;  // one per type, canonical order
  std::vector<int> totals;
  int total_percent_tenths = 1000;
};

std::vector<uint64_t> default_century_edges();  // 100, 200, ..., 1000

FrequencyTable statistics(const std::vector<FieldRecord>& records,
                          const std::vector<uint64_t>& century_edges);

// Tally of types stratified by the number T of primes dividing the conductor.
std::map<int, std::array<int, kDpfTypeCount>> counts_by_prime_count(
    const std::vector<FieldRecord>& records);

}  // namespace quintic
