#include "quintic/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "quintic/arith.hpp"
#include "quintic/classify.hpp"
#include "quintic/errors.hpp"

namespace quintic {

namespace {

constexpr const char* kHeader =
    "no\tD\tspecies\tm\tVL\tVM\tVN\tE\tflags\ttype\tpf\tproto\tnonelem";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cells;
  std::string::size_type start = 0;
  for (;;) {
    const auto pos = line.find('\t', start);
    if (pos == std::string::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

uint64_t parse_u64(const std::string& cell, int line_no, const char* what) {
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size())
    throw ParseError(line_no, std::string(what) + ": bad integer \"" + cell +
                                  "\"");
  return value;
}

int parse_int(const std::string& cell, int line_no, const char* what) {
  return static_cast<int>(parse_u64(cell, line_no, what));
}

bool parse_species(const std::string& cell, Species& out) {
  if (cell == "1a") {
    out = Species{SpeciesKind::s1a, 6};
    return true;
  }
  if (cell == "1b") {
    out = Species{SpeciesKind::s1b, 2};
    return true;
  }
  if (cell == "2") {
    out = Species{SpeciesKind::s2, 0};
    return true;
  }
  return false;
}

bool is_znorm_type(DpfType type) {
  const NormKind norms = signature_from_type(type).norm_kind;
  return norms == NormKind::zeta || norms == NormKind::both;
}

}  // namespace

char flag_char(FlagState state) {
  switch (state) {
    case FlagState::absent:
      return '-';
    case FlagState::enabled:
      return 'x';
    case FlagState::partial:
      return 'p';
    case FlagState::full:
      return 'o';
  }
  return '?';
}

bool flag_from_char(char ch, FlagState& out) {
  switch (ch) {
    case '-':
      out = FlagState::absent;
      return true;
    case 'x':
      out = FlagState::enabled;
      return true;
    case 'p':
      out = FlagState::partial;
      return true;
    case 'o':
      out = FlagState::full;
      return true;
    default:
      return false;
  }
}

std::string FlagQuartet::to_string() const {
  return {flag_char(c1), flag_char(c2), flag_char(c4), flag_char(c5)};
}

const std::map<uint64_t, std::string>& nonelementary_invariants() {
  static const std::map<uint64_t, std::string> table{
      {259, "25,5,5,5"},
      {281, "N=25,5,5,5,5,5,5,5;M=25,5,5,5"},
      {465, "25,5,5,5,5,5"},
      {473, "25,5,5,5,5,5"},
      {502, "N=25,5,5,5,5,5,5;M=25,5,5;L=25"},
      {590, "25,5,5,5,5,5"},
      {620, "N=25,25,5,5,5,5;M=25,5,5"},
      {955, "N=25,5,5,5,5;M=25,5;L=25"},
  };
  return table;
}

std::vector<FieldRecord> parse_dataset(const std::string& text) {
  std::vector<FieldRecord> records;
  std::set<uint64_t> seen;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != kHeader)
        throw ParseError(1, "unexpected header \"" + line + "\"");
      continue;
    }
    if (line.empty())
      throw ParseError(line_no, "blank line inside the table");

    const std::vector<std::string> cells = split_tabs(line);
    if (cells.size() != 13)
      throw ParseError(line_no, "expected 13 columns, got " +
                                    std::to_string(cells.size()));

    FieldRecord rec;
    rec.index = parse_int(cells[0], line_no, "no");
    if (rec.index != static_cast<int>(records.size()) + 1)
      throw ParseError(line_no, "row number " + cells[0] +
                                    " breaks the 1..n sequence");
    rec.d = parse_u64(cells[1], line_no, "D");
    if (!seen.insert(rec.d).second) throw DuplicateRadicand(rec.d);
    if (!records.empty() && rec.d < records.back().d)
      throw ParseError(line_no, "radicands not in ascending order");
    if (!parse_species(cells[2], rec.species))
      throw ParseError(line_no, "unknown species \"" + cells[2] + "\"");
    rec.m = parse_u64(cells[3], line_no, "m");
    rec.state.VL = parse_int(cells[4], line_no, "VL");
    rec.state.VM = parse_int(cells[5], line_no, "VM");
    rec.state.VN = parse_int(cells[6], line_no, "VN");
    rec.state.E = parse_int(cells[7], line_no, "E");
    if (cells[8].size() != 4)
      throw ParseError(line_no, "flags must be 4 characters, got \"" +
                                    cells[8] + "\"");
    if (!flag_from_char(cells[8][0], rec.flags.c1) ||
        !flag_from_char(cells[8][1], rec.flags.c2) ||
        !flag_from_char(cells[8][2], rec.flags.c4) ||
        !flag_from_char(cells[8][3], rec.flags.c5))
      throw ParseError(line_no, "bad flag character in \"" + cells[8] + "\"");
    if (!type_from_name(cells[9], rec.dpf_type))
      throw ParseError(line_no, "unknown type \"" + cells[9] + "\"");
    rec.principal_factors = cells[10];
    if (cells[11] != "0" && cells[11] != "1")
      throw ParseError(line_no, "proto must be 0 or 1");
    rec.is_prototype = cells[11] == "1";
    if (cells[12] != "0" && cells[12] != "1")
      throw ParseError(line_no, "nonelem must be 0 or 1");
    rec.nonelementary = cells[12] == "1";
    if (rec.nonelementary) {
      const auto& table = nonelementary_invariants();
      if (const auto it = table.find(rec.d); it != table.end())
        rec.abelian_invariants = it->second;
    }
    records.push_back(std::move(rec));
  }

  if (records.size() != 900) throw CountMismatch(records.size(), 900);
  return records;
}

std::vector<FieldRecord> load_dataset(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open dataset file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dataset(buffer.str());
}

std::string serialize_dataset(const std::vector<FieldRecord>& records) {
  std::string out(kHeader);
  out.push_back('\n');
  for (const auto& rec : records) {
    out += std::to_string(rec.index);
    out.push_back('\t');
    out += std::to_string(rec.d);
    out.push_back('\t');
    out += species_name(rec.species);
    out.push_back('\t');
    out += std::to_string(rec.m);
    out.push_back('\t');
    out += std::to_string(rec.state.VL);
    out.push_back('\t');
    out += std::to_string(rec.state.VM);
    out.push_back('\t');
    out += std::to_string(rec.state.VN);
    out.push_back('\t');
    out += std::to_string(rec.state.E);
    out.push_back('\t');
    out += rec.flags.to_string();
    out.push_back('\t');
    out += type_name(rec.dpf_type);
    out.push_back('\t');
    out += rec.principal_factors;
    out.push_back('\t');
    out += rec.is_prototype ? "1" : "0";
    out.push_back('\t');
    out += rec.nonelementary ? "1" : "0";
    out.push_back('\n');
  }
  return out;
}

ValidationReport validate(const std::vector<FieldRecord>& records) {
  ValidationReport report;
  const auto flag = [&report](const FieldRecord& rec, const char* rule,
                              std::string detail) {
    report.violations.push_back(
        {rec.index, rec.d, rule, std::move(detail)});
  };

  std::map<uint64_t, const FieldRecord*> by_radicand;
  for (const auto& rec : records) by_radicand.emplace(rec.d, &rec);

  for (const auto& rec : records) {
    ConductorProfile prof;
    try {
      const Normalization norm = normalize_radicand(rec.d);
      if (norm.dstar != rec.d) {
        flag(rec, "normalization",
             "class minimum is " + to_decimal(norm.dstar));
        continue;
      }
      prof = profile_of(rec.d);
    } catch (const Error& err) {
      flag(rec, "normalization", err.what());
      continue;
    }
    const Counters& c = prof.counters;
    const Species& s = prof.species;

    if (s.kind != rec.species.kind)
      flag(rec, "species", "recomputed species is " + species_name(s));

    if (const uint64_t m = multiplicity(prof); m != rec.m)
      flag(rec, "multiplicity",
           "recomputed m = " + std::to_string(m) + ", row says " +
               std::to_string(rec.m));

    if (rec.state.E != 5 + rec.state.VN - 4 * rec.state.VL)
      flag(rec, "E-relation",
           "5 + VN - 4 VL = " +
               std::to_string(5 + rec.state.VN - 4 * rec.state.VL));

    const auto& pairs = index_pairs_for_type(rec.dpf_type);
    const std::pair<int, int> indices{rec.state.E, rec.state.e_plus()};
    if (std::find(pairs.begin(), pairs.end(), indices) == pairs.end())
      flag(rec, "index-pairs",
           "(E,E+) = (" + std::to_string(indices.first) + "," +
               std::to_string(indices.second) + ") not admissible for type " +
               type_name(rec.dpf_type));

    const DpfSignature sig = signature_from_type(rec.dpf_type);
    const DimensionBounds b = dimension_bounds(c, s);
    if (sig.A > b.a_max || sig.I > b.i_max || sig.R > b.r_max)
      flag(rec, "dimension-bounds",
           "(A,I,R) = (" + std::to_string(sig.A) + "," +
               std::to_string(sig.I) + "," + std::to_string(sig.R) +
               ") exceeds (" + std::to_string(b.a_max) + "," +
               std::to_string(b.i_max) + "," + std::to_string(b.r_max) + ")");
    if (sig.U + 1 != sig.A + sig.I + sig.R)
      flag(rec, "signature-identity", "U+1 != A+I+R");

    if (!admissible_types(c, s, is_prime(rec.d)).contains(rec.dpf_type))
      flag(rec, "admissible-types",
           "type " + type_name(rec.dpf_type) + " excluded for this conductor");

    // Presence of each condition marker is determined by the factorization.
    const bool want_c1 = c.s2 == 0 && c.s4 == 0 && c.v >= 1;
    if ((rec.flags.c1 != FlagState::absent) != want_c1)
      flag(rec, "flag-presence", "component 1 should be " +
                                     std::string(want_c1 ? "set" : "clear"));
    if ((rec.flags.c2 != FlagState::absent) != (c.s2 >= 1))
      flag(rec, "flag-presence", "component 2 should be " +
                                     std::string(c.s2 >= 1 ? "set" : "clear"));
    if ((rec.flags.c4 != FlagState::absent) != (c.s4 >= 1))
      flag(rec, "flag-presence", "component 4 should be " +
                                     std::string(c.s4 >= 1 ? "set" : "clear"));
    if ((rec.flags.c5 != FlagState::absent) != (c.v == 0))
      flag(rec, "flag-presence", "component 5 should be " +
                                     std::string(c.v == 0 ? "set" : "clear"));

    if (rec.flags.c1 != FlagState::absent && rec.dpf_type != DpfType::g &&
        rec.dpf_type != DpfType::e)
      flag(rec, "flag-c1", "component 1 allows only types g and e, row has " +
                               type_name(rec.dpf_type));
    if (rec.flags.c5 != FlagState::absent) {
      const bool full = rec.flags.c5 == FlagState::full;
      if (full != is_znorm_type(rec.dpf_type))
        flag(rec, "flag-c5",
             full ? "marked full but zeta is not a norm for this type"
                  : "type has zeta as a norm, marker should be full");
    }

    if (rec.nonelementary != nonelementary_invariants().contains(rec.d))
      flag(rec, "non-elementary",
           rec.nonelementary ? "not one of the 8 known rows"
                             : "row is one of the 8 known rows");
  }

  // Theorem constraints on multiplets whose members all lie in the table.
  std::set<uint64_t> checked;
  for (const auto& rec : records) {
    ConductorProfile prof;
    try {
      prof = profile_of(rec.d);
    } catch (const Error&) {
      continue;
    }
    std::vector<u128> members;
    try {
      members = enumerate_multiplet(prof);
    } catch (const TooManyPrimes&) {
      continue;
    }
    if (members.empty() || checked.contains(static_cast<uint64_t>(members[0])))
      continue;
    checked.insert(static_cast<uint64_t>(members[0]));

    std::vector<DpfType> types;
    bool complete = true;
    for (const u128 member : members) {
      if (member >= 1000) {  // outside the tabulated range
        complete = false;
        break;
      }
      const auto it = by_radicand.find(static_cast<uint64_t>(member));
      if (it == by_radicand.end()) {
        complete = false;
        break;
      }
      types.push_back(it->second->dpf_type);
    }
    if (!complete) continue;
    try {
      if (multiplet_type_pattern_check(prof, types) ==
          PatternVerdict::violation)
        flag(rec, "multiplet-pattern",
             "types in the multiplet violate the theorem family");
    } catch (const LengthMismatch& err) {
      flag(rec, "multiplet-pattern", err.what());
    }
  }

  return report;
}

std::vector<uint64_t> default_century_edges() {
  std::vector<uint64_t> edges;
  for (uint64_t edge = 100; edge <= 1000; edge += 100) edges.push_back(edge);
  return edges;
}

FrequencyTable statistics(const std::vector<FieldRecord>& records,
                          const std::vector<uint64_t>& century_edges) {
  FrequencyTable table;
  table.edges = century_edges;

  uint64_t grand_total = 0;
  for (const auto& rec : records)
    if (!century_edges.empty() && rec.d < century_edges.back()) ++grand_total;

  for (const DpfType type : all_dpf_types()) {
    TypeFrequencyRow row;
    row.type = type;
    for (const uint64_t edge : century_edges) {
      int count = 0;
      for (const auto& rec : records)
        if (rec.dpf_type == type && rec.d < edge) ++count;
      row.cumulative.push_back(count);
    }
    const uint64_t final_count =
        row.cumulative.empty() ? 0 : row.cumulative.back();
    row.percent_tenths =
        grand_total == 0
            ? 0
            : static_cast<int>((2000 * final_count + grand_total) /
                               (2 * grand_total));
    table.rows.push_back(std::move(row));
  }

  table.totals.assign(century_edges.size(), 0);
  for (std::size_t i = 0; i < century_edges.size(); ++i)
    for (const auto& row : table.rows) table.totals[i] += row.cumulative[i];
  table.total_percent_tenths = 1000;
  return table;
}

std::map<int, std::array<int, kDpfTypeCount>> counts_by_prime_count(
    const std::vector<FieldRecord>& records) {
  std::map<int, std::array<int, kDpfTypeCount>> out;
  for (const auto& rec : records) {
    const ConductorProfile prof = profile_of(rec.d);
    const int T = conductor_prime_count(prof.counters, prof.species);
    auto [it, inserted] = out.try_emplace(T);
    if (inserted) it->second.fill(0);
    ++it->second[static_cast<int>(rec.dpf_type)];
  }
  return out;
}

}  // namespace quintic
