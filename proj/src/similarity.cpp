#include "quintic/similarity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quintic/errors.hpp"

namespace quintic {

SimilarityKey similarity_key(const FieldRecord& record) {
  const ConductorProfile prof = profile_of(record.d);
  const Counters& c = prof.counters;

  SimilarityKey key;
  key.e0 = prof.species.e0;
  key.t = c.t;
  key.u = c.u;
  key.v = c.v;
  key.m = multiplicity(prof);
  key.n = c.n;
  key.s2 = c.s2;
  key.s4 = c.s4;
  key.u_free_split2 = c.u_free_split2;
  key.u_free_split4 = c.u_free_split4;
  key.dpf = signature_from_type(record.dpf_type);
  key.state = record.state;
  key.abelian = record.abelian_invariants;
  return key;
}

std::vector<SimilarityClass> group_into_classes(
    const std::vector<FieldRecord>& records, uint64_t bound) {
  std::map<SimilarityKey, SimilarityClass> by_key;
  for (const auto& rec : records) {
    if (rec.d >= bound) continue;
    const SimilarityKey key = similarity_key(rec);
    auto [it, inserted] = by_key.try_emplace(key);
    if (inserted) it->second.key = key;
    it->second.members.push_back(rec.d);
  }

  std::vector<SimilarityClass> classes;
  classes.reserve(by_key.size());
  for (auto& [key, cls] : by_key) {
    std::sort(cls.members.begin(), cls.members.end());
    cls.prototype = cls.members.front();
    cls.cardinality = cls.members.size();
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const SimilarityClass& a, const SimilarityClass& b) {
              return a.prototype < b.prototype;
            });
  return classes;
}

std::vector<RefinementRow> refinement_table(
    DpfType type, const std::vector<SimilarityClass>& classes) {
  const DpfSignature wanted = signature_from_type(type);
  std::vector<RefinementRow> rows;
  for (const auto& cls : classes) {
    if (!(cls.key.dpf == wanted)) continue;
    RefinementRow row;
    switch (cls.key.e0) {
      case 6:
        row.species = SpeciesKind::s1a;
        break;
      case 2:
        row.species = SpeciesKind::s1b;
        break;
      default:
        row.species = SpeciesKind::s2;
        break;
    }
    row.e0 = cls.key.e0;
    row.t = cls.key.t;
    row.u = cls.key.u;
    row.v = cls.key.v;
    row.m = cls.key.m;
    row.n = cls.key.n;
    row.s2 = cls.key.s2;
    row.s4 = cls.key.s4;
    row.u_free_split2 = cls.key.u_free_split2;
    row.u_free_split4 = cls.key.u_free_split4;
    row.state = cls.key.state;
    row.abelian = cls.key.abelian;
    row.prototype = cls.prototype;
    row.cardinality = cls.cardinality;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string primed(int value, bool mark) {
  std::string out = std::to_string(value);
  if (mark) out.push_back('\'');
  return out;
}

std::string starred(int value, bool mark) {
  std::string out = std::to_string(value);
  if (mark) out.push_back('*');
  return out;
}

}  // namespace

std::string refinement_row_line(const RefinementRow& row) {
  // A bare invariant list describes Cl5(N); labelled segments name the
  // deviating fields explicitly.
  const bool star_n = !row.abelian.empty();
  const bool star_m = row.abelian.find("M=") != std::string::npos;
  const bool star_l = row.abelian.find("L=") != std::string::npos;

  std::string out = species_name(Species{row.species, row.e0});
  out += '\t';
  out += std::to_string(row.e0);
  out += '\t';
  out += std::to_string(row.t);
  out += '\t';
  out += primed(row.u, row.u_free_split2 + row.u_free_split4 > 0);
  out += '\t';
  out += std::to_string(row.v);
  out += '\t';
  out += std::to_string(row.m);
  out += '\t';
  out += std::to_string(row.n);
  out += '\t';
  out += primed(row.s2, row.u_free_split2 > 0);
  out += '\t';
  out += primed(row.s4, row.u_free_split4 > 0);
  out += '\t';
  out += starred(row.state.VL, star_l);
  out += '\t';
  out += starred(row.state.VM, star_m);
  out += '\t';
  out += starred(row.state.VN, star_n);
  out += '\t';
  out += std::to_string(row.state.E);
  out += '\t';
  out += std::to_string(row.prototype);
  out += '\t';
  out += std::to_string(row.cardinality);
  return out;
}

ConsistencyVerdict prototype_consistency(
    const std::vector<FieldRecord>& records,
    const std::vector<SimilarityClass>& classes) {
  ConsistencyVerdict verdict;
  const auto problem = [&verdict](std::string text) {
    verdict.ok = false;
    verdict.problems.push_back(std::move(text));
  };

  std::set<uint64_t> computed;
  for (const auto& cls : classes) computed.insert(cls.prototype);
  std::set<uint64_t> flagged;
  for (const auto& rec : records)
    if (rec.is_prototype) flagged.insert(rec.d);

  for (const uint64_t d : computed)
    if (!flagged.contains(d))
      problem("class minimum " + std::to_string(d) +
              " is not flagged as a prototype");
  for (const uint64_t d : flagged)
    if (!computed.contains(d))
      problem("flagged prototype " + std::to_string(d) +
              " is not a class minimum");

  // Known splitting of the 134 classes over the thirteen types.
  static constexpr std::array<int, kDpfTypeCount> kExpected{
      5, 22, 5, 10, 25, 29, 3, 5, 22, 1, 3, 2, 2};
  std::array<int, kDpfTypeCount> actual{};
  for (const auto& cls : classes)
    ++actual[static_cast<int>(type_from_signature(cls.key.dpf))];
  for (int i = 0; i < kDpfTypeCount; ++i) {
    if (actual[i] != kExpected[i])
      problem("type " + type_name(static_cast<DpfType>(i)) + " has " +
              std::to_string(actual[i]) + " classes, expected " +
              std::to_string(kExpected[i]));
  }
  return verdict;
}

}  // namespace quintic
