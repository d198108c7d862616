#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "quintic/similarity.hpp"

using namespace quintic;

namespace {

const std::vector<FieldRecord>& shipped() {
  static const auto recs = load_dataset(QUINTIC_DATASET_PATH);
  return recs;
}

const std::vector<SimilarityClass>& shipped_classes() {
  static const auto classes = group_into_classes(shipped());
  return classes;
}

const FieldRecord& record_of(uint64_t d) {
  for (const auto& rec : shipped())
    if (rec.d == d) return rec;
  REQUIRE(false);
  return shipped().front();
}

const SimilarityClass& class_of(uint64_t prototype) {
  for (const auto& cls : shipped_classes())
    if (cls.prototype == prototype) return cls;
  REQUIRE(false);
  return shipped_classes().front();
}

}  // namespace

TEST_CASE("similarity keys carry the full invariant tuple") {
  const SimilarityKey k5 = similarity_key(record_of(5));
  CHECK(k5.e0 == 6);
  CHECK(k5.t == 0);
  CHECK(k5.u == 0);
  CHECK(k5.v == 0);
  CHECK(k5.m == 1);
  CHECK(k5.dpf == signature_from_type(DpfType::t));
  CHECK(k5.state == StateVector{0, 0, 0, 5});
  CHECK(k5.abelian.empty());
}

TEST_CASE("free split primes separate otherwise equal keys") {
  // 77 = 7 * 11 and 202 = 2 * 101 share every coarse counter; only the
  // subdivision of the free prime by split degree tells them apart
  const SimilarityKey k77 = similarity_key(record_of(77));
  const SimilarityKey k202 = similarity_key(record_of(202));
  CHECK(k77.t == k202.t);
  CHECK(k77.u == k202.u);
  CHECK(k77.v == k202.v);
  CHECK(k77.n == k202.n);
  CHECK(k77.s4 == k202.s4);
  CHECK(k77.u_free_split4 == 0);
  CHECK(k202.u_free_split4 == 1);
  CHECK_FALSE(k77 == k202);
}

TEST_CASE("the table splits into 134 similarity classes") {
  const auto& classes = shipped_classes();
  REQUIRE(classes.size() == 134);

  std::size_t covered = 0;
  for (const auto& cls : classes) {
    CHECK(cls.cardinality == cls.members.size());
    CHECK(cls.prototype == cls.members.front());
    covered += cls.cardinality;
  }
  CHECK(covered == 900);

  // prototypes ascend, so the first class belongs to the smallest radicand
  CHECK(classes.front().prototype == 2);
  CHECK(classes.front().cardinality == 71);
  CHECK(type_from_signature(classes.front().key.dpf) == DpfType::e);

  CHECK(class_of(5).cardinality == 1);
  CHECK(class_of(6).cardinality == 77);
  CHECK(class_of(7).cardinality == 18);
  CHECK(class_of(10).cardinality == 31);
  CHECK(class_of(11).cardinality == 14);
  CHECK(class_of(14).cardinality == 44);
  CHECK(classes.back().prototype == 957);
  CHECK(classes.back().cardinality == 1);
  CHECK(type_from_signature(classes.back().key.dpf) == DpfType::a3);
}

TEST_CASE("grouping respects the bound") {
  const auto small = group_into_classes(shipped(), 100);
  std::size_t covered = 0;
  for (const auto& cls : small) {
    CHECK(cls.prototype < 100);
    for (uint64_t d : cls.members) CHECK(d < 100);
    covered += cls.cardinality;
  }
  CHECK(covered == 81);  // tabulated radicands below 100
}

TEST_CASE("classes match the expected grouping file") {
  std::ifstream in(std::string(QUINTIC_TEST_DATA_DIR) +
                   "/similarity_classes_expected.tsv");
  REQUIRE(in.good());
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "prototype\ttype\tcardinality");

  const auto& classes = shipped_classes();
  std::size_t i = 0;
  std::string line;
  while (std::getline(in, line)) {
    REQUIRE(i < classes.size());
    std::istringstream row(line);
    uint64_t prototype = 0;
    std::string type;
    std::size_t cardinality = 0;
    row >> prototype >> type >> cardinality;
    CAPTURE(prototype);
    CHECK(classes[i].prototype == prototype);
    CHECK(type_name(type_from_signature(classes[i].key.dpf)) == type);
    CHECK(classes[i].cardinality == cardinality);
    ++i;
  }
  CHECK(i == classes.size());
}

TEST_CASE("per-type splitting counts") {
  std::map<DpfType, int> per_type;
  for (const auto& cls : shipped_classes())
    ++per_type[type_from_signature(cls.key.dpf)];

  CHECK(per_type[DpfType::a1] == 5);
  CHECK(per_type[DpfType::a2] == 22);
  CHECK(per_type[DpfType::a3] == 5);
  CHECK(per_type[DpfType::b1] == 10);
  CHECK(per_type[DpfType::b2] == 25);
  CHECK(per_type[DpfType::g] == 29);
  CHECK(per_type[DpfType::d1] == 3);
  CHECK(per_type[DpfType::d2] == 5);
  CHECK(per_type[DpfType::e] == 22);
  CHECK(per_type[DpfType::z1] == 1);
  CHECK(per_type[DpfType::z2] == 3);
  CHECK(per_type[DpfType::h] == 2);
  CHECK(per_type[DpfType::t] == 2);
}

TEST_CASE("prototype flags agree with the computed minima") {
  const auto verdict = prototype_consistency(shipped(), shipped_classes());
  for (const auto& p : verdict.problems) {
    CAPTURE(p);
    CHECK(false);
  }
  CHECK(verdict.ok);
}

TEST_CASE("refinement tables per type") {
  const auto a1_rows = refinement_table(DpfType::a1, shipped_classes());
  REQUIRE(a1_rows.size() == 5);
  std::vector<uint64_t> prototypes;
  for (const auto& row : a1_rows) prototypes.push_back(row.prototype);
  CHECK(prototypes == std::vector<uint64_t>{31, 155, 281, 341, 401});

  CHECK(refinement_table(DpfType::g, shipped_classes()).size() == 29);
  CHECK(refinement_table(DpfType::z1, shipped_classes()).size() == 1);

  const auto t_rows = refinement_table(DpfType::t, shipped_classes());
  REQUIRE(t_rows.size() == 2);
  CHECK(refinement_row_line(t_rows[0]) ==
        "1a\t6\t0\t0\t0\t1\t0\t0\t0\t0\t0\t0\t5\t5\t1");
  CHECK(refinement_row_line(t_rows[1]) ==
        "2\t0\t1\t1\t0\t1\t1\t0\t0\t0\t0\t0\t5\t7\t18");
}

TEST_CASE("refinement rows mark free split primes and non-elementary groups") {
  const auto a1_rows = refinement_table(DpfType::a1, shipped_classes());
  REQUIRE(a1_rows.size() == 5);

  // 281 is one of the non-elementary rows: VM and VN carry the asterisk
  CHECK(refinement_row_line(a1_rows[2]) ==
        "1b\t2\t1\t0\t1\t1\t0\t0\t1\t3\t5*\t9*\t2\t281\t1");

  // 401 = +1 (mod 25): its free 4-split prime primes u and s4
  CHECK(refinement_row_line(a1_rows[4]) ==
        "2\t0\t1\t1'\t0\t1\t0\t0\t1'\t2\t3\t5\t2\t401\t2");
}
