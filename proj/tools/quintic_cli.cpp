// Command-line front end: normalization, conductor data, multiplets, type
// classification, dataset validation, statistics, and similarity-class
// reports for pure quintic fields Q(D^(1/5)).

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quintic/arith.hpp"
#include "quintic/classify.hpp"
#include "quintic/conductor.hpp"
#include "quintic/dataset.hpp"
#include "quintic/dpf.hpp"
#include "quintic/errors.hpp"
#include "quintic/oracle.hpp"
#include "quintic/similarity.hpp"

namespace {

using namespace quintic;

// Input radicands must already be normalized; everything downstream
// (multiplicity, similarity, classification) is keyed on class minima.
void require_normalized(uint64_t d) {
  const Normalization norm = normalize_radicand(d);
  if (norm.dstar != d)
    throw Error("radicand " + std::to_string(d) +
                " is not normalized; its class minimum is " +
                to_decimal(norm.dstar));
}

int cmd_normalize(uint64_t d) {
  const Normalization norm = normalize_radicand(d);
  std::cout << "dstar=" << to_decimal(norm.dstar) << " power=" << norm.power
            << "\n";
  return 0;
}

int cmd_conductor(uint64_t d) {
  require_normalized(d);
  const ConductorProfile prof = profile_of(d);
  const Counters& c = prof.counters;
  std::cout << "species=" << species_name(prof.species)
            << " f4=" << f4_string(prof) << " t=" << c.t << " u=" << c.u
            << " v=" << c.v << " n=" << c.n << " s2=" << c.s2
            << " s4=" << c.s4 << " m=" << multiplicity(prof) << "\n";
  return 0;
}

int cmd_multiplet(uint64_t d) {
  require_normalized(d);
  const auto members = enumerate_multiplet(profile_of(d));
  std::string line;
  for (const u128 member : members) {
    if (!line.empty()) line += ' ';
    line += to_decimal(member);
  }
  std::cout << line << "\n";
  return 0;
}

std::unique_ptr<ArithmeticOracle> make_oracle(const std::string& spec) {
  if (spec == "none") return std::make_unique<NoneOracle>();
  if (spec.rfind("table:", 0) == 0) {
    const auto records = load_dataset(spec.substr(6));
    return std::make_unique<TableOracle>(table_oracle(records));
  }
  if (spec.rfind("extern:", 0) == 0)
    return std::make_unique<ExternalOracle>(spec.substr(7));
  throw Error("unknown oracle spec \"" + spec +
              "\"; use table:<path>, extern:<cmd>, or none");
}

int cmd_classify(uint64_t d, const std::string& oracle_spec, bool shortcuts) {
  const auto oracle = make_oracle(oracle_spec);
  const ClassificationTrace trace = classify(d, *oracle, shortcuts);
  std::cout << "type=" << type_name(trace.final_type)
            << " step=" << step_name(trace.stop_step)
            << " polya=" << (trace.polya ? "true" : "false") << "\n";
  for (const QueryRecord& query : trace.oracle_queries) {
    std::cout << "query=" << query_kind_name(query.kind) << " answer=";
    if (query.kind == QueryKind::znorm)
      std::cout << (query.answer != 0 ? "yes" : "no");
    else
      std::cout << query.answer;
    std::cout << "\n";
  }
  return 0;
}

int cmd_validate(const std::string& path) {
  const auto records = load_dataset(path);
  const ValidationReport report = validate(records);
  if (report.ok()) {
    std::cout << "ok " << records.size() << " rows\n";
    return 0;
  }
  for (const Violation& v : report.violations)
    std::cout << "row " << v.index << " D=" << v.d << " " << v.rule << ": "
              << v.detail << "\n";
  return 1;
}

std::string tenths(int value) {
  return std::to_string(value / 10) + "." + std::to_string(value % 10);
}

int cmd_stats(const std::string& path, bool by_primes) {
  const auto records = load_dataset(path);
  if (by_primes) {
    std::cout << "T\ttotal";
    for (const DpfType type : all_dpf_types())
      std::cout << "\t" << type_name(type);
    std::cout << "\n";
    for (const auto& [T, counts] : counts_by_prime_count(records)) {
      int total = 0;
      for (const int count : counts) total += count;
      std::cout << T << "\t" << total;
      for (const int count : counts) std::cout << "\t" << count;
      std::cout << "\n";
    }
    return 0;
  }

  const FrequencyTable table = statistics(records, default_century_edges());
  std::cout << "type";
  for (const uint64_t edge : table.edges) std::cout << "\t" << edge;
  std::cout << "\tpercent\n";
  for (const TypeFrequencyRow& row : table.rows) {
    std::cout << type_name(row.type);
    for (const int count : row.cumulative) std::cout << "\t" << count;
    std::cout << "\t" << tenths(row.percent_tenths) << "\n";
  }
  std::cout << "total";
  for (const int count : table.totals) std::cout << "\t" << count;
  std::cout << "\t" << tenths(table.total_percent_tenths) << "\n";
  return 0;
}

int cmd_prototypes(const std::string& path, const std::string& type_name_arg) {
  const auto records = load_dataset(path);
  const auto classes = group_into_classes(records);

  if (type_name_arg.empty()) {
    std::cout << "prototype\ttype\tcardinality\n";
    for (const SimilarityClass& cls : classes)
      std::cout << cls.prototype << "\t"
                << type_name(type_from_signature(cls.key.dpf)) << "\t"
                << cls.cardinality << "\n";
    return 0;
  }

  DpfType type;
  if (!type_from_name(type_name_arg, type))
    throw CLI::ValidationError("--type",
                               "unknown type \"" + type_name_arg + "\"");
  std::cout << "S\te0\tt\tu\tv\tm\tn\ts2\ts4\tVL\tVM\tVN\tE\tprototype\t"
               "cardinality\n";
  for (const RefinementRow& row : refinement_table(type, classes))
    std::cout << refinement_row_line(row) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of pure quintic fields Q(D^(1/5))"};
  app.require_subcommand(1);

  uint64_t d = 0;
  std::string path;
  std::string oracle_spec;
  std::string type_filter;
  bool no_shortcuts = false;
  bool by_century = false;
  bool by_primes = false;

  auto* normalize =
      app.add_subcommand("normalize", "Reduce D to its power-class minimum");
  normalize->add_option("D", d, "radicand")->required();

  auto* conductor =
      app.add_subcommand("conductor", "Conductor shape and multiplicity");
  conductor->add_option("D", d, "normalized radicand")->required();

  auto* multiplet = app.add_subcommand(
      "multiplet", "All normalized radicands sharing D's conductor");
  multiplet->add_option("D", d, "normalized radicand")->required();

  auto* classify =
      app.add_subcommand("classify", "Determine the DPF type of Q(D^(1/5))");
  classify->add_option("D", d, "normalized radicand")->required();
  classify
      ->add_option("--oracle", oracle_spec,
                   "table:<path> | extern:<cmd> | none")
      ->required();
  classify->add_flag("--no-shortcuts", no_shortcuts,
                     "disable the theorem-family stops");

  auto* validate =
      app.add_subcommand("validate", "Re-derive every relation of the table");
  validate->add_option("path", path, "dataset TSV")->required();

  auto* stats = app.add_subcommand("stats", "Frequency tables");
  stats->add_option("path", path, "dataset TSV")->required();
  stats->add_flag("--by-century", by_century,
                  "cumulative counts per century (default)");
  stats->add_flag("--by-primes", by_primes,
                  "stratify by the number of conductor primes");

  auto* prototypes =
      app.add_subcommand("prototypes", "Similarity classes and their minima");
  prototypes->add_option("path", path, "dataset TSV")->required();
  prototypes->add_option("--type", type_filter,
                         "emit the splitting table for one type");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion")
      return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (normalize->parsed()) return cmd_normalize(d);
    if (conductor->parsed()) return cmd_conductor(d);
    if (multiplet->parsed()) return cmd_multiplet(d);
    if (classify->parsed())
      return cmd_classify(d, oracle_spec, !no_shortcuts);
    if (validate->parsed()) return cmd_validate(path);
    if (stats->parsed()) {
      if (by_century && by_primes) {
        std::cerr << "--by-century and --by-primes are exclusive\n";
        return 2;
      }
      return cmd_stats(path, by_primes);
    }
    if (prototypes->parsed()) return cmd_prototypes(path, type_filter);
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
