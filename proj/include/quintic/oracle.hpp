#pragma once

#include <cstdint>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "quintic/dpf.hpp"

namespace quintic {

struct FieldRecord;

// The four expensive questions of the classification algorithm.  Answers for
// ABS/INT/REL are F_5-dimensions; ZNORM asks whether zeta5 is a norm of some
// unit of N.
enum class QueryKind {
  abs,
  int_,
  rel,
  znorm,
};

std::string query_kind_name(QueryKind kind);

class ArithmeticOracle {
 public:
  virtual ~ArithmeticOracle() = default;

  virtual int abs_dim(uint64_t d) = 0;
  virtual int int_dim(uint64_t d) = 0;
  virtual int rel_dim(uint64_t d) = 0;
  virtual bool zeta_is_unit_norm(uint64_t d) = 0;
};

// Replay oracle: answers are decoded from a table of known types, using the
// fact that (A, I, R) and the zeta-norm question are determined by the type.
// Immutable after construction and safe to query concurrently.
class TableOracle : public ArithmeticOracle {
 public:
  explicit TableOracle(std::map<uint64_t, DpfType> types);

  int abs_dim(uint64_t d) override;
  int int_dim(uint64_t d) override;
  int rel_dim(uint64_t d) override;
  bool zeta_is_unit_norm(uint64_t d) override;

 private:
  DpfType lookup(uint64_t d) const;

  std::map<uint64_t, DpfType> types_;
};

TableOracle table_oracle(const std::vector<FieldRecord>& records);

// Client for an external process speaking the line protocol
//   request:  "ABS <D>" | "INT <D>" | "REL <D>" | "ZNORM <D>"
//   response: "OK <k>" (k in 0..3) | "OK YES" | "OK NO" | "ERR <message>"
// one exchange per line over stdin/stdout.  Dimension answers are validated
// against the bounds implied by D's conductor profile before being returned;
// violations raise InconsistentOracle.  Exchanges are serialized internally,
// so a single instance may be shared across threads.
class ExternalOracle : public ArithmeticOracle {
 public:
  // Spawns `command` through /bin/sh.  Throws OracleUnavailable on failure.
  explicit ExternalOracle(const std::string& command);
  ~ExternalOracle() override;

  ExternalOracle(const ExternalOracle&) = delete;
  ExternalOracle& operator=(const ExternalOracle&) = delete;

  int abs_dim(uint64_t d) override;
  int int_dim(uint64_t d) override;
  int rel_dim(uint64_t d) override;
  bool zeta_is_unit_norm(uint64_t d) override;

 private:
  std::string exchange(const std::string& request);
  int dimension_query(QueryKind kind, uint64_t d);

  std::mutex mutex_;
  std::FILE* to_child_ = nullptr;
  std::FILE* from_child_ = nullptr;
  long child_pid_ = -1;
};

// Refuses every query with OracleUnavailable.  Lets callers run the purely
// rational layer and observe exactly where oracle input would be needed.
class NoneOracle : public ArithmeticOracle {
 public:
  int abs_dim(uint64_t d) override;
  int int_dim(uint64_t d) override;
  int rel_dim(uint64_t d) override;
  bool zeta_is_unit_norm(uint64_t d) override;
};

}  // namespace quintic
