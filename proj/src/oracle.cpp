#include "quintic/oracle.hpp"

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "quintic/arith.hpp"
#include "quintic/dataset.hpp"
#include "quintic/errors.hpp"

namespace quintic {

std::string query_kind_name(QueryKind kind) {
  switch (kind) {
    case QueryKind::abs:
      return "ABS";
    case QueryKind::int_:
      return "INT";
    case QueryKind::rel:
      return "REL";
    case QueryKind::znorm:
      return "ZNORM";
  }
  return "?";
}

TableOracle::TableOracle(std::map<uint64_t, DpfType> types)
    : types_(std::move(types)) {}

DpfType TableOracle::lookup(uint64_t d) const {
  auto it = types_.find(d);
  if (it == types_.end()) throw UnknownRadicand(d);
  return it->second;
}

int TableOracle::abs_dim(uint64_t d) { return signature_from_type(lookup(d)).A; }

int TableOracle::int_dim(uint64_t d) { return signature_from_type(lookup(d)).I; }

int TableOracle::rel_dim(uint64_t d) { return signature_from_type(lookup(d)).R; }

bool TableOracle::zeta_is_unit_norm(uint64_t d) {
  const NormKind norms = signature_from_type(lookup(d)).norm_kind;
  return norms == NormKind::zeta || norms == NormKind::both;
}

TableOracle table_oracle(const std::vector<FieldRecord>& records) {
  std::map<uint64_t, DpfType> types;
  for (const auto& rec : records) types.emplace(rec.d, rec.dpf_type);
  return TableOracle(std::move(types));
}

ExternalOracle::ExternalOracle(const std::string& command) {
  int to_child[2];
  int from_child[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0)
    throw OracleUnavailable("pipe: " + std::string(std::strerror(errno)));

  const pid_t pid = fork();
  if (pid < 0)
    throw OracleUnavailable("fork: " + std::string(std::strerror(errno)));

  if (pid == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  close(to_child[0]);
  close(from_child[1]);
  child_pid_ = pid;
  to_child_ = fdopen(to_child[1], "w");
  from_child_ = fdopen(from_child[0], "r");
  if (to_child_ == nullptr || from_child_ == nullptr)
    throw OracleUnavailable("fdopen failed for oracle process");
}

ExternalOracle::~ExternalOracle() {
  if (to_child_ != nullptr) fclose(to_child_);
  if (from_child_ != nullptr) fclose(from_child_);
  if (child_pid_ > 0) {
    int status = 0;
    waitpid(static_cast<pid_t>(child_pid_), &status, 0);
  }
}

std::string ExternalOracle::exchange(const std::string& request) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (std::fputs((request + "\n").c_str(), to_child_) == EOF ||
      std::fflush(to_child_) != 0)
    throw OracleUnavailable("oracle process is not accepting requests");

  std::string line;
  for (;;) {
    const int ch = std::fgetc(from_child_);
    if (ch == EOF) throw OracleUnavailable("oracle process closed the stream");
    if (ch == '\n') break;
    line.push_back(static_cast<char>(ch));
  }
  return line;
}

namespace {

// Splits "OK <payload>" / "ERR <message>" and raises the appropriate error
// for anything else.
std::string expect_ok(const std::string& response) {
  if (response.rfind("OK ", 0) == 0) return response.substr(3);
  if (response.rfind("ERR ", 0) == 0)
    throw ProtocolError("oracle error: " + response.substr(4));
  throw ProtocolError("unparseable oracle response: \"" + response + "\"");
}

}  // namespace

int ExternalOracle::dimension_query(QueryKind kind, uint64_t d) {
  const std::string payload =
      expect_ok(exchange(query_kind_name(kind) + " " + std::to_string(d)));
  if (payload.empty() || payload.size() > 1 || payload[0] < '0' ||
      payload[0] > '3')
    throw ProtocolError("expected a dimension in 0..3, got \"" + payload +
                        "\"");
  const int value = payload[0] - '0';

  const ConductorProfile p = profile_of(d);
  const DimensionBounds b = dimension_bounds(p.counters, p.species);
  switch (kind) {
    case QueryKind::abs:
      if (value < 1 || value > b.a_max)
        throw InconsistentOracle("ABS " + std::to_string(d) + " = " +
                                 std::to_string(value) + " outside 1.." +
                                 std::to_string(b.a_max));
      break;
    case QueryKind::int_:
      if (value > b.i_max)
        throw InconsistentOracle("INT " + std::to_string(d) + " = " +
                                 std::to_string(value) + " above " +
                                 std::to_string(b.i_max));
      break;
    case QueryKind::rel:
      if (value > b.r_max)
        throw InconsistentOracle("REL " + std::to_string(d) + " = " +
                                 std::to_string(value) + " above " +
                                 std::to_string(b.r_max));
      break;
    case QueryKind::znorm:
      break;
  }
  return value;
}

int ExternalOracle::abs_dim(uint64_t d) {
  return dimension_query(QueryKind::abs, d);
}

int ExternalOracle::int_dim(uint64_t d) {
  return dimension_query(QueryKind::int_, d);
}

int ExternalOracle::rel_dim(uint64_t d) {
  return dimension_query(QueryKind::rel, d);
}

bool ExternalOracle::zeta_is_unit_norm(uint64_t d) {
  const std::string payload =
      expect_ok(exchange("ZNORM " + std::to_string(d)));
  if (payload == "YES") return true;
  if (payload == "NO") return false;
  throw ProtocolError("expected YES or NO, got \"" + payload + "\"");
}

int NoneOracle::abs_dim(uint64_t) {
  throw OracleUnavailable("no oracle configured (query ABS)");
}

int NoneOracle::int_dim(uint64_t) {
  throw OracleUnavailable("no oracle configured (query INT)");
}

int NoneOracle::rel_dim(uint64_t) {
  throw OracleUnavailable("no oracle configured (query REL)");
}

bool NoneOracle::zeta_is_unit_norm(uint64_t) {
  throw OracleUnavailable("no oracle configured (query ZNORM)");
}

}  // namespace quintic
