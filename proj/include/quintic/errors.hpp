#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quintic {

// Root of the library's exception hierarchy. Everything thrown on purpose
// derives from this, so callers can catch quintic::Error at the boundary.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ---- arith ----

class NotFifthPowerFree : public Error {
 public:
  explicit NotFifthPowerFree(std::uint64_t prime)
      : Error("exponent of prime " + std::to_string(prime) +
              " is 5 or more; value is not fifth-power-free"),
        prime_(prime) {}
  std::uint64_t prime() const { return prime_; }

 private:
  std::uint64_t prime_;
};

class DegenerateRadicand : public Error {
 public:
  explicit DegenerateRadicand(std::uint64_t d)
      : Error("radicand " + std::to_string(d) +
              " is a perfect fifth power; it normalizes to 1") {}
};

class NotPrime : public Error {
 public:
  explicit NotPrime(std::uint64_t n)
      : Error(std::to_string(n) + " is not a prime number") {}
};

// ---- conductor ----

class InvalidCounters : public Error {
 public:
  explicit InvalidCounters(const std::string& what) : Error(what) {}
};

class TooManyPrimes : public Error {
 public:
  explicit TooManyPrimes(int t)
      : Error("multiplet enumeration limited to 6 primes, got " +
              std::to_string(t)) {}
};

// ---- dpf ----

class NoSuchSignature : public Error {
 public:
  explicit NoSuchSignature(const std::string& what) : Error(what) {}
};

// ---- dataset ----

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class DuplicateRadicand : public Error {
 public:
  explicit DuplicateRadicand(std::uint64_t d)
      : Error("radicand " + std::to_string(d) + " appears more than once") {}
};

class CountMismatch : public Error {
 public:
  CountMismatch(std::size_t got, std::size_t want)
      : Error("expected " + std::to_string(want) + " rows, got " +
              std::to_string(got)) {}
};

// ---- oracle ----

// The oracle cannot produce an answer at all (process gone, no data, ...).
class OracleUnavailable : public Error {
 public:
  explicit OracleUnavailable(const std::string& what) : Error(what) {}
};

// A replay oracle was asked about a radicand outside its table.
class UnknownRadicand : public OracleUnavailable {
 public:
  explicit UnknownRadicand(std::uint64_t d)
      : OracleUnavailable("no oracle data for radicand " + std::to_string(d)) {}
};

// The external process violated the wire protocol.
class ProtocolError : public Error {
 public:
  explicit ProtocolError(const std::string& what) : Error(what) {}
};

// An oracle answer contradicts a proven bound or admissibility theorem.
class InconsistentOracle : public Error {
 public:
  explicit InconsistentOracle(const std::string& what) : Error(what) {}
};

// ---- classify ----

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t got, std::size_t want)
      : Error("type list has " + std::to_string(got) +
              " entries but the multiplet has " + std::to_string(want)) {}
};

}  // namespace quintic
