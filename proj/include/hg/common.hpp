#pragma once

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hg {

// Element index inside a GroupTable. Index 0 is always the identity.
using Elt = int32_t;

enum class ErrorKind {
  NotAGroup,
  CapExceeded,
  NotNormal,
  ParseError,
  SpecOutOfRange,
  BadAction,
  UnknownOrder,
  NotCharacteristic,
  NotBijective,
  NotPreserved,
  NonIntegral,
  NotASubgroup,
  UnknownLabel,
  IncompleteCensus,
  UsageError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SpecOutOfRange: return "SpecOutOfRange";
    case ErrorKind::BadAction: return "BadAction";
    case ErrorKind::UnknownOrder: return "UnknownOrder";
    case ErrorKind::NotCharacteristic: return "NotCharacteristic";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::NotPreserved: return "NotPreserved";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::IncompleteCensus: return "IncompleteCensus";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Error";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, std::string(error_kind_name(kind)) + ": " + msg);
}

// Node budget shared by the backtracking searches. Thread-safe; a single
// budget may be charged from several worker threads.
struct SearchBudget {
  explicit SearchBudget(uint64_t lim = kDefaultLimit) : limit(lim) {}

  static constexpr uint64_t kDefaultLimit = 500'000'000;

  uint64_t limit;
  std::atomic<uint64_t> used{0};

  void charge(uint64_t n) {
    if (used.fetch_add(n, std::memory_order_relaxed) + n > limit)
      fail(ErrorKind::CapExceeded,
           "search budget of " + std::to_string(limit) + " nodes exhausted");
  }
};

// Size caps. Constructors beyond these refuse rather than degrade.
struct Caps {
  static constexpr int table_max = 5040;        // largest Cayley table
  static constexpr int assoc_exhaustive = 512;  // full n^3 associativity check
  static constexpr int subgroup_order_max = 360;
  static constexpr int aut_max = 50000;
  static constexpr uint64_t hol_max = 5'000'000;
  static constexpr int gp_degree_max = 8;
};

// Deterministic RNG for sampled checks (never seeded from time).
struct SplitMix64 {
  uint64_t s;
  explicit SplitMix64(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9e3779b97f4a7c15ULL;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return next() % n; }
};

}  // namespace hg
