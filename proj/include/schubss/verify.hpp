#pragma once

// Verification suites over grids of types and ranks.

#include "schubss/rootsys.hpp"
#include "schubss/weyl.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schubss {

enum class Suite { pairing_bound, prop31, thm32, thm42, invariants, all };

Suite parse_suite(std::string_view text);
std::string to_string(Suite s);

struct Instance {
  enum class Status { pass, fail, info };

  Kind kind;
  int rank;
  int r = 0;  // 0 when the check is not per fundamental weight
  std::string check;
  Status status;
  std::string detail;
};

std::string to_string(Instance::Status s);

struct SuiteResult {
  std::string suite;
  std::vector<Instance> instances;

  /// No instance failed. Informational instances do not count.
  bool pass() const;
  std::size_t count(Instance::Status s) const;
};

struct VerifyOptions {
  int max_rank = 5;
  std::uint64_t limit = default_enumeration_limit();
  unsigned workers = 1;
};

// Individual suites. Grids:
//   pairing-bound  A, B, C, D, rank 2 .. max_rank (D from 3)
//   prop31         B, C from 2, D from 4, up to max_rank, every r
//   thm32          B, C from 2, D from 3, up to max_rank, every r
//   thm42          A from 1, B, C from 2, D from 3 up to min(max_rank, 8); E6-E8, F4, G2
//   invariants     A, B, C, D up to min(max_rank, 4)
SuiteResult verify_pairing_bound(const VerifyOptions& opt);
SuiteResult verify_prop31(const VerifyOptions& opt);
SuiteResult verify_thm32(const VerifyOptions& opt);
SuiteResult verify_thm42(const VerifyOptions& opt);
SuiteResult verify_invariants(const VerifyOptions& opt);

SuiteResult run_suite(Suite suite, const VerifyOptions& opt);

/// Largest |<varpi_r, beta^vee>| over all r and positive roots beta.
Rational max_pairing(const RootSystem& rs);

}  // namespace schubss
