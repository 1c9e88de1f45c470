#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boxspec/bounds.hpp"

namespace boxspec {

enum class Suite { lemma31, lemma32, lemma41, identity, cube_chain, polya, all };

Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite s);

struct VerifyConfig {
  Suite suite = Suite::all;
  /// Samples per suite; for cube-chain the number of cube eigenvalues checked.
  std::int64_t samples = 1000;
  std::uint64_t seed = 0;
};

struct VerifyRow {
  std::string suite;
  BoundReport report;
};

struct VerifyResult {
  std::vector<VerifyRow> rows;
  std::int64_t failures = 0;
  RemainderEstimate remainder;  ///< filled for the identity suite
};

/// Runs the requested suite(s). Each suite draws from its own stream derived
/// from the seed, so "all" is the concatenation of the single-suite runs.
VerifyResult run_verify(const VerifyConfig& config);

}  // namespace boxspec
