#pragma once
// Brute-force ground truth for small instances: every matching is
// enumerated and filtered by the blocking predicate.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ssm/instance.hpp"
#include "ssm/lattice.hpp"

namespace ssm {

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(std::uint64_t cap)
      : std::runtime_error("oracle cap of " + std::to_string(cap) +
                           " enumerated matchings exceeded") {}
};

struct OracleResult {
  std::vector<Matching> all_stable;
  std::vector<MatchingClass> classes;               // sorted by signature
  std::vector<std::vector<int>> members;            // class -> indices into all_stable
  std::vector<std::vector<char>> dominates_matrix;  // [i][j]: class i dominates j

  int class_of(const Signature& sig) const;  // -1 when absent
};

// Enumerates every matching (partial and empty included) by backtracking
// over men; refuses with CapExceeded rather than silently truncating.
OracleResult oracle_enumerate(const Instance& inst, std::uint64_t cap = 2000000);

}  // namespace ssm
