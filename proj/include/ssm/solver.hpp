#pragma once
// Man-optimal / woman-optimal strongly stable matchings and the blocking
// predicate that defines strong stability.

#include <optional>
#include <vector>

#include "ssm/instance.hpp"

namespace ssm {

// Edges that block a matching. Empty report <=> strongly stable.
struct BlockingReport {
  std::vector<std::pair<int, int>> edges;  // (m,w), sorted
  bool stable() const { return edges.empty(); }
};

// An edge (m,w) outside M blocks M when neither endpoint would become worse
// off by matching to the other and at least one would become strictly better
// off (unmatched counts as strictly worse than any list entry).
BlockingReport blocking_edges(const Instance& inst, const Matching& m);

bool is_strongly_stable(const Instance& inst, const Matching& m);

// Man-optimal strongly stable matching, or nullopt when none exists.
// Proposal-based algorithm with ties: men propose to their whole current
// head tie; women delete strictly dominated pairs; Hall-type deficiencies
// among engaged men trigger tail deletions. The extracted matching is
// always re-verified against blocking_edges before being returned.
std::optional<Matching> man_optimal(const Instance& inst);

// man_optimal on the role-swapped instance, mapped back.
std::optional<Matching> woman_optimal(const Instance& inst);

}  // namespace ssm
