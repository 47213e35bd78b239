#pragma once
// Fixed-edge reduction: an auxiliary instance whose strongly stable
// matchings correspond one-to-one to the strongly stable matchings of the
// base instance that contain a chosen edge (m,w).

#include <optional>
#include <vector>

#include "ssm/instance.hpp"

namespace ssm {

struct AuxiliaryInstance {
  std::pair<int, int> fixed_edge;  // (m,w) in base indices
  Instance reduced;                // same vertex sets as the base
  // Base edges removed by the construction, tagged with the 1-based index
  // of the first removal rule that applied (rules in list order: the fixed
  // edge itself, then the three woman-side cases, then the three man-side
  // cases).
  std::vector<std::pair<std::pair<int, int>, int>> removed;

  int removal_rule(int m, int w) const;  // 0 when the edge survived
};

AuxiliaryInstance build_auxiliary(const Instance& inst, int m, int w);

// Man-optimal strongly stable matching containing (m,w), or nullopt when
// no strongly stable matching contains it. Either every strongly stable
// matching of the auxiliary instance extends by (m,w), or none does, so a
// single blocking check on the base instance decides.
std::optional<Matching> optimal_with_edge(const Instance& inst, int m, int w);

// Edges contained in at least one strongly stable matching.
std::vector<std::pair<int, int>> stable_pairs(const Instance& inst);

}  // namespace ssm
