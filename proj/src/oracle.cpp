#include "ssm/oracle.hpp"

#include <algorithm>

#include "ssm/solver.hpp"

namespace ssm {

int OracleResult::class_of(const Signature& sig) const {
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    if (classes[i].signature == sig) return i;
  return -1;
}

namespace {

void enumerate(const Instance& inst, int m, Matching& current, std::uint64_t cap,
               std::uint64_t& count, std::vector<Matching>& stable) {
  if (m == inst.man_count()) {
    if (++count > cap) throw CapExceeded(cap);
    if (is_strongly_stable(inst, current)) stable.push_back(current);
    return;
  }
  enumerate(inst, m + 1, current, cap, count, stable);  // m stays free
  for (int e : inst.men_adj[m]) {
    int w = inst.edges[e].second;
    if (current.woman_matched(w)) continue;
    current.add(m, w);
    enumerate(inst, m + 1, current, cap, count, stable);
    current.man_to[m] = -1;
    current.woman_to[w] = -1;
  }
}

}  // namespace

OracleResult oracle_enumerate(const Instance& inst, std::uint64_t cap) {
  OracleResult result;
  Matching current(inst);
  std::uint64_t count = 0;
  enumerate(inst, 0, current, cap, count, result.all_stable);

  // Group by signature, sorted lexicographically for determinism.
  std::vector<std::pair<Signature, int>> sigs;
  for (int i = 0; i < static_cast<int>(result.all_stable.size()); ++i)
    sigs.emplace_back(signature_of(inst, result.all_stable[i]), i);
  std::sort(sigs.begin(), sigs.end());
  for (auto& [sig, idx] : sigs) {
    if (result.classes.empty() || result.classes.back().signature != sig) {
      result.classes.push_back(MatchingClass{result.all_stable[idx], sig});
      result.members.push_back({});
    }
    result.members.back().push_back(idx);
  }
  int k = static_cast<int>(result.classes.size());
  result.dominates_matrix.assign(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      result.dominates_matrix[i][j] =
          sig_dominates(result.classes[i].signature, result.classes[j].signature);
  return result;
}

}  // namespace ssm
