#include "ssm/fixed_edge.hpp"

#include "ssm/check.hpp"
#include "ssm/solver.hpp"

namespace ssm {

int AuxiliaryInstance::removal_rule(int m, int w) const {
  for (const auto& [edge, rule] : removed)
    if (edge.first == m && edge.second == w) return rule;
  return 0;
}

AuxiliaryInstance build_auxiliary(const Instance& inst, int m, int w) {
  if (m < 0 || m >= inst.man_count() || w < 0 || w >= inst.woman_count() ||
      !inst.has_edge(m, w))
    throw ValidationError(0, "fixed edge is not an edge of the instance");

  AuxiliaryInstance aux;
  aux.fixed_edge = {m, w};
  std::vector<std::vector<int>> rule(inst.man_count(),
                                     std::vector<int>(inst.woman_count(), 0));
  auto remove = [&](int mm, int ww, int r) {
    if (inst.has_edge(mm, ww) && rule[mm][ww] == 0) {
      rule[mm][ww] = r;
      aux.removed.push_back({{mm, ww}, r});
    }
  };

  remove(m, w, 1);
  int rw_m = inst.rank_w(w, m);  // w's rank of m
  for (int e : inst.women_adj[w]) {
    int mp = inst.edges[e].first;
    if (mp == m) continue;
    int r = inst.rank_w(w, mp);
    if (rw_m < r) {
      remove(mp, w, 2);  // m strictly better for w than m'
    } else if (rw_m == r) {
      remove(mp, w, 3);
      for (int f : inst.men_adj[mp]) {
        int wpp = inst.edges[f].second;
        if (inst.rank_m(mp, wpp) > inst.rank_m(mp, w)) remove(mp, wpp, 3);
      }
    } else {
      remove(mp, w, 4);
      for (int f : inst.men_adj[mp]) {
        int wpp = inst.edges[f].second;
        if (inst.rank_m(mp, wpp) >= inst.rank_m(mp, w)) remove(mp, wpp, 4);
      }
    }
  }
  int rm_w = inst.rank_m(m, w);  // m's rank of w
  for (int e : inst.men_adj[m]) {
    int wp = inst.edges[e].second;
    if (wp == w) continue;
    int r = inst.rank_m(m, wp);
    if (rm_w < r) {
      remove(m, wp, 5);  // w strictly better for m than w'
    } else if (rm_w == r) {
      remove(m, wp, 6);
      for (int f : inst.women_adj[wp]) {
        int mpp = inst.edges[f].first;
        if (inst.rank_w(wp, mpp) > inst.rank_w(wp, m)) remove(mpp, wp, 6);
      }
    } else {
      remove(m, wp, 7);
      for (int f : inst.women_adj[wp]) {
        int mpp = inst.edges[f].first;
        if (inst.rank_w(wp, mpp) >= inst.rank_w(wp, m)) remove(mpp, wp, 7);
      }
    }
  }

  Instance reduced;
  reduced.men = inst.men;
  reduced.women = inst.women;
  reduced.men_prefs.resize(inst.man_count());
  reduced.women_prefs.resize(inst.woman_count());
  for (int mi = 0; mi < inst.man_count(); ++mi)
    for (const auto& tie : inst.men_prefs[mi]) {
      Tie kept;
      for (int wi : tie)
        if (rule[mi][wi] == 0) kept.push_back(wi);
      if (!kept.empty()) reduced.men_prefs[mi].push_back(std::move(kept));
    }
  for (int wi = 0; wi < inst.woman_count(); ++wi)
    for (const auto& tie : inst.women_prefs[wi]) {
      Tie kept;
      for (int mi : tie)
        if (rule[mi][wi] == 0) kept.push_back(mi);
      if (!kept.empty()) reduced.women_prefs[wi].push_back(std::move(kept));
    }
  reduced.finalize();
  aux.reduced = std::move(reduced);
  return aux;
}

std::optional<Matching> optimal_with_edge(const Instance& inst, int m, int w) {
  AuxiliaryInstance aux = build_auxiliary(inst, m, w);
  auto reduced_opt = man_optimal(aux.reduced);
  if (!reduced_opt) return std::nullopt;
  SSM_CHECK(!reduced_opt->man_matched(m) && !reduced_opt->woman_matched(w),
            "fixed-edge endpoints matched in the auxiliary instance");
  Matching combined = *reduced_opt;
  combined.add(m, w);
  if (!is_strongly_stable(inst, combined)) return std::nullopt;
  return combined;
}

std::vector<std::pair<int, int>> stable_pairs(const Instance& inst) {
  std::vector<std::pair<int, int>> out;
  for (auto [m, w] : inst.edges)
    if (optimal_with_edge(inst, m, w)) out.emplace_back(m, w);
  return out;
}

}  // namespace ssm
