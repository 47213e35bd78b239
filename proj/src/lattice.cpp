#include "ssm/lattice.hpp"

#include <algorithm>

#include "ssm/check.hpp"

namespace ssm {

Signature signature_of(const Instance& inst, const Matching& m) {
  Signature sig(inst.man_count(), kUnmatchedRank);
  for (int mi = 0; mi < inst.man_count(); ++mi)
    if (m.man_to[mi] >= 0) sig[mi] = inst.rank_m(mi, m.man_to[mi]);
  return sig;
}

MatchingClass class_of(const Instance& inst, const Matching& m) {
  return MatchingClass{m, signature_of(inst, m)};
}

bool sig_dominates(const Signature& a, const Signature& b) {
  SSM_CHECK(a.size() == b.size(), "signature size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool dominates(const Instance& inst, const Matching& a, const Matching& b) {
  return sig_dominates(signature_of(inst, a), signature_of(inst, b));
}

bool equivalent(const Instance& inst, const Matching& a, const Matching& b) {
  return signature_of(inst, a) == signature_of(inst, b);
}

namespace {

Matching combine(const Instance& inst, const Matching& a, const Matching& b,
                 bool better) {
  Matching out(inst);
  for (int m = 0; m < inst.man_count(); ++m) {
    int wa = a.man_to[m], wb = b.man_to[m];
    int ra = wa >= 0 ? inst.rank_m(m, wa) : kUnmatchedRank;
    int rb = wb >= 0 ? inst.rank_m(m, wb) : kUnmatchedRank;
    int w;
    if (better)
      w = (rb < ra) ? wb : wa;  // ties keep a's partner
    else
      w = (rb > ra) ? wb : wa;
    if (w < 0) continue;
    SSM_CHECK(out.woman_to[w] < 0, "meet/join collision: inputs not strongly stable");
    out.add(m, w);
  }
  return out;
}

}  // namespace

Matching join_men(const Instance& inst, const Matching& a, const Matching& b) {
  return combine(inst, a, b, true);
}

Matching meet_men(const Instance& inst, const Matching& a, const Matching& b) {
  return combine(inst, a, b, false);
}

std::vector<AltCycle> sym_diff_cycles(const Instance& inst, const Matching& m,
                                      const Matching& n) {
  for (int v = 0; v < inst.man_count(); ++v)
    SSM_CHECK((m.man_to[v] >= 0) == (n.man_to[v] >= 0),
              "matched vertex sets differ: symmetric difference has a path");
  for (int v = 0; v < inst.woman_count(); ++v)
    SSM_CHECK((m.woman_to[v] >= 0) == (n.woman_to[v] >= 0),
              "matched vertex sets differ: symmetric difference has a path");

  std::vector<AltCycle> cycles;
  std::vector<char> seen(inst.man_count(), 0);
  for (int start = 0; start < inst.man_count(); ++start) {
    if (seen[start] || m.man_to[start] < 0 || m.man_to[start] == n.man_to[start])
      continue;
    AltCycle cycle;
    int mi = start;
    do {
      seen[mi] = 1;
      int wi = m.man_to[mi];
      cycle.men.push_back(mi);
      cycle.women.push_back(wi);
      mi = n.woman_to[wi];
      SSM_CHECK(mi >= 0, "alternating walk left the matchings");
    } while (mi != start);

    bool all_equal = true, men_worse = true, men_better = true;
    for (int man : cycle.men) {
      int rm = inst.rank_m(man, m.man_to[man]);
      int rn = inst.rank_m(man, n.man_to[man]);
      if (rm != rn) all_equal = false;
      if (rn <= rm) men_worse = false;   // not strictly worse in n
      if (rn >= rm) men_better = false;  // not strictly better in n
    }
    bool women_better = true, women_worse = true;
    for (int woman : cycle.women) {
      int rm = inst.rank_w(woman, m.woman_to[woman]);
      int rn = inst.rank_w(woman, n.woman_to[woman]);
      if (rm != rn) all_equal = false;
      if (rn >= rm) women_better = false;
      if (rn <= rm) women_worse = false;
    }
    if (all_equal)
      cycle.kind = CycleKind::Indifferent;
    else if (men_worse && women_better)
      cycle.kind = CycleKind::MenWorseWomenBetter;
    else if (men_better && women_worse)
      cycle.kind = CycleKind::MenBetterWomenWorse;
    else
      throw InvariantError("mixed alternating cycle: inputs not strongly stable");
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace ssm
