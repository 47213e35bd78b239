#pragma once
// Dominance order, ~-equivalence, meet/join operations and symmetric
// difference cycle classification over strongly stable matchings.
//
// Naming follows the construction rather than lattice symbols: join_men
// gives every man his weakly better partner of the two, meet_men his
// weakly worse one. Both map pairs of strongly stable matchings to
// strongly stable matchings.

#include <cstdint>
#include <limits>
#include <vector>

#include "ssm/instance.hpp"

namespace ssm {

// Per-man rank of his partner; kUnmatchedRank for free men. Two strongly
// stable matchings are ~-equivalent exactly when their signatures agree.
using Signature = std::vector<std::int32_t>;
constexpr std::int32_t kUnmatchedRank = std::numeric_limits<std::int32_t>::max();

Signature signature_of(const Instance& inst, const Matching& m);

struct MatchingClass {
  Matching representative;
  Signature signature;

  bool operator==(const MatchingClass& other) const {
    return signature == other.signature;
  }
};

MatchingClass class_of(const Instance& inst, const Matching& m);

// True iff every man weakly prefers his a-partner to his b-partner.
bool sig_dominates(const Signature& a, const Signature& b);
bool dominates(const Instance& inst, const Matching& a, const Matching& b);
bool equivalent(const Instance& inst, const Matching& a, const Matching& b);

// Componentwise best / worst partner per man. Ties between distinct
// partners resolve to the first argument's partner; for strongly stable
// inputs this is always consistent (cycle kinds are uniform).
Matching join_men(const Instance& inst, const Matching& a, const Matching& b);
Matching meet_men(const Instance& inst, const Matching& a, const Matching& b);

enum class CycleKind { Indifferent, MenWorseWomenBetter, MenBetterWomenWorse };

// One alternating cycle of M (+) N, oriented from M (source) to N (target):
// edges (men[i], women[i]) belong to M and (men[i+1], women[i]) to N.
struct AltCycle {
  std::vector<int> men;
  std::vector<int> women;
  CycleKind kind;
};

// Decomposes M (+) N into alternating cycles and classifies each one.
// Alternating paths or a mixed cycle signal a non-strongly-stable input
// and raise InvariantError.
std::vector<AltCycle> sym_diff_cycles(const Instance& inst, const Matching& m,
                                      const Matching& n);

}  // namespace ssm
