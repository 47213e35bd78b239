#include "ssm/solver.hpp"

#include <algorithm>

#include "ssm/check.hpp"

namespace ssm {

BlockingReport blocking_edges(const Instance& inst, const Matching& m) {
  if (static_cast<int>(m.man_to.size()) != inst.man_count() ||
      static_cast<int>(m.woman_to.size()) != inst.woman_count())
    throw ValidationError(0, "matching does not fit the instance");
  for (int mi = 0; mi < inst.man_count(); ++mi)
    if (m.man_to[mi] >= 0 && !inst.has_edge(mi, m.man_to[mi]))
      throw ValidationError(0, "matching contains a non-edge");

  BlockingReport report;
  for (auto [mi, wi] : inst.edges) {
    if (m.man_to[mi] == wi) continue;
    int rm = inst.rank_m(mi, wi);
    int rw = inst.rank_w(wi, mi);
    int pm = m.man_to[mi] >= 0 ? inst.rank_m(mi, m.man_to[mi]) : 0;
    int pw = m.woman_to[wi] >= 0 ? inst.rank_w(wi, m.woman_to[wi]) : 0;
    bool man_weak = (pm == 0) || rm <= pm;
    bool man_strict = (pm == 0) || rm < pm;
    bool woman_weak = (pw == 0) || rw <= pw;
    bool woman_strict = (pw == 0) || rw < pw;
    if (man_weak && woman_weak && (man_strict || woman_strict))
      report.edges.emplace_back(mi, wi);
  }
  return report;
}

bool is_strongly_stable(const Instance& inst, const Matching& m) {
  return blocking_edges(inst, m).stable();
}

namespace {

// Proposal machinery. Pairs die monotonically; a man's engagements always
// lie inside the first surviving tie of his list, a woman's inside a single
// tie of hers (she immediately deletes everything strictly worse than any
// proposal she receives).
class StrongSolver {
 public:
  explicit StrongSolver(const Instance& inst)
      : G(inst),
        alive(inst.edge_count(), 1),
        engaged(inst.edge_count(), 0),
        eng_man(inst.man_count()),
        matched_m(inst.man_count(), -1),
        matched_w(inst.woman_count(), -1),
        queued(inst.man_count(), 0),
        visited_m(inst.man_count(), 0),
        visited_w(inst.woman_count(), 0) {}

  std::optional<Matching> run() {
    for (int m = 0; m < G.man_count(); ++m) enqueue(m);
    while (true) {
      while (!free_queue.empty()) {
        int m = free_queue.back();
        free_queue.pop_back();
        queued[m] = 0;
        propose(m);
      }
      if (augment_all()) break;
      critical_delete();
    }
    Matching result(G);
    for (int m = 0; m < G.man_count(); ++m)
      if (matched_m[m] >= 0) result.add(m, matched_m[m]);
    if (!is_strongly_stable(G, result)) return std::nullopt;
    return result;
  }

 private:
  void enqueue(int m) {
    if (!queued[m] && eng_man[m].empty()) {
      queued[m] = 1;
      free_queue.push_back(m);
    }
  }

  void unmatch_pair(int m, int w) {
    if (matched_m[m] == w) {
      matched_m[m] = -1;
      matched_w[w] = -1;
    }
  }

  void delete_pair(int e) {
    if (!alive[e]) return;
    alive[e] = 0;
    auto [m, w] = G.edges[e];
    if (engaged[e]) {
      engaged[e] = 0;
      auto& v = eng_man[m];
      v.erase(std::find(v.begin(), v.end(), e));
      unmatch_pair(m, w);
      enqueue(m);
    }
  }

  void propose(int m) {
    if (!eng_man[m].empty()) return;
    // Head tie: the first surviving rank on m's list.
    int head_rank = 0;
    std::vector<int> tie;
    for (int e : G.men_adj[m]) {
      if (!alive[e]) continue;
      int r = G.rank_m(m, G.edges[e].second);
      if (head_rank == 0) head_rank = r;
      if (r != head_rank) break;
      tie.push_back(e);
    }
    if (tie.empty()) return;  // list exhausted, m stays unmatched
    for (int e : tie) {
      if (!alive[e]) continue;
      auto [mm, w] = G.edges[e];
      engaged[e] = 1;
      eng_man[mm].push_back(e);
      // w deletes every pair strictly worse than her new proposal.
      int rw = G.rank_w(w, mm);
      const auto& adj = G.women_adj[w];
      for (int i = static_cast<int>(adj.size()) - 1; i >= 0; --i) {
        int f = adj[i];
        if (!alive[f]) continue;
        if (G.rank_w(w, G.edges[f].first) <= rw) break;  // sorted by rank
        delete_pair(f);
      }
    }
  }

  bool try_augment(int m) {
    for (int e : eng_man[m]) {
      int w = G.edges[e].second;
      if (visited_w[w]) continue;
      visited_w[w] = 1;
      if (matched_w[w] < 0 || try_augment(matched_w[w])) {
        matched_m[m] = w;
        matched_w[w] = m;
        return true;
      }
    }
    return false;
  }

  // Maximum matching over engagements; true iff every engaged man saturated.
  bool augment_all() {
    bool all = true;
    for (int m = 0; m < G.man_count(); ++m) {
      if (eng_man[m].empty() || matched_m[m] >= 0) continue;
      std::fill(visited_w.begin(), visited_w.end(), 0);
      if (!try_augment(m)) all = false;
    }
    return all;
  }

  // Hall violator: men alternating-reachable from unsaturated engaged men.
  // Every adjacent woman deletes her whole current tail tie.
  void critical_delete() {
    std::fill(visited_m.begin(), visited_m.end(), 0);
    std::fill(visited_w.begin(), visited_w.end(), 0);
    std::vector<int> man_queue, nz_women;
    for (int m = 0; m < G.man_count(); ++m)
      if (!eng_man[m].empty() && matched_m[m] < 0) {
        visited_m[m] = 1;
        man_queue.push_back(m);
      }
    for (std::size_t qi = 0; qi < man_queue.size(); ++qi) {
      int m = man_queue[qi];
      for (int e : eng_man[m]) {
        int w = G.edges[e].second;
        if (visited_w[w]) continue;
        visited_w[w] = 1;
        nz_women.push_back(w);
        int m2 = matched_w[w];
        SSM_CHECK(m2 >= 0, "free woman adjacent to critical set");
        if (!visited_m[m2]) {
          visited_m[m2] = 1;
          man_queue.push_back(m2);
        }
      }
    }
    SSM_CHECK(!nz_women.empty(), "critical set with no adjacent women");
    for (int w : nz_women) {
      const auto& adj = G.women_adj[w];
      int tail_rank = 0;
      for (int i = static_cast<int>(adj.size()) - 1; i >= 0; --i) {
        int f = adj[i];
        if (!alive[f]) continue;
        int r = G.rank_w(w, G.edges[f].first);
        if (tail_rank == 0) tail_rank = r;
        if (r != tail_rank) break;
        delete_pair(f);
      }
    }
  }

  const Instance& G;
  std::vector<char> alive;
  std::vector<char> engaged;
  std::vector<std::vector<int>> eng_man;
  std::vector<int> matched_m, matched_w;
  std::vector<char> queued;
  std::vector<char> visited_m, visited_w;
  std::vector<int> free_queue;
};

}  // namespace

std::optional<Matching> man_optimal(const Instance& inst) {
  return StrongSolver(inst).run();
}

std::optional<Matching> woman_optimal(const Instance& inst) {
  Instance swapped = swap_sides(inst);
  auto m = man_optimal(swapped);
  if (!m) return std::nullopt;
  return swap_matching(swapped, *m);
}

}  // namespace ssm
