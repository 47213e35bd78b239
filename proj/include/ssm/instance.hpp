#pragma once
// Bipartite preference instances with ties: data model, text format,
// validation, and seeded random generation.
//
// Vertices are identified externally by arbitrary string tokens and
// internally by dense indices in declaration order (men and women index
// spaces are separate). Preference lists are ordered sequences of ties;
// rank(v,u) is the 1-based index of the tie of v's list containing u.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ssm {

// First violation found while parsing or validating an instance.
struct ValidationError : std::runtime_error {
  int line;  // 1-based source line, 0 when no single line is at fault
  ValidationError(int line_, const std::string& what_)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + what_
                                     : what_),
        line(line_) {}
};

using Tie = std::vector<int>;       // opposite-side indices, ascending
using PrefList = std::vector<Tie>;  // best tie first

struct Instance {
  std::vector<std::string> men;    // ids in declaration order
  std::vector<std::string> women;
  std::vector<PrefList> men_prefs;    // men_prefs[m]: ties of woman indices
  std::vector<PrefList> women_prefs;  // women_prefs[w]: ties of man indices

  // Derived by finalize():
  std::vector<std::vector<int>> men_rank;    // [m][w] -> rank, 0 = no edge
  std::vector<std::vector<int>> women_rank;  // [w][m] -> rank, 0 = no edge
  std::vector<std::pair<int, int>> edges;    // (m,w), sorted lexicographically
  std::vector<std::vector<int>> men_edge;    // [m][w] -> edge id, -1 = none
  std::vector<std::vector<int>> men_adj;     // [m] -> edge ids, by (rank, w)
  std::vector<std::vector<int>> women_adj;   // [w] -> edge ids, by (rank, m)

  int man_count() const { return static_cast<int>(men.size()); }
  int woman_count() const { return static_cast<int>(women.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }

  int rank_m(int m, int w) const { return men_rank[m][w]; }
  int rank_w(int w, int m) const { return women_rank[w][m]; }
  bool has_edge(int m, int w) const { return men_rank[m][w] != 0; }
  int edge_id(int m, int w) const { return men_edge[m][w]; }

  std::optional<int> man_index(const std::string& id) const;
  std::optional<int> woman_index(const std::string& id) const;

  // Rebuilds rank tables, edge list and adjacency; throws ValidationError
  // if any type invariant fails (ids must already be resolved to indices).
  void finalize();

  // Structural equality: ids and preference structure.
  bool operator==(const Instance& other) const {
    return men == other.men && women == other.women &&
           men_prefs == other.men_prefs && women_prefs == other.women_prefs;
  }

 private:
  std::unordered_map<std::string, int> man_idx_;
  std::unordered_map<std::string, int> woman_idx_;
};

// A matching: vertex-disjoint set of instance edges, with partner lookup
// in both directions. -1 means free.
struct Matching {
  std::vector<int> man_to;
  std::vector<int> woman_to;

  Matching() = default;
  explicit Matching(const Instance& inst)
      : man_to(inst.man_count(), -1), woman_to(inst.woman_count(), -1) {}

  void add(int m, int w) {
    man_to[m] = w;
    woman_to[w] = m;
  }
  bool man_matched(int m) const { return man_to[m] >= 0; }
  bool woman_matched(int w) const { return woman_to[w] >= 0; }
  int size() const {
    int k = 0;
    for (int w : man_to) k += (w >= 0);
    return k;
  }
  std::vector<std::pair<int, int>> pairs() const;  // sorted by man index
  bool operator==(const Matching& other) const {
    return man_to == other.man_to;
  }
};

struct GenParams {
  int men_count = 0;
  int women_count = 0;
  double edge_density = 1.0;  // in [0,1]
  double tie_rate = 0.0;      // in [0,1]
  std::uint64_t seed = 0;
};

Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
std::string serialize_instance(const Instance& inst);

// Deterministic for a fixed seed, independent of platform.
Instance generate_random(const GenParams& params);

// Role-swapped view: women become men and vice versa.
Instance swap_sides(const Instance& inst);
Matching swap_matching(const Instance& swapped, const Matching& m);

// Matching file format: one "<man-id> <woman-id>" line per pair, sorted by
// man declaration order; the literal line NONE denotes "no matching".
std::optional<Matching> parse_matching(std::istream& in, const Instance& inst);
std::string serialize_matching(const Instance& inst, const Matching& m);

}  // namespace ssm
