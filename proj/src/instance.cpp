#include "ssm/instance.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ssm {

std::optional<int> Instance::man_index(const std::string& id) const {
  auto it = man_idx_.find(id);
  if (it == man_idx_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Instance::woman_index(const std::string& id) const {
  auto it = woman_idx_.find(id);
  if (it == woman_idx_.end()) return std::nullopt;
  return it->second;
}

void Instance::finalize() {
  const int nm = man_count();
  const int nw = woman_count();
  man_idx_.clear();
  woman_idx_.clear();
  for (int m = 0; m < nm; ++m) man_idx_[men[m]] = m;
  for (int w = 0; w < nw; ++w) woman_idx_[women[w]] = w;
  if (static_cast<int>(man_idx_.size()) != nm)
    throw ValidationError(0, "duplicate vertex declaration among men");
  if (static_cast<int>(woman_idx_.size()) != nw)
    throw ValidationError(0, "duplicate vertex declaration among women");
  for (const auto& id : men)
    if (woman_idx_.count(id))
      throw ValidationError(0, "vertex '" + id + "' declared on both sides");

  men_prefs.resize(nm);
  women_prefs.resize(nw);
  men_rank.assign(nm, std::vector<int>(nw, 0));
  women_rank.assign(nw, std::vector<int>(nm, 0));

  auto fill_ranks = [](const std::vector<PrefList>& prefs,
                       std::vector<std::vector<int>>& rank, int opposite_count,
                       const std::vector<std::string>& ids,
                       const std::vector<std::string>& opposite_ids) {
    for (std::size_t v = 0; v < prefs.size(); ++v) {
      for (std::size_t t = 0; t < prefs[v].size(); ++t) {
        if (prefs[v][t].empty())
          throw ValidationError(0, "empty tie on list of '" + ids[v] + "'");
        for (int u : prefs[v][t]) {
          if (u < 0 || u >= opposite_count)
            throw ValidationError(0, "unknown vertex index on list of '" + ids[v] + "'");
          if (rank[v][u] != 0)
            throw ValidationError(0, "vertex '" + opposite_ids[u] +
                                         "' appears twice on list of '" + ids[v] + "'");
          rank[v][u] = static_cast<int>(t) + 1;
        }
      }
    }
  };
  fill_ranks(men_prefs, men_rank, nw, men, women);
  fill_ranks(women_prefs, women_rank, nm, women, men);

  for (int m = 0; m < nm; ++m)
    for (int w = 0; w < nw; ++w) {
      if ((men_rank[m][w] != 0) != (women_rank[w][m] != 0))
        throw ValidationError(0, "asymmetric edge between '" + men[m] + "' and '" +
                                     women[w] + "'");
    }

  edges.clear();
  men_edge.assign(nm, std::vector<int>(nw, -1));
  men_adj.assign(nm, {});
  women_adj.assign(nw, {});
  for (int m = 0; m < nm; ++m)
    for (int w = 0; w < nw; ++w)
      if (men_rank[m][w] != 0) {
        men_edge[m][w] = static_cast<int>(edges.size());
        edges.emplace_back(m, w);
      }
  for (int e = 0; e < edge_count(); ++e) {
    men_adj[edges[e].first].push_back(e);
    women_adj[edges[e].second].push_back(e);
  }
  for (int m = 0; m < nm; ++m)
    std::sort(men_adj[m].begin(), men_adj[m].end(), [&](int a, int b) {
      int wa = edges[a].second, wb = edges[b].second;
      return std::make_pair(men_rank[m][wa], wa) < std::make_pair(men_rank[m][wb], wb);
    });
  for (int w = 0; w < nw; ++w)
    std::sort(women_adj[w].begin(), women_adj[w].end(), [&](int a, int b) {
      int ma = edges[a].first, mb = edges[b].first;
      return std::make_pair(women_rank[w][ma], ma) < std::make_pair(women_rank[w][mb], mb);
    });
}

std::vector<std::pair<int, int>> Matching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m < static_cast<int>(man_to.size()); ++m)
    if (man_to[m] >= 0) out.emplace_back(m, man_to[m]);
  return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string padded;
  padded.reserve(line.size() + 8);
  for (char c : line) {
    if (c == '(' || c == ')') {
      padded += ' ';
      padded += c;
      padded += ' ';
    } else {
      padded += c;
    }
  }
  std::istringstream iss(padded);
  std::vector<std::string> toks;
  std::string t;
  while (iss >> t) toks.push_back(t);
  return toks;
}

struct RawPrefLine {
  int line_no;
  std::string id;
  std::vector<std::vector<std::string>> ties;  // entries as id tokens
};

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  bool have_men = false, have_women = false;
  std::vector<RawPrefLine> pref_lines;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "men:" || head == "women:") {
      bool& seen = (head == "men:") ? have_men : have_women;
      if (seen) throw ValidationError(line_no, "duplicate " + head.substr(0, head.size() - 1) +
                                                   " declaration line");
      if (!pref_lines.empty())
        throw ValidationError(line_no, head + " line must come before preference lines");
      seen = true;
      auto& ids = (head == "men:") ? inst.men : inst.women;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == "(" || toks[i] == ")")
          throw ValidationError(line_no, "unexpected '" + toks[i] + "' in declaration line");
        ids.push_back(toks[i]);
      }
      continue;
    }
    if (head.size() < 2 || head.back() != ':')
      throw ValidationError(line_no, "expected '<id>:' at start of preference line");
    if (!have_men || !have_women)
      throw ValidationError(line_no, "preference line before men:/women: declarations");
    RawPrefLine raw;
    raw.line_no = line_no;
    raw.id = head.substr(0, head.size() - 1);
    bool in_tie = false;
    std::vector<std::string> tie;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      if (toks[i] == "(") {
        if (in_tie) throw ValidationError(line_no, "nested '(' in tie");
        in_tie = true;
        tie.clear();
      } else if (toks[i] == ")") {
        if (!in_tie) throw ValidationError(line_no, "')' without matching '('");
        if (tie.empty()) throw ValidationError(line_no, "empty tie");
        raw.ties.push_back(tie);
        in_tie = false;
      } else if (in_tie) {
        tie.push_back(toks[i]);
      } else {
        raw.ties.push_back({toks[i]});
      }
    }
    if (in_tie) throw ValidationError(line_no, "unterminated tie: missing ')'");
    pref_lines.push_back(std::move(raw));
  }
  if (!have_men) throw ValidationError(line_no, "missing men: declaration line");
  if (!have_women) throw ValidationError(line_no, "missing women: declaration line");

  // Resolve ids. Duplicate declarations and side overlap are caught here with
  // a usable line number before finalize() re-validates structurally.
  std::unordered_map<std::string, int> man_idx, woman_idx;
  for (int m = 0; m < static_cast<int>(inst.men.size()); ++m) {
    if (!man_idx.emplace(inst.men[m], m).second)
      throw ValidationError(0, "duplicate vertex declaration '" + inst.men[m] + "'");
  }
  for (int w = 0; w < static_cast<int>(inst.women.size()); ++w) {
    if (!woman_idx.emplace(inst.women[w], w).second || man_idx.count(inst.women[w]))
      throw ValidationError(0, "duplicate vertex declaration '" + inst.women[w] + "'");
  }

  inst.men_prefs.assign(inst.men.size(), {});
  inst.women_prefs.assign(inst.women.size(), {});
  std::vector<int> man_line(inst.men.size(), 0), woman_line(inst.women.size(), 0);
  for (const auto& raw : pref_lines) {
    bool is_man = man_idx.count(raw.id) != 0;
    bool is_woman = woman_idx.count(raw.id) != 0;
    if (!is_man && !is_woman)
      throw ValidationError(raw.line_no, "unknown vertex id '" + raw.id + "'");
    const auto& opp_idx = is_man ? woman_idx : man_idx;
    int v = is_man ? man_idx[raw.id] : woman_idx[raw.id];
    int& seen_line = is_man ? man_line[v] : woman_line[v];
    if (seen_line != 0)
      throw ValidationError(raw.line_no,
                            "duplicate preference line for '" + raw.id + "'");
    seen_line = raw.line_no;
    PrefList prefs;
    std::vector<char> used(opp_idx.size(), 0);
    for (const auto& tie_ids : raw.ties) {
      Tie tie;
      for (const auto& uid : tie_ids) {
        auto it = opp_idx.find(uid);
        if (it == opp_idx.end())
          throw ValidationError(raw.line_no, "unknown vertex id '" + uid + "'");
        if (used[it->second])
          throw ValidationError(raw.line_no,
                                "vertex '" + uid + "' appears twice in the list");
        used[it->second] = 1;
        tie.push_back(it->second);
      }
      std::sort(tie.begin(), tie.end());
      prefs.push_back(std::move(tie));
    }
    if (is_man)
      inst.men_prefs[v] = std::move(prefs);
    else
      inst.women_prefs[v] = std::move(prefs);
  }

  // Edge symmetry with line attribution: report the line whose entry is
  // unreciprocated.
  for (int m = 0; m < static_cast<int>(inst.men.size()); ++m)
    for (const auto& tie : inst.men_prefs[m])
      for (int w : tie) {
        bool reciprocated = false;
        for (const auto& wt : inst.women_prefs[w])
          for (int mm : wt)
            if (mm == m) reciprocated = true;
        if (!reciprocated)
          throw ValidationError(man_line[m], "asymmetric edge: '" + inst.women[w] +
                                                 "' does not list '" + inst.men[m] + "'");
      }
  for (int w = 0; w < static_cast<int>(inst.women.size()); ++w)
    for (const auto& tie : inst.women_prefs[w])
      for (int m : tie) {
        bool reciprocated = false;
        for (const auto& mt : inst.men_prefs[m])
          for (int ww : mt)
            if (ww == w) reciprocated = true;
        if (!reciprocated)
          throw ValidationError(woman_line[w], "asymmetric edge: '" + inst.men[m] +
                                                   "' does not list '" + inst.women[w] + "'");
      }

  inst.finalize();
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream iss(text);
  return parse_instance(iss);
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "men:";
  for (const auto& id : inst.men) out << ' ' << id;
  out << '\n';
  out << "women:";
  for (const auto& id : inst.women) out << ' ' << id;
  out << '\n';
  auto emit = [&](const std::vector<std::string>& ids, const std::vector<PrefList>& prefs,
                  const std::vector<std::string>& opp) {
    for (std::size_t v = 0; v < ids.size(); ++v) {
      if (prefs[v].empty()) continue;
      out << ids[v] << ':';
      for (const auto& tie : prefs[v]) {
        if (tie.size() == 1) {
          out << ' ' << opp[tie[0]];
        } else {
          out << " (";
          for (int u : tie) out << ' ' << opp[u];
          out << " )";
        }
      }
      out << '\n';
    }
  };
  emit(inst.men, inst.men_prefs, inst.women);
  emit(inst.women, inst.women_prefs, inst.men);
  return out.str();
}

namespace {

// Portable Bernoulli draw from raw engine output; distributions from
// <random> are not bit-identical across standard libraries.
bool chance(std::mt19937_64& rng, double prob) {
  std::uint64_t r = rng();
  if (prob <= 0.0) return false;
  long double scaled = static_cast<long double>(prob) * 18446744073709551616.0L;
  if (scaled >= 18446744073709551616.0L) return true;
  return r < static_cast<std::uint64_t>(scaled);
}

PrefList make_list(std::mt19937_64& rng, std::vector<int> neighbors, double tie_rate) {
  for (std::size_t k = neighbors.size(); k > 1; --k) {
    std::size_t j = static_cast<std::size_t>(rng() % k);
    std::swap(neighbors[k - 1], neighbors[j]);
  }
  PrefList prefs;
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    if (i > 0 && chance(rng, tie_rate)) {
      prefs.back().push_back(neighbors[i]);
    } else {
      prefs.push_back({neighbors[i]});
    }
  }
  for (auto& tie : prefs) std::sort(tie.begin(), tie.end());
  return prefs;
}

}  // namespace

Instance generate_random(const GenParams& params) {
  if (params.men_count < 0 || params.women_count < 0)
    throw ValidationError(0, "vertex counts must be non-negative");
  if (params.edge_density < 0.0 || params.edge_density > 1.0 ||
      params.tie_rate < 0.0 || params.tie_rate > 1.0)
    throw ValidationError(0, "probabilities must lie in [0,1]");
  std::mt19937_64 rng(params.seed);
  Instance inst;
  for (int m = 0; m < params.men_count; ++m) inst.men.push_back("m" + std::to_string(m + 1));
  for (int w = 0; w < params.women_count; ++w)
    inst.women.push_back("w" + std::to_string(w + 1));
  std::vector<std::vector<int>> man_nbrs(params.men_count);
  std::vector<std::vector<int>> woman_nbrs(params.women_count);
  for (int m = 0; m < params.men_count; ++m)
    for (int w = 0; w < params.women_count; ++w)
      if (chance(rng, params.edge_density)) {
        man_nbrs[m].push_back(w);
        woman_nbrs[w].push_back(m);
      }
  inst.men_prefs.resize(params.men_count);
  inst.women_prefs.resize(params.women_count);
  for (int m = 0; m < params.men_count; ++m)
    inst.men_prefs[m] = make_list(rng, man_nbrs[m], params.tie_rate);
  for (int w = 0; w < params.women_count; ++w)
    inst.women_prefs[w] = make_list(rng, woman_nbrs[w], params.tie_rate);
  inst.finalize();
  return inst;
}

Instance swap_sides(const Instance& inst) {
  Instance out;
  out.men = inst.women;
  out.women = inst.men;
  out.men_prefs = inst.women_prefs;
  out.women_prefs = inst.men_prefs;
  out.finalize();
  return out;
}

Matching swap_matching(const Instance& swapped, const Matching& m) {
  Matching out;
  out.man_to = m.woman_to;
  out.woman_to = m.man_to;
  (void)swapped;
  return out;
}

std::optional<Matching> parse_matching(std::istream& in, const Instance& inst) {
  Matching m(inst);
  std::string line;
  int line_no = 0;
  bool none = false, any_pair = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream iss(line);
    std::string a, b;
    if (!(iss >> a)) continue;
    if (a[0] == '#') continue;
    if (a == "NONE") {
      none = true;
      continue;
    }
    if (!(iss >> b)) throw ValidationError(line_no, "expected '<man-id> <woman-id>'");
    auto mi = inst.man_index(a);
    auto wi = inst.woman_index(b);
    if (!mi) throw ValidationError(line_no, "unknown man id '" + a + "'");
    if (!wi) throw ValidationError(line_no, "unknown woman id '" + b + "'");
    if (!inst.has_edge(*mi, *wi))
      throw ValidationError(line_no, "pair (" + a + ", " + b + ") is not an instance edge");
    if (m.man_matched(*mi) || m.woman_matched(*wi))
      throw ValidationError(line_no, "vertex matched twice");
    m.add(*mi, *wi);
    any_pair = true;
  }
  if (none) {
    if (any_pair) throw ValidationError(0, "NONE mixed with pair lines");
    return std::nullopt;
  }
  return m;
}

std::string serialize_matching(const Instance& inst, const Matching& m) {
  std::ostringstream out;
  for (auto [mi, wi] : m.pairs()) out << inst.men[mi] << ' ' << inst.women[wi] << '\n';
  return out.str();
}

}  // namespace ssm
