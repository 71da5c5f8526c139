#include "flex/patterns.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace flex {

Pattern Pattern::book(int n) {
  if (n < 3) throw std::invalid_argument("book B_n needs n >= 3");
  return {Kind::Book, n, {}};
}

Graph Pattern::realize() const {
  switch (kind) {
    case Kind::Clique:
      return complete_graph(size);
    case Kind::Cycle:
      return cycle_graph(size);
    case Kind::Book: {
      // spine 0-1, pages 2..n-1
      std::vector<Edge> es{{0, 1}};
      for (int v = 2; v < size; ++v) {
        es.push_back({0, v});
        es.push_back({1, v});
      }
      return Graph(size, std::move(es));
    }
    case Kind::Explicit:
      return explicit_g;
  }
  throw std::logic_error("unreachable");
}

std::string Pattern::name() const {
  switch (kind) {
    case Kind::Clique: return "K" + std::to_string(size);
    case Kind::Cycle: return "C" + std::to_string(size);
    case Kind::Book: return "B" + std::to_string(size);
    case Kind::Explicit: return "G" + std::to_string(size);
  }
  return "?";
}

std::string PatternFamily::str() const {
  std::string s;
  for (auto& p : patterns) {
    if (!s.empty()) s += ",";
    s += p.name();
  }
  return s;
}

PatternFamily parse_family(const std::string& text) {
  PatternFamily fam;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    char c = (char)std::toupper(tok[0]);
    int n = 0;
    try {
      n = std::stoi(tok.substr(1));
    } catch (...) {
      throw std::invalid_argument("bad pattern token: " + tok);
    }
    if (c == 'K' && n >= 2)
      fam.patterns.push_back(Pattern::clique(n));
    else if (c == 'C' && n >= 3)
      fam.patterns.push_back(Pattern::cycle(n));
    else if (c == 'B' && n >= 3)
      fam.patterns.push_back(Pattern::book(n));
    else
      throw std::invalid_argument("bad pattern token: " + tok);
  }
  if (fam.patterns.empty()) throw std::invalid_argument("empty pattern family");
  return fam;
}

namespace {

// Cycle of length exactly len through paths from each start vertex. Only the
// minimal vertex of a cycle starts a search, which prunes without losing any.
bool has_cycle_len(const Graph& g, int len) {
  if (len > g.n()) return false;
  std::vector<char> on_path(g.n(), 0);
  std::vector<int> path;

  // iterative would be noisier; depth is bounded by len
  std::function<bool(int, int)> dfs = [&](int v, int depth) -> bool {
    if (depth == len - 1) return g.adjacent(v, path[0]);
    for (int w : g.neighbors(v)) {
      if (w <= path[0] || on_path[w]) continue;
      // prune: remaining vertices must be able to return to start
      on_path[w] = 1;
      path.push_back(w);
      if (dfs(w, depth + 1)) return true;
      path.pop_back();
      on_path[w] = 0;
    }
    return false;
  };

  for (int s = 0; s < g.n(); ++s) {
    if (g.degree(s) < 2) continue;
    path = {s};
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    if (dfs(s, 0)) return true;
  }
  return false;
}

bool has_clique(const Graph& g, int k) {
  if (k > g.n()) return false;
  if (k <= 1) return g.n() >= k;
  if (k == 2) return g.edge_count() > 0;
  if (k == 3) {
    for (auto [u, v] : g.edges())
      for (int w : g.neighbors(u))
        if (w != v && g.adjacent(w, v)) return true;
    return false;
  }
  if (k == 4 && g.has_masks()) {
    // triangle-pair merge: common neighbors of an edge that are adjacent
    for (auto [u, v] : g.edges()) {
      std::uint64_t common = g.adj_mask(u) & g.adj_mask(v);
      for (std::uint64_t m = common; m; m &= m - 1) {
        int w = std::countr_zero(m);
        if (g.adj_mask(w) & common & ~((2ull << w) - 1)) return true;
      }
    }
    return false;
  }
  // general recursive fallback
  std::vector<int> cand(g.n());
  for (int i = 0; i < g.n(); ++i) cand[i] = i;
  std::function<bool(std::vector<int>&, int)> grow = [&](std::vector<int>& cs,
                                                         int need) -> bool {
    if (need == 0) return true;
    if ((int)cs.size() < need) return false;
    for (int i = 0; i < (int)cs.size(); ++i) {
      int v = cs[i];
      std::vector<int> next;
      for (int j = i + 1; j < (int)cs.size(); ++j)
        if (g.adjacent(v, cs[j])) next.push_back(cs[j]);
      if (grow(next, need - 1)) return true;
    }
    return false;
  };
  return grow(cand, k);
}

bool has_book(const Graph& g, int n) {
  // B_n: an edge with >= n-2 common neighbors
  int pages = n - 2;
  for (auto [u, v] : g.edges()) {
    int common = 0;
    if (g.has_masks()) {
      common = std::popcount(g.adj_mask(u) & g.adj_mask(v));
    } else {
      for (int w : g.neighbors(u))
        if (w != v && g.adjacent(w, v)) ++common;
    }
    if (common >= pages) return true;
  }
  return false;
}

}  // namespace

bool has_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.n() > host.n() || pattern.edge_count() > host.edge_count()) return false;
  // order pattern vertices to keep the partial map connected where possible
  std::vector<int> order;
  std::vector<char> placed(pattern.n(), 0);
  for (int round = 0; round < pattern.n(); ++round) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < pattern.n(); ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : pattern.neighbors(v))
        if (placed[u]) ++links;
      if (links > best_links ||
          (links == best_links && pattern.degree(v) > best_deg)) {
        best = v;
        best_links = links;
        best_deg = pattern.degree(v);
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  std::vector<int> map(pattern.n(), -1);
  std::vector<char> used(host.n(), 0);
  std::function<bool(int)> match = [&](int k) -> bool {
    if (k == pattern.n()) return true;
    int p = order[k];
    for (int h = 0; h < host.n(); ++h) {
      if (used[h] || host.degree(h) < pattern.degree(p)) continue;
      bool ok = true;
      for (int q : pattern.neighbors(p)) {
        if (map[q] >= 0 && !host.adjacent(h, map[q])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[p] = h;
      used[h] = 1;
      if (match(k + 1)) return true;
      map[p] = -1;
      used[h] = 0;
    }
    return false;
  };
  return match(0);
}

bool contains_pattern(const Graph& h, const Pattern& p) {
  switch (p.kind) {
    case Pattern::Kind::Clique: return has_clique(h, p.size);
    case Pattern::Kind::Cycle: return has_cycle_len(h, p.size);
    case Pattern::Kind::Book: return has_book(h, p.size);
    case Pattern::Kind::Explicit: return has_subgraph(h, p.explicit_g);
  }
  return false;
}

bool is_family_free(const Graph& h, const PatternFamily& fam) {
  for (auto& p : fam.patterns)
    if (contains_pattern(h, p)) return false;
  return true;
}

bool is_f_free_set(const Graph& h, const std::vector<int>& I, const PatternFamily& fam) {
  return is_family_free(h.with_apex(I), fam);
}

}  // namespace flex
