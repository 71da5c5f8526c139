#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flex/graph.hpp"

namespace flex {

// One forbidden pattern. Containment is subgraph containment, not induced.
struct Pattern {
  enum class Kind { Clique, Cycle, Book, Explicit };
  Kind kind;
  int size = 0;      // n of K_n / C_n / B_n
  Graph explicit_g;  // Kind::Explicit only

  static Pattern clique(int n) { return {Kind::Clique, n, {}}; }
  static Pattern cycle(int n) { return {Kind::Cycle, n, {}}; }
  static Pattern book(int n);  // n >= 3: n-2 triangles sharing an edge
  static Pattern explicit_graph(Graph g) { return {Kind::Explicit, g.n(), std::move(g)}; }

  Graph realize() const;  // the pattern as a concrete graph
  std::string name() const;
};

struct PatternFamily {
  std::vector<Pattern> patterns;
  std::string str() const;
};

// Parses "K4,C5,C6,C7,B5" (case-insensitive). Throws on malformed input.
PatternFamily parse_family(const std::string& text);

bool contains_pattern(const Graph& h, const Pattern& p);
bool is_family_free(const Graph& h, const PatternFamily& fam);

// Is I an F-free set in h: h plus an apex adjacent to exactly I stays free.
bool is_f_free_set(const Graph& h, const std::vector<int>& I, const PatternFamily& fam);

// Generic subgraph monomorphism: some (not necessarily induced) copy of
// `pattern` inside `host`. Used as the fallback for explicit patterns; the
// named families go through the specialized tests in contains_pattern.
bool has_subgraph(const Graph& host, const Graph& pattern);

}  // namespace flex
