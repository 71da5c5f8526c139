#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flex/graph.hpp"

namespace flex {

// Colors are 0..palette-1 (palette <= 64); each list is a bitmask.
struct ListAssignment {
  std::vector<std::uint64_t> lists;
  int palette = 0;

  int list_size(int v) const;
  std::vector<int> list_colors(int v) const;
};

using Budget = std::vector<int>;   // per-vertex list-size demand
using Coloring = std::vector<int>; // color per vertex

// Proper coloring from the lists if one exists. Backtracking with
// smallest-remaining-list-first ordering and forward pruning; deterministic.
// Throws std::invalid_argument if some list is empty.
std::optional<Coloring> color_with_lists(const Graph& g, const ListAssignment& L);

struct ForAllOptions {
  // Decide via peeling + Gallai-tree reasoning where possible before
  // enumerating. Disabled by the oracle cross-checks.
  bool use_shortcut = true;
  // Split the top level of the enumeration across OpenMP workers. The
  // verdict and witness are identical to the serial run.
  bool parallel = true;
  // Cap on the number of colors an enumerated assignment may use; -1 means
  // sum of budgets, which is always sufficient.
  int palette_override = -1;
};

struct ForAllVerdict {
  bool always = true;
  std::optional<ListAssignment> witness;  // set iff !always
};

// True ("always") iff g is L-colorable for every assignment with
// |L(v)| = f(v); otherwise a witness assignment. Exact sizes suffice: a
// larger assignment restricts to one of exact size, and colorability only
// depends on the multiset of color supports, so the enumeration runs over
// canonical support multisets. Two disjoint supports can further be merged
// into one color without creating colorability, so only pairwise-
// intersecting multisets need checking.
ForAllVerdict colorable_for_all_assignments(const Graph& g, const Budget& f,
                                            ForAllOptions opts = {});

// Every 2-connected block a complete graph or an odd cycle. Throws on
// disconnected input.
bool is_gallai_tree(const Graph& g);

// Decides colorable_for_all_assignments without enumeration when possible:
// peel vertices with budget above their remaining degree; a residual
// component with budget == degree everywhere is always colorable iff it is
// not a Gallai tree. Absent when some residual vertex is underfunded.
std::optional<bool> degree_feasibility_shortcut(const Graph& g, const Budget& f);

}  // namespace flex
