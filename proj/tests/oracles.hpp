#pragma once

// Independent reference implementations used only by the test suites. None
// of these share code paths with the library algorithms they check.

#include <optional>
#include <vector>

#include "flex/choosability.hpp"
#include "flex/graph.hpp"
#include "flex/patterns.hpp"
#include "flex/resolution.hpp"

namespace flex::oracle {

// Plain injective-map search over all orderings; subgraph (not induced).
bool brute_subgraph(const Graph& host, const Graph& pattern);

// Universal colorability by enumerating every assignment with |L(v)| = f(v)
// from a palette of size sum(f), with no canonization. The last vertex is
// batched per prefix, which changes nothing about what is enumerated.
bool naive_for_all_assignments(const Graph& g, const Budget& f);

// Exhaustive maximum of satisfied requests over all proper colorings.
std::optional<long long> brute_max_satisfied(const Graph& g, const RequestInstance& inst);

// Direct mask scan + minimum over all permutations; n <= 6.
long long count_connected_graphs_direct(int n);

}  // namespace flex::oracle
