#pragma once

#include <cstdint>
#include <vector>

#include "flex/graph.hpp"
#include "flex/patterns.hpp"

namespace flex {

// The chained-diamond construction: t >= 5 diamond blocks glued at side
// vertices plus one edge joining the two end side vertices, embedded as
// drawn. 3t+1 vertices, 5t+1 edges, 2t triangular faces and two faces of
// length 2t+1; K4-free, B5-free, no cycle length in [5, 2t], not 3-colorable.
PlaneGraph figure1_chain(int t);

// Connected plane graph on n vertices that stays `fam`-free: a random plane
// tree densified by edge insertions inside faces. Deterministic per seed.
PlaneGraph random_free_plane_graph(int n, const PatternFamily& fam,
                                   std::uint64_t seed);

// All connected simple graphs on n vertices up to isomorphism (n <= 7),
// in a deterministic order.
std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace flex
