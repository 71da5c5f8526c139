#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flex {

using Edge = std::pair<int, int>;  // normalized u < v

// Immutable simple graph on vertices 0..n-1. Edges are kept sorted, and for
// n <= 64 an adjacency bitmask per vertex backs the O(1) adjacency test.
class Graph {
 public:
  Graph() : n_(0) {}
  // Throws std::invalid_argument on loops, out-of-range endpoints or
  // duplicate edges (after normalization).
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int n() const { return n_; }
  int edge_count() const { return (int)edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return (int)adj_[v].size(); }
  bool adjacent(int u, int v) const;
  // Index into edges() of {u,v}, or -1.
  int edge_index(int u, int v) const;
  std::uint64_t adj_mask(int v) const { return mask_.empty() ? 0 : mask_[v]; }
  bool has_masks() const { return !mask_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int v) const;

  bool connected() const;
  std::vector<int> component_of(int v) const;
  // Component id per vertex, ids dense from 0.
  std::vector<int> components(int* count = nullptr) const;

  // Graph on S (order preserved); map[i] = original vertex of new vertex i.
  Graph induced(const std::vector<int>& S, std::vector<int>* map = nullptr) const;

  Graph with_apex(const std::vector<int>& I) const;  // new vertex adjacent to I

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::string> labels_;
};

Graph build_graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

// One face of an embedding: the cyclic sequence of directed edges (u, v)
// traversed by the facial walk.
struct Face {
  std::vector<std::pair<int, int>> walk;
  int length() const { return (int)walk.size(); }
  // Distinct vertices on the walk, sorted.
  std::vector<int> vertex_set() const;
};

struct FaceList {
  std::vector<Face> faces;
  // face id on each side of edge e: side 0 = walk containing (u,v), side 1 =
  // walk containing (v,u), for e = {u,v} with u < v.
  std::vector<std::pair<int, int>> edge_face;
  std::vector<int> lengths() const;
  int total_length() const;
};

// Plane graph: a graph plus a rotation system (cyclic order of incident edge
// indices at each vertex). Faces are derived by walking: the successor of the
// directed edge (u,v) is (v,w) where w follows u in the rotation at v.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  // Throws std::invalid_argument if the rotation does not list exactly the
  // incident edges of each vertex once.
  PlaneGraph(Graph g, std::vector<std::vector<int>> rotation);

  const Graph& graph() const { return g_; }
  const std::vector<std::vector<int>>& rotation() const { return rot_; }

  // Euler check for connected inputs: n - |E| + |F| == 2.
  bool euler_ok() const;

 private:
  Graph g_;
  std::vector<std::vector<int>> rot_;
};

FaceList trace_faces(const PlaneGraph& pg);

// Convenience: cycle C_n with its planar rotation.
PlaneGraph plane_cycle(int n);
// K4 with a planar (tetrahedral) rotation.
PlaneGraph plane_k4();

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
// K4 minus one edge; vertices 0,1 are the middle (degree 3) vertices.
Graph diamond_graph();

// Blocks (2-connected components) as vertex sets; bridges count as blocks.
std::vector<std::vector<int>> blocks(const Graph& g);

}  // namespace flex
