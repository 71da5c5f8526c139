#include "flex/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace flex {

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  if (!labels_.empty() && (int)labels_.size() != n)
    throw std::invalid_argument("graph: label count mismatch");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("graph: parallel edge");
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  if (n_ <= 64) {
    mask_.assign(n_, 0);
    for (auto [u, v] : edges_) {
      mask_[u] |= 1ull << v;
      mask_[v] |= 1ull << u;
    }
  }
}

bool Graph::adjacent(int u, int v) const {
  if (!mask_.empty()) return (mask_[u] >> v) & 1;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return (int)(it - edges_.begin());
}

std::string Graph::label(int v) const {
  if (!labels_.empty()) return labels_[v];
  return std::to_string(v);
}

std::vector<int> Graph::component_of(int v) const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{v}, out;
  seen[v] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (int y : adj_[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Graph::components(int* count) const {
  std::vector<int> comp(n_, -1);
  int c = 0;
  for (int v = 0; v < n_; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj_[x])
        if (comp[y] < 0) {
          comp[y] = c;
          stack.push_back(y);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  return (int)component_of(0).size() == n_;
}

Graph Graph::induced(const std::vector<int>& S, std::vector<int>* map) const {
  std::vector<int> idx(n_, -1);
  for (int i = 0; i < (int)S.size(); ++i) {
    int v = S[i];
    if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
    if (idx[v] >= 0) throw std::invalid_argument("induced: repeated vertex");
    idx[v] = i;
  }
  std::vector<Edge> es;
  for (auto [u, v] : edges_)
    if (idx[u] >= 0 && idx[v] >= 0) es.push_back({idx[u], idx[v]});
  std::vector<std::string> labs;
  if (!labels_.empty())
    for (int v : S) labs.push_back(labels_[v]);
  if (map) *map = S;
  return Graph((int)S.size(), std::move(es), std::move(labs));
}

Graph Graph::with_apex(const std::vector<int>& I) const {
  std::vector<Edge> es = edges_;
  for (int v : I) es.push_back({v, n_});
  return Graph(n_ + 1, std::move(es));
}

Graph build_graph(int n, std::vector<Edge> edges, std::vector<std::string> labels) {
  return Graph(n, std::move(edges), std::move(labels));
}

std::vector<int> Face::vertex_set() const {
  std::vector<int> vs;
  for (auto& [u, v] : walk) vs.push_back(u);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<int> FaceList::lengths() const {
  std::vector<int> ls;
  for (auto& f : faces) ls.push_back(f.length());
  return ls;
}

int FaceList::total_length() const {
  int t = 0;
  for (auto& f : faces) t += f.length();
  return t;
}

PlaneGraph::PlaneGraph(Graph g, std::vector<std::vector<int>> rotation)
    : g_(std::move(g)), rot_(std::move(rotation)) {
  if ((int)rot_.size() != g_.n())
    throw std::invalid_argument("plane graph: rotation size mismatch");
  for (int v = 0; v < g_.n(); ++v) {
    std::vector<int> want;
    for (int u : g_.neighbors(v)) want.push_back(g_.edge_index(v, u));
    std::sort(want.begin(), want.end());
    std::vector<int> have = rot_[v];
    std::sort(have.begin(), have.end());
    if (want != have)
      throw std::invalid_argument("plane graph: rotation at vertex " +
                                  std::to_string(v) +
                                  " does not list its incident edges once");
  }
}

FaceList trace_faces(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  int m = g.edge_count();
  // Directed edge id: 2*e + 0 for (u,v), 2*e + 1 for (v,u), with u < v.
  auto dir_id = [&](int from, int to) {
    int e = g.edge_index(from, to);
    auto [u, v] = g.edges()[e];
    return 2 * e + (from == u ? 0 : 1);
  };
  // pos[v][e] = index of edge e in rotation at v.
  std::vector<std::vector<std::pair<int, int>>> pos(g.n());
  for (int v = 0; v < g.n(); ++v) {
    for (int i = 0; i < (int)pg.rotation()[v].size(); ++i)
      pos[v].push_back({pg.rotation()[v][i], i});
    std::sort(pos[v].begin(), pos[v].end());
  }
  auto rot_index = [&](int v, int e) {
    auto it = std::lower_bound(pos[v].begin(), pos[v].end(), std::pair<int, int>{e, -1});
    return it->second;
  };

  FaceList fl;
  fl.edge_face.assign(m, {-1, -1});
  std::vector<char> used(2 * m, 0);
  for (int d0 = 0; d0 < 2 * m; ++d0) {
    if (used[d0]) continue;
    Face face;
    int d = d0;
    while (!used[d]) {
      used[d] = 1;
      int e = d / 2;
      auto [a, b] = g.edges()[e];
      int from = (d % 2 == 0) ? a : b;
      int to = (d % 2 == 0) ? b : a;
      face.walk.push_back({from, to});
      (d % 2 == 0 ? fl.edge_face[e].first : fl.edge_face[e].second) =
          (int)fl.faces.size();
      // successor: at `to`, take the edge after (to,from) in the rotation.
      const auto& rot = pg.rotation()[to];
      int i = rot_index(to, e);
      int ne = rot[(i + 1) % rot.size()];
      auto [x, y] = g.edges()[ne];
      int nxt = (x == to) ? y : x;
      d = dir_id(to, nxt);
    }
    if (d != d0)
      throw std::invalid_argument("plane graph: face walk does not close");
    fl.faces.push_back(std::move(face));
  }
  return fl;
}

bool PlaneGraph::euler_ok() const {
  if (!g_.connected()) return false;
  FaceList fl = trace_faces(*this);
  return g_.n() - g_.edge_count() + (int)fl.faces.size() == 2;
}

PlaneGraph plane_cycle(int n) {
  Graph g = cycle_graph(n);
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    rot[v] = {g.edge_index(v, (v + 1) % n), g.edge_index(v, (v + n - 1) % n)};
  }
  return PlaneGraph(g, rot);
}

PlaneGraph plane_k4() {
  Graph g = complete_graph(4);
  // 3 in the center of triangle 0,1,2.
  std::vector<std::vector<int>> rot(4);
  auto e = [&](int u, int v) { return g.edge_index(u, v); };
  rot[0] = {e(0, 1), e(0, 3), e(0, 2)};
  rot[1] = {e(1, 2), e(1, 3), e(1, 0)};
  rot[2] = {e(2, 0), e(2, 3), e(2, 1)};
  rot[3] = {e(3, 0), e(3, 1), e(3, 2)};
  return PlaneGraph(g, rot);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.push_back({u, v});
  return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.push_back({v, (v + 1) % n});
  return Graph(n, std::move(es));
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
  return Graph(n, std::move(es));
}

Graph diamond_graph() {
  return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

namespace {

struct BlockFinder {
  const Graph& g;
  std::vector<int> num, low;
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<int>> out;
  int timer = 0;

  explicit BlockFinder(const Graph& gg) : g(gg), num(gg.n(), -1), low(gg.n(), 0) {}

  void emit(std::pair<int, int> top) {
    std::vector<int> vs;
    for (;;) {
      auto e = stack.back();
      stack.pop_back();
      vs.push_back(e.first);
      vs.push_back(e.second);
      if (e == top) break;
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    out.push_back(std::move(vs));
  }

  void dfs(int v, int parent) {
    num[v] = low[v] = timer++;
    for (int w : g.neighbors(v)) {
      if (w == parent) continue;  // simple graph: the tree edge only
      if (num[w] < 0) {
        stack.push_back({v, w});
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= num[v]) emit({v, w});
      } else if (num[w] < num[v]) {
        stack.push_back({v, w});
        low[v] = std::min(low[v], num[w]);
      }
    }
  }
};

}  // namespace

std::vector<std::vector<int>> blocks(const Graph& g) {
  BlockFinder bf(g);
  for (int v = 0; v < g.n(); ++v)
    if (bf.num[v] < 0) bf.dfs(v, -1);
  return bf.out;
}

}  // namespace flex
