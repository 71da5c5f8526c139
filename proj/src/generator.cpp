#include "flex/generator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace flex {

namespace {

// Rotations as cyclic neighbor lists (editable), converted to edge-index
// rotations only when the final PlaneGraph is built.
struct PlaneBuilder {
  int n;
  std::set<Edge> edges;
  std::vector<std::vector<int>> rot;  // neighbors in cyclic order

  explicit PlaneBuilder(int nn) : n(nn), rot(nn) {}

  bool has_edge(int u, int v) const {
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
  }

  // directed-edge walks under: successor of (u,v) is (v,w), w after u at v
  struct Walks {
    std::vector<std::vector<std::pair<int, int>>> faces;
  };
  Walks trace() const {
    Walks w;
    std::set<std::pair<int, int>> used;
    for (auto [a, b] : edges) {
      for (auto start : {std::pair{a, b}, std::pair{b, a}}) {
        if (used.count(start)) continue;
        std::vector<std::pair<int, int>> walk;
        auto cur = start;
        do {
          used.insert(cur);
          walk.push_back(cur);
          auto [u, v] = cur;
          const auto& rv = rot[v];
          int i = (int)(std::find(rv.begin(), rv.end(), u) - rv.begin());
          int nxt = rv[(i + 1) % rv.size()];
          cur = {v, nxt};
        } while (cur != start);
        w.faces.push_back(std::move(walk));
      }
    }
    return w;
  }

  void add_leaf(int parent, int child, size_t rot_pos) {
    edges.insert({std::min(parent, child), std::max(parent, child)});
    rot[parent].insert(rot[parent].begin() + rot_pos, child);
    rot[child].push_back(parent);
  }

  // insert edge a-b inside a face, given the walk positions arriving at a
  // and at b (walk[i] = (x,a), walk[j] = (w,b))
  void add_chord(int a, int x, int b, int w) {
    edges.insert({std::min(a, b), std::max(a, b)});
    auto ins_after = [&](int at, int after, int nb) {
      auto& r = rot[at];
      auto it = std::find(r.begin(), r.end(), after);
      r.insert(it + 1, nb);
    };
    ins_after(a, x, b);
    ins_after(b, w, a);
  }

  Graph graph() const {
    return Graph(n, std::vector<Edge>(edges.begin(), edges.end()));
  }

  PlaneGraph plane_graph() const {
    Graph g = graph();
    std::vector<std::vector<int>> erot(n);
    for (int v = 0; v < n; ++v)
      for (int u : rot[v]) erot[v].push_back(g.edge_index(v, u));
    return PlaneGraph(g, erot);
  }
};

}  // namespace

PlaneGraph figure1_chain(int t) {
  if (t < 5) throw std::invalid_argument("figure1_chain: need at least 5 blocks");
  int n = 3 * t + 1;
  auto s = [&](int i) { return i; };
  auto a = [&](int i) { return t + 1 + 2 * i; };
  auto b = [&](int i) { return t + 2 + 2 * i; };

  std::vector<Edge> edges;
  for (int i = 0; i < t; ++i) {
    edges.push_back({s(i), a(i)});
    edges.push_back({s(i), b(i)});
    edges.push_back({a(i), b(i)});
    edges.push_back({a(i), s(i + 1)});
    edges.push_back({b(i), s(i + 1)});
  }
  edges.push_back({s(0), s(t)});

  std::vector<std::string> labels(n);
  for (int i = 0; i <= t; ++i) labels[s(i)] = "s" + std::to_string(i);
  for (int i = 0; i < t; ++i) {
    labels[a(i)] = "a" + std::to_string(i);
    labels[b(i)] = "b" + std::to_string(i);
  }
  Graph g(n, edges, labels);

  // counterclockwise neighbor order of the drawn embedding
  std::vector<std::vector<int>> nrot(n);
  nrot[s(0)] = {a(0), s(t), b(0)};
  for (int i = 1; i < t; ++i) nrot[s(i)] = {a(i), a(i - 1), b(i - 1), b(i)};
  nrot[s(t)] = {s(0), a(t - 1), b(t - 1)};
  for (int i = 0; i < t; ++i) {
    nrot[a(i)] = {s(i), b(i), s(i + 1)};
    nrot[b(i)] = {s(i + 1), a(i), s(i)};
  }
  std::vector<std::vector<int>> erot(n);
  for (int v = 0; v < n; ++v)
    for (int u : nrot[v]) erot[v].push_back(g.edge_index(v, u));
  return PlaneGraph(g, erot);
}

PlaneGraph random_free_plane_graph(int n, const PatternFamily& fam, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_free_plane_graph: need n >= 3");
  std::mt19937_64 rng(seed);
  PlaneBuilder pb(n);

  // random plane tree; any rotation of a tree is planar
  for (int v = 1; v < n; ++v) {
    int parent = (int)(rng() % v);
    size_t pos = pb.rot[parent].empty() ? 0 : rng() % (pb.rot[parent].size() + 1);
    pb.add_leaf(parent, v, pos);
  }

  int attempts = 40 * n;
  for (int it = 0; it < attempts; ++it) {
    auto walks = pb.trace();
    auto& face = walks.faces[rng() % walks.faces.size()];
    if (face.size() < 4) continue;
    size_t i = rng() % face.size();
    size_t j = rng() % face.size();
    if (i == j) continue;
    int a = face[i].second, x = face[i].first;
    int b = face[j].second, w = face[j].first;
    if (a == b || pb.has_edge(a, b)) continue;
    // tentative insertion must stay family-free
    std::vector<Edge> es(pb.edges.begin(), pb.edges.end());
    es.push_back({std::min(a, b), std::max(a, b)});
    if (!is_family_free(Graph(n, es), fam)) continue;
    pb.add_chord(a, x, b, w);
  }
  return pb.plane_graph();
}

namespace {

// pair-index tables for canonical forms
int pair_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  // index of (i,j) in lexicographic order over i<j
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::uint64_t apply_perm(std::uint64_t mask, const std::vector<int>& perm, int n) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    int bit = std::countr_zero(m);
    // recover (i,j) from bit
    int i = 0, acc = 0;
    while (acc + (n - i - 1) <= bit) {
      acc += n - i - 1;
      ++i;
    }
    int j = i + 1 + (bit - acc);
    out |= 1ull << pair_index(perm[i], perm[j], n);
  }
  return out;
}

std::uint64_t canon(std::uint64_t mask, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    best = std::min(best, apply_perm(mask, perm, n));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("enumerate_connected_graphs: n must be 1..7");

  // all graphs up to isomorphism by vertex augmentation
  std::set<std::uint64_t> level{0};  // n = 1
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t mask : level) {
      // re-embed (k-1)-vertex mask into k-vertex pair indexing
      std::uint64_t base = 0;
      for (std::uint64_t m = mask; m; m &= m - 1) {
        int bit = std::countr_zero(m);
        int i = 0, acc = 0;
        while (acc + (k - 1 - i - 1) <= bit) {
          acc += k - 1 - i - 1;
          ++i;
        }
        int j = i + 1 + (bit - acc);
        base |= 1ull << pair_index(i, j, k);
      }
      for (std::uint64_t nb = 0; nb < (1ull << (k - 1)); ++nb) {
        std::uint64_t mk = base;
        for (std::uint64_t m = nb; m; m &= m - 1)
          mk |= 1ull << pair_index(std::countr_zero(m), k - 1, k);
        next.insert(canon(mk, k));
      }
    }
    level = std::move(next);
  }

  std::vector<std::uint64_t> sorted(level.begin(), level.end());
  std::sort(sorted.begin(), sorted.end(),
            [](std::uint64_t a, std::uint64_t b) {
              int pa = std::popcount(a), pb = std::popcount(b);
              return pa != pb ? pa < pb : a < b;
            });

  std::vector<Graph> out;
  for (std::uint64_t mask : sorted) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (mask & (1ull << pair_index(i, j, n))) es.push_back({i, j});
    Graph g(n, es);
    if (g.connected()) out.push_back(g);
  }
  return out;
}

}  // namespace flex
