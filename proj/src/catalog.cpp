#include "flex/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace flex {

namespace {

// Incremental construction of one catalog entry. Host degrees are specified
// per vertex; stubs are derived once the drawn edges are known.
struct Build {
  explicit Build(std::string entry_name) : name(std::move(entry_name)) {}

  std::string name;
  std::vector<std::string> labels;
  std::vector<DegPred> pred;
  std::vector<char> reduced;
  std::vector<char> fixable;  // declared Fix candidates (circles in R)
  std::vector<Edge> edges;

  // deg: exact host degree for drawn vertices
  int v(const std::string& label, int deg, bool in_reduced = true, bool fix = true) {
    labels.push_back(label);
    pred.push_back({deg, deg});
    reduced.push_back(in_reduced);
    fixable.push_back(fix && in_reduced);
    return (int)labels.size() - 1;
  }
  // boundary vertex with a lower host-degree bound ("+")
  int plus(const std::string& label, int min_deg) {
    labels.push_back(label);
    pred.push_back({min_deg, INT_MAX});
    reduced.push_back(false);
    fixable.push_back(false);
    return (int)labels.size() - 1;
  }
  // degree-at-most entries (the single-vertex configurations)
  int at_most(const std::string& label, int max_deg) {
    labels.push_back(label);
    pred.push_back({0, max_deg});
    reduced.push_back(true);
    fixable.push_back(true);
    return (int)labels.size() - 1;
  }

  void e(int a, int b) { edges.push_back({a, b}); }
  // diamond with middles m1,m2 and sides s1,s2
  void dia(int m1, int m2, int s1, int s2) {
    e(m1, m2);
    e(m1, s1);
    e(m1, s2);
    e(m2, s1);
    e(m2, s2);
  }
  void tri(int a, int b, int c) {
    e(a, b);
    e(b, c);
    e(a, c);
  }

  CatalogEntry done(bool declare_fix) {
    Graph h((int)labels.size(), edges, labels);
    Configuration cfg;
    cfg.name = name;
    cfg.h = h;
    cfg.in_reduced.assign(reduced.begin(), reduced.end());
    cfg.k = 4;
    for (int u = 0; u < h.n(); ++u) {
      // instantiate at the minimum degree (maximum for at-most entries)
      int host = pred[u].exact() ? pred[u].min
                                 : (pred[u].max == INT_MAX ? pred[u].min : pred[u].max);
      int stubs = host - h.degree(u);
      if (stubs < 0)
        throw std::logic_error("catalog entry " + name + ": drawn degree of " +
                               labels[u] + " exceeds its annotation");
      cfg.ext_degree.push_back(stubs);
    }
    if (declare_fix)
      for (int u = 0; u < h.n(); ++u)
        if (fixable[u]) cfg.declared_fix.push_back(u);
    cfg.validate();
    return {name, cfg, pred};
  }
};

std::vector<CatalogEntry> make_catalog_C() {
  std::vector<CatalogEntry> out;
  {
    Build b{"C1"};
    b.at_most("v", 2);
    out.push_back(b.done(false));
  }
  {
    Build b{"C2"};  // path a-b-c of 3-vertices, budgets (2,3,2)
    int a = b.v("a", 3), bb = b.v("b", 3), c = b.v("c", 3);
    b.e(a, bb);
    b.e(bb, c);
    out.push_back(b.done(false));
  }
  {
    Build b{"C3"};  // T(3,3,3)
    int x = b.v("a", 3), y = b.v("b", 3), z = b.v("c", 3);
    b.tri(x, y, z);
    out.push_back(b.done(false));
  }
  {
    Build b{"C4"};  // Dia(4-3,4,5+) plus a 3-vertex on the middle 4-vertex
    int u1 = b.v("u1", 3);            // pendant
    int u2 = b.v("u2", 4);            // middle 4-vertex
    int u3 = b.v("u3", 3);            // middle 3-vertex
    int u4 = b.v("u4", 4);            // side 4-vertex
    int w = b.plus("w", 5);           // side 5+, boundary
    b.dia(u2, u3, u4, w);
    b.e(u1, u2);
    out.push_back(b.done(false));
  }
  {
    Build b{"C5"};  // Dia(3-3,5+,5+), sides in the boundary
    int m1 = b.v("m1", 3), m2 = b.v("m2", 3);
    int s1 = b.plus("s1", 5), s2 = b.plus("s2", 5);
    b.dia(m1, m2, s1, s2);
    out.push_back(b.done(false));
  }
  {
    Build b{"C6"};  // Dia(3-5+,3,5+), the 5+ vertices in the boundary
    int m1 = b.v("m1", 3);
    int m2 = b.plus("m2", 5);
    int s1 = b.plus("s1", 5);
    int s2 = b.v("s2", 3);
    b.dia(m1, m2, s1, s2);
    out.push_back(b.done(false));
  }
  {
    Build b{"C7"};  // Dia(5-4,3,3)
    int u = b.v("u", 5), v = b.v("v", 4), x = b.v("x", 3), y = b.v("y", 3);
    b.dia(u, v, x, y);
    out.push_back(b.done(false));
  }
  {
    Build b{"C8"};  // Dia(4-4,5,3) and Dia(5-3,4,4+) sharing the 5-vertex
    int u = b.v("u", 4), v = b.v("v", 4), x = b.v("x", 3), y = b.v("y", 5);
    int a = b.v("a", 3), bb = b.v("b", 4);
    int c = b.plus("c", 4);
    b.dia(u, v, x, y);
    b.dia(y, a, bb, c);
    out.push_back(b.done(false));
  }
  {
    Build b{"C9"};  // two copies of Dia(3-4,4,5+), middle 4-vertices joined
    int u = b.v("u", 4), v = b.v("v", 3), x = b.v("x", 4);
    int y = b.plus("y", 5);
    int a = b.v("a", 4), bb = b.v("b", 3), c = b.v("c", 4);
    int d = b.plus("d", 5);
    b.dia(u, v, x, y);
    b.dia(a, bb, c, d);
    b.e(u, a);
    out.push_back(b.done(false));
  }
  {
    Build b{"C10"};  // Dia(4-3,5+,5) and Dia(5-3,4,4+) sharing the middle 5-vertex
    int u = b.v("u", 4), v = b.v("v", 3);
    int x = b.plus("x", 5);
    int y = b.v("y", 5);
    int a = b.v("a", 3);
    int bb = b.plus("b", 4);
    int c = b.v("c", 4);
    b.dia(u, v, x, y);
    b.dia(y, a, bb, c);
    out.push_back(b.done(false));
  }
  {
    Build b{"C11"};  // Dia(4-4,3,4) plus a 3-vertex on one middle 4-vertex
    int z = b.v("z", 3);
    int u = b.v("u", 4), v = b.v("v", 4), x = b.v("x", 3), y = b.v("y", 4);
    b.dia(u, v, x, y);
    b.e(z, u);
    out.push_back(b.done(false));
  }
  {
    Build b{"C12"};  // Dia(3-4,4,5+) and Dia(4-4,4,3), middle 4-vertices joined
    int u = b.v("u", 4), v = b.v("v", 4), x = b.v("x", 3), y = b.v("y", 4);
    int a = b.v("a", 4), bb = b.v("b", 3), c = b.v("c", 4);
    int d = b.plus("d", 5);
    b.dia(u, v, x, y);
    b.dia(a, bb, c, d);
    b.e(u, a);
    out.push_back(b.done(false));
  }
  {
    Build b{"C13"};  // Dia(3-5,5,5) whose side 5-vertices are middles of
                     // Dia(5-3,4,5+) each
    int k = b.v("k", 5), j = b.v("j", 3);  // middles of the central diamond
    int a = b.v("a", 5), u = b.v("u", 5);  // its sides, middles of the outer ones
    int bb = b.v("b", 3), c = b.v("c", 4);
    int d = b.plus("d", 5);
    int v = b.v("v", 3), x = b.v("x", 4);
    int y = b.plus("y", 5);
    b.dia(k, j, a, u);
    b.dia(a, bb, c, d);
    b.dia(u, v, x, y);
    out.push_back(b.done(false));
  }
  return out;
}

std::vector<CatalogEntry> make_catalog_D() {
  std::vector<CatalogEntry> out;
  {
    Build b{"D1"};
    b.at_most("v", 2);
    out.push_back(b.done(true));
  }
  {
    Build b{"D2"};  // T(3,3,4); the 4-vertex has two outside neighbors
    int w = b.v("w", 3), u = b.v("u", 4, true, false), v = b.v("v", 3);
    b.tri(w, u, v);
    out.push_back(b.done(true));
  }
  {
    Build b{"D3"};  // Dia(6-3,3,4) and Dia(6-3,4,4) sharing the 6-vertex
    int u = b.v("u", 3);
    int v = b.v("v", 6);
    int x = b.v("x", 3);
    int y = b.v("y", 4, true, false);
    int c = b.v("c", 3);
    int a = b.v("a", 4, true, false);
    int bb = b.v("b", 4, true, false);
    b.dia(u, v, x, y);
    b.dia(v, c, a, bb);
    out.push_back(b.done(true));
  }
  {
    Build b{"D4"};  // Dia(3-3,4+,4+), sides in the boundary
    int m1 = b.v("m1", 3), m2 = b.v("m2", 3);
    int s1 = b.plus("s1", 4), s2 = b.plus("s2", 4);
    b.dia(m1, m2, s1, s2);
    out.push_back(b.done(true));
  }
  {
    Build b{"D5"};  // Dia(4-5,3,3)
    int u = b.v("u", 4), v = b.v("v", 5, true, false);
    int x = b.v("x", 3), y = b.v("y", 3);
    b.dia(u, v, x, y);
    out.push_back(b.done(true));
  }
  {
    Build b{"D6"};  // Dia(4-3,4,4)
    int u = b.v("u", 4), v = b.v("v", 3, true, false);
    int x = b.v("x", 4, true, false), y = b.v("y", 4, true, false);
    b.dia(u, v, x, y);
    out.push_back(b.done(true));
  }
  {
    Build b{"D7"};  // Dia(5-3,4,4) plus a 3-vertex on the 5-vertex
    int u = b.v("u", 3, true, false), v = b.v("v", 5);
    int x = b.v("x", 4, true, false), y = b.v("y", 4, true, false);
    int z = b.v("z", 3, true, false);
    b.dia(u, v, x, y);
    b.e(v, z);
    out.push_back(b.done(true));
  }
  {
    Build b{"D8"};  // Dia(5-5,3,3) plus a 3-vertex on one 5-vertex
    int u = b.v("u", 5, true, false), v = b.v("v", 5);
    int x = b.v("x", 3), y = b.v("y", 3);
    int z = b.v("z", 3, true, false);
    b.dia(u, v, x, y);
    b.e(v, z);
    out.push_back(b.done(true));
  }
  {
    Build b{"D8p"};  // D8 with the extra 3-vertex joined to both 5-vertices
    int u = b.v("u", 5), v = b.v("v", 5);
    int x = b.v("x", 3), y = b.v("y", 3);
    int z = b.v("z", 3);
    b.dia(u, v, x, y);
    b.e(v, z);
    b.e(u, z);
    out.push_back(b.done(true));
  }
  {
    Build b{"D9"};  // induced path of three 3-vertices
    int u = b.v("u", 3, true, false), v = b.v("v", 3), w = b.v("w", 3, true, false);
    b.e(u, v);
    b.e(v, w);
    out.push_back(b.done(true));
  }
  {
    Build b{"D9p"};  // endpoints of (D9) identified through an edge: T(3,3,3)
    int u = b.v("u", 3), v = b.v("v", 3), w = b.v("w", 3);
    b.tri(u, v, w);
    out.push_back(b.done(true));
  }
  {
    Build b{"D10"};  // Dia(5-3,4,3); only d is a Fix option
    int a = b.v("a", 3, true, false);
    int c = b.v("c", 5, true, false);
    int bb = b.v("b", 4, true, false);
    int d = b.v("d", 3);
    b.dia(a, c, bb, d);
    out.push_back(b.done(true));
  }
  {
    Build b{"D11"};  // T(5,3,3) plus a 3-vertex on the 5-vertex
    int w = b.v("w", 3), u = b.v("u", 3);
    int v = b.v("v", 5, true, false);
    int x = b.v("x", 3, true, false);
    b.tri(w, u, v);
    b.e(v, x);
    out.push_back(b.done(true));
  }
  {
    Build b{"D11p"};  // pendant of (D11) joined to w: Dia(3-5,3,3)
    int w = b.v("w", 3), u = b.v("u", 3);
    int v = b.v("v", 5, true, false);
    int x = b.v("x", 3);
    b.dia(w, v, u, x);
    out.push_back(b.done(true));
  }
  {
    Build b{"D11pp"};  // pendant of (D11) joined to u instead
    int w = b.v("w", 3), u = b.v("u", 3);
    int v = b.v("v", 5, true, false);
    int x = b.v("x", 3);
    b.dia(u, v, w, x);
    out.push_back(b.done(true));
  }
  {
    Build b{"D12"};  // two copies of T(6,3,3) sharing the 6-vertex
    int u = b.v("u", 3), w = b.v("w", 3);
    int v = b.v("v", 6, true, false);
    int x = b.v("x", 3), y = b.v("y", 3);
    b.tri(u, w, v);
    b.tri(x, y, v);
    out.push_back(b.done(true));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_C() {
  static const std::vector<CatalogEntry> cat = make_catalog_C();
  return cat;
}

const std::vector<CatalogEntry>& catalog_D() {
  static const std::vector<CatalogEntry> cat = make_catalog_D();
  return cat;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (auto& e : catalog_C())
    if (e.name == name) return e;
  for (auto& e : catalog_D())
    if (e.name == name) return e;
  throw std::invalid_argument("unknown catalog entry: " + name);
}

Configuration catalog(const std::string& name) { return catalog_entry(name).cfg; }

std::vector<EntryEmbedding> find_embeddings(const Graph& host, const CatalogEntry& entry) {
  const Graph& p = entry.cfg.h;
  std::vector<EntryEmbedding> out;
  if (p.n() > host.n()) return out;

  // pattern vertex order: attach to the already-placed part where possible
  std::vector<int> order;
  std::vector<char> placed(p.n(), 0);
  for (int round = 0; round < p.n(); ++round) {
    int best = -1, best_links = -1, best_deg = -1;
    for (int v = 0; v < p.n(); ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (int u : p.neighbors(v))
        if (placed[u]) ++links;
      if (links > best_links || (links == best_links && p.degree(v) > best_deg)) {
        best = v;
        best_links = links;
        best_deg = p.degree(v);
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  std::set<std::vector<int>> seen;  // image sets
  std::vector<int> map(p.n(), -1);
  std::vector<char> used(host.n(), 0);

  std::function<void(int)> rec = [&](int k) {
    if (k == p.n()) {
      std::vector<int> image = map;
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) out.push_back({entry.name, map});
      return;
    }
    int pv = order[k];
    for (int hv = 0; hv < host.n(); ++hv) {
      if (used[hv] || !entry.pred[pv].matches(host.degree(hv))) continue;
      bool ok = true;
      for (int q = 0; q < p.n() && ok; ++q) {
        if (map[q] < 0) continue;
        if (p.adjacent(pv, q) != host.adjacent(hv, map[q])) ok = false;  // induced
      }
      if (!ok) continue;
      map[pv] = hv;
      used[hv] = 1;
      rec(k + 1);
      map[pv] = -1;
      used[hv] = 0;
    }
  };
  rec(0);

  std::sort(out.begin(), out.end(), [](const EntryEmbedding& a, const EntryEmbedding& b) {
    return a.map < b.map;
  });
  return out;
}

std::vector<EntryEmbedding> find_embeddings(const Graph& host,
                                            const std::vector<CatalogEntry>& entries) {
  std::vector<EntryEmbedding> all;
  for (auto& e : entries) {
    auto found = find_embeddings(host, e);
    all.insert(all.end(), found.begin(), found.end());
  }
  return all;
}

}  // namespace flex
