#include "flex/choosability.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace flex {

int ListAssignment::list_size(int v) const { return std::popcount(lists[v]); }

std::vector<int> ListAssignment::list_colors(int v) const {
  std::vector<int> cs;
  for (std::uint64_t m = lists[v]; m; m &= m - 1) cs.push_back(std::countr_zero(m));
  return cs;
}

namespace {

// Backtracking solver over bitmask lists; `lists` is scratch.
bool solve_lists(const Graph& g, std::vector<std::uint64_t> lists, Coloring* out) {
  int n = g.n();
  Coloring col(n, -1);

  std::function<bool(int)> rec = [&](int colored) -> bool {
    if (colored == n) return true;
    int v = -1, best_sz = INT_MAX;
    for (int u = 0; u < n; ++u) {
      if (col[u] >= 0) continue;
      int sz = std::popcount(lists[u]);
      if (sz < best_sz) { best_sz = sz; v = u; }
    }
    for (std::uint64_t m = lists[v]; m; m &= m - 1) {
      int c = std::countr_zero(m);
      std::uint64_t bit = 1ull << c;
      col[v] = c;
      bool dead = false;
      std::uint64_t touched = 0;
      for (int w : g.neighbors(v)) {
        if (col[w] >= 0 || !(lists[w] & bit)) continue;
        lists[w] &= ~bit;
        touched |= 1ull << w;
        if (!lists[w]) { dead = true; break; }
      }
      if (!dead && rec(colored + 1)) return true;
      for (std::uint64_t t = touched; t; t &= t - 1) lists[std::countr_zero(t)] |= bit;
      col[v] = -1;
    }
    return false;
  };

  if (!rec(0)) return false;
  if (out) *out = col;
  return true;
}

// Largest submask of A that is numerically <= pos.
std::uint64_t largest_submask_le(std::uint64_t A, std::uint64_t pos) {
  if (A <= pos) return A;
  std::uint64_t r = 0;
  for (int b = 63; b >= 0; --b) {
    std::uint64_t bit = 1ull << b;
    if (pos & bit) {
      if (A & bit) {
        r |= bit;  // follow pos while tied
      } else {
        // r drops strictly below pos here: take every lower bit of A
        return r | (A & (bit - 1));
      }
    }
    // pos bit 0: an A-bit here cannot be taken while tied
  }
  return r;
}

// Enumeration of canonical support multisets for one connected piece.
// Supports are chosen in strictly decreasing mask order with positive
// multiplicities; only pairwise-intersecting multisets are visited (merging
// two disjoint supports preserves coverage and cannot make an assignment
// colorable, so the coarse ones dominate).
struct Enumerator {
  Enumerator(const Graph& gg, int mc, Budget budgets)
      : g(gg), max_colors(mc), r(std::move(budgets)) {}

  const Graph& g;
  int max_colors;
  Budget r;
  std::vector<std::uint64_t> supp;
  std::vector<int> mult;
  int used = 0;
  ListAssignment witness;
  const std::atomic<int>* abort_best = nullptr;  // parallel cut
  int branch_index = 0;

  bool aborted() const {
    return abort_best && branch_index > abort_best->load(std::memory_order_relaxed);
  }

  // false = witness found
  bool search(std::uint64_t pos) {
    if (aborted()) return true;
    std::uint64_t active = 0;
    for (int v = 0; v < g.n(); ++v)
      if (r[v] > 0) {
        active |= 1ull << v;
        if ((1ull << v) > pos) return true;  // v can no longer be covered
      }
    if (!active) return test_current();
    if (!pos) return true;

    for (std::uint64_t m = largest_submask_le(active, pos); m; m = (m - 1) & active) {
      bool meets = true;
      for (std::uint64_t c : supp)
        if (!(c & m)) { meets = false; break; }
      if (!meets) continue;
      int cap = max_colors - used;
      for (std::uint64_t b = m; b; b &= b - 1) cap = std::min(cap, r[std::countr_zero(b)]);
      if (cap <= 0) continue;
      supp.push_back(m);
      for (int k = cap; k >= 1; --k) {
        mult.push_back(k);
        used += k;
        for (std::uint64_t b = m; b; b &= b - 1) r[std::countr_zero(b)] -= k;
        bool ok = search(m - 1);
        for (std::uint64_t b = m; b; b &= b - 1) r[std::countr_zero(b)] += k;
        used -= k;
        mult.pop_back();
        if (!ok) { supp.pop_back(); return false; }
      }
      supp.pop_back();
    }
    return true;
  }

  bool test_current() {
    ListAssignment L;
    L.palette = used;
    L.lists.assign(g.n(), 0);
    int c = 0;
    for (size_t i = 0; i < supp.size(); ++i)
      for (int k = 0; k < mult[i]; ++k, ++c)
        for (std::uint64_t b = supp[i]; b; b &= b - 1)
          L.lists[std::countr_zero(b)] |= 1ull << c;
    if (solve_lists(g, L.lists, nullptr)) return true;
    witness = L;
    return false;
  }
};

// nullopt = every exact-size assignment colorable.
std::optional<ListAssignment> enumerate_graph(const Graph& g, const Budget& f,
                                              int max_colors, bool parallel) {
  int n = g.n();
  std::uint64_t full = (n >= 64) ? ~0ull : ((1ull << n) - 1);

  if (!parallel || n < 2) {
    Enumerator en(g, max_colors, f);
    if (!en.search(full)) return en.witness;
    return std::nullopt;
  }

  // Top-level split: the first support and its multiplicity, in the order
  // the serial search would take them; the winning branch is the smallest
  // index so verdict and witness match the serial run.
  struct Branch {
    std::uint64_t mask;
    int mult;
  };
  std::vector<Branch> branches;
  for (std::uint64_t m = full; m; m = (m - 1) & full) {
    int cap = max_colors;
    for (std::uint64_t b = m; b; b &= b - 1) cap = std::min(cap, f[std::countr_zero(b)]);
    for (int k = cap; k >= 1; --k) branches.push_back({m, k});
  }

  std::atomic<int> best((int)branches.size());
  std::vector<ListAssignment> found(branches.size());

#pragma omp parallel for schedule(dynamic, 4)
  for (int bi = 0; bi < (int)branches.size(); ++bi) {
    if (bi > best.load(std::memory_order_relaxed)) continue;
    auto [mask, k] = branches[bi];
    Enumerator en(g, max_colors, f);
    en.abort_best = &best;
    en.branch_index = bi;
    en.supp.push_back(mask);
    en.mult.push_back(k);
    en.used = k;
    for (std::uint64_t b = mask; b; b &= b - 1) en.r[std::countr_zero(b)] -= k;
    bool leftover_ok = true;
    for (int v = 0; v < n; ++v)
      if (en.r[v] > 0 && (1ull << v) > mask - 1) leftover_ok = false;
    if (!leftover_ok) continue;
    if (!en.search(mask - 1) && !en.aborted()) {
      int cur = best.load();
      while (bi < cur && !best.compare_exchange_weak(cur, bi)) {
      }
      found[bi] = en.witness;
    }
  }
  int b = best.load();
  if (b < (int)branches.size()) return found[b];
  return std::nullopt;
}

}  // namespace

std::optional<Coloring> color_with_lists(const Graph& g, const ListAssignment& L) {
  if ((int)L.lists.size() != g.n())
    throw std::invalid_argument("list assignment size mismatch");
  for (int v = 0; v < g.n(); ++v)
    if (!L.lists[v])
      throw std::invalid_argument("empty list at vertex " + std::to_string(v));
  Coloring col;
  if (solve_lists(g, L.lists, &col)) return col;
  return std::nullopt;
}

bool is_gallai_tree(const Graph& g) {
  if (!g.connected()) throw std::invalid_argument("is_gallai_tree: disconnected input");
  if (g.n() <= 1) return true;
  for (auto& bl : blocks(g)) {
    Graph b = g.induced(bl);
    int k = b.n();
    bool complete = b.edge_count() == k * (k - 1) / 2;
    bool odd_cycle = (k >= 3) && (k % 2 == 1) && b.edge_count() == k;
    if (odd_cycle)
      for (int v = 0; v < k && odd_cycle; ++v)
        if (b.degree(v) != 2) odd_cycle = false;
    if (!complete && !odd_cycle) return false;
  }
  return true;
}

std::optional<bool> degree_feasibility_shortcut(const Graph& g, const Budget& f) {
  int n = g.n();
  if ((int)f.size() != n) throw std::invalid_argument("budget size mismatch");
  if (n == 0) return true;
  for (int v = 0; v < n; ++v)
    if (f[v] <= 0) return false;

  // peel: a vertex with budget above its remaining degree colors last
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (alive[v] && f[v] > deg[v]) {
        alive[v] = 0;
        changed = true;
        for (int w : g.neighbors(v))
          if (alive[w]) --deg[w];
      }
    }
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (alive[v]) rest.push_back(v);
  if (rest.empty()) return true;

  std::vector<int> map;
  Graph r = g.induced(rest, &map);
  int nc = 0;
  std::vector<int> comp = r.components(&nc);
  bool undecided = false;
  for (int c = 0; c < nc; ++c) {
    std::vector<int> vs;
    for (int i = 0; i < r.n(); ++i)
      if (comp[i] == c) vs.push_back(i);
    Graph rc = r.induced(vs);
    bool exact = true;  // budget == degree across the residual component
    for (int i = 0; i < rc.n(); ++i)
      if (f[map[vs[i]]] != rc.degree(i)) { exact = false; break; }
    if (!exact) { undecided = true; continue; }
    if (is_gallai_tree(rc)) return false;
  }
  if (undecided) return std::nullopt;
  return true;
}

namespace {

// Witness over a vertex subset, lifted to the full graph: every other vertex
// gets the low f(v) colors, which cannot repair an uncolorable part.
ForAllVerdict lift_witness(const Graph& g, const Budget& f,
                           const std::vector<int>& subset,
                           const ListAssignment& local) {
  ForAllVerdict out;
  out.always = false;
  ListAssignment L;
  int pal = local.palette;
  for (int v = 0; v < g.n(); ++v) pal = std::max(pal, f[v]);
  L.palette = std::max(pal, 1);
  L.lists.assign(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    L.lists[v] = (f[v] >= 64) ? ~0ull : ((1ull << std::max(f[v], 0)) - 1);
  for (size_t i = 0; i < subset.size(); ++i) L.lists[subset[i]] = local.lists[i];
  out.witness = L;
  return out;
}

}  // namespace

ForAllVerdict colorable_for_all_assignments(const Graph& g, const Budget& f,
                                            ForAllOptions opts) {
  int n = g.n();
  if ((int)f.size() != n) throw std::invalid_argument("budget size mismatch");
  if (n == 0) return {};

  for (int v = 0; v < n; ++v) {
    if (f[v] <= 0) {
      // an assignment may give v the empty list
      ListAssignment local;
      local.palette = 0;
      local.lists = {0};
      return lift_witness(g, f, {v}, local);
    }
    if (f[v] > 64) throw std::runtime_error("budget exceeds palette limit (64)");
  }

  int ncomp = 0;
  std::vector<int> comp = g.components(&ncomp);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) vs.push_back(v);
    std::vector<int> cmap;
    Graph cg = g.induced(vs, &cmap);
    Budget cf;
    for (int v : vs) cf.push_back(f[v]);
    long long sum = std::accumulate(cf.begin(), cf.end(), 0ll);
    if (sum > 64)
      throw std::runtime_error("component budget sum exceeds palette limit (64)");
    int max_colors = opts.palette_override >= 0 ? opts.palette_override : (int)sum;

    // pieces of the component that still need enumeration
    std::vector<std::vector<int>> pieces;  // local indices into cg
    if (opts.use_shortcut) {
      auto quick = degree_feasibility_shortcut(cg, cf);
      if (quick.has_value() && *quick) continue;
      // peel and look at residual components: decided-true ones are skipped,
      // Gallai ones and undecided ones are enumerated (the Gallai ones to
      // produce a witness).
      std::vector<char> alive(cg.n(), 1);
      std::vector<int> deg(cg.n());
      for (int v = 0; v < cg.n(); ++v) deg[v] = cg.degree(v);
      bool changed = true;
      while (changed) {
        changed = false;
        for (int v = 0; v < cg.n(); ++v)
          if (alive[v] && cf[v] > deg[v]) {
            alive[v] = 0;
            changed = true;
            for (int w : cg.neighbors(v))
              if (alive[w]) --deg[w];
          }
      }
      std::vector<int> rest;
      for (int v = 0; v < cg.n(); ++v)
        if (alive[v]) rest.push_back(v);
      std::vector<int> rmap;
      Graph rg = cg.induced(rest, &rmap);
      int rn = 0;
      std::vector<int> rcomp = rg.components(&rn);
      for (int rc = 0; rc < rn; ++rc) {
        std::vector<int> rvs;
        for (int i = 0; i < rg.n(); ++i)
          if (rcomp[i] == rc) rvs.push_back(i);
        Graph rcg = rg.induced(rvs);
        bool exact = true;
        for (int i = 0; i < rcg.n(); ++i)
          if (cf[rmap[rvs[i]]] != rcg.degree(i)) { exact = false; break; }
        if (exact && !is_gallai_tree(rcg)) continue;  // decided true
        std::vector<int> piece;
        for (int i : rvs) piece.push_back(rmap[i]);
        pieces.push_back(piece);
      }
    } else {
      std::vector<int> all(cg.n());
      for (int i = 0; i < cg.n(); ++i) all[i] = i;
      pieces.push_back(all);
    }

    for (auto& piece : pieces) {
      std::vector<int> pmap;
      Graph pg = cg.induced(piece, &pmap);
      Budget pf;
      for (int i : piece) pf.push_back(cf[i]);
      auto w = enumerate_graph(pg, pf, max_colors, opts.parallel);
      if (w) {
        std::vector<int> global;
        for (int i : piece) global.push_back(cmap[i]);
        return lift_witness(g, f, global, *w);
      }
    }
  }
  return {};
}

}  // namespace flex
