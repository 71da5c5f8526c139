#include "flex/resolution.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace flex {

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::Full: return "full";
    case StepKind::EnhancedWeak: return "enhanced-weak";
    case StepKind::WeakLoose: return "weak-with-loose-neighborhoods";
    case StepKind::SingleDegKm2: return "single-vertex-deg-k-2";
  }
  return "?";
}

namespace {

// Configuration of an embedded step inside the residual graph: h is the
// induced subgraph, stubs are the residual edges leaving it.
Configuration step_configuration(const Graph& residual, const std::vector<int>& h_local,
                                 const std::vector<int>& reduced_local, int k) {
  Configuration cfg;
  std::vector<int> map;
  cfg.h = residual.induced(h_local, &map);
  cfg.k = k;
  cfg.in_reduced.assign(cfg.h.n(), 0);
  for (int i = 0; i < cfg.h.n(); ++i) {
    bool in_r = std::find(reduced_local.begin(), reduced_local.end(), h_local[i]) !=
                reduced_local.end();
    cfg.in_reduced[i] = in_r;
    cfg.ext_degree.push_back(residual.degree(h_local[i]) - cfg.h.degree(i));
  }
  return cfg;
}

int default_b(char cat) {
  int b = 1;
  for (auto& e : (cat == 'C' ? catalog_C() : catalog_D()))
    b = std::max(b, (int)e.cfg.reduced().size());
  return b;
}

int default_beta(const PatternFamily& fam, const Graph& g) {
  for (auto& p : fam.patterns)
    if (p.kind == Pattern::Kind::Book) return 10 * p.size;
  return g.n();  // no book bound available: only the trivial bound
}

bool terminal_ok(const Graph& g, const std::vector<int>& term,
                 const PatternFamily& fam, int k, bool need_full) {
  if (term.empty()) return true;
  std::vector<int> local(term.size());
  std::iota(local.begin(), local.end(), 0);
  Graph tg = g.induced(term);
  Configuration cfg;
  cfg.h = tg;
  cfg.k = k;
  cfg.in_reduced.assign(tg.n(), 1);
  cfg.ext_degree.assign(tg.n(), 0);
  auto rep = classify(cfg, fam);
  return need_full ? rep.qualifies_full : rep.qualifies_weak;
}

}  // namespace

BuildOutcome build_resolution(const Graph& g, const PatternFamily& fam, int k,
                              char cat, int b, int beta) {
  if (cat != 'C' && cat != 'D') throw std::invalid_argument("catalog must be C or D");
  if (!is_family_free(g, fam))
    throw std::invalid_argument("build_resolution: input graph is not family-free");
  if (b < 0) b = default_b(cat);
  if (beta < 0) beta = default_beta(fam, g);

  Resolution res;
  res.family = fam;
  res.k = k;
  res.b = b;
  res.beta = beta;

  std::vector<int> live(g.n());
  std::iota(live.begin(), live.end(), 0);
  const auto& entries = (cat == 'C') ? catalog_C() : catalog_D();
  bool use_catalog = (k == 4);

  for (;;) {
    std::vector<int> map;
    Graph residual = g.induced(live, &map);
    if ((int)live.size() <= b &&
        terminal_ok(g, live, fam, k, /*need_full=*/cat == 'C')) {
      res.terminal = live;
      return {res, std::nullopt};
    }
    if (live.empty()) {
      res.terminal = {};
      return {res, std::nullopt};
    }

    bool stepped = false;
    if (use_catalog) {
      for (auto& entry : entries) {
        auto embs = find_embeddings(residual, entry);
        for (auto& emb : embs) {
          std::vector<int> h_local = emb.map;
          std::vector<int> red_local;
          for (int pv : entry.cfg.reduced()) red_local.push_back(emb.map[pv]);
          Configuration cfg = step_configuration(residual, h_local, red_local, k);
          cfg.name = entry.name;
          ResolutionStep step;
          step.entry = entry.name;
          for (int v : h_local) step.h_vertices.push_back(map[v]);
          for (int v : red_local) step.reduced.push_back(map[v]);

          if (h_local.size() == 1 && residual.degree(h_local[0]) == k - 2 &&
              cat == 'D') {
            step.kind = StepKind::SingleDegKm2;
          } else {
            auto rep = classify(cfg, fam);
            if (rep.qualifies_full && cat == 'C') {
              step.kind = StepKind::Full;
              step.fix.clear();
            } else if (rep.qualifies_enhanced_weak) {
              step.kind = StepKind::EnhancedWeak;
              step.fix = {map[h_local[rep.enhanced_fix_pass.front()]]};
            } else if (rep.qualifies_weak) {
              step.kind = StepKind::WeakLoose;
              step.fix = {map[h_local[rep.fix_pass.front()]]};
            } else {
              continue;  // does not qualify under this family
            }
          }
          std::sort(step.reduced.begin(), step.reduced.end());
          std::sort(step.h_vertices.begin(), step.h_vertices.end());
          res.steps.push_back(step);
          std::vector<int> next;
          for (int v : live)
            if (std::find(step.reduced.begin(), step.reduced.end(), v) ==
                step.reduced.end())
              next.push_back(v);
          live = next;
          stepped = true;
          break;
        }
        if (stepped) break;
      }
    }
    if (!stepped) {
      // single-vertex fallbacks: degree <= k-3 first, then exactly k-2
      int pick = -1;
      StepKind kind = StepKind::EnhancedWeak;
      for (int i = 0; i < residual.n() && pick < 0; ++i)
        if (residual.degree(i) <= k - 3) pick = i;
      if (pick < 0)
        for (int i = 0; i < residual.n() && pick < 0; ++i)
          if (residual.degree(i) == k - 2) {
            pick = i;
            kind = StepKind::SingleDegKm2;
          }
      if (pick < 0) {
        StuckReport stuck{live, residual};
        return {std::nullopt, stuck};
      }
      ResolutionStep step;
      step.kind = kind;
      step.h_vertices = {map[pick]};
      step.reduced = {map[pick]};
      if (kind == StepKind::EnhancedWeak) step.fix = {map[pick]};
      res.steps.push_back(step);
      std::vector<int> next;
      for (int v : live)
        if (v != map[pick]) next.push_back(v);
      live = next;
    }
  }
}

namespace {

struct StepContext {
  std::vector<int> live_before;  // residual vertex set before the step
  Configuration cfg;             // step configuration inside that residual
  std::vector<int> h_local;      // local ids of h_vertices in the residual
};

// Is the neighborhood set I (original ids) loose inside step j's
// configuration: contained in R_j, F-free there, and the budget drop keeps
// the reduced part colorable.
bool loose_in_step(const Resolution& res, const StepContext& ctx,
                   const ResolutionStep& step, const std::vector<int>& I) {
  if ((int)I.size() != res.k - 2) return false;
  std::vector<int> local;
  for (int v : I) {
    auto it = std::find(step.h_vertices.begin(), step.h_vertices.end(), v);
    if (it == std::end(step.h_vertices)) return false;
    int hi = (int)(it - step.h_vertices.begin());
    if (!ctx.cfg.in_reduced[hi]) return false;
    local.push_back(hi);
  }
  if (!is_f_free_set(ctx.cfg.h, local, res.family)) return false;
  return check_loose(ctx.cfg, local, res.family);
}

}  // namespace

ResolutionReport verify_resolution(const Graph& g, const Resolution& res) {
  ResolutionReport rep;
  rep.valid_plain = true;
  rep.valid_enhanced = true;
  auto fail = [&](bool plain, bool enhanced, const std::string& msg) {
    if (plain) rep.valid_plain = false;
    if (enhanced) rep.valid_enhanced = false;
    rep.failures.push_back(msg);
  };

  // rebuild residuals and per-step configurations
  std::vector<char> removed(g.n(), 0);
  std::vector<StepContext> ctxs;
  std::vector<std::vector<int>> neighborhood_at_removal(res.steps.size());
  for (size_t i = 0; i < res.steps.size(); ++i) {
    const auto& step = res.steps[i];
    std::vector<int> live;
    for (int v = 0; v < g.n(); ++v)
      if (!removed[v]) live.push_back(v);
    std::vector<int> map;
    Graph residual = g.induced(live, &map);
    std::vector<int> inv(g.n(), -1);
    for (int j = 0; j < (int)map.size(); ++j) inv[map[j]] = j;

    StepContext ctx;
    ctx.live_before = live;
    for (int v : step.h_vertices) {
      if (v < 0 || v >= g.n() || removed[v]) {
        fail(true, true, "step " + std::to_string(i) + ": vertex not in residual");
        return rep;
      }
      ctx.h_local.push_back(inv[v]);
    }
    std::vector<int> red_local;
    for (int v : step.reduced) red_local.push_back(inv[v]);
    ctx.cfg = step_configuration(residual, ctx.h_local, red_local, res.k);
    ctx.cfg.name = step.entry;
    ctxs.push_back(ctx);

    if ((int)step.reduced.size() > res.b)
      fail(true, true, "step " + std::to_string(i) + ": reduced part exceeds b");
    for (int v : step.reduced) {
      if (std::find(step.h_vertices.begin(), step.h_vertices.end(), v) ==
          step.h_vertices.end())
        fail(true, true, "step " + std::to_string(i) + ": R not inside H");
    }

    if (step.kind == StepKind::SingleDegKm2) {
      if (step.h_vertices.size() != 1 || step.reduced.size() != 1)
        fail(false, true, "step " + std::to_string(i) + ": single-vertex step malformed");
      else {
        int lv = inv[step.h_vertices[0]];
        neighborhood_at_removal[i].clear();
        for (int u : residual.neighbors(lv))
          neighborhood_at_removal[i].push_back(map[u]);
        if (residual.degree(lv) != res.k - 2)
          fail(false, true, "step " + std::to_string(i) + ": degree is not k-2");
      }
      rep.valid_plain = false;  // plain resolutions have no such steps
    } else {
      auto crep = classify(ctx.cfg, res.family);
      bool full = crep.qualifies_full;
      bool enh = crep.qualifies_enhanced_weak;
      bool weak = crep.qualifies_weak;
      if (step.kind == StepKind::Full) {
        // a plain-resolution step: carries no fix set, so the enhanced
        // flavor's side conditions have nothing to hold on to
        rep.valid_enhanced = false;
        if (!full)
          fail(true, true, "step " + std::to_string(i) + ": not fully reducible");
      }
      auto fix_within = [&](const std::vector<int>& pass) {
        for (int v : step.fix) {
          auto it = std::find(step.h_vertices.begin(), step.h_vertices.end(), v);
          int hi = it == step.h_vertices.end() ? -1
                                               : (int)(it - step.h_vertices.begin());
          if (hi < 0 || std::find(pass.begin(), pass.end(), hi) == pass.end())
            return false;
        }
        return !step.fix.empty();
      };
      if (step.kind == StepKind::EnhancedWeak) {
        rep.valid_plain = false;
        if (!enh)
          fail(false, true,
               "step " + std::to_string(i) + ": not enhanced weakly reducible");
        if (!fix_within(crep.enhanced_fix_pass))
          fail(false, true, "step " + std::to_string(i) + ": fix set not eligible");
      }
      if (step.kind == StepKind::WeakLoose) {
        rep.valid_plain = false;
        if (!weak)
          fail(false, true, "step " + std::to_string(i) + ": not weakly reducible");
        if (!fix_within(crep.fix_pass))
          fail(false, true, "step " + std::to_string(i) + ": fix set not eligible");
      }
    }
    for (int v : step.reduced) removed[v] = 1;
  }

  // terminal residual must match
  {
    std::vector<int> live;
    for (int v = 0; v < g.n(); ++v)
      if (!removed[v]) live.push_back(v);
    if (live != res.terminal)
      fail(true, true, "terminal set does not match the residual");
    if ((int)live.size() > res.b) fail(true, true, "terminal exceeds b");
    if (!terminal_ok(g, live, res.family, res.k, true)) {
      rep.valid_plain = false;
      if (!terminal_ok(g, live, res.family, res.k, false))
        fail(false, true, "terminal residual is not weakly reducible");
    }
  }

  // tightness accounting: for every later step j (terminal last), count the
  // single-vertex steps v_i whose removal-time neighborhood sits inside
  // V(H_j) and is not loose there
  size_t m = res.steps.size();
  rep.tight_count.assign(m + 1, 0);
  for (size_t i = 0; i < m; ++i) {
    if (res.steps[i].kind != StepKind::SingleDegKm2) continue;
    const auto& nbh = neighborhood_at_removal[i];
    for (size_t j = i + 1; j <= m; ++j) {
      const std::vector<int>& hj =
          (j < m) ? res.steps[j].h_vertices : res.terminal;
      if (hj.empty()) continue;
      bool inside = true;
      for (int v : nbh)
        if (std::find(hj.begin(), hj.end(), v) == hj.end()) inside = false;
      if (!inside) continue;
      bool loose;
      if (j < m) {
        loose = loose_in_step(res, ctxs[j], res.steps[j], nbh);
      } else {
        // terminal graph: empty boundary, every vertex reduced
        Configuration tc;
        tc.h = g.induced(res.terminal);
        tc.k = res.k;
        tc.in_reduced.assign(tc.h.n(), 1);
        tc.ext_degree.assign(tc.h.n(), 0);
        std::vector<int> local;
        bool ok = true;
        for (int v : nbh) {
          auto it = std::find(res.terminal.begin(), res.terminal.end(), v);
          if (it == res.terminal.end()) ok = false;
          else local.push_back((int)(it - res.terminal.begin()));
        }
        loose = ok && (int)local.size() == res.k - 2 &&
                is_f_free_set(tc.h, local, res.family) &&
                check_loose(tc, local, res.family);
      }
      if (!loose) ++rep.tight_count[j];
    }
  }
  for (size_t j = 0; j <= m; ++j)
    if (rep.tight_count[j] > res.beta)
      fail(false, true, "tightness bound exceeded at step " + std::to_string(j));

  // weak steps: every fix vertex needs small or loose forward neighborhoods
  for (size_t i = 0; i < m; ++i) {
    if (res.steps[i].kind != StepKind::WeakLoose) continue;
    for (int v : res.steps[i].fix) {
      std::vector<int> nb;
      std::vector<char> in_live(g.n(), 0);
      for (int u : ctxs[i].live_before) in_live[u] = 1;
      for (int u : g.neighbors(v))
        if (in_live[u]) nb.push_back(u);
      for (size_t j = i + 1; j <= m; ++j) {
        const std::vector<int>& hj =
            (j < m) ? res.steps[j].h_vertices : res.terminal;
        std::vector<int> I;
        for (int u : nb)
          if (std::find(hj.begin(), hj.end(), u) != hj.end()) I.push_back(u);
        if ((int)I.size() <= res.k - 3) continue;
        bool loose;
        if (j < m) loose = loose_in_step(res, ctxs[j], res.steps[j], I);
        else {
          Configuration tc;
          tc.h = g.induced(res.terminal);
          tc.k = res.k;
          tc.in_reduced.assign(tc.h.n(), 1);
          tc.ext_degree.assign(tc.h.n(), 0);
          std::vector<int> local;
          bool ok = true;
          for (int u : I) {
            auto it = std::find(res.terminal.begin(), res.terminal.end(), u);
            if (it == res.terminal.end()) ok = false;
            else local.push_back((int)(it - res.terminal.begin()));
          }
          loose = ok && (int)local.size() == res.k - 2 &&
                  is_f_free_set(tc.h, local, res.family) &&
                  check_loose(tc, local, res.family);
        }
        if (!loose)
          fail(false, true,
               "step " + std::to_string(i) +
                   ": fix vertex has a large non-loose forward neighborhood");
      }
    }
  }

  return rep;
}

Resolution refactor_tight(const Graph& g, const Resolution& res) {
  // find, per single-vertex step, the first later step it is tight for
  size_t m = res.steps.size();
  std::vector<int> attach(m, -1);

  // replicate the residual walk of verify_resolution
  std::vector<char> removed(g.n(), 0);
  std::vector<StepContext> ctxs;
  std::vector<std::vector<int>> nbh(m);
  for (size_t i = 0; i < m; ++i) {
    const auto& step = res.steps[i];
    std::vector<int> live;
    for (int v = 0; v < g.n(); ++v)
      if (!removed[v]) live.push_back(v);
    std::vector<int> map;
    Graph residual = g.induced(live, &map);
    std::vector<int> inv(g.n(), -1);
    for (int j = 0; j < (int)map.size(); ++j) inv[map[j]] = j;
    StepContext ctx;
    ctx.live_before = live;
    for (int v : step.h_vertices) ctx.h_local.push_back(inv[v]);
    std::vector<int> red_local;
    for (int v : step.reduced) red_local.push_back(inv[v]);
    ctx.cfg = step_configuration(residual, ctx.h_local, red_local, res.k);
    ctxs.push_back(ctx);
    if (step.kind == StepKind::SingleDegKm2)
      for (int u : residual.neighbors(inv[step.h_vertices[0]])) nbh[i].push_back(map[u]);
    for (int v : step.reduced) removed[v] = 1;
  }

  for (size_t i = 0; i < m; ++i) {
    if (res.steps[i].kind != StepKind::SingleDegKm2) continue;
    for (size_t j = i + 1; j <= m && attach[i] < 0; ++j) {
      const std::vector<int>& hj = (j < m) ? res.steps[j].h_vertices : res.terminal;
      if (hj.empty()) continue;
      bool inside = true;
      for (int v : nbh[i])
        if (std::find(hj.begin(), hj.end(), v) == hj.end()) inside = false;
      if (!inside) continue;
      bool loose;
      if (j < m) {
        loose = loose_in_step(res, ctxs[j], res.steps[j], nbh[i]);
      } else {
        Configuration tc;
        tc.h = g.induced(res.terminal);
        tc.k = res.k;
        tc.in_reduced.assign(tc.h.n(), 1);
        tc.ext_degree.assign(tc.h.n(), 0);
        std::vector<int> local;
        bool ok = true;
        for (int v : nbh[i]) {
          auto it = std::find(res.terminal.begin(), res.terminal.end(), v);
          if (it == res.terminal.end()) ok = false;
          else local.push_back((int)(it - res.terminal.begin()));
        }
        loose = ok && is_f_free_set(tc.h, local, res.family) &&
                check_loose(tc, local, res.family);
      }
      if (!loose) attach[i] = (int)j;
    }
  }

  Resolution out;
  out.family = res.family;
  out.k = res.k;
  out.b = res.b + res.beta;
  out.beta = 0;
  out.terminal = res.terminal;

  std::vector<std::vector<int>> extra(m + 1);
  for (size_t i = 0; i < m; ++i)
    if (attach[i] >= 0) extra[attach[i]].push_back(res.steps[i].h_vertices[0]);

  for (size_t j = 0; j < m; ++j) {
    if (res.steps[j].kind == StepKind::SingleDegKm2 && attach[j] >= 0)
      continue;  // moved into a later step
    ResolutionStep step = res.steps[j];
    for (int v : extra[j]) {
      step.h_vertices.push_back(v);
      step.reduced.push_back(v);
    }
    std::sort(step.h_vertices.begin(), step.h_vertices.end());
    std::sort(step.reduced.begin(), step.reduced.end());
    if (!extra[j].empty() && step.kind == StepKind::SingleDegKm2)
      step.kind = StepKind::EnhancedWeak;  // grew past a single vertex
    out.steps.push_back(step);
  }
  for (int v : extra[m]) out.terminal.push_back(v);
  std::sort(out.terminal.begin(), out.terminal.end());

  // attached vertices must fit in b+beta
  for (auto& step : out.steps)
    if ((int)step.reduced.size() > out.b)
      throw std::logic_error("refactor_tight: step exceeds b+beta");

  // kinds may change once tight vertices join a step: re-derive each
  // multi-vertex step's classification in its new residual, keeping the
  // original fix set
  std::vector<char> gone(g.n(), 0);
  for (auto& step : out.steps) {
    if (step.h_vertices.size() > 1) {
      std::vector<int> live;
      for (int v = 0; v < g.n(); ++v)
        if (!gone[v]) live.push_back(v);
      std::vector<int> map2;
      Graph residual = g.induced(live, &map2);
      std::vector<int> inv(g.n(), -1);
      for (int t = 0; t < (int)map2.size(); ++t) inv[map2[t]] = t;
      if (step.kind != StepKind::SingleDegKm2) {
        std::vector<int> h_local, red_local;
        for (int v : step.h_vertices) h_local.push_back(inv[v]);
        for (int v : step.reduced) red_local.push_back(inv[v]);
        Configuration cfg = step_configuration(residual, h_local, red_local, out.k);
        auto crep = classify(cfg, out.family);
        auto fix_local = [&](const std::vector<int>& pass) {
          for (int v : step.fix) {
            auto it = std::find(step.h_vertices.begin(), step.h_vertices.end(), v);
            int hi = (int)(it - step.h_vertices.begin());
            if (std::find(pass.begin(), pass.end(), hi) == pass.end()) return false;
          }
          return !step.fix.empty();
        };
        if (step.kind == StepKind::Full && crep.qualifies_full) {
          // unchanged
        } else if (crep.qualifies_enhanced_weak && fix_local(crep.enhanced_fix_pass)) {
          step.kind = StepKind::EnhancedWeak;
        } else if (crep.qualifies_weak && fix_local(crep.fix_pass)) {
          step.kind = StepKind::WeakLoose;
        }
      }
    }
    for (int v : step.reduced) gone[v] = 1;
  }
  return out;
}

FlexResult max_satisfied(const Graph& g, const RequestInstance& inst) {
  int n = g.n();
  if ((int)inst.lists.lists.size() != n)
    throw std::invalid_argument("max_satisfied: list size mismatch");
  for (int v = 0; v < n; ++v)
    if (!inst.lists.lists[v])
      throw std::invalid_argument("max_satisfied: empty list at vertex " +
                                  std::to_string(v));

  bool weighted = inst.weighted();
  FlexResult best;
  best.satisfied = -1;
  best.weight = -1.0;

  // admissible bound: everything still uncolored counts as satisfiable
  std::vector<double> wmax(n, 0.0);
  if (weighted)
    for (auto& [vc, w] : inst.weights) wmax[vc.first] = std::max(wmax[vc.first], w);
  std::vector<long long> req_suffix(n + 1, 0);
  std::vector<double> w_suffix(n + 1, 0.0);
  for (int v = n - 1; v >= 0; --v) {
    req_suffix[v] = req_suffix[v + 1] + (inst.requests.count(v) ? 1 : 0);
    w_suffix[v] = w_suffix[v + 1] + (weighted ? wmax[v] : 0.0);
  }

  Coloring col(n, -1);
  std::function<void(int, long long, double)> rec = [&](int v, long long sat, double w) {
    if (v == n) {
      if (weighted ? (w > best.weight) : (sat > best.satisfied)) {
        best.satisfied = sat;
        best.weight = w;
        best.coloring = col;
        best.colorable = true;
      }
      return;
    }
    if (weighted) {
      if (w + w_suffix[v] <= best.weight) return;
    } else {
      if (sat + req_suffix[v] <= best.satisfied) return;
    }
    auto req = inst.requests.find(v);
    for (std::uint64_t mcol = inst.lists.lists[v]; mcol; mcol &= mcol - 1) {
      int c = std::countr_zero(mcol);
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && col[u] == c) { ok = false; break; }
      if (!ok) continue;
      col[v] = c;
      long long s2 = sat + (!weighted && req != inst.requests.end() && req->second == c);
      double w2 = w;
      if (weighted) {
        auto it = inst.weights.find({v, c});
        if (it != inst.weights.end()) w2 += it->second;
      }
      rec(v + 1, s2, w2);
      col[v] = -1;
    }
  };
  rec(0, 0, 0.0);
  if (best.satisfied < 0 && best.weight < 0) best.colorable = false;
  return best;
}

std::vector<Coloring> enumerate_proper_colorings(const Graph& g,
                                                 const ListAssignment& L,
                                                 std::size_t limit) {
  std::vector<Coloring> out;
  Coloring col(g.n(), -1);
  std::function<void(int)> rec = [&](int v) {
    if (v == g.n()) {
      if (out.size() >= limit)
        throw std::length_error("proper coloring enumeration exceeds limit");
      out.push_back(col);
      return;
    }
    for (std::uint64_t m = L.lists[v]; m; m &= m - 1) {
      int c = std::countr_zero(m);
      bool ok = true;
      for (int u : g.neighbors(v))
        if (u < v && col[u] == c) { ok = false; break; }
      if (!ok) continue;
      col[v] = c;
      rec(v + 1);
      col[v] = -1;
    }
  };
  rec(0);
  return out;
}

namespace {

struct Constraint {
  std::vector<int> cols;  // coloring indices entering the sum
  mpq_class rhs;
  std::string what;
};

// all constraints the certificate must satisfy
std::vector<Constraint> distribution_constraints(const Graph& g,
                                                 const ListAssignment& L,
                                                 const std::vector<int>& fix,
                                                 const PatternFamily& fam, int k,
                                                 const mpq_class& p,
                                                 const mpq_class& eps_prime,
                                                 const std::vector<Coloring>& cols) {
  std::vector<Constraint> cs;
  auto colors_of = [&](int v) { return L.list_colors(v); };

  for (int v : fix) {
    for (int c : colors_of(v)) {
      Constraint con;
      con.rhs = eps_prime;
      con.what = "fix v" + std::to_string(v) + " c" + std::to_string(c);
      for (int i = 0; i < (int)cols.size(); ++i)
        if (cols[i][v] == c) con.cols.push_back(i);
      cs.push_back(std::move(con));
    }
  }

  int palette = L.palette;
  // F-free sets of size <= k-3, nonempty, and loose ones of size k-2
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int from) {
    if (!cur.empty() && (int)cur.size() <= k - 2) sets.push_back(cur);
    if ((int)cur.size() == k - 2) return;
    for (int v = from; v < g.n(); ++v) {
      cur.push_back(v);
      gen(v + 1);
      cur.pop_back();
    }
  };
  gen(0);

  for (auto& I : sets) {
    if (!is_f_free_set(g, I, fam)) continue;
    if ((int)I.size() == k - 2) {
      // loose: budget k everywhere (empty boundary), dropped on I
      Budget f(g.n(), k);
      for (int v : I) f[v] -= 1;
      if (!colorable_for_all_assignments(g, f).always) continue;
    }
    mpq_class bound = 1;
    for (size_t t = 0; t < I.size(); ++t) bound *= p;
    for (int c = 0; c < palette; ++c) {
      Constraint con;
      con.rhs = bound;
      con.what = "avoid c" + std::to_string(c) + " on I";
      for (int i = 0; i < (int)cols.size(); ++i) {
        bool avoids = true;
        for (int v : I)
          if (cols[i][v] == c) avoids = false;
        if (avoids) con.cols.push_back(i);
      }
      cs.push_back(std::move(con));
    }
  }
  return cs;
}

// Phase-I simplex over exact rationals: find x >= 0 with A x = b (b >= 0).
// Returns the basic feasible x or nullopt.
std::optional<std::vector<mpq_class>> lp_feasible(
    const std::vector<std::vector<mpq_class>>& A, const std::vector<mpq_class>& b) {
  int m = (int)A.size();
  int n = m ? (int)A[0].size() : 0;
  int total = n + m;  // plus artificials
  std::vector<std::vector<mpq_class>> T(m + 1, std::vector<mpq_class>(total + 1, 0));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][total] = b[i];
    basis[i] = n + i;
  }
  // objective: minimize sum of artificials -> row m = sum of rows
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= total; ++j) T[m][j] += T[i][j];

  for (;;) {
    int piv_col = -1;  // Bland: first improving column
    for (int j = 0; j < n && piv_col < 0; ++j)
      if (T[m][j] > 0) piv_col = j;
    if (piv_col < 0) break;
    int piv_row = -1;
    mpq_class best_ratio;
    for (int i = 0; i < m; ++i) {
      if (T[i][piv_col] <= 0) continue;
      mpq_class ratio = T[i][total] / T[i][piv_col];
      if (piv_row < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[piv_row])) {
        piv_row = i;
        best_ratio = ratio;
      }
    }
    if (piv_row < 0) break;  // unbounded cannot happen in phase I
    mpq_class pv = T[piv_row][piv_col];
    for (int j = 0; j <= total; ++j) T[piv_row][j] /= pv;
    for (int i = 0; i <= m; ++i) {
      if (i == piv_row) continue;
      mpq_class f = T[i][piv_col];
      if (f == 0) continue;
      for (int j = 0; j <= total; ++j) T[i][j] -= f * T[piv_row][j];
    }
    basis[piv_row] = piv_col;
  }
  if (T[m][total] != 0) return std::nullopt;  // artificials remain positive
  std::vector<mpq_class> x(n, 0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T[i][total];
  return x;
}

}  // namespace

std::optional<DistributionCertificate> distribution_feasible(
    const Graph& g, const ListAssignment& L, const std::vector<int>& fix,
    const PatternFamily& fam, int k, int b, int beta) {
  auto cols = enumerate_proper_colorings(g, L, 5000);
  if (cols.empty()) return std::nullopt;

  mpq_class p(1);
  for (int i = 0; i < b + beta; ++i) p /= k;
  mpq_class eps_prime(1);
  for (int i = 0; i < k - 1; ++i) eps_prime *= p;

  auto cs = distribution_constraints(g, L, fix, fam, k, p, eps_prime, cols);

  DistributionCertificate cert;
  cert.p = p;
  cert.eps_prime = eps_prime;

  // uniform attempt
  {
    mpq_class u(1, (unsigned long)cols.size());
    bool ok = true;
    for (auto& c : cs) {
      mpq_class sum = mpq_class((unsigned long)c.cols.size()) * u;
      if (sum < c.rhs) { ok = false; break; }
    }
    if (ok) {
      cert.support = cols;
      cert.prob.assign(cols.size(), u);
      return cert;
    }
  }

  // exact LP feasibility: constraint rows get surplus variables
  int n = (int)cols.size();
  int m = (int)cs.size() + 1;
  std::vector<std::vector<mpq_class>> A(m, std::vector<mpq_class>(n + (int)cs.size(), 0));
  std::vector<mpq_class> rhs(m);
  for (int i = 0; i < (int)cs.size(); ++i) {
    for (int j : cs[i].cols) A[i][j] = 1;
    A[i][n + i] = -1;  // surplus
    rhs[i] = cs[i].rhs;
  }
  for (int j = 0; j < n; ++j) A[m - 1][j] = 1;
  rhs[m - 1] = 1;

  auto x = lp_feasible(A, rhs);
  if (!x) return std::nullopt;
  for (int i = 0; i < n; ++i) {
    if ((*x)[i] == 0) continue;
    cert.support.push_back(cols[i]);
    cert.prob.push_back((*x)[i]);
  }
  return cert;
}

bool validate_certificate(const Graph& g, const ListAssignment& L,
                          const std::vector<int>& fix, const PatternFamily& fam,
                          int k, int b, int beta, const DistributionCertificate& cert) {
  mpq_class p(1);
  for (int i = 0; i < b + beta; ++i) p /= k;
  mpq_class eps_prime(1);
  for (int i = 0; i < k - 1; ++i) eps_prime *= p;
  if (cert.p != p || cert.eps_prime != eps_prime) return false;

  mpq_class total(0);
  for (auto& q : cert.prob) {
    if (q < 0) return false;
    total += q;
  }
  if (total != 1) return false;
  if (cert.support.size() != cert.prob.size()) return false;
  for (auto& col : cert.support) {
    if ((int)col.size() != g.n()) return false;
    for (int v = 0; v < g.n(); ++v) {
      if (!(L.lists[v] >> col[v] & 1)) return false;
      for (int u : g.neighbors(v))
        if (col[u] == col[v]) return false;
    }
  }

  auto cs = distribution_constraints(g, L, fix, fam, k, p, eps_prime, cert.support);
  for (auto& c : cs) {
    mpq_class sum(0);
    for (int i : c.cols) sum += cert.prob[i];
    if (sum < c.rhs) return false;
  }
  return true;
}

}  // namespace flex
