#include "flex/configuration.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace flex {

std::vector<int> Configuration::reduced() const {
  std::vector<int> out;
  for (int v = 0; v < h.n(); ++v)
    if (in_reduced[v]) out.push_back(v);
  return out;
}

std::vector<int> Configuration::boundary() const {
  std::vector<int> out;
  for (int v = 0; v < h.n(); ++v)
    if (!in_reduced[v]) out.push_back(v);
  return out;
}

int Configuration::deg_in_reduced(int v) const {
  int d = 0;
  for (int w : h.neighbors(v))
    if (in_reduced[w]) ++d;
  return d;
}

Graph Configuration::reduced_graph(std::vector<int>* map) const {
  return h.induced(reduced(), map);
}

Budget Configuration::reduced_budgets() const {
  Budget f;
  for (int v : reduced()) f.push_back(budget(v));
  return f;
}

void Configuration::validate() const {
  if ((int)in_reduced.size() != h.n() || (int)ext_degree.size() != h.n())
    throw std::invalid_argument("configuration: field size mismatch");
  if (reduced().empty())
    throw std::invalid_argument("configuration: empty reduced part");
  for (int v = 0; v < h.n(); ++v) {
    if (ext_degree[v] < 0)
      throw std::invalid_argument("configuration: negative external degree");
    if (in_reduced[v] && budget(v) < 0)
      throw std::invalid_argument("configuration: negative budget at vertex " +
                                  std::to_string(v));
  }
  for (int v : declared_fix)
    if (v < 0 || v >= h.n() || !in_reduced[v])
      throw std::invalid_argument("configuration: declared fix outside R");
}

namespace {

int reduced_index(const Configuration& cfg, int v) {
  int idx = 0;
  for (int u = 0; u < cfg.h.n(); ++u) {
    if (u == v) return cfg.in_reduced[u] ? idx : -1;
    if (cfg.in_reduced[u]) ++idx;
  }
  return -1;
}

}  // namespace

CheckResult check_fix(const Configuration& cfg, int v, ForAllOptions opts) {
  int ri = reduced_index(cfg, v);
  if (ri < 0) throw std::invalid_argument("check_fix: vertex not in reduced part");
  Graph r = cfg.reduced_graph();
  Budget f = cfg.reduced_budgets();
  f[ri] = 1;  // precolored: list shrunk to a single color
  auto verdict = colorable_for_all_assignments(r, f, opts);
  CheckResult out;
  out.pass = verdict.always;
  out.witness = verdict.witness;
  return out;
}

ForbReport check_forb(const Configuration& cfg, const PatternFamily& fam,
                      int max_size, ForAllOptions opts) {
  std::vector<int> R = cfg.reduced();
  Graph r = cfg.reduced_graph();
  Budget base = cfg.reduced_budgets();

  ForbReport rep;
  rep.max_size = max_size;

  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  std::function<void(size_t)> gen = [&](size_t from) {
    subsets.push_back(cur);
    if ((int)cur.size() == max_size) return;
    for (size_t i = from; i < R.size(); ++i) {
      cur.push_back(R[i]);
      gen(i + 1);
      cur.pop_back();
    }
  };
  gen(0);

  for (auto& I : subsets) {
    ForbItem item;
    item.I = I;
    item.f_free = is_f_free_set(cfg.h, I, fam);
    if (item.f_free) {
      Budget f = base;
      for (int v : I) f[reduced_index(cfg, v)] -= 1;
      auto verdict = colorable_for_all_assignments(r, f, opts);
      item.pass = verdict.always;
      item.witness = verdict.witness;
      if (!item.pass) rep.all_pass = false;
    }
    rep.items.push_back(std::move(item));
  }
  return rep;
}

bool check_loose(const Configuration& cfg, const std::vector<int>& I,
                 const PatternFamily& fam, ForAllOptions opts) {
  if ((int)I.size() != cfg.k - 2)
    throw std::invalid_argument("check_loose: |I| must be k-2");
  for (int v : I)
    if (reduced_index(cfg, v) < 0)
      throw std::invalid_argument("check_loose: I not inside R");
  if (!is_f_free_set(cfg.h, I, fam))
    throw std::invalid_argument("check_loose: I is not F-free");
  Graph r = cfg.reduced_graph();
  Budget f = cfg.reduced_budgets();
  for (int v : I) f[reduced_index(cfg, v)] -= 1;
  return colorable_for_all_assignments(r, f, opts).always;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Full: return "full";
    case Classification::EnhancedWeak: return "enhanced-weak";
    case Classification::Weak: return "weak";
    case Classification::None: return "none";
  }
  return "?";
}

ReducibilityReport classify(const Configuration& cfg, const PatternFamily& fam,
                            ForAllOptions opts) {
  cfg.validate();
  ReducibilityReport rep;
  rep.name = cfg.name;

  std::vector<int> R = cfg.reduced();
  for (int v : R) {
    auto res = check_fix(cfg, v, opts);
    if (res.pass) {
      rep.fix_pass.push_back(v);
      if (cfg.ext_to_reduced(v) <= cfg.k - 3) rep.enhanced_fix_pass.push_back(v);
    } else if (res.witness) {
      rep.fix_witness[v] = *res.witness;
    }
  }

  rep.forb = check_forb(cfg, fam, cfg.k - 2, opts);
  bool forb_small_ok = true;  // obligations up to k-3 only
  for (auto& item : rep.forb.items) {
    if (!item.f_free) continue;
    if ((int)item.I.size() <= cfg.k - 3 && !item.pass) forb_small_ok = false;
    if ((int)item.I.size() == cfg.k - 2 && item.pass)
      rep.loose_sets.push_back(item.I);
  }

  rep.qualifies_full = rep.forb.all_pass && (int)rep.fix_pass.size() == (int)R.size();
  rep.qualifies_weak = rep.forb.all_pass && !rep.fix_pass.empty();
  rep.qualifies_enhanced_weak = forb_small_ok && !rep.enhanced_fix_pass.empty();

  if (rep.qualifies_full)
    rep.classification = Classification::Full;
  else if (rep.qualifies_enhanced_weak)
    rep.classification = Classification::EnhancedWeak;
  else if (rep.qualifies_weak)
    rep.classification = Classification::Weak;
  else
    rep.classification = Classification::None;

  for (int v : cfg.declared_fix)
    if (std::find(rep.fix_pass.begin(), rep.fix_pass.end(), v) == rep.fix_pass.end())
      rep.declared_fix_ok = false;
  return rep;
}

}  // namespace flex
