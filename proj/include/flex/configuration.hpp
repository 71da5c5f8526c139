#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flex/choosability.hpp"
#include "flex/graph.hpp"
#include "flex/patterns.hpp"

namespace flex {

// A host-embedded configuration: the graph H as drawn, the reduced part R,
// stub counts toward the host, and the list-size parameter k. Boundary
// vertices (V(H) \ R) model already-colored neighbors and carry no budget.
struct Configuration {
  std::string name;
  Graph h;
  std::vector<char> in_reduced;
  std::vector<int> ext_degree;  // edges leaving the configuration into the host
  int k = 4;
  std::vector<int> declared_fix;  // may be empty

  std::vector<int> reduced() const;
  std::vector<int> boundary() const;
  int host_degree(int v) const { return h.degree(v) + ext_degree[v]; }
  int deg_in_reduced(int v) const;
  // k - deg_G(v) + deg_R(v) for v in R
  int budget(int v) const { return k - host_degree(v) + deg_in_reduced(v); }
  int ext_to_reduced(int v) const { return host_degree(v) - deg_in_reduced(v); }

  Graph reduced_graph(std::vector<int>* map = nullptr) const;
  Budget reduced_budgets() const;

  // Throws std::invalid_argument when an invariant fails: R nonempty,
  // nonnegative stubs, nonnegative budgets on R.
  void validate() const;
};

struct CheckResult {
  bool pass = false;
  std::optional<ListAssignment> witness;  // on reduced_graph order, failures only
};

// (FIX) at v: budget with v dropped to a single color. v must be in R.
CheckResult check_fix(const Configuration& cfg, int v, ForAllOptions opts = {});

struct ForbItem {
  std::vector<int> I;  // configuration vertex ids, sorted
  bool f_free = false;
  bool pass = false;  // meaningful when f_free
  std::optional<ListAssignment> witness;
};

struct ForbReport {
  int max_size = 0;
  std::vector<ForbItem> items;  // every I subseteq R with |I| <= max_size
  bool all_pass = true;         // over the F-free items
};

// (FORB) up to max_size in {k-3, k-2}: every F-free I gets budget f - 1_I.
// F-freeness is tested on the full h (the prospective common neighbor lies
// in the host).
ForbReport check_forb(const Configuration& cfg, const PatternFamily& fam,
                      int max_size, ForAllOptions opts = {});

// Loose set test: |I| = k-2, I subseteq R, I F-free (preconditions enforced).
bool check_loose(const Configuration& cfg, const std::vector<int>& I,
                 const PatternFamily& fam, ForAllOptions opts = {});

enum class Classification { Full, EnhancedWeak, Weak, None };
std::string to_string(Classification c);

struct ReducibilityReport {
  std::string name;
  std::vector<int> fix_pass;           // vertices of R passing (FIX)
  std::vector<int> enhanced_fix_pass;  // passing and with ext-to-R <= k-3
  std::map<int, ListAssignment> fix_witness;
  ForbReport forb;  // run to size k-2; the k-3 verdict is derived from it
  std::vector<std::vector<int>> loose_sets;
  bool qualifies_full = false;
  bool qualifies_enhanced_weak = false;
  bool qualifies_weak = false;
  Classification classification = Classification::None;
  bool declared_fix_ok = true;  // declared_fix subseteq fix_pass
};

ReducibilityReport classify(const Configuration& cfg, const PatternFamily& fam,
                            ForAllOptions opts = {});

}  // namespace flex
