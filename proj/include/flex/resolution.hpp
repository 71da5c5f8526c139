#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flex/catalog.hpp"
#include "flex/choosability.hpp"
#include "flex/configuration.hpp"
#include "flex/graph.hpp"
#include "flex/patterns.hpp"

namespace flex {

enum class StepKind { Full, EnhancedWeak, WeakLoose, SingleDegKm2 };
std::string to_string(StepKind k);

struct ResolutionStep {
  std::vector<int> h_vertices;  // V(H_i), ids in the original graph
  std::vector<int> reduced;     // R_i subseteq h_vertices
  StepKind kind;
  std::vector<int> fix;  // chosen Fix set, subseteq reduced
  std::string entry;     // catalog entry that produced the step, if any
};

struct Resolution {
  PatternFamily family;
  int k = 4;
  int b = 0;
  int beta = 0;
  std::vector<ResolutionStep> steps;
  std::vector<int> terminal;  // V(G_M) after the last step
};

struct StuckReport {
  std::vector<int> vertices;  // residual on which no step applies
  Graph residual;
};

struct BuildOutcome {
  std::optional<Resolution> resolution;
  std::optional<StuckReport> stuck;
};

// Greedy decomposition: catalog entries by index, then single vertices of
// degree <= k-3, then single vertices of degree exactly k-2 (catalog 'D'
// only; in a plain 'C' resolution those are covered by the catalog itself).
// A residual on which nothing applies is a counterexample to the
// unavoidability statements and is returned loudly.
BuildOutcome build_resolution(const Graph& g, const PatternFamily& fam, int k,
                              char cat, int b = -1, int beta = -1);

struct ResolutionReport {
  bool valid_plain = false;     // every step full, terminal full
  bool valid_enhanced = false;  // enhanced/weak-with-loose/single steps,
                                // (TIGHT) within beta, terminal weak
  std::vector<std::string> failures;
  std::vector<int> tight_count;  // per step j (and terminal last):
                                 // earlier single-vertex steps tight for it
};

ResolutionReport verify_resolution(const Graph& g, const Resolution& res);

// Attaches every tight single-vertex step to the first later step it is
// tight for, producing a (b+beta, 0) resolution with no tight pairs.
Resolution refactor_tight(const Graph& g, const Resolution& res);

struct RequestInstance {
  ListAssignment lists;
  std::map<int, int> requests;                    // vertex -> requested color
  std::map<std::pair<int, int>, double> weights;  // (vertex,color) -> weight
  bool weighted() const { return !weights.empty(); }
};

struct FlexResult {
  bool colorable = false;
  long long satisfied = 0;  // unweighted optimum
  double weight = 0.0;      // weighted optimum
  Coloring coloring;
};

// Exact optimum of satisfied requests (or total satisfied weight) over all
// proper list colorings; branch and bound with an admissible remaining-
// requests bound, ties broken toward the lexicographically least coloring.
FlexResult max_satisfied(const Graph& g, const RequestInstance& inst);

struct DistributionCertificate {
  std::vector<Coloring> support;
  std::vector<mpq_class> prob;
  mpq_class p;          // k^-(b+beta)
  mpq_class eps_prime;  // p^(k-1)
};

// Searches for a probability distribution over the proper L-colorings with:
//  (i)  Prob[phi(v)=c] >= eps' for fixed vertices and their list colors,
//  (ii) Prob[all of I misses c] >= p^|I| for F-free I with |I| <= k-3,
//  (iii) the same bound for loose F-free I of size k-2, where loose means
//        the budget drop 1_I on the all-k budget keeps g list-colorable.
// Uniform weights are tried first, then exact rational LP feasibility.
// Throws std::length_error when g has more than 5000 proper colorings.
std::optional<DistributionCertificate> distribution_feasible(
    const Graph& g, const ListAssignment& L, const std::vector<int>& fix,
    const PatternFamily& fam, int k, int b, int beta);

// Re-checks every bound of the certificate by direct rational arithmetic.
bool validate_certificate(const Graph& g, const ListAssignment& L,
                          const std::vector<int>& fix, const PatternFamily& fam,
                          int k, int b, int beta, const DistributionCertificate& cert);

std::vector<Coloring> enumerate_proper_colorings(const Graph& g,
                                                 const ListAssignment& L,
                                                 std::size_t limit);

}  // namespace flex
