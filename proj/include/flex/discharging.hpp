#pragma once

#include <string>
#include <vector>

#include "flex/catalog.hpp"
#include "flex/graph.hpp"
#include "flex/patterns.hpp"
#include "flex/rational.hpp"

namespace flex {

enum class Scheme { A, B };

struct ElementRef {
  enum Kind { Vertex, Face, EdgeEl } kind;
  int index;
  std::string str() const;
};

struct Transfer {
  std::string rule;
  ElementRef from, to;
  Rational amount;
};

// Exact charges per vertex, face and edge plus the transfer ledger. The sum
// of all charges is invariant under transfers.
struct ChargeState {
  std::vector<Rational> vertex, face, edge;
  std::vector<Transfer> ledger;

  Rational total() const;
  void transfer(const std::string& rule, ElementRef from, ElementRef to,
                const Rational& amount);
  Rational& at(ElementRef r);
};

// Local plane structure consumed by the rule guards: 3- and 4-faces, face
// diamonds (two 3-faces sharing an edge, four distinct vertices; middles are
// the shared edge, sides the private vertices), bridges.
struct PlaneDiamond {
  int face1, face2;
  int m1, m2;  // middle vertices, m1 < m2
  int s1, s2;  // side vertex on face1 / face2
  int shared_edge;
};

struct StructureIndex {
  FaceList faces;
  std::vector<int> face_len;
  std::vector<std::vector<int>> vertex_faces;   // distinct face ids per vertex
  std::vector<PlaneDiamond> diamonds;
  std::vector<std::vector<int>> middle_diamonds;  // per vertex
  std::vector<std::vector<int>> side_diamonds;
  std::vector<char> face_in_diamond;
  std::vector<char> edge_on_small_face;  // borders a 3- or 4-face
  std::vector<char> edge_is_bridge;

  static StructureIndex build(const PlaneGraph& pg);
};

// ch(v) = deg(v)-4, ch(f) = l(f)-4, edges 0 (scheme A);
// ch(v) = 2deg(v)-6, ch(f) = l(f)-6 (scheme B). Connected input required.
ChargeState initial_charges(const PlaneGraph& pg, Scheme s);

// Sequential application of the scheme's rules: guards within one rule
// number are evaluated against the state before that number fires.
ChargeState apply_rules(const PlaneGraph& pg, const ChargeState& initial, Scheme s);

// Replays the ledger from the initial state; must reproduce `st`.
bool replay_matches(const PlaneGraph& pg, Scheme s, const ChargeState& st);

struct AuditReport {
  Rational total;
  Rational expected_total;
  bool conserved = false;
  struct Neg {
    std::string element;
    Rational charge;
  };
  std::vector<Neg> negatives;
};

AuditReport audit(const PlaneGraph& pg, const ChargeState& st, Scheme s);

// Catalog embeddings in the plane graph's underlying graph ('C' or 'D').
std::vector<EntryEmbedding> detect_configurations(const PlaneGraph& pg, char which,
                                                  const PatternFamily& fam);

struct DegreeLemmaRow {
  int v;
  int degree;
  int middle_count;  // diamonds with v as middle
  int small_faces;   // 3/4-faces at v outside those diamonds
  bool ok;
};

struct DegreeLemmaReport {
  std::vector<DegreeLemmaRow> rows;
  bool all_ok = true;
};

// For every vertex: deg(v) >= 3k + 2m and k <= floor(deg/3). Requires a
// {C5,C6,C7}-free input and throws otherwise.
DegreeLemmaReport degree_lemma_audit(const PlaneGraph& pg);

}  // namespace flex
