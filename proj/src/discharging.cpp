#include "flex/discharging.hpp"

#include <algorithm>
#include <stdexcept>

namespace flex {

std::string ElementRef::str() const {
  switch (kind) {
    case Vertex: return "v" + std::to_string(index);
    case Face: return "f" + std::to_string(index);
    case EdgeEl: return "e" + std::to_string(index);
  }
  return "?";
}

Rational ChargeState::total() const {
  Rational t;
  for (auto& c : vertex) t += c;
  for (auto& c : face) t += c;
  for (auto& c : edge) t += c;
  return t;
}

Rational& ChargeState::at(ElementRef r) {
  switch (r.kind) {
    case ElementRef::Vertex: return vertex[r.index];
    case ElementRef::Face: return face[r.index];
    case ElementRef::EdgeEl: return edge[r.index];
  }
  throw std::logic_error("bad element ref");
}

void ChargeState::transfer(const std::string& rule, ElementRef from, ElementRef to,
                           const Rational& amount) {
  at(from) -= amount;
  at(to) += amount;
  ledger.push_back({rule, from, to, amount});
}

StructureIndex StructureIndex::build(const PlaneGraph& pg) {
  StructureIndex idx;
  const Graph& g = pg.graph();
  idx.faces = trace_faces(pg);
  int nf = (int)idx.faces.faces.size();
  for (auto& f : idx.faces.faces) idx.face_len.push_back(f.length());

  idx.vertex_faces.assign(g.n(), {});
  for (int fi = 0; fi < nf; ++fi)
    for (int v : idx.faces.faces[fi].vertex_set()) idx.vertex_faces[v].push_back(fi);

  idx.edge_is_bridge.assign(g.edge_count(), 0);
  idx.edge_on_small_face.assign(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [fa, fb] = idx.faces.edge_face[e];
    idx.edge_is_bridge[e] = (fa == fb);
    int la = idx.face_len[fa], lb = idx.face_len[fb];
    idx.edge_on_small_face[e] = (la == 3 || la == 4 || lb == 3 || lb == 4);
  }

  idx.face_in_diamond.assign(nf, 0);
  idx.middle_diamonds.assign(g.n(), {});
  idx.side_diamonds.assign(g.n(), {});
  auto third_vertex = [&](int fi, int a, int b) {
    for (int v : idx.faces.faces[fi].vertex_set())
      if (v != a && v != b) return v;
    return -1;
  };
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [fa, fb] = idx.faces.edge_face[e];
    if (fa == fb) continue;
    if (idx.face_len[fa] != 3 || idx.face_len[fb] != 3) continue;
    auto [m1, m2] = g.edges()[e];
    int s1 = third_vertex(fa, m1, m2);
    int s2 = third_vertex(fb, m1, m2);
    if (s1 == s2 || s1 < 0 || s2 < 0) continue;  // both faces on one triangle
    PlaneDiamond d{fa, fb, m1, m2, s1, s2, e};
    int di = (int)idx.diamonds.size();
    idx.diamonds.push_back(d);
    idx.face_in_diamond[fa] = idx.face_in_diamond[fb] = 1;
    idx.middle_diamonds[m1].push_back(di);
    idx.middle_diamonds[m2].push_back(di);
    idx.side_diamonds[s1].push_back(di);
    idx.side_diamonds[s2].push_back(di);
  }
  return idx;
}

ChargeState initial_charges(const PlaneGraph& pg, Scheme s) {
  const Graph& g = pg.graph();
  if (!g.connected()) throw std::invalid_argument("initial_charges: disconnected input");
  FaceList fl = trace_faces(pg);
  ChargeState st;
  st.vertex.resize(g.n());
  st.face.resize(fl.faces.size());
  st.edge.resize(g.edge_count());
  for (int v = 0; v < g.n(); ++v)
    st.vertex[v] = (s == Scheme::A) ? Rational(g.degree(v) - 4)
                                    : Rational(2 * g.degree(v) - 6);
  for (int f = 0; f < (int)fl.faces.size(); ++f)
    st.face[f] = (s == Scheme::A) ? Rational(fl.faces[f].length() - 4)
                                  : Rational(fl.faces[f].length() - 6);
  return st;
}

namespace {

using ER = ElementRef;
ER V(int i) { return {ER::Vertex, i}; }
ER F(int i) { return {ER::Face, i}; }
ER E(int i) { return {ER::EdgeEl, i}; }

bool small_face(int len) { return len == 3 || len == 4; }

// sides of a diamond as seen from middle u: (mate, side degrees)
struct MiddleView {
  int mate, s1, s2;
};
MiddleView middle_view(const PlaneDiamond& d, int u) {
  return {d.m1 == u ? d.m2 : d.m1, d.s1, d.s2};
}

void rules_scheme_a(const PlaneGraph& pg, const StructureIndex& idx, ChargeState& st) {
  const Graph& g = pg.graph();
  auto deg = [&](int v) { return g.degree(v); };

  // (R1) big faces pay adjacent small faces per shared edge
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [fa, fb] = idx.faces.edge_face[e];
    if (fa == fb) continue;
    int la = idx.face_len[fa], lb = idx.face_len[fb];
    if (la >= 8 && small_face(lb)) st.transfer("R1", F(fa), F(fb), {1, 2});
    if (lb >= 8 && small_face(la)) st.transfer("R1", F(fb), F(fa), {1, 2});
  }

  // (R2) edges away from small faces collect 1 from their sides
  for (int e = 0; e < g.edge_count(); ++e) {
    if (idx.edge_on_small_face[e]) continue;
    auto [fa, fb] = idx.faces.edge_face[e];
    if (idx.edge_is_bridge[e]) {
      st.transfer("R2", F(fa), E(e), 1);
    } else {
      st.transfer("R2", F(fa), E(e), {1, 2});
      st.transfer("R2", F(fb), E(e), {1, 2});
    }
  }

  // (R3) edges with charge 1 pay 3-vertices and diamond 3-vertices.
  // Guards read the pre-R3 state.
  {
    std::vector<char> charged(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) charged[e] = (st.edge[e] == Rational(1));
    struct Out {
      std::string rule;
      int e, v;
      Rational amt;
    };
    std::vector<Out> fire;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!charged[e]) continue;
      auto [a, b] = g.edges()[e];
      for (auto [u, z] : {std::pair{a, b}, std::pair{b, a}}) {
        if (deg(u) == 3 && deg(z) == 3) {
          fire.push_back({"R3a", e, u, {1, 2}});
        } else if (deg(u) == 3 && deg(z) >= 4) {
          fire.push_back({"R3b", e, u, 1});
        } else if (deg(z) >= 4 && deg(u) == 4) {
          for (int di : idx.middle_diamonds[u]) {
            const auto& d = idx.diamonds[di];
            auto mv = middle_view(d, u);
            int ds1 = deg(mv.s1), ds2 = deg(mv.s2);
            if (deg(mv.mate) == 3 && std::min(ds1, ds2) >= 4 &&
                (ds1 == 4 || ds2 == 4)) {
              // (R3c) Dia(4-3,4,4+): 1 to the middle 3-vertex
              fire.push_back({"R3c", e, mv.mate, 1});
            } else if (deg(mv.mate) == 4 &&
                       ((ds1 == 3 && ds2 == 4) || (ds1 == 4 && ds2 == 3))) {
              // (R3d) Dia(4-4,3,4): 1/2 to the side 3-vertex
              fire.push_back({"R3d", e, ds1 == 3 ? mv.s1 : mv.s2, {1, 2}});
            }
          }
        }
      }
    }
    for (auto& o : fire) st.transfer(o.rule, E(o.e), V(o.v), o.amt);
  }

  // (R4) 4-faces pay their 3-vertices
  for (int fi = 0; fi < (int)idx.face_len.size(); ++fi) {
    if (idx.face_len[fi] != 4) continue;
    for (int v : idx.faces.faces[fi].vertex_set())
      if (deg(v) == 3) st.transfer("R4", F(fi), V(v), 1);
  }

  // (R5) lone 3-faces with a single 3-vertex
  for (int fi = 0; fi < (int)idx.face_len.size(); ++fi) {
    if (idx.face_len[fi] != 3 || idx.face_in_diamond[fi]) continue;
    auto vs = idx.faces.faces[fi].vertex_set();
    std::vector<int> threes;
    for (int v : vs)
      if (deg(v) == 3) threes.push_back(v);
    if (threes.size() == 1) st.transfer("R5", F(fi), V(threes[0]), {1, 2});
  }

  // (R6) 5-vertex as a diamond middle; remember R6a for the R7c exclusion
  std::vector<char> fired_r6a(g.n(), 0);
  for (int u = 0; u < g.n(); ++u) {
    if (deg(u) != 5) continue;
    for (int di : idx.middle_diamonds[u]) {
      auto mv = middle_view(idx.diamonds[di], u);
      int dm = deg(mv.mate);
      int a = deg(mv.s1), b = deg(mv.s2);
      int lo = std::min(a, b), hi = std::max(a, b);
      if (dm == 3 && ((lo == 4 && hi == 4) || (lo == 4 && hi == 5))) {
        st.transfer("R6a", V(u), V(mv.mate), 1);
        fired_r6a[u] = 1;
      } else if (dm == 3 && ((lo == 5 && hi == 5) || (lo >= 4 && hi >= 6))) {
        st.transfer("R6b", V(u), V(mv.mate), {1, 2});
      } else if (dm >= 5 && lo == 3 && hi == 3) {
        st.transfer("R6c", V(u), V(mv.s1), {1, 4});
        st.transfer("R6c", V(u), V(mv.s2), {1, 4});
      } else if (dm >= 4 && lo == 3 && hi >= 4) {
        st.transfer("R6d", V(u), V(a == 3 ? mv.s1 : mv.s2), {1, 2});
      }
    }
  }

  // (R7) 5-vertex as a diamond side
  for (int u = 0; u < g.n(); ++u) {
    if (deg(u) != 5) continue;
    for (int di : idx.side_diamonds[u]) {
      const auto& d = idx.diamonds[di];
      int other = (d.s1 == u) ? d.s2 : d.s1;
      int a = deg(d.m1), b = deg(d.m2);
      int lo = std::min(a, b), hi = std::max(a, b);
      int mid3 = (a == 3) ? d.m1 : d.m2;
      if (lo == 4 && hi == 4 && deg(other) == 3) {
        st.transfer("R7a", V(u), V(other), {1, 2});
      } else if (lo == 3 && hi == 4 && deg(other) >= 5) {
        st.transfer("R7b", V(u), V(mid3), {1, 2});
      } else if (lo == 3 && hi == 5 && deg(other) >= 4 && !fired_r6a[u]) {
        st.transfer("R7c", V(u), V(mid3), {1, 2});
      }
    }
  }

  // (R8) 6+-vertex as a diamond side
  for (int u = 0; u < g.n(); ++u) {
    if (deg(u) < 6) continue;
    for (int di : idx.side_diamonds[u]) {
      const auto& d = idx.diamonds[di];
      int other = (d.s1 == u) ? d.s2 : d.s1;
      int a = deg(d.m1), b = deg(d.m2);
      int lo = std::min(a, b), hi = std::max(a, b);
      int mid3 = (a == 3) ? d.m1 : d.m2;
      if (lo == 3 && hi == 5 && deg(other) >= 4) {
        st.transfer("R8a", V(u), V(mid3), {1, 2});
      } else if (lo == 4 && hi == 4 && deg(other) == 3) {
        st.transfer("R8b", V(u), V(other), {1, 2});
      } else if (lo == 3 && hi == 4 && deg(other) >= 4) {
        st.transfer("R8c", V(u), V(mid3), {1, 2});
      }
    }
  }

  // (R9) 6+-vertex as a diamond middle
  for (int u = 0; u < g.n(); ++u) {
    if (deg(u) < 6) continue;
    for (int di : idx.middle_diamonds[u]) {
      auto mv = middle_view(idx.diamonds[di], u);
      int dm = deg(mv.mate);
      int a = deg(mv.s1), b = deg(mv.s2);
      if (dm >= 4 && a == 3 && b == 3) {
        st.transfer("R9a", V(u), V(mv.s1), {1, 2});
        st.transfer("R9a", V(u), V(mv.s2), {1, 2});
      } else if (dm >= 4 && ((a == 3 && b >= 4) || (b == 3 && a >= 4))) {
        st.transfer("R9b", V(u), V(a == 3 ? mv.s1 : mv.s2), 1);
      } else if (dm == 3 && a >= 4 && b >= 4) {
        st.transfer("R9c", V(u), V(mv.mate), 1);
      }
    }
  }
}

void rules_scheme_b(const PlaneGraph& pg, const StructureIndex& idx, ChargeState& st) {
  const Graph& g = pg.graph();
  auto deg = [&](int v) { return g.degree(v); };

  // (R1)
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [fa, fb] = idx.faces.edge_face[e];
    if (fa == fb) continue;
    int la = idx.face_len[fa], lb = idx.face_len[fb];
    if (la >= 8 && small_face(lb)) st.transfer("R1", F(fa), F(fb), {1, 4});
    if (lb >= 8 && small_face(la)) st.transfer("R1", F(fb), F(fa), {1, 4});
  }

  // (R2) faces flanking the triangle-free edge at a 3-vertex pay its triangle
  for (int fi = 0; fi < (int)idx.face_len.size(); ++fi) {
    if (idx.face_len[fi] != 3) continue;
    for (int v : idx.faces.faces[fi].vertex_set()) {
      if (deg(v) != 3) continue;
      for (int u : g.neighbors(v)) {
        int e = g.edge_index(v, u);
        auto [fa, fb] = idx.faces.edge_face[e];
        if (fa == fi || fb == fi) continue;  // edge on the triangle itself
        if (idx.face_len[fa] == 3 || idx.face_len[fb] == 3) continue;
        Rational amt = (deg(u) == 3) ? Rational(1, 8) : Rational(1, 4);
        st.transfer(deg(u) == 3 ? "R2a" : "R2b", F(fa), F(fi), amt);
        st.transfer(deg(u) == 3 ? "R2a" : "R2b", F(fb), F(fi), amt);
      }
    }
  }

  // (R3) 4-vertices pay incident small faces
  for (int v = 0; v < g.n(); ++v) {
    if (deg(v) != 4) continue;
    for (int fi : idx.vertex_faces[v])
      if (small_face(idx.face_len[fi])) st.transfer("R3", V(v), F(fi), 1);
  }

  // (R4) 5-vertices pay incident 4-faces
  for (int v = 0; v < g.n(); ++v) {
    if (deg(v) != 5) continue;
    for (int fi : idx.vertex_faces[v])
      if (idx.face_len[fi] == 4) st.transfer("R4", V(v), F(fi), 1);
  }

  // (R5)/(R6) 5-vertices as diamond middles
  auto r5_matches = [&](int v, const PlaneDiamond& d) {
    auto mv = middle_view(d, v);
    int dm = deg(mv.mate);
    int a = deg(mv.s1), b = deg(mv.s2);
    int lo = std::min(a, b), hi = std::max(a, b);
    if (dm == 3 && lo == 4 && hi == 4) return true;       // Dia(5-3,4,4)
    if (dm == 3 && lo == 3 && hi >= 5) return true;       // Dia(5-3,3,5+)
    if (dm == 5 && lo == 3 && hi == 3) return true;       // Dia(5-5,3,3)
    return false;
  };
  std::vector<char> r5_applies(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    if (deg(v) == 5)
      for (int di : idx.middle_diamonds[v])
        if (r5_matches(v, idx.diamonds[di])) r5_applies[v] = 1;
  for (int v = 0; v < g.n(); ++v) {
    if (deg(v) != 5) continue;
    for (int di : idx.middle_diamonds[v]) {
      const auto& d = idx.diamonds[di];
      if (r5_matches(v, d)) {
        st.transfer("R5", V(v), F(d.face1), {3, 2});
        st.transfer("R5", V(v), F(d.face2), {3, 2});
      }
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    if (deg(v) != 5 || r5_applies[v]) continue;
    for (int di : idx.middle_diamonds[v]) {
      const auto& d = idx.diamonds[di];
      st.transfer("R6", V(v), F(d.face1), 1);
      st.transfer("R6", V(v), F(d.face2), 1);
    }
  }

  // (R7) 5-vertices on 3-faces outside their own middle diamonds
  for (int v = 0; v < g.n(); ++v) {
    if (deg(v) != 5) continue;
    for (int fi : idx.vertex_faces[v]) {
      if (idx.face_len[fi] != 3) continue;
      bool own_middle = false;
      for (int di : idx.middle_diamonds[v]) {
        const auto& d = idx.diamonds[di];
        if (d.face1 == fi || d.face2 == fi) own_middle = true;
      }
      if (own_middle) continue;
      auto vs = idx.faces.faces[fi].vertex_set();
      bool all4 = true;
      for (int w : vs)
        if (w != v && deg(w) < 4) all4 = false;
      if (all4)
        st.transfer("R7a", V(v), F(fi), 1);
      else
        st.transfer("R7b", V(v), F(fi), 2);
    }
  }

  // (R8) 6+-vertices pay incident small faces except their middle diamonds
  for (int v = 0; v < g.n(); ++v) {
    if (deg(v) < 6) continue;
    for (int fi : idx.vertex_faces[v]) {
      if (idx.face_len[fi] == 4) {
        st.transfer("R8", V(v), F(fi), 1);
      } else if (idx.face_len[fi] == 3) {
        bool own_middle = false;
        for (int di : idx.middle_diamonds[v]) {
          const auto& d = idx.diamonds[di];
          if (d.face1 == fi || d.face2 == fi) own_middle = true;
        }
        if (!own_middle) st.transfer("R8", V(v), F(fi), 2);
      }
    }
  }

  // (R9)-(R11) 6-vertices as diamond middles
  for (int v = 0; v < g.n(); ++v) {
    if (deg(v) != 6) continue;
    for (int di : idx.middle_diamonds[v]) {
      const auto& d = idx.diamonds[di];
      auto mv = middle_view(d, v);
      int dm = deg(mv.mate);
      int a = deg(mv.s1), b = deg(mv.s2);
      int lo = std::min(a, b), hi = std::max(a, b);
      if (dm == 3 && lo == 3 && hi == 4) {
        st.transfer("R9", V(v), F(d.face1), {7, 4});
        st.transfer("R9", V(v), F(d.face2), {7, 4});
      } else if (dm == 3 && lo == 4 && hi == 4) {
        st.transfer("R10", V(v), F(d.face1), {3, 2});
        st.transfer("R10", V(v), F(d.face2), {3, 2});
      } else {
        st.transfer("R11", V(v), F(d.face1), {5, 4});
        st.transfer("R11", V(v), F(d.face2), {5, 4});
      }
    }
  }

  // (R12) 7+-vertices as diamond middles
  for (int v = 0; v < g.n(); ++v) {
    if (deg(v) < 7) continue;
    for (int di : idx.middle_diamonds[v]) {
      const auto& d = idx.diamonds[di];
      st.transfer("R12", V(v), F(d.face1), {7, 4});
      st.transfer("R12", V(v), F(d.face2), {7, 4});
    }
  }

  // (R13) positive diamond halves cover their negative partners
  {
    struct Fix {
      int from, to;
      Rational amt;
    };
    std::vector<Fix> moves;
    for (auto& d : idx.diamonds) {
      Rational cf = st.face[d.face1], cg = st.face[d.face2];
      if (cg > Rational(0) && cf < Rational(0)) {
        moves.push_back({d.face2, d.face1, std::min(cg, -cf)});
      } else if (cf > Rational(0) && cg < Rational(0)) {
        moves.push_back({d.face1, d.face2, std::min(cf, -cg)});
      }
    }
    for (auto& m : moves) st.transfer("R13", F(m.from), F(m.to), m.amt);
  }
}

}  // namespace

ChargeState apply_rules(const PlaneGraph& pg, const ChargeState& initial, Scheme s) {
  StructureIndex idx = StructureIndex::build(pg);
  ChargeState st = initial;
  st.ledger.clear();
  if (s == Scheme::A)
    rules_scheme_a(pg, idx, st);
  else
    rules_scheme_b(pg, idx, st);
  return st;
}

bool replay_matches(const PlaneGraph& pg, Scheme s, const ChargeState& st) {
  ChargeState re = initial_charges(pg, s);
  for (auto& t : st.ledger) {
    re.at(t.from) -= t.amount;
    re.at(t.to) += t.amount;
  }
  return re.vertex == st.vertex && re.face == st.face && re.edge == st.edge;
}

AuditReport audit(const PlaneGraph& pg, const ChargeState& st, Scheme s) {
  AuditReport rep;
  rep.total = st.total();
  rep.expected_total = initial_charges(pg, s).total();
  rep.conserved = (rep.total == rep.expected_total);
  for (int v = 0; v < (int)st.vertex.size(); ++v)
    if (st.vertex[v].negative()) rep.negatives.push_back({"v" + std::to_string(v), st.vertex[v]});
  for (int f = 0; f < (int)st.face.size(); ++f)
    if (st.face[f].negative()) rep.negatives.push_back({"f" + std::to_string(f), st.face[f]});
  for (int e = 0; e < (int)st.edge.size(); ++e)
    if (st.edge[e].negative()) rep.negatives.push_back({"e" + std::to_string(e), st.edge[e]});
  return rep;
}

std::vector<EntryEmbedding> detect_configurations(const PlaneGraph& pg, char which,
                                                  const PatternFamily& fam) {
  (void)fam;  // the guarantees assume an F-free host; detection itself does not
  const auto& entries = (which == 'C') ? catalog_C() : catalog_D();
  return find_embeddings(pg.graph(), entries);
}

DegreeLemmaReport degree_lemma_audit(const PlaneGraph& pg) {
  PatternFamily cycles;
  cycles.patterns = {Pattern::cycle(5), Pattern::cycle(6), Pattern::cycle(7)};
  if (!is_family_free(pg.graph(), cycles))
    throw std::invalid_argument("degree_lemma_audit: input is not {C5,C6,C7}-free");

  StructureIndex idx = StructureIndex::build(pg);
  const Graph& g = pg.graph();
  DegreeLemmaReport rep;
  for (int v = 0; v < g.n(); ++v) {
    DegreeLemmaRow row;
    row.v = v;
    row.degree = g.degree(v);
    row.middle_count = (int)idx.middle_diamonds[v].size();
    row.small_faces = 0;
    for (int fi : idx.vertex_faces[v]) {
      if (!small_face(idx.face_len[fi])) continue;
      bool in_own = false;
      for (int di : idx.middle_diamonds[v]) {
        const auto& d = idx.diamonds[di];
        if (d.face1 == fi || d.face2 == fi) in_own = true;
      }
      if (!in_own) ++row.small_faces;
    }
    row.ok = row.degree >= 3 * row.middle_count + 2 * row.small_faces &&
             row.middle_count <= row.degree / 3;
    if (!row.ok) rep.all_ok = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace flex
