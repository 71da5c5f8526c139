#include "flex/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace flex {

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

json plane_graph_to_json(const PlaneGraph& pg) {
  json j = graph_to_json(pg.graph());
  j["rotation"] = pg.rotation();
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json: missing n or edges");
  int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("graph json: bad edge");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Graph(n, std::move(edges), std::move(labels));
}

PlaneGraph plane_graph_from_json(const json& j) {
  Graph g = graph_from_json(j);
  if (!j.contains("rotation"))
    throw std::invalid_argument("plane graph json: missing rotation");
  auto rot = j.at("rotation").get<std::vector<std::vector<int>>>();
  return PlaneGraph(std::move(g), std::move(rot));
}

json configuration_to_json(const Configuration& cfg) {
  json j;
  j["name"] = cfg.name;
  j["k"] = cfg.k;
  j["vertices"] = json::array();
  for (int v = 0; v < cfg.h.n(); ++v) {
    bool in_fix = std::find(cfg.declared_fix.begin(), cfg.declared_fix.end(), v) !=
                  cfg.declared_fix.end();
    j["vertices"].push_back({{"id", v},
                             {"label", cfg.h.label(v)},
                             {"ext_degree", cfg.ext_degree[v]},
                             {"in_reduced", (bool)cfg.in_reduced[v]},
                             {"in_fix", in_fix}});
  }
  j["edges"] = json::array();
  for (auto [u, v] : cfg.h.edges()) j["edges"].push_back({u, v});
  return j;
}

Configuration configuration_from_json(const json& j) {
  Configuration cfg;
  cfg.k = j.at("k").get<int>();
  if (j.contains("name")) cfg.name = j.at("name").get<std::string>();
  auto& vs = j.at("vertices");
  int n = (int)vs.size();
  cfg.in_reduced.assign(n, 0);
  cfg.ext_degree.assign(n, 0);
  std::vector<std::string> labels(n);
  for (auto& vj : vs) {
    int id = vj.at("id").get<int>();
    if (id < 0 || id >= n) throw std::invalid_argument("configuration json: bad id");
    cfg.ext_degree[id] = vj.at("ext_degree").get<int>();
    cfg.in_reduced[id] = vj.at("in_reduced").get<bool>();
    labels[id] = vj.contains("label") ? vj.at("label").get<std::string>()
                                      : std::to_string(id);
    if (vj.contains("in_fix") && vj.at("in_fix").get<bool>())
      cfg.declared_fix.push_back(id);
  }
  std::vector<Edge> edges;
  for (auto& e : j.at("edges")) edges.push_back({e[0].get<int>(), e[1].get<int>()});
  cfg.h = Graph(n, std::move(edges), std::move(labels));
  cfg.validate();
  return cfg;
}

json lists_to_json(const ListAssignment& L) {
  json j = json::object();
  for (int v = 0; v < (int)L.lists.size(); ++v)
    j[std::to_string(v)] = L.list_colors(v);
  return j;
}

ListAssignment lists_from_json(const json& j, int n) {
  ListAssignment L;
  L.lists.assign(n, 0);
  int pal = 0;
  for (auto& [key, val] : j.items()) {
    int v = std::stoi(key);
    if (v < 0 || v >= n) throw std::invalid_argument("lists json: vertex out of range");
    for (auto& c : val) {
      int color = c.get<int>();
      if (color < 0 || color >= 64)
        throw std::invalid_argument("lists json: color out of range");
      L.lists[v] |= 1ull << color;
      pal = std::max(pal, color + 1);
    }
  }
  L.palette = pal;
  return L;
}

json reducibility_report_to_json(const ReducibilityReport& rep) {
  json j;
  j["name"] = rep.name;
  j["classification"] = to_string(rep.classification);
  j["qualifies"] = {{"full", rep.qualifies_full},
                    {"enhanced_weak", rep.qualifies_enhanced_weak},
                    {"weak", rep.qualifies_weak}};
  j["fix_pass"] = rep.fix_pass;
  j["enhanced_fix_pass"] = rep.enhanced_fix_pass;
  j["declared_fix_ok"] = rep.declared_fix_ok;
  json fw = json::object();
  for (auto& [v, w] : rep.fix_witness) fw[std::to_string(v)] = lists_to_json(w);
  j["fix_witness"] = fw;
  j["loose_sets"] = rep.loose_sets;
  json forb = json::array();
  for (auto& item : rep.forb.items) {
    json ji;
    ji["I"] = item.I;
    ji["f_free"] = item.f_free;
    if (item.f_free) ji["pass"] = item.pass;
    if (item.witness) ji["witness"] = lists_to_json(*item.witness);
    forb.push_back(ji);
  }
  j["forb"] = forb;
  return j;
}

}  // namespace flex
