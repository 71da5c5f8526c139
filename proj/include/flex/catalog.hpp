#pragma once

#include <climits>
#include <string>
#include <vector>

#include "flex/configuration.hpp"
#include "flex/graph.hpp"

namespace flex {

// Host-degree constraint on one configuration vertex. Black (reduced or
// fully-drawn) vertices carry exact degrees; plus-marked ones a lower bound;
// the degree-at-most-2 single-vertex entries an upper bound.
struct DegPred {
  int min = 0;
  int max = INT_MAX;
  bool matches(int d) const { return d >= min && d <= max; }
  bool exact() const { return min == max; }
};

struct CatalogEntry {
  std::string name;
  Configuration cfg;          // host degrees instantiated at the minimum
  std::vector<DegPred> pred;  // per vertex of cfg.h
};

// The four-list catalogs. C1..C13; D1..D12 plus the primed variants
// D8p, D9p, D11p, D11pp.
const std::vector<CatalogEntry>& catalog_C();
const std::vector<CatalogEntry>& catalog_D();

// Lookup by name across both catalogs. Throws on unknown name.
const CatalogEntry& catalog_entry(const std::string& name);
Configuration catalog(const std::string& name);

struct EntryEmbedding {
  std::string entry;
  std::vector<int> map;  // configuration vertex -> host vertex
};

// Induced embeddings of an entry into a host: configuration edges and
// non-edges must both be respected, and host degrees must satisfy the
// per-vertex predicates (exact for drawn vertices). One embedding per
// distinct image set is reported, in canonical order.
std::vector<EntryEmbedding> find_embeddings(const Graph& host, const CatalogEntry& entry);
std::vector<EntryEmbedding> find_embeddings(const Graph& host,
                                            const std::vector<CatalogEntry>& entries);

}  // namespace flex
