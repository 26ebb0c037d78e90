#pragma once

#include "floorq/diagram.hpp"

#include <string>
#include <vector>

namespace floorq {

// Layered graph on vertices 0..length-1. Short edges join consecutive
// vertices and are only counted; long edges carry weights.
struct Template {
  int length = 1;
  std::vector<int> short_counts;   // per gap, size length-1
  std::vector<Elevator> long_edges;  // to >= from + 2, sorted
  std::vector<int> sources;        // per vertex
  std::vector<int> sinks;          // per vertex

  int genus() const;
  int codeg() const;
  bool is_point() const { return length == 1 && sources_total() == 0 && sinks_total() == 0; }
  bool closed() const { return !is_point() && sources_total() == 0 && sinks_total() == 0; }
  int sources_total() const;
  int sinks_total() const;
  auto operator<=>(const Template&) const = default;
};

// True when some edge disconnects the graph and is comparable with every
// other vertex and edge.
bool has_separating_edge(const Template& t);

// Every template with genus <= max_genus and codegree <= max_codeg, sorted by
// (genus, codegree, length, data). Sources never sit on the first vertex and
// sinks never on the last one.
std::vector<Template> enumerate_templates(int max_genus, int max_codeg);

std::string to_json(const Template& t);

struct CappingTree {
  std::vector<int> parent;  // parent[0] = -1; vertex 0 is the minimal floor
  std::vector<int> weight;  // weight[v] of the edge parent[v] -> v
  int a() const { return static_cast<int>(parent.size()); }
  int codeg(int n) const;
};

// Capping trees with a floors, divergence n off the root, codegree <= max_codeg.
std::vector<CappingTree> enumerate_capping_trees(int a, int n, int max_codeg);
// Canonical string of the rooted unordered tree.
std::string canonical_tree_string(const std::vector<int>& parent);

using Collection = std::vector<Template>;

// Admissible collections of total genus g and codegree i. For m >= 2 the first
// template has no sinks, the last has no sources, the middle ones are closed,
// and the point template appears only at the ends.
std::vector<Collection> admissible_collections(int g, int i);

// kappa = (k_1 = 1, ..., k_m) with k_{j+1} >= k_j + l_j and k_m + l_m = a + 1.
std::vector<std::vector<int>> enumerate_A(const Collection& xi, int a);

// Weights of all short edges, per global gap, as non-increasing lists.
using ShortWeights = std::vector<std::vector<int>>;

// Elements of B_{a,b,n}(xi, kappa): every floor gets divergence n.
std::vector<ShortWeights> enumerate_B(const Collection& xi, const std::vector<int>& kappa, int a, int b, int n);

// Throws std::invalid_argument on an infeasible extension.
FloorDiagram reconstruct(const Collection& xi, const std::vector<int>& kappa, const ShortWeights& omega, int a,
                         int b, int n);

struct BijectionReport {
  bool ok = true;
  std::size_t reconstructed = 0;
  std::size_t enumerated = 0;
  bool all_layered = true;
  bool injective = true;
  std::vector<std::string> messages;
};

// Compares reconstructions from triples with the enumerated diagrams of genus
// g and codegree exactly i. Throws std::domain_error unless b > i and a > i,
// when enforce_region is set.
BijectionReport verify_bijection(int a, int b, int n, int g, int i, bool enforce_region = true, int jobs = 1);

}  // namespace floorq
