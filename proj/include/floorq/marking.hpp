#pragma once

#include "floorq/diagram.hpp"
#include "floorq/laurent.hpp"

#include <string>
#include <vector>

namespace floorq {

// Elements of a diagram poset: floors first, then internal elevators in
// stored order, then sources and sinks grouped by floor.
struct PosetElement {
  enum Kind { FloorEl, InternalEl, SourceEl, SinkEl } kind = FloorEl;
  int floor = -1;     // FloorEl: the floor; SourceEl/SinkEl: adjacent floor
  int edge = -1;      // InternalEl: index into FloorDiagram::internal
  int from = -1, to = -1;  // adjacency; -1 stands for an infinite end
  int weight = 0;     // 0 for floors
  bool is_elevator() const { return kind != FloorEl; }
};

struct DiagramPoset {
  std::vector<PosetElement> elements;
  std::vector<std::vector<int>> covers_up;  // i -> elements covering i
  std::vector<std::vector<int>> covers_down;
  int size() const { return static_cast<int>(elements.size()); }
};

DiagramPoset build_poset(const FloorDiagram& d);

// assignment[i] is the element at position i+1.
struct Marking {
  std::vector<int> assignment;
  auto operator<=>(const Marking&) const = default;
};

// Pairs given by their first position i (1-based), meaning {i, i+1}.
struct Pairing {
  std::vector<int> firsts;
  int order() const { return static_cast<int>(firsts.size()); }
  std::string literal() const;
};

// {1,2}, {3,4}, ..., {2s-1, 2s}.
Pairing canonical_pairing(int s);
// "pairs:1-2,3-4". Throws std::invalid_argument when malformed or overlapping.
Pairing parse_pairing(const std::string& text);
// All pairings of order s of {1..n}, in lexicographic order of first positions.
std::vector<Pairing> all_pairings(int n, int s);
bool pairing_fits(const Pairing& s, int n);

// Every linear extension of the labeled poset. Exponential; small diagrams only.
std::vector<Marking> enumerate_labeled_markings(const FloorDiagram& d);

// Element permutations induced by the automorphism group of d.
std::vector<std::vector<int>> automorphism_permutations(const FloorDiagram& d);

struct OrbitReport {
  std::vector<Marking> representatives;  // lexicographically least per orbit
  std::size_t labeled = 0;
  std::size_t group_order = 0;
  bool free_action = true;  // every orbit has size group_order
};

// Orbit computation by brute force, the reference for count_markings.
OrbitReport marking_orbits(const FloorDiagram& d);
std::vector<Marking> enumerate_markings(const FloorDiagram& d);

// Number of isomorphism classes of markings, via a down-set DP in which
// interchangeable elements are merged.
BigInt count_markings(const FloorDiagram& d);

bool is_compatible(const FloorDiagram& d, const Marking& m, const Pairing& s);
// Zero when incompatible.
LaurentPoly mu_S(const FloorDiagram& d, const Marking& m, const Pairing& s);

// Sum of mu_S over isomorphism classes of markings of d. With keep >= 0 only
// codegrees 0..keep of the result are kept.
LaurentPoly sum_mu_S(const FloorDiagram& d, const Pairing& s, int keep = -1);

}  // namespace floorq
