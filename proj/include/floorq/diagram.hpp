#pragma once

#include "floorq/laurent.hpp"
#include "floorq/polygon.hpp"

#include <string>
#include <vector>

namespace floorq {

struct Floor {
  int l = 0;
  int r = 0;
  bool operator==(const Floor&) const = default;
};

struct Elevator {
  int from = 0;
  int to = 0;
  int weight = 1;
  auto operator<=>(const Elevator&) const = default;
};

// Sources and sinks all have weight 1 and are stored as per-floor counts.
struct FloorDiagram {
  std::vector<Floor> floors;
  std::vector<Elevator> internal;
  std::vector<int> sources;
  std::vector<int> sinks;

  int num_floors() const { return static_cast<int>(floors.size()); }
  int num_sources() const;
  int num_sinks() const;
  int genus() const { return static_cast<int>(internal.size()) - num_floors() + 1; }
  // Sum of (weight - 1) over internal elevators.
  int degree() const;
  int n_marks() const;
  int divergence(int v) const;
  bool operator==(const FloorDiagram&) const = default;
};

// Empty when D is a valid floor diagram with Newton polygon p.
std::vector<std::string> validate_diagram(const FloorDiagram& d, const HTransversePolygon& p);

int codegree(const FloorDiagram& d, const HTransversePolygon& p);

// prod over internal elevators of [w]^2.
LaurentPoly mult(const FloorDiagram& d);
// Same, keeping only codegrees 0..keep.
LaurentPoly mult_top(const FloorDiagram& d, int keep);

// True when the floors are totally ordered by the diagram order.
bool is_layered(const FloorDiagram& d);
// Floor-level reachability: reach[u][v] iff u precedes v (u != v).
std::vector<std::vector<bool>> floor_order(const FloorDiagram& d);

struct Canonical {
  FloorDiagram rep;        // floors renumbered along the minimizing order
  std::vector<int> key;    // complete isomorphism invariant
  long long floor_automorphisms = 1;
};

// Minimizes a position-major encoding over all topological orders of the
// floors. Isomorphisms preserve weights, orientation and l/r labels.
Canonical canonicalize(const FloorDiagram& d);
std::vector<int> canonical_form(const FloorDiagram& d);
// Full automorphism group order, counting permutations of parallel equal-weight
// elevators and of sources/sinks sharing a floor.
BigInt automorphism_count(const FloorDiagram& d);

struct EnumerationOptions {
  int max_codegree = -1;  // -1: no bound
  int jobs = 1;
};

// Canonical representatives sorted by key.
std::vector<FloorDiagram> enumerate_floor_diagrams(const HTransversePolygon& p, int genus,
                                                   const EnumerationOptions& opts = {});

// Elevator handle for the codegree-reducing operations.
struct ElevatorRef {
  enum Kind { Internal, Source, Sink } kind = Internal;
  int index = 0;  // internal elevator index, or the floor of a source/sink
};

// A+: e1 from v1 to v2, e2 leaves v1 and is not adjacent to v2; e2 is moved to
// start at v2 and e1 gains weight w(e2). Throws std::invalid_argument when the
// configuration is absent or the result would contain a cycle.
FloorDiagram op_A_plus(const FloorDiagram& d, int e1, ElevatorRef e2);
// A-: e1 from v1 to v2, e2 enters v2 and is not adjacent to v1.
FloorDiagram op_A_minus(const FloorDiagram& d, int e1, ElevatorRef e2);
// B^l / B^r: e from v1 to v2 with l(v1) < l(v2) (resp. r(v1) > r(v2)); the
// labels are swapped and e gains the label difference.
FloorDiagram op_B_l(const FloorDiagram& d, int e);
FloorDiagram op_B_r(const FloorDiagram& d, int e);

std::string to_json(const FloorDiagram& d);
std::string to_text(const FloorDiagram& d);

}  // namespace floorq
