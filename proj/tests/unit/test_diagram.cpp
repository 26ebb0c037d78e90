#include "floorq/diagram.hpp"
#include "floorq/invariant.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace floorq;

// Irreducible plane curves through the right number of points, counted
// classically: degree 3 (g=0,1), degree 4 (g=0..3), degree 5 rational.
TEST(Diagram, ClassicalCountsAtQEqualsOne) {
  EXPECT_EQ(refined_invariant(make_delta_d(3), 0).eval_at_one(), 12);
  EXPECT_EQ(refined_invariant(make_delta_d(3), 1).eval_at_one(), 1);
  const long long d4[] = {620, 225, 27, 1};
  for (int g = 0; g <= 3; ++g) EXPECT_EQ(refined_invariant(make_delta_d(4), g).eval_at_one(), d4[g]) << g;
  EXPECT_EQ(refined_invariant(make_delta_d(5), 0).eval_at_one(), 87304);
  // Plane conics and lines through 5 and 2 points.
  EXPECT_EQ(refined_invariant(make_delta_d(2), 0).eval_at_one(), 1);
  EXPECT_EQ(refined_invariant(make_delta_d(1), 0).eval_at_one(), 1);
}

TEST(Diagram, DiagramCounts) {
  EXPECT_EQ(enumerate_floor_diagrams(make_delta_d(3), 0).size(), 3u);
  EXPECT_EQ(enumerate_floor_diagrams(make_delta_d(3), 1).size(), 1u);
  const std::size_t d4[] = {12, 11, 5, 1};
  for (int g = 0; g <= 3; ++g) EXPECT_EQ(enumerate_floor_diagrams(make_delta_d(4), g).size(), d4[g]);
  EXPECT_TRUE(enumerate_floor_diagrams(make_delta_d(4), 4).empty());
}

TEST(Diagram, EnumeratedDiagramsAreValidAndDistinct) {
  for (const char* lit : {"d:4", "abn:2,2,1", "abn:3,2,1", "abn:2,3,0", "abn:3,1,2"}) {
    auto p = parse_polygon(lit);
    for (int g = 0; g <= lattice_stats(p).interior; ++g) {
      std::set<std::vector<int>> keys;
      for (const auto& d : enumerate_floor_diagrams(p, g)) {
        EXPECT_TRUE(validate_diagram(d, p).empty()) << lit << " " << to_text(d);
        EXPECT_EQ(d.genus(), g);
        EXPECT_GE(codegree(d, p), 0);
        EXPECT_TRUE(keys.insert(canonical_form(d)).second) << lit;
      }
    }
  }
}

TEST(Diagram, CodegreeBoundMatchesFilter) {
  for (const char* lit : {"d:5", "abn:4,2,1", "abn:3,3,2"}) {
    auto p = parse_polygon(lit);
    for (int g = 0; g <= 2; ++g) {
      auto all = enumerate_floor_diagrams(p, g);
      for (int c = 0; c <= 3; ++c) {
        std::vector<FloorDiagram> filtered;
        for (const auto& d : all)
          if (codegree(d, p) <= c) filtered.push_back(d);
        EXPECT_EQ(enumerate_floor_diagrams(p, g, {c, 1}), filtered) << lit << " g=" << g << " c=" << c;
      }
    }
  }
}

TEST(Diagram, DeterministicAcrossWorkerCounts) {
  auto p = make_delta_d(5);
  EXPECT_EQ(enumerate_floor_diagrams(p, 1, {-1, 1}), enumerate_floor_diagrams(p, 1, {-1, 4}));
  EXPECT_EQ(refined_invariant(p, 0, {1, nullptr}), refined_invariant(p, 0, {4, nullptr}));
}

TEST(Diagram, CanonicalFormIgnoresFloorOrder) {
  // Two floors joined by a weight-2 elevator plus a parallel weight-1 one,
  // written with the floors in either order.
  FloorDiagram d;
  d.floors = {{0, 1}, {0, 1}};
  d.internal = {{0, 1, 1}, {0, 1, 2}};
  d.sources = {3, 0};
  d.sinks = {0, 0};
  FloorDiagram e;
  e.floors = d.floors;
  e.internal = {{1, 0, 2}, {1, 0, 1}};
  e.sources = {0, 3};
  e.sinks = {0, 0};
  EXPECT_EQ(canonical_form(d), canonical_form(e));
}

TEST(Diagram, MultiplicityIsProductOfSquares) {
  FloorDiagram d;
  d.floors = {{0, 1}, {0, 1}, {0, 1}};
  d.internal = {{0, 1, 2}, {1, 2, 3}};
  d.sources = {4, 0, 0};
  d.sinks = {0, 0, 0};
  EXPECT_EQ(mult(d), quantum_square(2) * quantum_square(3));
  EXPECT_EQ(d.degree(), 3);
  EXPECT_EQ(mult_top(d, 1).terms().size(), 2u);
}

TEST(Diagram, MoveOperationsLowerCodegreeByMovedWeight) {
  auto p = make_delta_d(4);
  int applied = 0;
  for (int g = 0; g <= 2; ++g)
    for (const auto& d : enumerate_floor_diagrams(p, g)) {
      const int ne = static_cast<int>(d.internal.size());
      for (int e1 = 0; e1 < ne; ++e1) {
        std::vector<std::pair<ElevatorRef, int>> others;
        for (int e2 = 0; e2 < ne; ++e2)
          if (e2 != e1) others.push_back({{ElevatorRef::Internal, e2}, d.internal[e2].weight});
        for (int v = 0; v < d.num_floors(); ++v) {
          if (d.sources[v]) others.push_back({{ElevatorRef::Source, v}, 1});
          if (d.sinks[v]) others.push_back({{ElevatorRef::Sink, v}, 1});
        }
        for (auto [ref, w] : others)
          for (auto op : {op_A_plus, op_A_minus}) {
            try {
              auto r = op(d, e1, ref);
              EXPECT_TRUE(validate_diagram(r, p).empty()) << to_text(r);
              EXPECT_EQ(codegree(r, p), codegree(d, p) - w);
              EXPECT_EQ(r.genus(), d.genus());
              ++applied;
            } catch (const std::invalid_argument&) {
            }
          }
      }
    }
  EXPECT_GT(applied, 0);
}

TEST(Diagram, LabelSwapsLowerCodegree) {
  auto p = parse_polygon("ht:dl=[1,0,-1];dr=[0,1,2];db=4;dt=1");
  int applied = 0;
  for (int g = 0; g <= 1; ++g)
    for (const auto& d : enumerate_floor_diagrams(p, g))
      for (int e = 0; e < static_cast<int>(d.internal.size()); ++e)
        for (auto op : {op_B_l, op_B_r}) {
          try {
            auto r = op(d, e);
            EXPECT_TRUE(validate_diagram(r, p).empty()) << to_text(r);
            EXPECT_LT(codegree(r, p), codegree(d, p));
            ++applied;
          } catch (const std::invalid_argument&) {
          }
        }
  EXPECT_GT(applied, 0);
}
