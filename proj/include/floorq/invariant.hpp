#pragma once

#include "floorq/cache.hpp"
#include "floorq/laurent.hpp"
#include "floorq/marking.hpp"
#include "floorq/polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace floorq {

struct InvariantOptions {
  int jobs = 1;
  const ResultCache* cache = nullptr;
};

// G_Delta(g): sum over diagram classes of (marking count) * mult.
LaurentPoly refined_invariant(const HTransversePolygon& p, int genus, const InvariantOptions& opts = {});

// G_Delta(0; s) with pairing S (default {1,2},...,{2s-1,2s}). Zero when s > s_max.
LaurentPoly refined_descendant(const HTransversePolygon& p, int s, const std::optional<Pairing>& pairing = std::nullopt,
                               const InvariantOptions& opts = {});

// Codegree 0..max_codeg coefficients, summing only diagrams of codegree <= max_codeg.
std::vector<BigInt> invariant_top_coefficients(const HTransversePolygon& p, int genus, int max_codeg,
                                               const InvariantOptions& opts = {});
std::vector<BigInt> descendant_top_coefficients(const HTransversePolygon& p, int s, int max_codeg,
                                                const std::optional<Pairing>& pairing = std::nullopt,
                                                const InvariantOptions& opts = {});

struct Report {
  bool ok = true;
  std::vector<std::string> lines;
  void fail(const std::string& msg) {
    ok = false;
    lines.push_back("FAIL " + msg);
  }
  void note(const std::string& msg) { lines.push_back(msg); }
};

// Compares G(0;s) across all pairings of order s (n(Delta) <= 12) or 50
// seeded random ones.
Report verify_pairing_independence(const HTransversePolygon& p, int s, const InvariantOptions& opts = {});

// G(0;s+1) = G(0;s) - 2 G_{chop_top(Delta)}(0;s). Throws when 2s > n(Delta) - 2
// or Delta is not a supported cut triangle.
Report verify_recursion(const HTransversePolygon& p, int s, const InvariantOptions& opts = {});

// coef_i G(0;0) >= coef_i G(0;1) >= ... >= 0.
Report verify_monotonicity(const HTransversePolygon& p, int i, const InvariantOptions& opts = {});

}  // namespace floorq
