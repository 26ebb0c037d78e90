#pragma once

#include "floorq/invariant.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace floorq {

struct SuiteOptions {
  InvariantOptions inv;
  std::filesystem::path golden_dir;
};

std::vector<std::string> suite_names();

// Runs a named verification suite. Throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opts);

// Individual suites, also used by the acceptance binary.
Report suite_published_values(const SuiteOptions& opts);
Report suite_identities(int max_k = 12);
Report suite_monotonicity(const InvariantOptions& opts);
Report suite_recursion(const InvariantOptions& opts);
Report suite_bijection(int jobs);
Report suite_discrete_derivative(const InvariantOptions& opts);

// Columns (mu, mu_S1, ..., mu_Sk) over marked classes of genus-0 diagrams,
// sorted for multiset comparison.
std::vector<std::vector<LaurentPoly>> marked_class_columns(const HTransversePolygon& p,
                                                           const std::vector<Pairing>& pairings);

// Checks the i-th discrete derivative of s -> coef_i G(0;s) is constantly 2^i.
Report check_discrete_derivative(const HTransversePolygon& p, int i, const InvariantOptions& opts);

}  // namespace floorq
