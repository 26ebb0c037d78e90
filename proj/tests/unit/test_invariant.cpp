#include "floorq/cache.hpp"
#include "floorq/invariant.hpp"
#include "floorq/suites.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace floorq;

TEST(Invariant, DescendantArguments) {
  auto d3 = make_delta_d(3);
  EXPECT_TRUE(refined_descendant(d3, 5).is_zero());
  EXPECT_THROW(refined_descendant(d3, -1), std::exception);
  EXPECT_THROW(refined_descendant(d3, 1, parse_pairing("pairs:1-2,3-4")), std::exception);
  EXPECT_THROW(refined_descendant(d3, 1, parse_pairing("pairs:8-9")), std::exception);
  EXPECT_EQ(refined_descendant(d3, 0), refined_invariant(d3, 0));
}

TEST(Invariant, TopCoefficientsMatchFullPolynomial) {
  for (const char* lit : {"d:4", "abn:3,2,1", "abn:2,3,0"}) {
    auto p = parse_polygon(lit);
    for (int g = 0; g <= 1; ++g) {
      auto full = refined_invariant(p, g);
      auto top = invariant_top_coefficients(p, g, 2);
      for (int i = 0; i <= 2; ++i) EXPECT_EQ(top[i], full.is_zero() ? BigInt(0) : codegree_coeff(full, i)) << lit;
    }
    for (int s = 0; s <= 2; ++s) {
      auto full = refined_descendant(p, s);
      auto top = descendant_top_coefficients(p, s, 2);
      for (int i = 0; i <= 2; ++i) EXPECT_EQ(top[i], codegree_coeff(full, i)) << lit << " s=" << s;
    }
  }
}

TEST(Invariant, SymmetricWithNonnegativeCoefficients) {
  for (const char* lit : {"d:5", "abn:3,2,1", "abn:3,1,2"}) {
    auto p = parse_polygon(lit);
    for (int g = 0; g <= 2; ++g) {
      auto v = refined_invariant(p, g);
      EXPECT_TRUE(v.is_symmetric()) << lit;
      EXPECT_TRUE(v.has_nonnegative_coeffs()) << lit;
    }
  }
}

TEST(Invariant, PairingIndependenceOnOtherPolygons) {
  EXPECT_TRUE(verify_pairing_independence(make_delta_abn(2, 2, 1), 2).ok);
  EXPECT_TRUE(verify_pairing_independence(make_delta_abn(3, 1, 1), 1).ok);
  EXPECT_TRUE(verify_pairing_independence(make_delta_d(5), 2).ok);  // sampled pairings
}

TEST(Invariant, RecursionOnCutTriangle) {
  auto p = parse_polygon("ht:dl=[0,0,0,0];dr=[1,1,1,1];db=4;dt=0");
  EXPECT_TRUE(verify_recursion(p, 1).ok);
  EXPECT_THROW(verify_recursion(make_delta_d(3), 4), std::exception);
}

TEST(Cache, RoundTripAndClear) {
  auto dir = std::filesystem::temp_directory_path() / "floorq_cache_test";
  std::filesystem::remove_all(dir);
  ResultCache cache(dir);
  EXPECT_FALSE(cache.get("k").has_value());
  cache.put("k", "{\"0\":\"1\"}");
  EXPECT_EQ(cache.get("k").value(), "{\"0\":\"1\"}");
  EXPECT_EQ(cache.entry_count(), 1u);

  InvariantOptions opts{1, &cache};
  auto v = refined_invariant(make_delta_d(4), 1, opts);
  EXPECT_EQ(cache.entry_count(), 2u);
  EXPECT_EQ(refined_invariant(make_delta_d(4), 1, opts), v);
  EXPECT_EQ(cache.clear(), 2u);
  EXPECT_EQ(cache.entry_count(), 0u);
  std::filesystem::remove_all(dir);
}

TEST(Cache, EnvironmentOverride) {
  setenv("FLOORQ_CACHE_DIR", "/tmp/floorq_env_dir", 1);
  EXPECT_EQ(ResultCache::default_dir(), std::filesystem::path("/tmp/floorq_env_dir"));
  unsetenv("FLOORQ_CACHE_DIR");
  EXPECT_NE(ResultCache::default_dir(), std::filesystem::path("/tmp/floorq_env_dir"));
}

TEST(Suites, AllNamedSuitesPass) {
  SuiteOptions so{InvariantOptions{}, FLOORQ_GOLDEN_DIR};
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, so);
    std::string lines;
    for (auto& l : r.lines) lines += l + "\n";
    EXPECT_TRUE(r.ok) << name << "\n" << lines;
  }
  EXPECT_THROW(run_suite("nope", so), std::invalid_argument);
}

TEST(Suites, MissingGoldenFails) {
  SuiteOptions so{InvariantOptions{}, "/nonexistent"};
  EXPECT_FALSE(suite_published_values(so).ok);
}
