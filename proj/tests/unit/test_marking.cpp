#include "floorq/marking.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace floorq;

namespace {

std::vector<FloorDiagram> small_diagrams() {
  std::vector<FloorDiagram> out;
  for (const char* lit : {"d:3", "d:4", "abn:2,2,1", "abn:2,3,0"}) {
    auto p = parse_polygon(lit);
    for (int g = 0; g <= lattice_stats(p).interior; ++g)
      for (auto& d : enumerate_floor_diagrams(p, g)) out.push_back(d);
  }
  return out;
}

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

TEST(Marking, LabeledExtensionsAgainstPermutations) {
  for (const char* lit : {"d:3", "abn:2,2,1"}) {
    auto p = parse_polygon(lit);
    for (const auto& d : enumerate_floor_diagrams(p, 0)) {
      auto P = build_poset(d);
      if (P.size() > 9) continue;
      std::vector<int> perm(P.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::size_t count = 0;
      do {
        std::vector<int> pos(P.size());
        for (int k = 0; k < P.size(); ++k) pos[perm[k]] = k;
        bool ok = true;
        for (int x = 0; x < P.size() && ok; ++x)
          for (int y : P.covers_up[x]) ok = ok && pos[x] < pos[y];
        count += ok;
      } while (std::next_permutation(perm.begin(), perm.end()));
      EXPECT_EQ(enumerate_labeled_markings(d).size(), count) << to_text(d);
    }
  }
}

TEST(Marking, OrbitCountsAgreeWithDP) {
  for (const auto& d : small_diagrams()) {
    auto orb = marking_orbits(d);
    EXPECT_TRUE(orb.free_action) << to_text(d);
    EXPECT_EQ(orb.labeled, orb.representatives.size() * orb.group_order);
    EXPECT_EQ(count_markings(d), orb.representatives.size()) << to_text(d);
    EXPECT_EQ(enumerate_markings(d).size(), orb.representatives.size());
    EXPECT_EQ(automorphism_count(d), orb.group_order);
  }
}

TEST(Marking, SumOfMuSMatchesExplicitSum) {
  for (const auto& d : small_diagrams()) {
    const int n = d.n_marks();
    auto marks = enumerate_markings(d);
    for (int s = 0; 2 * s <= n && s <= 3; ++s) {
      for (const auto& S : {canonical_pairing(s), all_pairings(n, s).back()}) {
        LaurentPoly total;
        for (const auto& m : marks) total += mu_S(d, m, S);
        EXPECT_EQ(sum_mu_S(d, S), total) << to_text(d) << " " << S.literal();
        LaurentPoly top = sum_mu_S(d, S, 1);
        for (int i = 0; i <= 1 && !total.is_zero(); ++i)
          EXPECT_EQ(codegree_coeff(top, i), codegree_coeff(total, i));
      }
    }
  }
}

TEST(Marking, AddingPairsLowersEachMultiplicity) {
  for (const auto& d : small_diagrams()) {
    const int n = d.n_marks();
    for (const auto& m : enumerate_markings(d)) {
      LaurentPoly prev = mu_S(d, m, canonical_pairing(0));
      EXPECT_EQ(prev, mult(d));
      for (int s = 1; 2 * s <= n; ++s) {
        LaurentPoly cur = mu_S(d, m, canonical_pairing(s));
        EXPECT_TRUE(poly_geq(prev, cur)) << to_text(d) << " s=" << s;
        prev = cur;
      }
    }
  }
}

TEST(Marking, PairingBasics) {
  for (int n = 0; n <= 10; ++n)
    for (int s = 0; 2 * s <= n; ++s) EXPECT_EQ(BigInt(all_pairings(n, s).size()), binom(n - s, s));
  EXPECT_EQ(parse_pairing("pairs:1-2,5-6").firsts, (std::vector<int>{1, 5}));
  EXPECT_THROW(parse_pairing("pairs:1-2,2-3"), std::invalid_argument);
  EXPECT_THROW(parse_pairing("pairs:1-3"), std::invalid_argument);
  EXPECT_TRUE(pairing_fits(canonical_pairing(2), 4));
  EXPECT_FALSE(pairing_fits(canonical_pairing(3), 5));
}
