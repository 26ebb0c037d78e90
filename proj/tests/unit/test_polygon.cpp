#include "floorq/polygon.hpp"

#include <gtest/gtest.h>

using namespace floorq;

namespace {

// Direct lattice count for the trapezoid with corners (0,0), (an+b,0), (b,a), (0,a).
std::pair<long long, long long> count_points(int a, int b, int n) {
  long long interior = 0, all = 0;
  for (int y = 0; y <= a; ++y)
    for (int x = 0; x <= a * n + b; ++x) {
      const int right = a * n + b - n * y;
      if (x > right) continue;
      ++all;
      if (y > 0 && y < a && x > 0 && x < right) ++interior;
    }
  return {interior, all - interior};
}

}  // namespace

TEST(Polygon, LatticeCountsAgainstDirectCount) {
  for (int a = 1; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int n = 0; n <= 3; ++n) {
        if (b == 0 && n == 0) continue;
        const auto st = lattice_stats(make_delta_abn(a, b, n));
        const auto [interior, boundary] = count_points(a, b, n);
        EXPECT_EQ(st.interior, interior) << a << "," << b << "," << n;
        EXPECT_EQ(st.boundary, boundary) << a << "," << b << "," << n;
        EXPECT_EQ(st.n_delta, boundary - 1);
        EXPECT_EQ(st.s_max, (boundary - 1) / 2);
      }
}

TEST(Polygon, ProjectiveDegrees) {
  EXPECT_EQ(lattice_stats(make_delta_d(3)).interior, 1);
  EXPECT_EQ(lattice_stats(make_delta_d(4)).interior, 3);
  EXPECT_EQ(lattice_stats(make_delta_d(4)).n_delta, 11);
  EXPECT_EQ(make_delta_d(4), make_delta_abn(4, 0, 1));
}

TEST(Polygon, ParseForms) {
  EXPECT_EQ(parse_polygon("d:4"), make_delta_d(4));
  EXPECT_EQ(parse_polygon("abn:2,3,0"), make_delta_abn(2, 3, 0));
  auto p = make_delta_abn(3, 2, 1);
  EXPECT_EQ(parse_polygon(p.literal()), p);
  EXPECT_THROW(parse_polygon("abn:2"), std::invalid_argument);
  EXPECT_THROW(parse_polygon("xyz"), std::invalid_argument);
  EXPECT_THROW(parse_polygon("abn:2,0,0"), std::invalid_argument);
}

TEST(Polygon, ValidateRejectsUnsortedSlopes) {
  HTransversePolygon p;
  p.dl = {0, 1};
  p.dr = {0, 0};
  p.db = 2;
  p.dt = 2;
  EXPECT_FALSE(validate(p).empty());
  EXPECT_TRUE(validate(make_delta_d(5)).empty());
}

TEST(Polygon, CutTriangles) {
  auto ct = recognize_cut_triangle(make_delta_d(4));
  ASSERT_TRUE(ct.has_value());
  EXPECT_EQ(ct->d, 4);
  EXPECT_EQ(ct->a, 0);
  EXPECT_EQ(ct->b, 0);
  auto chopped = chop_top(make_delta_d(4));
  EXPECT_EQ(chopped.rows(), 2);
  EXPECT_EQ(lattice_stats(chopped).n_delta, lattice_stats(make_delta_d(4)).n_delta - 2);
  EXPECT_THROW(chop_top(make_delta_abn(2, 2, 1)), std::invalid_argument);
}

TEST(Polygon, RowExtents) {
  auto ext = row_extents(make_delta_d(3));
  ASSERT_EQ(ext.size(), 4u);
  EXPECT_EQ(ext[0], std::make_pair(0LL, 3LL));
  EXPECT_EQ(ext[3], std::make_pair(0LL, 0LL));
}
