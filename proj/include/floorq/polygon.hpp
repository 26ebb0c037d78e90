#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace floorq {

// h-transverse polygon given by side data. Row j (counted from the bottom)
// has left slope dl[j] and right slope dr[j]; dl is stored non-increasing and
// dr non-decreasing, which is the convex arrangement.
struct HTransversePolygon {
  std::vector<int> dl;
  std::vector<int> dr;
  int db = 0;
  int dt = 0;

  int rows() const { return static_cast<int>(dl.size()); }
  // "ht:dl=[...];dr=[...];db=N;dt=M" with the stored (sorted) order.
  std::string literal() const;
  bool operator==(const HTransversePolygon&) const = default;
};

struct LatticeStats {
  long long interior = 0;
  long long boundary = 0;
  long long n_delta = 0;
  long long s_max = 0;
};

// Sorts the slope multisets into the stored order. Does not validate.
HTransversePolygon make_polygon(std::vector<int> dl, std::vector<int> dr, int db, int dt);
HTransversePolygon make_delta_abn(int a, int b, int n);
HTransversePolygon make_delta_d(int d);

// Empty when valid, otherwise one message per violated invariant.
std::vector<std::string> validate(const HTransversePolygon& p);

LatticeStats lattice_stats(const HTransversePolygon& p);

// Left and right boundary abscissae at each integer height 0..rows(),
// with the bottom-left corner at x = 0.
std::vector<std::pair<long long, long long>> row_extents(const HTransversePolygon& p);

// Parameters (d, a, b) when p is the triangle of size d with the lower-left
// corner of size a and the lower-right corner of size b cut off.
struct CutTriangle {
  int d = 0, a = 0, b = 0;
};
std::optional<CutTriangle> recognize_cut_triangle(const HTransversePolygon& p);

// Removes the two top rows. Throws std::invalid_argument outside the
// supported cut-triangle families or when fewer than three rows exist.
HTransversePolygon chop_top(const HTransversePolygon& p);

// Accepts "abn:a,b,n", "d:k" and "ht:dl=[...];dr=[...];db=N;dt=M".
// Throws std::invalid_argument on malformed or invalid input.
HTransversePolygon parse_polygon(const std::string& text);

}  // namespace floorq
