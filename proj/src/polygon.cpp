#include "floorq/polygon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace floorq {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string body = s;
  if (!body.empty() && body.front() == '[') body.erase(body.begin());
  if (!body.empty() && body.back() == ']') body.pop_back();
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty list entry");
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = std::stoi(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

}  // namespace

std::string HTransversePolygon::literal() const {
  return "ht:dl=[" + join(dl) + "];dr=[" + join(dr) + "];db=" + std::to_string(db) +
         ";dt=" + std::to_string(dt);
}

HTransversePolygon make_polygon(std::vector<int> dl, std::vector<int> dr, int db, int dt) {
  std::sort(dl.begin(), dl.end(), std::greater<>());
  std::sort(dr.begin(), dr.end());
  return {std::move(dl), std::move(dr), db, dt};
}

HTransversePolygon make_delta_abn(int a, int b, int n) {
  if (a < 1 || b < 0 || n < 0) throw std::invalid_argument("make_delta_abn: need a >= 1, b >= 0, n >= 0");
  if (b == 0 && n == 0) throw std::invalid_argument("make_delta_abn: degenerate polygon (b = n = 0)");
  return make_polygon(std::vector<int>(a, 0), std::vector<int>(a, n), a * n + b, b);
}

HTransversePolygon make_delta_d(int d) { return make_delta_abn(d, 0, 1); }

std::vector<std::pair<long long, long long>> row_extents(const HTransversePolygon& p) {
  std::vector<std::pair<long long, long long>> ext;
  long long xl = 0, xr = p.db;
  ext.emplace_back(xl, xr);
  // Moving up one row shifts each side by minus its slope.
  for (int j = 0; j < p.rows(); ++j) {
    xl -= p.dl[j];
    xr -= p.dr[j];
    ext.emplace_back(xl, xr);
  }
  return ext;
}

std::vector<std::string> validate(const HTransversePolygon& p) {
  std::vector<std::string> v;
  if (p.dl.size() != p.dr.size()) v.push_back("|d_l| != |d_r|");
  if (p.dl.empty()) v.push_back("|d_l| must be at least 1");
  if (p.db < 0) v.push_back("d_b must be nonnegative");
  if (p.dt < 0) v.push_back("d_t must be nonnegative");
  const long long sl = std::accumulate(p.dl.begin(), p.dl.end(), 0LL);
  const long long sr = std::accumulate(p.dr.begin(), p.dr.end(), 0LL);
  if (p.db != p.dt + sr - sl) v.push_back("closure violated: d_b != d_t + sum(d_r) - sum(d_l)");
  if (!std::is_sorted(p.dl.begin(), p.dl.end(), std::greater<>()) || !std::is_sorted(p.dr.begin(), p.dr.end()))
    v.push_back("slopes not in convex order");
  if (v.empty()) {
    bool flat = true;
    for (auto [l, r] : row_extents(p)) {
      if (r < l) v.push_back("negative width");
      if (r > l) flat = false;
    }
    if (flat) v.push_back("zero area");
  }
  return v;
}

LatticeStats lattice_stats(const HTransversePolygon& p) {
  // Pick: 2A = 2I + B - 2. Each row contributes a primitive edge on both sides.
  auto ext = row_extents(p);
  long long twice_area = 0;
  for (std::size_t j = 0; j + 1 < ext.size(); ++j)
    twice_area += (ext[j].second - ext[j].first) + (ext[j + 1].second - ext[j + 1].first);
  LatticeStats s;
  s.boundary = p.db + p.dt + 2LL * p.rows();
  s.interior = (twice_area - s.boundary + 2) / 2;
  s.n_delta = s.boundary - 1;
  s.s_max = s.n_delta / 2;
  return s;
}

std::optional<CutTriangle> recognize_cut_triangle(const HTransversePolygon& p) {
  if (!validate(p).empty() || p.dt != 0) return std::nullopt;
  CutTriangle c;
  c.d = p.rows();
  for (int k : p.dl) {
    if (k != 0 && k != 1) return std::nullopt;
    c.a += k;
  }
  for (int k : p.dr) {
    if (k != 0 && k != 1) return std::nullopt;
    c.b += 1 - k;
  }
  if (c.d - std::max(c.a, c.b) < 2) return std::nullopt;
  return c;
}

HTransversePolygon chop_top(const HTransversePolygon& p) {
  if (p.rows() < 3) throw std::invalid_argument("chop_top: polygon needs at least three rows");
  if (!recognize_cut_triangle(p))
    throw std::invalid_argument("chop_top: polygon is not a supported cut triangle: " + p.literal());
  HTransversePolygon c = p;
  int widen = 0;
  for (int t = 0; t < 2; ++t) {
    widen += c.dr.back() - c.dl.back();
    c.dl.pop_back();
    c.dr.pop_back();
  }
  c.dt = p.dt + widen;
  return c;
}

HTransversePolygon parse_polygon(const std::string& text) {
  HTransversePolygon p;
  try {
    if (text.rfind("abn:", 0) == 0) {
      auto v = parse_int_list(text.substr(4));
      if (v.size() != 3) throw std::invalid_argument("abn literal needs three integers");
      p = make_delta_abn(v[0], v[1], v[2]);
    } else if (text.rfind("d:", 0) == 0) {
      p = make_delta_d(parse_int(text.substr(2)));
    } else if (text.rfind("ht:", 0) == 0) {
      std::vector<int> dl, dr;
      int db = -1, dt = -1;
      bool has_dl = false, has_dr = false;
      std::stringstream ss(text.substr(3));
      std::string field;
      while (std::getline(ss, field, ';')) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("field without '='");
        std::string key = field.substr(0, eq), val = field.substr(eq + 1);
        if (key == "dl") dl = parse_int_list(val), has_dl = true;
        else if (key == "dr") dr = parse_int_list(val), has_dr = true;
        else if (key == "db") db = parse_int(val);
        else if (key == "dt") dt = parse_int(val);
        else throw std::invalid_argument("unknown field '" + key + "'");
      }
      if (!has_dl || !has_dr || db < 0 || dt < 0) throw std::invalid_argument("ht literal needs dl, dr, db, dt");
      p = make_polygon(dl, dr, db, dt);
    } else {
      throw std::invalid_argument("unknown polygon literal prefix");
    }
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("invalid polygon literal '" + text + "': " + e.what());
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("invalid polygon literal '" + text + "': integer out of range");
  }
  auto errs = validate(p);
  if (!errs.empty()) throw std::invalid_argument("invalid polygon '" + text + "': " + errs.front());
  return p;
}

}  // namespace floorq
