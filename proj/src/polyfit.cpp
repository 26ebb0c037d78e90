#include "floorq/polyfit.hpp"

#include "floorq/parallel.hpp"

#include "json.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace floorq {

namespace {

Rational binom_r(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return Rational(r);
}

// Coefficients of the falling-factorial basis C(x - lo, j) in powers of x.
std::vector<Rational> binomial_basis(long long lo, int j) {
  std::vector<Rational> p{Rational(1)};
  for (int t = 0; t < j; ++t) {
    // multiply by (x - lo - t)
    std::vector<Rational> q(p.size() + 1, Rational(0));
    for (std::size_t e = 0; e < p.size(); ++e) {
      q[e + 1] += p[e];
      q[e] -= p[e] * Rational(lo + t);
    }
    p = std::move(q);
  }
  BigInt f = 1;
  for (int t = 2; t <= j; ++t) f *= t;
  for (auto& c : p) c /= Rational(f);
  return p;
}

std::string rat_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

std::vector<Rational> discrete_derivative(const std::vector<Rational>& values, int n) {
  if (n < 0) throw std::invalid_argument("discrete_derivative: negative order");
  if (values.size() < static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("discrete_derivative: sequence too short");
  std::vector<Rational> out;
  for (std::size_t x = 0; x + n < values.size(); ++x) {
    Rational acc = 0;
    for (int l = 0; l <= n; ++l) {
      Rational t = binom_r(n, l) * values[x + l];
      acc += (l % 2 ? -t : t);
    }
    out.push_back(acc);
  }
  return out;
}

void RationalPoly::add_term(const std::vector<int>& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("RationalPoly: arity mismatch");
  if (c == 0) return;
  auto& slot = terms_[exps];
  slot += c;
  if (slot == 0) terms_.erase(exps);
}

Rational RationalPoly::eval(const std::vector<Rational>& x) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int k = 0; k < nvars_; ++k)
      for (int p = 0; p < e[k]; ++p) t *= x[k];
    acc += t;
  }
  return acc;
}

int RationalPoly::degree_in(int k) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[k]);
  return d;
}

Rational RationalPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string RationalPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      std::string nm = k < static_cast<int>(names.size()) ? names[k] : "x" + std::to_string(k);
      if (!mono.empty()) mono += "*";
      mono += nm + (e[k] > 1 ? "^" + std::to_string(e[k]) : "");
    }
    if (mono.empty()) {
      out += rat_str(mag);
    } else {
      if (mag != 1) out += rat_str(mag) + "*";
      out += mono;
    }
  }
  return out;
}

RationalPoly interpolate(const std::vector<std::pair<long long, Rational>>& points) {
  std::set<long long> xs;
  for (const auto& [x, y] : points)
    if (!xs.insert(x).second) throw std::invalid_argument("interpolate: duplicate abscissa");
  // Newton divided differences.
  const std::size_t m = points.size();
  std::vector<Rational> dd;
  for (const auto& p : points) dd.push_back(p.second);
  for (std::size_t lvl = 1; lvl < m; ++lvl)
    for (std::size_t k = m - 1; k >= lvl; --k)
      dd[k] = (dd[k] - dd[k - 1]) / Rational(points[k].first - points[k - lvl].first);
  std::vector<Rational> poly{Rational(0)};
  for (std::size_t k = m; k-- > 0;) {
    // poly = poly * (x - x_k) + dd[k]
    std::vector<Rational> q(poly.size() + 1, Rational(0));
    for (std::size_t e = 0; e < poly.size(); ++e) {
      q[e + 1] += poly[e];
      q[e] -= poly[e] * Rational(points[k].first);
    }
    q[0] += dd[k];
    poly = std::move(q);
  }
  RationalPoly out(1);
  for (std::size_t e = 0; e < poly.size(); ++e) out.add_term({static_cast<int>(e)}, poly[e]);
  return out;
}

PolyFitReport verify_polynomiality(const Sampler& sampler, const std::vector<Axis>& axes, int jobs) {
  const int m = static_cast<int>(axes.size());
  if (m == 0) throw std::invalid_argument("verify_polynomiality: no axes");
  PolyFitReport rep;
  rep.axes = axes;
  rep.fit = RationalPoly(m);
  std::vector<int> size(m);
  std::size_t total = 1;
  for (int k = 0; k < m; ++k) {
    if (axes[k].degree < 0) throw std::invalid_argument("verify_polynomiality: negative degree");
    size[k] = axes[k].degree + 2;
    total *= size[k];
  }
  auto unflatten = [&](std::size_t idx) {
    std::vector<int> off(m);
    for (int k = m - 1; k >= 0; --k) {
      off[k] = static_cast<int>(idx % size[k]);
      idx /= size[k];
    }
    return off;
  };
  auto flatten = [&](const std::vector<int>& off) {
    std::size_t idx = 0;
    for (int k = 0; k < m; ++k) idx = idx * size[k] + off[k];
    return idx;
  };
  std::vector<Rational> grid(total);
  parallel_for(total, jobs, [&](std::size_t idx) {
    auto off = unflatten(idx);
    std::vector<long long> pt(m);
    for (int k = 0; k < m; ++k) pt[k] = axes[k].lo + off[k];
    grid[idx] = Rational(sampler(pt));
  });
  rep.samples = total;
  // Forward differences along each axis turn values into Newton coefficients.
  for (int k = 0; k < m; ++k) {
    for (int lvl = 1; lvl < size[k]; ++lvl) {
      std::vector<Rational> next = grid;
      for (std::size_t idx = 0; idx < total; ++idx) {
        auto off = unflatten(idx);
        if (off[k] < lvl) continue;
        auto prev = off;
        --prev[k];
        next[idx] = grid[idx] - grid[flatten(prev)];
      }
      grid = std::move(next);
    }
  }
  // grid[j] is now the coefficient of prod_k C(x_k - lo_k, j_k).
  rep.measured_degrees.assign(m, -1);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (grid[idx] == 0) continue;
    auto j = unflatten(idx);
    for (int k = 0; k < m; ++k) rep.measured_degrees[k] = std::max(rep.measured_degrees[k], j[k]);
    std::vector<std::vector<Rational>> basis(m);
    for (int k = 0; k < m; ++k) basis[k] = binomial_basis(axes[k].lo, j[k]);
    // expand the product of univariate bases
    std::vector<int> e(m, 0);
    auto rec = [&](auto&& self, int k, Rational c) -> void {
      if (k == m) {
        rep.fit.add_term(e, c);
        return;
      }
      for (std::size_t p = 0; p < basis[k].size(); ++p) {
        if (basis[k][p] == 0) continue;
        e[k] = static_cast<int>(p);
        self(self, k + 1, c * basis[k][p]);
      }
      e[k] = 0;
    };
    rec(rec, 0, grid[idx]);
  }
  for (int k = 0; k < m; ++k) {
    if (rep.measured_degrees[k] != axes[k].degree) {
      rep.ok = false;
      rep.messages.push_back("degree in " + axes[k].name + " is " + std::to_string(rep.measured_degrees[k]) +
                             ", expected " + std::to_string(axes[k].degree));
    }
  }
  for (int k = 0; k < m; ++k) {
    for (int h = 0; h < axes[k].held_out; ++h) {
      std::vector<long long> pt(m);
      std::vector<Rational> xr(m);
      for (int t = 0; t < m; ++t) pt[t] = axes[t].lo;
      pt[k] = axes[k].lo + axes[k].degree + 2 + h;
      for (int t = 0; t < m; ++t) xr[t] = Rational(pt[t]);
      Rational diff = Rational(sampler(pt)) - rep.fit.eval(xr);
      rep.residuals.push_back(rat_str(diff));
      if (diff != 0) {
        rep.ok = false;
        rep.messages.push_back("held-out residual at " + axes[k].name + "=" + std::to_string(pt[k]) + " is " +
                               rat_str(diff));
      }
    }
  }
  return rep;
}

std::string PolyFitReport::to_json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok;
  std::vector<std::string> names;
  for (const auto& a : axes) {
    names.push_back(a.name);
    j["region"].push_back({{"var", a.name}, {"from", a.lo}, {"to", a.lo + a.degree + 1},
                           {"held_out_from", a.lo + a.degree + 2}, {"held_out_to", a.lo + a.degree + 1 + a.held_out}, {"claimed_degree", a.degree}});
  }
  j["samples"] = samples;
  j["measured_degrees"] = measured_degrees;
  for (const auto& [e, c] : fit.terms()) j["monomials"].push_back({{"exponents", e}, {"coeff", rat_str(c)}});
  j["polynomial"] = fit.to_string(names);
  j["held_out_residuals"] = residuals;
  j["messages"] = messages;
  return j.dump(2);
}

}  // namespace floorq
