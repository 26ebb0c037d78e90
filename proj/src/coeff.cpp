#include "floorq/coeff.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace floorq {

namespace {

BigInt binom(long long top, long long bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  BigInt r = 1;
  for (long long j = 1; j <= bottom; ++j) r = r * (top - bottom + j) / j;
  return r;
}

void compositions(int k, int l, BigInt prod, BigInt& acc) {
  if (k == 0) {
    if (l == 0) acc += prod;
    return;
  }
  for (int p = 1; p <= l - (k - 1); ++p) compositions(k - 1, l - p, prod * p, acc);
}

}  // namespace

BigInt F(int k, int l) {
  if (k < 0 || l < 0) return 0;
  // F(k, l) = sum_m m F(k-1, l-m)
  static std::mutex mu;
  static std::map<std::pair<int, int>, BigInt> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find({k, l}); it != memo.end()) return it->second;
  }
  BigInt r;
  if (k == 0) {
    r = l == 0 ? 1 : 0;
  } else {
    for (int m = 1; m <= l; ++m) r += BigInt(m) * F(k - 1, l - m);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[{k, l}] = r;
  return r;
}

BigInt F_bruteforce(int k, int l) {
  if (k < 0 || l < 0) return 0;
  BigInt acc = 0;
  compositions(k, l, 1, acc);
  return acc;
}

BigInt F_closed(int k, int l) {
  if (k == 0) return l == 0 ? 1 : 0;
  return binom(l + k - 1, 2 * k - 1);
}

BigInt coeff_product_of_squares(int i, const std::vector<int>& weights) {
  bool shortcut = true;
  for (int w : weights) {
    if (w < 1) throw std::domain_error("coeff_product_of_squares: weights must be positive");
    if (w <= i) shortcut = false;
  }
  if (shortcut) return Phi(i, static_cast<int>(weights.size()));
  LaurentPoly p(1);
  for (int w : weights) p = p * quantum_square(w);
  return codegree_coeff(p, i);
}

int UVector::codeg() const {
  int c = 0;
  for (std::size_t j = 0; j < u.size(); ++j) c += static_cast<int>(j + 1) * (u[j] + u_tilde[j]);
  return c;
}

std::vector<UVector> enumerate_C(int i) {
  std::vector<UVector> out;
  std::vector<int> v(2 * i, 0);
  // Coordinates 0..i-1 are u, i..2i-1 are u_tilde; coordinate t costs (t mod i) + 1.
  auto rec = [&](auto&& self, int t, int budget) -> void {
    if (t == 2 * i) {
      out.push_back({std::vector<int>(v.begin(), v.begin() + i), std::vector<int>(v.begin() + i, v.end())});
      return;
    }
    const int cost = t % i + 1;
    for (int x = 0; x * cost <= budget; ++x) {
      v[t] = x;
      self(self, t + 1, budget - x * cost);
    }
    v[t] = 0;
  };
  if (i == 0) {
    out.push_back({});
  } else {
    rec(rec, 0, i);
  }
  return out;
}

FloorDiagram build_D(int a, int b, int n, const UVector& uv) {
  const int i = static_cast<int>(uv.u.size());
  if (uv.u_tilde.size() != uv.u.size()) throw std::invalid_argument("build_D: u and u~ lengths differ");
  if (a < 1 || b < 0 || n < 0) throw std::invalid_argument("build_D: bad parameters");
  FloorDiagram d;
  d.floors.assign(a, Floor{0, n});
  d.sources.assign(a, 0);
  d.sinks.assign(a, 0);
  int moved_src = 0, moved_snk = 0;
  for (int j = 1; j <= i; ++j) {
    if (uv.u[j - 1] == 0 && uv.u_tilde[j - 1] == 0) continue;
    if (j >= a) throw std::invalid_argument("build_D: vector longer than the chain");
    d.sources[j] += uv.u[j - 1];
    d.sinks[a - 1 - j] += uv.u_tilde[j - 1];
    moved_src += uv.u[j - 1];
    moved_snk += uv.u_tilde[j - 1];
  }
  d.sources[0] += a * n + b - moved_src;
  d.sinks[a - 1] += b - moved_snk;
  if (d.sources[0] < 0 || d.sinks[a - 1] < 0) throw std::invalid_argument("build_D: too many moved ends");
  long long flow = 0;
  for (int k = 0; k + 1 < a; ++k) {
    flow += d.sources[k] - d.sinks[k] - n;
    if (flow <= 0) throw std::invalid_argument("build_D: forced elevator weight is not positive");
    d.internal.push_back({k, k + 1, static_cast<int>(flow)});
  }
  return d;
}

BigInt nu_tilde(const std::vector<int>& u, long long a, long long b, long long n, long long s) {
  const int i = static_cast<int>(u.size());
  if (s < 0) return 0;
  std::vector<long long> tail(i + 2, 0);  // tail[j] = u_j + ... + u_i (1-based)
  for (int j = i; j >= 1; --j) tail[j] = tail[j + 1] + u[j - 1];
  std::vector<BigInt> fact(s + 1, 1);
  for (long long k = 1; k <= s; ++k) fact[k] = fact[k - 1] * k;
  BigInt total = 0;
  std::vector<long long> sj(i + 1, 0);
  // s_1..s_i chosen freely, s_0 = s - sum; only 2 s_j <= u_j can contribute.
  auto rec = [&](auto&& self, int j, long long used) -> void {
    if (j > i) {
      const long long s0 = s - used;
      if (s0 < 0) return;
      BigInt term = fact[s] / fact[s0];
      long long prefix = s0;
      for (int t = 1; t <= i; ++t) {
        term /= fact[sj[t]];
        prefix += sj[t];
        const long long top = a * n + b + 2LL * t - 2 * prefix - tail[t + 1];
        term *= binom(top, u[t - 1] - 2 * sj[t]);
        if (term == 0) return;
      }
      total += term;
      return;
    }
    for (long long x = 0; 2 * x <= u[j - 1] && used + x <= s; ++x) {
      sj[j] = x;
      self(self, j + 1, used + x);
    }
    sj[j] = 0;
  };
  rec(rec, 1, 0);
  return total;
}

BigInt nu(const UVector& uv, int a, int b, int n, int s) {
  const int i = static_cast<int>(uv.u.size());
  if (b < i || static_cast<long long>(a) * n + b < i + 2 * s)
    throw std::domain_error("nu: outside b >= i, an+b >= i+2s");
  return nu_tilde(uv.u, a, b, n, s) * nu_tilde(uv.u_tilde, 0, b, 0, 0);
}

bool in_U(int i, int a, int b, int n, int s) {
  return static_cast<long long>(a) * n + b >= i + 2 * s && b > i && a > i && s >= 0;
}

BigInt coeff_closed_form(int i, int a, int b, int n, int s) {
  if (!in_U(i, a, b, n, s)) throw std::domain_error("coeff_closed_form: outside U_i");
  BigInt total = 0;
  for (const auto& uv : enumerate_C(i)) total += nu(uv, a, b, n, s) * Phi(i - uv.codeg(), a - 1);
  return total;
}

}  // namespace floorq
