#include "floorq/invariant.hpp"

#include "floorq/diagram.hpp"
#include "floorq/parallel.hpp"

#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace floorq {

int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

namespace {

// Sums f(D) over diagrams on opts.jobs workers; addition is order-independent.
template <typename Fn>
LaurentPoly sum_over(const std::vector<FloorDiagram>& ds, int jobs, Fn&& f) {
  LaurentPoly total;
  std::mutex mu;
  parallel_for(ds.size(), jobs, [&](std::size_t i) {
    LaurentPoly part = f(ds[i]);
    std::lock_guard<std::mutex> lock(mu);
    total += part;
  });
  return total;
}

std::string cache_key(const HTransversePolygon& p, const std::string& kind, int param, const std::string& extra) {
  return p.literal() + "|" + kind + "|" + std::to_string(param) + "|" + extra;
}

template <typename Compute>
LaurentPoly cached(const InvariantOptions& opts, const std::string& key, Compute&& compute) {
  if (opts.cache) {
    if (auto hit = opts.cache->get(key)) return LaurentPoly::from_json(*hit);
  }
  LaurentPoly v = compute();
  if (opts.cache) opts.cache->put(key, v.to_json());
  return v;
}

std::vector<BigInt> top_of(const LaurentPoly& poly, long long top2, int max_codeg) {
  std::vector<BigInt> out;
  for (int i = 0; i <= max_codeg; ++i) out.push_back(poly.coeff2(static_cast<int>(top2) - 2 * i));
  return out;
}

}  // namespace

LaurentPoly refined_invariant(const HTransversePolygon& p, int genus, const InvariantOptions& opts) {
  const long long iota = lattice_stats(p).interior;
  if (genus < 0 || genus > iota) return {};
  return cached(opts, cache_key(p, "G", genus, ""), [&] {
    auto ds = enumerate_floor_diagrams(p, genus, {-1, opts.jobs});
    return sum_over(ds, opts.jobs, [](const FloorDiagram& d) { return mult(d) * count_markings(d); });
  });
}

LaurentPoly refined_descendant(const HTransversePolygon& p, int s, const std::optional<Pairing>& pairing,
                               const InvariantOptions& opts) {
  const auto st = lattice_stats(p);
  if (s < 0) throw std::invalid_argument("refined_descendant: s must be nonnegative");
  if (s > st.s_max) return {};
  Pairing S = pairing ? *pairing : canonical_pairing(s);
  if (S.order() != s) throw std::invalid_argument("refined_descendant: pairing order differs from s");
  if (!pairing_fits(S, static_cast<int>(st.n_delta))) throw std::invalid_argument("refined_descendant: pairing exceeds n(Delta)");
  return cached(opts, cache_key(p, "G0s", s, S.literal()), [&] {
    auto ds = enumerate_floor_diagrams(p, 0, {-1, opts.jobs});
    return sum_over(ds, opts.jobs, [&](const FloorDiagram& d) { return sum_mu_S(d, S); });
  });
}

std::vector<BigInt> invariant_top_coefficients(const HTransversePolygon& p, int genus, int max_codeg,
                                               const InvariantOptions& opts) {
  const long long iota = lattice_stats(p).interior;
  if (genus < 0 || genus > iota) return std::vector<BigInt>(max_codeg + 1, 0);
  auto ds = enumerate_floor_diagrams(p, genus, {max_codeg, opts.jobs});
  LaurentPoly total = sum_over(ds, opts.jobs, [&](const FloorDiagram& d) {
    return mult_top(d, max_codeg) * count_markings(d);
  });
  return top_of(total, 2 * (iota - genus), max_codeg);
}

std::vector<BigInt> descendant_top_coefficients(const HTransversePolygon& p, int s, int max_codeg,
                                                const std::optional<Pairing>& pairing, const InvariantOptions& opts) {
  const auto st = lattice_stats(p);
  if (s < 0 || s > st.s_max) return std::vector<BigInt>(max_codeg + 1, 0);
  Pairing S = pairing ? *pairing : canonical_pairing(s);
  auto ds = enumerate_floor_diagrams(p, 0, {max_codeg, opts.jobs});
  LaurentPoly total = sum_over(ds, opts.jobs, [&](const FloorDiagram& d) { return sum_mu_S(d, S, max_codeg); });
  return top_of(total, 2 * st.interior, max_codeg);
}

Report verify_pairing_independence(const HTransversePolygon& p, int s, const InvariantOptions& opts) {
  Report r;
  const auto st = lattice_stats(p);
  const int n = static_cast<int>(st.n_delta);
  std::vector<Pairing> pairings = all_pairings(n, s);
  if (n > 12 && pairings.size() > 50) {
    std::mt19937_64 rng(0x5eed5eedULL);
    std::shuffle(pairings.begin(), pairings.end(), rng);
    pairings.resize(50);
    r.note("sampled 50 pairings");
  }
  // Each pairing is evaluated independently; no result is reused across pairings.
  auto ds = enumerate_floor_diagrams(p, 0, {-1, opts.jobs});
  std::optional<LaurentPoly> ref;
  for (const auto& S : pairings) {
    LaurentPoly g = sum_over(ds, opts.jobs, [&](const FloorDiagram& d) { return sum_mu_S(d, S); });
    if (!ref) {
      ref = g;
      r.note(S.literal() + " -> " + g.to_string());
    } else if (!(g == *ref)) {
      r.fail(S.literal() + " -> " + g.to_string() + " differs from " + ref->to_string());
    }
  }
  r.note("checked " + std::to_string(pairings.size()) + " pairings of order " + std::to_string(s));
  return r;
}

Report verify_recursion(const HTransversePolygon& p, int s, const InvariantOptions& opts) {
  const auto st = lattice_stats(p);
  if (s < 0 || 2 * s > st.n_delta - 2)
    throw std::invalid_argument("verify_recursion: needs 2s <= n(Delta) - 2");
  HTransversePolygon chopped = chop_top(p);
  Report r;
  LaurentPoly lhs = refined_descendant(p, s + 1, std::nullopt, opts);
  LaurentPoly g_s = refined_descendant(p, s, std::nullopt, opts);
  LaurentPoly g_chop = refined_descendant(chopped, s, std::nullopt, opts);
  LaurentPoly rhs = g_s - g_chop * BigInt(2);
  r.note("chop_top = " + chopped.literal());
  r.note("G(0;" + std::to_string(s + 1) + ") = " + lhs.to_string());
  r.note("G(0;" + std::to_string(s) + ") - 2 G~(0;" + std::to_string(s) + ") = " + rhs.to_string());
  if (!(lhs == rhs)) r.fail("recursion mismatch at s = " + std::to_string(s));
  return r;
}

Report verify_monotonicity(const HTransversePolygon& p, int i, const InvariantOptions& opts) {
  Report r;
  const auto st = lattice_stats(p);
  std::optional<BigInt> prev;
  std::string chain;
  for (long long s = 0; s <= st.s_max; ++s) {
    LaurentPoly g = refined_descendant(p, static_cast<int>(s), std::nullopt, opts);
    BigInt c = g.coeff2(static_cast<int>(2 * st.interior) - 2 * i);
    chain += (s ? " >= " : "") + c.str();
    if (c < 0) r.fail("negative coefficient at s = " + std::to_string(s));
    if (prev && c > *prev) r.fail("increase at s = " + std::to_string(s));
    prev = c;
  }
  r.note("codegree " + std::to_string(i) + ": " + chain);
  return r;
}

}  // namespace floorq
