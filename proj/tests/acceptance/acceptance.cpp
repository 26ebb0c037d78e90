// Acceptance checks, one PASS/FAIL line per criterion.
//
// Usage: floorq_acceptance [--expect-fail N]... [--only N]...
// The exit status is 0 exactly when the set of failing criteria equals the
// set given by --expect-fail, so a known failure stays visible in the output
// and an unexpected change in either direction fails the run.

#include "floorq/coeff.hpp"
#include "floorq/invariant.hpp"
#include "floorq/parallel.hpp"
#include "floorq/polyfit.hpp"
#include "floorq/polygon.hpp"
#include "floorq/suites.hpp"
#include "floorq/templates.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>

using namespace floorq;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string id;
  double budget_s;
  std::function<Report()> run;
};

// q^{e/2} terms written with doubled exponents.
LaurentPoly poly(std::initializer_list<std::pair<int, long long>> terms) {
  LaurentPoly p;
  for (auto [e2, c] : terms) p += LaurentPoly::monomial(e2, c);
  return p;
}

BigInt binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

void expect_eq(Report& r, const std::string& label, const LaurentPoly& got, const LaurentPoly& want) {
  if (got == want)
    r.note(label + " = " + got.to_string());
  else
    r.fail(label + ": got " + got.to_string() + ", expected " + want.to_string());
}

Report c1(const InvariantOptions& o) {
  Report r;
  auto d3 = make_delta_d(3);
  expect_eq(r, "G_D3(1)", refined_invariant(d3, 1, o), LaurentPoly(1));
  expect_eq(r, "G_D3(0)", refined_invariant(d3, 0, o), poly({{2, 1}, {0, 10}, {-2, 1}}));
  return r;
}

Report c2(const SuiteOptions& so) {
  Report r;
  auto d4 = make_delta_d(4);
  const std::vector<LaurentPoly> want{
      poly({{6, 1}, {4, 13}, {2, 94}, {0, 404}, {-2, 94}, {-4, 13}, {-6, 1}}),
      poly({{4, 3}, {2, 33}, {0, 153}, {-2, 33}, {-4, 3}}),
      poly({{2, 3}, {0, 21}, {-2, 3}}),
      LaurentPoly(1),
  };
  for (int g = 0; g <= 3; ++g)
    expect_eq(r, "G_D4(" + std::to_string(g) + ")", refined_invariant(d4, g, so.inv), want[g]);
  return r;
}

Report c3(const SuiteOptions& so) {
  Report r;
  auto d4 = make_delta_d(4);
  const std::vector<std::vector<long long>> rows{{1, 13, 94, 404}, {1, 11, 70, 264}, {1, 9, 50, 164},
                                                 {1, 7, 34, 96},   {1, 5, 22, 52},  {1, 3, 14, 24}};
  for (int s = 0; s <= 5; ++s) {
    const auto& c = rows[s];
    LaurentPoly want = poly({{6, c[0]}, {4, c[1]}, {2, c[2]}, {0, c[3]}, {-2, c[2]}, {-4, c[1]}, {-6, c[0]}});
    expect_eq(r, "G_D4(0;" + std::to_string(s) + ")", refined_descendant(d4, s, std::nullopt, so.inv), want);
  }
  return r;
}

Report c4(const SuiteOptions& so) {
  Report r;
  auto d3 = make_delta_d(3);
  for (int s = 0; s <= 4; ++s)
    expect_eq(r, "G_D3(0;" + std::to_string(s) + ")", refined_descendant(d3, s, std::nullopt, so.inv),
              poly({{2, 1}, {0, 10 - 2 * s}, {-2, 1}}));
  // Full table against the golden columns, compared as multisets.
  Report pe = suite_published_values(so);
  for (const auto& l : pe.lines)
    if (l.find("marked-class") != std::string::npos) (l.rfind("FAIL", 0) == 0 ? r.fail(l.substr(5)) : r.note(l));
  std::vector<Pairing> S{parse_pairing("pairs:7-8"), parse_pairing("pairs:5-6,7-8"),
                         parse_pairing("pairs:3-4,5-6,7-8"), parse_pairing("pairs:1-2,3-4,5-6,7-8")};
  auto cols = marked_class_columns(d3, S);
  if (cols.size() != 9) r.fail("expected 9 marked classes, got " + std::to_string(cols.size()));
  int zero_cols = 0, head_cols = 0;
  for (const auto& c : cols) {
    bool zero = true;
    for (std::size_t k = 1; k < c.size(); ++k) zero = zero && c[k].is_zero();
    zero_cols += zero;
    head_cols += c[0] == quantum_square(2) && c[2] == poly({{2, 1}, {-2, 1}});
  }
  if (zero_cols != 2) r.fail("expected 2 columns vanishing under S_1..S_4, got " + std::to_string(zero_cols));
  if (head_cols < 1) r.fail("no column with mu = q+2+q^-1 and mu_S2 = q+q^-1");
  r.note(std::to_string(cols.size()) + " marked classes, " + std::to_string(zero_cols) + " vanishing columns");
  return r;
}

Report c5(const InvariantOptions& o) {
  Report r;
  for (const char* lit : {"d:3", "d:4", "abn:2,2,1", "abn:3,2,1", "abn:2,3,0"}) {
    auto p = parse_polygon(lit);
    const auto st = lattice_stats(p);
    for (int g = 0; g <= st.interior; ++g) {
      BigInt got = invariant_top_coefficients(p, g, 0, o)[0];
      BigInt want = binom(st.interior, g);
      std::string label = std::string(lit) + " g=" + std::to_string(g) + ": coef_0 = " + got.str();
      if (got == want)
        r.note(label);
      else
        r.fail(label + ", expected " + want.str());
    }
  }
  return r;
}

// a is capped at kMaxAZeroN when n = 0, where an + 2b <= 14 leaves it free.
constexpr int kMaxAZeroN = 10;

Report c6(const InvariantOptions& o) {
  Report r;
  std::size_t points = 0;
  for (int i = 1; i <= 2; ++i)
    for (int n = 0; n <= 14; ++n)
      for (int a = 1; a <= (n == 0 ? kMaxAZeroN : 14 / n); ++a)
        for (int b = 0; a * n + 2 * b <= 14; ++b)
          for (int s = 0; s <= (a * n + b) / 2; ++s) {
            if (!in_U(i, a, b, n, s)) continue;
            ++points;
            auto p = make_delta_abn(a, b, n);
            BigInt enumerated = descendant_top_coefficients(p, s, i, std::nullopt, o)[i];
            BigInt closed = coeff_closed_form(i, a, b, n, s);
            std::string at = "i=" + std::to_string(i) + " (a,b,n,s)=(" + std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(n) + "," + std::to_string(s) + ")";
            if (enumerated != closed) r.fail(at + ": closed " + closed.str() + " vs enumeration " + enumerated.str());
            if (i == 1) {
              BigInt formula = BigInt((n + 2) * a + 2 * b + 2 - 2 * s);
              if (formula != enumerated) r.fail(at + ": (n+2)a+2b+2-2s = " + formula.str() + " vs " + enumerated.str());
            }
          }
  r.note(std::to_string(points) + " points of U_1, U_2 with an+2b <= 14 (a <= " + std::to_string(kMaxAZeroN) +
         " when n = 0)");
  return r;
}

Report c7(const InvariantOptions& o) {
  Report r;
  for (int d = 3; d <= 5; ++d) {
    auto p = make_delta_d(d);
    const auto smax = lattice_stats(p).s_max;
    for (int s = 0; s <= smax; ++s) {
      BigInt got = descendant_top_coefficients(p, s, 1, std::nullopt, o)[1];
      if (got != 3 * d + 1 - 2 * s)
        r.fail("coef_1 G_D" + std::to_string(d) + "(0;" + std::to_string(s) + ") = " + got.str());
    }
    r.note("coef_1 G_D" + std::to_string(d) + "(0;s) = 3d+1-2s for s = 0.." + std::to_string(smax));
  }
  auto d4 = make_delta_d(4);
  bool differs = false;
  for (int s = 0; s <= lattice_stats(d4).s_max; ++s) {
    BigInt got = descendant_top_coefficients(d4, s, 3, std::nullopt, o)[3];
    const long long t = 11 - 2 * s, y = 12;
    BigInt special = BigInt(t * t * t + 3 * t * t + 59 * t + 81) / 6;
    BigInt generic = BigInt(t * t * t + 6 * t * t + (3 * y + 35) * t + 6 * y + 72) / 6;
    if (got != special) r.fail("coef_3 G_D4(0;" + std::to_string(s) + ") = " + got.str() + ", expected " + special.str());
    differs = differs || got != generic;
  }
  if (!differs) r.fail("coef_3 of D4 agrees with the generic d >= 5 formula everywhere");
  r.note("coef_3 G_D4(0;s) = (t^3+3t^2+59t+81)/6, t = 11-2s, and differs from the generic formula");
  return r;
}

Report c8(const InvariantOptions& o) {
  Report r;
  auto d4 = make_delta_d(4);
  for (int i = 1; i <= 3; ++i)
    for (auto& l : check_discrete_derivative(d4, i, o).lines) (l.rfind("FAIL", 0) == 0 ? r.fail(l.substr(5)) : r.note(l));
  auto d3 = make_delta_d(3);
  for (int i = 0; i <= 1; ++i)
    for (auto& l : check_discrete_derivative(d3, i, o).lines) (l.rfind("FAIL", 0) == 0 ? r.fail(l.substr(5)) : r.note(l));
  return r;
}

Report c10(const InvariantOptions& o) {
  Report r;
  auto merge = [&](const Report& x, const std::string& head) {
    if (x.ok)
      r.note(head + ": all pairings agree");
    for (auto& l : x.lines)
      if (l.rfind("FAIL", 0) == 0) r.fail(head + ": " + l.substr(5));
  };
  merge(verify_pairing_independence(make_delta_d(3), 1, o), "D3 s=1");
  merge(verify_pairing_independence(make_delta_d(3), 2, o), "D3 s=2");
  merge(verify_pairing_independence(make_delta_d(4), 1, o), "D4 s=1");
  return r;
}

Report c12() {
  Report r;
  const std::map<std::pair<int, int>, int> want{{{0, 0}, 1}, {{0, 1}, 2}, {{0, 2}, 4},
                                                {{1, 0}, 1}, {{1, 1}, 3}, {{1, 2}, 10}};
  std::map<std::pair<int, int>, int> got;
  for (const auto& t : enumerate_templates(1, 2)) got[{t.genus(), t.codeg()}]++;
  for (auto [k, v] : want) {
    std::string label = "(g,c)=(" + std::to_string(k.first) + "," + std::to_string(k.second) + "): " +
                        std::to_string(got[k]) + " templates";
    if (got[k] == v)
      r.note(label);
    else
      r.fail(label + ", expected " + std::to_string(v));
  }
  return r;
}

Report polyfit(int i, int g, std::vector<Axis> axes, int jobs) {
  Report r;
  auto rep = verify_polynomiality(
      [i, g](const std::vector<long long>& x) {
        auto p = make_delta_abn(static_cast<int>(x[0]), static_cast<int>(x[1]), static_cast<int>(x[2]));
        return invariant_top_coefficients(p, g, i)[i];
      },
      axes, jobs);
  std::string region;
  for (std::size_t k = 0; k < rep.axes.size(); ++k) {
    const auto& ax = rep.axes[k];
    region += ax.name + "=" + std::to_string(ax.lo) + ".." + std::to_string(ax.lo + ax.degree + 1) + " (degree " +
              std::to_string(ax.degree) + ", measured " +
              (k < rep.measured_degrees.size() ? std::to_string(rep.measured_degrees[k]) : "?") + ", " +
              std::to_string(ax.held_out) + " held out) ";
  }
  std::size_t nonzero = std::count_if(rep.residuals.begin(), rep.residuals.end(), [](auto& x) { return x != "0"; });
  r.note(region + std::to_string(rep.samples) + " samples, " + std::to_string(nonzero) + " nonzero residuals");
  for (const auto& m : rep.messages) r.note(m);
  r.note(rep.fit.to_string({"a", "b", "n"}));
  if (!rep.ok) r.fail("polynomiality check failed");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expected_fail, only;
  for (int k = 1; k + 1 < argc; k += 2) {
    std::string flag = argv[k];
    if (flag == "--expect-fail")
      expected_fail.insert(argv[k + 1]);
    else if (flag == "--only")
      only.insert(argv[k + 1]);
    else {
      std::cerr << "unknown option " << flag << "\n";
      return 2;
    }
  }

  const int jobs = default_jobs();
  SuiteOptions so{InvariantOptions{jobs, nullptr}, FLOORQ_GOLDEN_DIR};
  const InvariantOptions& o = so.inv;

  std::vector<Criterion> criteria{
      {"1", 1, [&] { return c1(o); }},
      {"2", 10, [&] { return c2(so); }},
      {"3", 30, [&] { return c3(so); }},
      {"4", 60, [&] { return c4(so); }},
      {"5", 60, [&] { return c5(o); }},
      {"6", 300, [&] { return c6(o); }},
      {"7", 60, [&] { return c7(o); }},
      {"8", 1, [&] { return c8(o); }},
      {"9", 60, [&] { return suite_recursion(o); }},
      {"10", 60, [&] { return c10(o); }},
      {"11", 60, [&] { return suite_monotonicity(o); }},
      {"12", 10, [&] { return c12(); }},
      {"13", 120, [&] { return suite_bijection(jobs); }},
      {"14", 60, [&] { return suite_identities(12); }},
      {"polyfit(0,1)", 600, [&] { return polyfit(0, 1, {{"a", 4, 2, 6}, {"b", 1, 1, 6}, {"n", 1, 1, 6}}, jobs); }},
      {"polyfit(1,0)", 600, [&] { return polyfit(1, 0, {{"a", 3, 1, 6}, {"b", 2, 1, 6}, {"n", 1, 1, 6}}, jobs); }},
      {"polyfit(0,2)", 600, [&] { return polyfit(0, 2, {{"a", 6, 4, 2}, {"b", 2, 2, 3}, {"n", 1, 2, 3}}, jobs); }},
  };

  std::set<std::string> failed;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = Clock::now();
    Report r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > c.budget_s) r.fail("runtime " + std::to_string(secs) + " s exceeds " + std::to_string(c.budget_s) + " s");
    for (const auto& l : r.lines) std::cout << "    " << l << "\n";
    std::cout << (r.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << secs << " s)"
              << (!r.ok && expected_fail.count(c.id) ? " [known failure]" : "") << "\n"
              << std::flush;
    if (!r.ok) failed.insert(c.id);
  }
  if (only.empty() && failed != expected_fail) {
    std::cout << "failing criteria differ from the expected set\n";
    return 1;
  }
  return failed.empty() || failed == expected_fail ? 0 : 1;
}
