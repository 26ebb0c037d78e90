#include "floorq/cache.hpp"
#include "floorq/coeff.hpp"
#include "floorq/diagram.hpp"
#include "floorq/invariant.hpp"
#include "floorq/marking.hpp"
#include "floorq/parallel.hpp"
#include "floorq/polyfit.hpp"
#include "floorq/polygon.hpp"
#include "floorq/suites.hpp"
#include "floorq/templates.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <map>
#include <regex>

#ifndef FLOORQ_GOLDEN_DIR
#define FLOORQ_GOLDEN_DIR "tests/golden"
#endif

using namespace floorq;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HTransversePolygon polygon_arg(const std::string& text) {
  try {
    return parse_polygon(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void print_poly(const LaurentPoly& p, const std::string& format, const nlohmann::ordered_json& meta) {
  if (format == "json") {
    auto j = meta;
    j["value"] = nlohmann::json::parse(p.to_json());
    j["text"] = p.to_string();
    std::cout << j.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "exponent,coefficient\n";
    for (const auto& [e2, c] : p.terms()) std::cout << exponent_string(e2) << "," << c << "\n";
  } else {
    std::cout << p.to_string() << "\n";
  }
}

// "a=3..5,b=2..4,n=0..2,s=0..1"
std::map<std::string, std::pair<int, int>> parse_grid(const std::string& text) {
  std::map<std::string, std::pair<int, int>> g;
  std::regex item(R"(\s*([abns])\s*=\s*(-?\d+)(?:\.\.(-?\d+))?\s*)");
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string part = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::smatch m;
    if (!std::regex_match(part, m, item)) throw UsageError("bad grid item: " + part);
    int lo = std::stoi(m[2]);
    int hi = m[3].matched ? std::stoi(m[3]) : lo;
    if (hi < lo) throw UsageError("empty range for " + m[1].str());
    g[m[1]] = {lo, hi};
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (const char* v : {"a", "b", "n", "s"})
    if (!g.count(v)) throw UsageError(std::string("grid is missing ") + v);
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Refined tropical invariants via floor diagrams"};
  app.require_subcommand(1);
  int jobs = default_jobs();
  std::string format = "text";
  bool no_cache = false;
  app.add_option("--jobs,-j", jobs, "Worker threads (default: logical cores)")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--no-cache", no_cache, "Do not read or write the result cache");

  std::string polygon;
  int genus = 0, s = 0, i = 0, g = 0, max_genus = 1, max_codeg = 2, a = 3, n = 1;
  std::string pairing, grid, suite, golden_dir = FLOORQ_GOLDEN_DIR;
  bool fit = false, clear = false;
  std::vector<int> from;

  auto* inv = app.add_subcommand("invariant", "Print G_Delta(g)");
  inv->add_option("--polygon,-p", polygon, "abn:a,b,n | d:k | ht:dl=[..];dr=[..];db=N;dt=M")->required();
  inv->add_option("--genus,-g", genus)->required();

  auto* desc = app.add_subcommand("descendant", "Print G_Delta(0;s)");
  desc->add_option("--polygon,-p", polygon)->required();
  desc->add_option("--s", s)->required();
  desc->add_option("--pairing", pairing, "pairs:1-2,3-4");

  auto* coeffs = app.add_subcommand("coeffs", "Codegree-i coefficients of G_{a,b,n}(0;s) on a grid");
  coeffs->add_option("--i", i)->required();
  coeffs->add_option("--grid", grid, "a=3..5,b=2..4,n=0..2,s=0..1")->required();
  coeffs->add_flag("--fit", fit, "Fit a polynomial of degree i per variable from the grid's lower corner");

  auto* fitc = app.add_subcommand("fit", "Polynomiality check of coef_i G_{a,b,n}(g) in (a,b,n)");
  fitc->add_option("--i", i)->required();
  fitc->add_option("--g", g)->required();
  fitc->add_option("--from", from, "Lower corner a b n (default: smallest admissible)")->expected(3);

  auto* templ = app.add_subcommand("templates", "List templates");
  templ->add_option("--max-genus", max_genus);
  templ->add_option("--max-codeg", max_codeg);

  auto* cap = app.add_subcommand("capping", "List capping trees");
  cap->add_option("--a", a)->required();
  cap->add_option("--n", n)->required();
  cap->add_option("--max-codeg", max_codeg)->required();

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", suite)->required();
  ver->add_option("--golden-dir", golden_dir);

  auto* cache_cmd = app.add_subcommand("cache", "Show or clear the result cache ($FLOORQ_CACHE_DIR)");
  cache_cmd->add_flag("--clear", clear);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  ResultCache cache(ResultCache::default_dir());
  InvariantOptions opts{jobs, no_cache ? nullptr : &cache};

  try {
    if (*inv) {
      auto p = polygon_arg(polygon);
      const auto st = lattice_stats(p);
      if (genus < 0 || genus > st.interior) std::cerr << "warning: genus outside 0.." << st.interior << "\n";
      print_poly(refined_invariant(p, genus, opts), format, {{"polygon", p.literal()}, {"genus", genus}});
    } else if (*desc) {
      auto p = polygon_arg(polygon);
      const auto st = lattice_stats(p);
      std::optional<Pairing> S;
      if (!pairing.empty()) {
        try {
          S = parse_pairing(pairing);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
      if (s > st.s_max) std::cerr << "warning: s exceeds s_max = " << st.s_max << "\n";
      print_poly(refined_descendant(p, s, S, opts), format, {{"polygon", p.literal()}, {"s", s}});
    } else if (*coeffs) {
      auto gr = parse_grid(grid);
      nlohmann::ordered_json rows = nlohmann::json::array();
      std::size_t points = 0;
      for (int av = gr["a"].first; av <= gr["a"].second; ++av)
        for (int bv = gr["b"].first; bv <= gr["b"].second; ++bv)
          for (int nv = gr["n"].first; nv <= gr["n"].second; ++nv)
            for (int sv = gr["s"].first; sv <= gr["s"].second; ++sv) {
              if (av < 1 || bv < 0 || nv < 0 || (bv == 0 && nv == 0)) continue;
              auto p = make_delta_abn(av, bv, nv);
              if (sv > lattice_stats(p).s_max) continue;
              if (points++ == 0 && format == "csv") std::cout << "i,a,b,n,s,value,source\n";
              std::vector<std::pair<std::string, BigInt>> vals;
              vals.emplace_back("enumeration", descendant_top_coefficients(p, sv, i, std::nullopt, opts)[i]);
              if (in_U(i, av, bv, nv, sv)) vals.emplace_back("closed_form", coeff_closed_form(i, av, bv, nv, sv));
              for (auto& [src, v] : vals) {
                if (format == "csv")
                  std::cout << i << "," << av << "," << bv << "," << nv << "," << sv << "," << v << "," << src << "\n";
                else
                  rows.push_back({{"i", i}, {"a", av}, {"b", bv}, {"n", nv}, {"s", sv}, {"value", v.str()},
                                  {"source", src}});
              }
            }
      if (points == 0) throw UsageError("grid contains no admissible (a,b,n,s)");
      if (format == "json") std::cout << rows.dump(1) << "\n";
      if (format == "text")
        for (auto& r : rows)
          std::cout << "a=" << r["a"] << " b=" << r["b"] << " n=" << r["n"] << " s=" << r["s"] << "  "
                    << r["value"].get<std::string>() << "  (" << r["source"].get<std::string>() << ")\n";
      if (fit) {
        std::vector<Axis> axes{{"a", gr["a"].first, i}, {"b", gr["b"].first, i}, {"n", gr["n"].first, i},
                               {"s", gr["s"].first, i}};
        auto rep = verify_polynomiality(
            [&](const std::vector<long long>& x) {
              auto p = make_delta_abn(static_cast<int>(x[0]), static_cast<int>(x[1]), static_cast<int>(x[2]));
              return descendant_top_coefficients(p, static_cast<int>(x[3]), i, std::nullopt, {1, opts.cache})[i];
            },
            axes, jobs);
        std::cout << rep.to_json() << "\n";
        if (!rep.ok) return 1;
      }
    } else if (*fitc) {
      if (i < 0 || g < 0) throw UsageError("i and g must be nonnegative");
      long long a0 = i + 2 * g + 2, b0 = i + 1, n0 = 1;
      while (b0 + n0 <= static_cast<long long>(g + 2) * i + g) ++b0;
      if (!from.empty()) {
        a0 = from[0];
        b0 = from[1];
        n0 = from[2];
      }
      std::vector<Axis> axes{{"a", a0, i + 2 * g}, {"b", b0, i + g}, {"n", n0, i + g}};
      auto rep = verify_polynomiality(
          [&](const std::vector<long long>& x) {
            auto p = make_delta_abn(static_cast<int>(x[0]), static_cast<int>(x[1]), static_cast<int>(x[2]));
            return invariant_top_coefficients(p, g, i, {1, opts.cache})[i];
          },
          axes, jobs);
      std::cout << rep.to_json() << "\n";
      return rep.ok ? 0 : 1;
    } else if (*templ) {
      auto ts = enumerate_templates(max_genus, max_codeg);
      if (format == "json") {
        std::cout << "[\n";
        for (std::size_t k = 0; k < ts.size(); ++k) std::cout << " " << to_json(ts[k]) << (k + 1 < ts.size() ? ",\n" : "\n");
        std::cout << "]\n";
      } else {
        std::map<std::pair<int, int>, int> census;
        for (const auto& t : ts) census[{t.genus(), t.codeg()}]++;
        std::cout << "genus,codegree,count\n";
        for (auto& [k, v] : census) std::cout << k.first << "," << k.second << "," << v << "\n";
      }
    } else if (*cap) {
      auto ts = enumerate_capping_trees(a, n, max_codeg);
      for (const auto& t : ts) {
        nlohmann::ordered_json j;
        j["tree"] = canonical_tree_string(t.parent);
        j["parent"] = t.parent;
        j["weight"] = t.weight;
        j["codegree"] = t.codeg(n);
        std::cout << j.dump() << "\n";
      }
      if (ts.empty()) std::cout << "no capping trees\n";
    } else if (*ver) {
      SuiteOptions so{opts, golden_dir};
      Report r;
      try {
        r = run_suite(suite, so);
      } catch (const std::invalid_argument& e) {
        if (std::string(e.what()).rfind("unknown suite", 0) == 0) throw UsageError(e.what());
        throw;
      }
      for (const auto& l : r.lines) std::cout << l << "\n";
      std::cout << (r.ok ? "PASS " : "FAIL ") << suite << "\n";
      return r.ok ? 0 : 1;
    } else if (*cache_cmd) {
      std::cout << "cache directory: " << cache.dir().string() << "\n";
      if (clear)
        std::cout << "removed " << cache.clear() << " entries\n";
      else
        std::cout << cache.entry_count() << " entries\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
