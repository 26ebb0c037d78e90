#include "floorq/suites.hpp"

#include "floorq/diagram.hpp"
#include "floorq/polyfit.hpp"
#include "floorq/templates.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace floorq {

namespace {

LaurentPoly qint0(int k) { return k == 0 ? LaurentPoly() : quantum_integer(k); }

std::string key_of(const std::vector<LaurentPoly>& col) {
  std::string s;
  for (const auto& p : col) s += p.to_json() + ";";
  return s;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"paper-examples", "identities", "monotonicity", "recursion", "bijection", "discrete-derivative"};
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "paper-examples") return suite_published_values(opts);
  if (name == "identities") return suite_identities();
  if (name == "monotonicity") return suite_monotonicity(opts.inv);
  if (name == "recursion") return suite_recursion(opts.inv);
  if (name == "bijection") return suite_bijection(opts.inv.jobs);
  if (name == "discrete-derivative") return suite_discrete_derivative(opts.inv);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::vector<LaurentPoly>> marked_class_columns(const HTransversePolygon& p,
                                                           const std::vector<Pairing>& pairings) {
  std::vector<std::vector<LaurentPoly>> cols;
  for (const auto& d : enumerate_floor_diagrams(p, 0)) {
    for (const auto& m : enumerate_markings(d)) {
      std::vector<LaurentPoly> col{mult(d)};
      for (const auto& S : pairings) col.push_back(mu_S(d, m, S));
      cols.push_back(std::move(col));
    }
  }
  std::sort(cols.begin(), cols.end(), [](const auto& x, const auto& y) { return key_of(x) < key_of(y); });
  return cols;
}

Report suite_published_values(const SuiteOptions& opts) {
  Report r;
  const auto file = opts.golden_dir / "published_values.json";
  std::ifstream in(file);
  if (!in) {
    r.fail("cannot open " + file.string());
    return r;
  }
  auto g = nlohmann::json::parse(in);
  for (const auto& e : g.at("invariants")) {
    auto p = parse_polygon(e.at("polygon").get<std::string>());
    int genus = e.at("genus").get<int>();
    LaurentPoly want = LaurentPoly::from_json(e.at("value").dump());
    LaurentPoly got = refined_invariant(p, genus, opts.inv);
    std::string label = "G(" + e.at("polygon").get<std::string>() + ", g=" + std::to_string(genus) + ")";
    if (got == want)
      r.note("ok " + label + " = " + got.to_string());
    else
      r.fail(label + ": got " + got.to_string() + ", expected " + want.to_string());
  }
  for (const auto& e : g.at("descendants")) {
    auto p = parse_polygon(e.at("polygon").get<std::string>());
    int s = e.at("s").get<int>();
    LaurentPoly want = LaurentPoly::from_json(e.at("value").dump());
    LaurentPoly got = refined_descendant(p, s, std::nullopt, opts.inv);
    std::string label = "G(" + e.at("polygon").get<std::string>() + "; s=" + std::to_string(s) + ")";
    if (got == want)
      r.note("ok " + label + " = " + got.to_string());
    else
      r.fail(label + ": got " + got.to_string() + ", expected " + want.to_string());
  }
  const auto& t = g.at("marked_classes");
  std::vector<Pairing> pairings;
  for (const auto& s : t.at("pairings")) pairings.push_back(parse_pairing(s.get<std::string>()));
  std::vector<std::vector<LaurentPoly>> want;
  for (const auto& col : t.at("columns")) {
    std::vector<LaurentPoly> c;
    for (const auto& v : col) c.push_back(LaurentPoly::from_json(v.dump()));
    want.push_back(std::move(c));
  }
  std::sort(want.begin(), want.end(), [](const auto& x, const auto& y) { return key_of(x) < key_of(y); });
  auto got = marked_class_columns(parse_polygon(t.at("polygon").get<std::string>()), pairings);
  if (got == want)
    r.note("ok marked-class table: " + std::to_string(got.size()) + " columns");
  else
    r.fail("marked-class table differs (" + std::to_string(got.size()) + " columns computed, " +
           std::to_string(want.size()) + " expected)");
  return r;
}

Report suite_identities(int K) {
  Report r;
  int printed_failures = 0;
  for (int k = 1; k <= K; ++k) {
    for (int l = 0; l <= K; ++l) {
      LaurentPoly rhs;
      for (int c = 0; c < k; ++c) rhs += quantum_integer(2 * k + l - 1 - 2 * c);
      if (!(quantum_integer(k) * quantum_integer(k + l) == rhs))
        r.fail("product expansion fails at k=" + std::to_string(k) + ", l=" + std::to_string(l));
    }
    for (int l = 1; l <= K; ++l) {
      LaurentPoly lhs = quantum_integer(k) * quantum_integer(k + l - 1);
      LaurentPoly base = qint0(k - 1) * quantum_integer(k + l);
      if (!(lhs == base + quantum_integer(l)))
        r.fail("[k][k+l-1] = [k-1][k+l] + [l] fails at k=" + std::to_string(k) + ", l=" + std::to_string(l));
      if (!(lhs == base + quantum_integer(k))) ++printed_failures;
      if (!poly_geq(lhs, base)) r.fail("[k][k+l-1] >= [k-1][k+l] fails");
      LaurentPoly kl = quantum_integer(k) * quantum_integer(l) * quantum_integer(k + l);
      LaurentPoly sq = quantum_square(k) * quantum_square(l);
      if (!poly_geq(sq, divide_exact(kl, quantum_integer(2))))
        r.fail("[k]^2[l]^2 >= [k][l][k+l]/[2] fails at k=" + std::to_string(k) + ", l=" + std::to_string(l));
    }
    if (!(divide_exact(quantum_integer(2 * k), quantum_integer(2)) == substitute_q_squared(quantum_integer(k))))
      r.fail("[2k]/[2] = [k](q^2) fails at k=" + std::to_string(k));
    if (!poly_geq(quantum_integer(2 * k - 1), substitute_q_squared(quantum_integer(k))) ||
        !poly_geq(quantum_square(k), quantum_integer(2 * k - 1)))
      r.fail("[k](q^2) <= [2k-1] <= [k]^2 fails at k=" + std::to_string(k));
  }
  r.note("checked k, l <= " + std::to_string(K));
  r.note("variant with +[k] instead of +[l] fails in " + std::to_string(printed_failures) + " cases (all with k != l)");
  return r;
}

Report suite_monotonicity(const InvariantOptions& opts) {
  Report r;
  for (const char* lit : {"abn:3,0,1", "abn:4,0,1", "abn:2,2,1"}) {
    auto p = parse_polygon(lit);
    const auto st = lattice_stats(p);
    for (int i = 0; i <= st.interior; ++i) {
      Report one = verify_monotonicity(p, i, opts);
      for (auto& l : one.lines) (one.ok ? r.note(std::string(lit) + " " + l) : r.fail(std::string(lit) + " " + l));
    }
  }
  return r;
}

Report suite_recursion(const InvariantOptions& opts) {
  Report r;
  auto run = [&](const char* lit, int smax) {
    auto p = parse_polygon(lit);
    for (int s = 0; s <= smax; ++s) {
      Report one = verify_recursion(p, s, opts);
      const std::string head = std::string(lit) + " s=" + std::to_string(s) + ": ";
      if (one.ok)
        r.note(head + "ok");
      else
        for (auto& l : one.lines) r.fail(head + l);
    }
  };
  run("abn:4,0,1", 4);
  run("abn:3,0,1", 2);
  return r;
}

Report suite_bijection(int jobs) {
  Report r;
  struct Case {
    int a, b, n, g, i;
  };
  for (Case c : {Case{4, 3, 1, 0, 1}, Case{4, 3, 1, 1, 1}, Case{3, 2, 0, 0, 1}, Case{4, 2, 1, 0, 2}}) {
    const bool inside = c.b > c.i && c.a > c.i;
    auto rep = verify_bijection(c.a, c.b, c.n, c.g, c.i, inside, jobs);
    std::string head = "(a,b,n,g,i)=(" + std::to_string(c.a) + "," + std::to_string(c.b) + "," + std::to_string(c.n) +
                       "," + std::to_string(c.g) + "," + std::to_string(c.i) + ")" +
                       (inside ? "" : " [b = i, outside b > i]") + ": " + std::to_string(rep.reconstructed) +
                       " reconstructed, " + std::to_string(rep.enumerated) + " enumerated";
    if (rep.ok)
      r.note(head);
    else
      r.fail(head);
    for (auto& m : rep.messages) r.note("  " + m);
  }
  std::size_t checked = 0;
  for (const auto& t : enumerate_templates(2, 3)) {
    ++checked;
    if (t.codeg() + t.genus() < t.length - 1) r.fail("template violates codeg + g >= l - 1: " + to_json(t));
  }
  r.note("length bound holds on " + std::to_string(checked) + " templates with g <= 2, codeg <= 3");
  checked = 0;
  for (int a = 3; a <= 8; ++a)
    for (int n = 1; n <= 3; ++n)
      for (const auto& t : enumerate_capping_trees(a, n, 12)) {
        ++checked;
        if (t.codeg(n) < n * (a - 2)) r.fail("capping tree below n(a-2)");
      }
  r.note("capping-tree bound holds on " + std::to_string(checked) + " trees");
  return r;
}

Report check_discrete_derivative(const HTransversePolygon& p, int i, const InvariantOptions& opts) {
  Report r;
  const auto st = lattice_stats(p);
  std::vector<Rational> vals;
  std::string seq;
  for (int s = 0; s <= st.s_max; ++s) {
    auto c = descendant_top_coefficients(p, s, i, std::nullopt, opts);
    vals.emplace_back(c[i]);
    seq += (s ? "," : "") + c[i].str();
  }
  if (static_cast<int>(vals.size()) <= i) {
    r.note("s range too short for order " + std::to_string(i));
    return r;
  }
  auto der = discrete_derivative(vals, i);
  const Rational want = Rational(BigInt(1) << i);
  bool constant = std::all_of(der.begin(), der.end(), [&](const Rational& v) { return v == want; });
  std::string msg = p.literal() + " i=" + std::to_string(i) + " values (" + seq + ")";
  if (constant)
    r.note(msg + " derivative constantly " + want.str());
  else
    r.fail(msg + " derivative not constantly " + want.str());
  return r;
}

Report suite_discrete_derivative(const InvariantOptions& opts) {
  Report r;
  struct Poly {
    const char* lit;
    bool abn;
  };
  for (Poly P : {Poly{"abn:3,0,1", true}, Poly{"abn:4,0,1", true}, Poly{"abn:5,0,1", true}, Poly{"abn:2,2,1", true},
                 Poly{"abn:3,2,1", true}, Poly{"abn:2,3,0", true}, Poly{"ht:dl=[1,0,-1];dr=[0,1,2];db=4;dt=1", false}}) {
    auto p = parse_polygon(P.lit);
    const auto st = lattice_stats(p);
    for (int i = 0; i <= st.interior; ++i) {
      const bool main_range = 2 * i <= p.db + 1;
      const bool abn_extra = P.abn && 2 * i == p.db + 2;
      if (!main_range && !abn_extra) continue;
      Report one = check_discrete_derivative(p, i, opts);
      for (auto& l : one.lines) (one.ok ? r.note(l) : r.fail(l));
    }
  }
  return r;
}

}  // namespace floorq
