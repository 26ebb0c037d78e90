#include "floorq/marking.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace floorq {

DiagramPoset build_poset(const FloorDiagram& d) {
  DiagramPoset P;
  const int f = d.num_floors();
  for (int v = 0; v < f; ++v) {
    PosetElement e;
    e.kind = PosetElement::FloorEl;
    e.floor = v;
    P.elements.push_back(e);
  }
  for (int i = 0; i < static_cast<int>(d.internal.size()); ++i) {
    PosetElement e;
    e.kind = PosetElement::InternalEl;
    e.edge = i;
    e.from = d.internal[i].from;
    e.to = d.internal[i].to;
    e.weight = d.internal[i].weight;
    P.elements.push_back(e);
  }
  for (int v = 0; v < f; ++v)
    for (int k = 0; k < d.sources[v]; ++k) {
      PosetElement e;
      e.kind = PosetElement::SourceEl;
      e.floor = v;
      e.to = v;
      e.weight = 1;
      P.elements.push_back(e);
    }
  for (int v = 0; v < f; ++v)
    for (int k = 0; k < d.sinks[v]; ++k) {
      PosetElement e;
      e.kind = PosetElement::SinkEl;
      e.floor = v;
      e.from = v;
      e.weight = 1;
      P.elements.push_back(e);
    }
  const int n = P.size();
  P.covers_up.assign(n, {});
  P.covers_down.assign(n, {});
  for (int i = f; i < n; ++i) {
    const auto& e = P.elements[i];
    if (e.from >= 0) P.covers_up[e.from].push_back(i), P.covers_down[i].push_back(e.from);
    if (e.to >= 0) P.covers_up[i].push_back(e.to), P.covers_down[e.to].push_back(i);
  }
  return P;
}

// ---------------------------------------------------------------------------
// Pairings

std::string Pairing::literal() const {
  std::ostringstream os;
  os << "pairs:";
  for (std::size_t i = 0; i < firsts.size(); ++i) os << (i ? "," : "") << firsts[i] << "-" << firsts[i] + 1;
  return os.str();
}

Pairing canonical_pairing(int s) {
  Pairing p;
  for (int i = 0; i < s; ++i) p.firsts.push_back(2 * i + 1);
  return p;
}

Pairing parse_pairing(const std::string& text) {
  if (text.rfind("pairs:", 0) != 0) throw std::invalid_argument("pairing literal must start with 'pairs:'");
  Pairing p;
  std::stringstream ss(text.substr(6));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto dash = tok.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("pair '" + tok + "' lacks '-'");
    int a = 0, b = 0;
    try {
      a = std::stoi(tok.substr(0, dash));
      b = std::stoi(tok.substr(dash + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("pair '" + tok + "' is not numeric");
    }
    if (a > b) std::swap(a, b);
    if (b != a + 1 || a < 1) throw std::invalid_argument("pair '" + tok + "' is not of the form {i,i+1}");
    p.firsts.push_back(a);
  }
  std::sort(p.firsts.begin(), p.firsts.end());
  for (std::size_t i = 1; i < p.firsts.size(); ++i)
    if (p.firsts[i] <= p.firsts[i - 1] + 1) throw std::invalid_argument("pairs overlap");
  return p;
}

std::vector<Pairing> all_pairings(int n, int s) {
  std::vector<Pairing> out;
  Pairing cur;
  std::function<void(int, int)> rec = [&](int start, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i + 1 <= n; ++i) {
      if (n - (i + 1) < 2 * (left - 1)) break;
      cur.firsts.push_back(i);
      rec(i + 2, left - 1);
      cur.firsts.pop_back();
    }
  };
  rec(1, s);
  return out;
}

bool pairing_fits(const Pairing& s, int n) {
  for (int i : s.firsts)
    if (i < 1 || i + 1 > n) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Explicit linear extensions and orbits

std::vector<Marking> enumerate_labeled_markings(const FloorDiagram& d) {
  DiagramPoset P = build_poset(d);
  const int n = P.size();
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i) indeg[i] = static_cast<int>(P.covers_down[i].size());
  std::vector<Marking> out;
  Marking cur;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.assignment.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i] || indeg[i] != 0) continue;
      used[i] = 1;
      cur.assignment.push_back(i);
      for (int j : P.covers_up[i]) --indeg[j];
      rec();
      for (int j : P.covers_up[i]) ++indeg[j];
      cur.assignment.pop_back();
      used[i] = 0;
    }
  };
  rec();
  return out;
}

namespace {

// Label-preserving floor permutations that carry the diagram to itself.
std::vector<std::vector<int>> floor_automorphisms_brute(const FloorDiagram& d) {
  const int f = d.num_floors();
  std::map<Elevator, int> edges;
  for (const auto& e : d.internal) ++edges[e];
  std::vector<int> sigma(f);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int v = 0; v < f && ok; ++v)
      ok = d.floors[sigma[v]] == d.floors[v] && d.sources[sigma[v]] == d.sources[v] && d.sinks[sigma[v]] == d.sinks[v];
    if (!ok) continue;
    std::map<Elevator, int> img;
    for (const auto& e : d.internal) ++img[{sigma[e.from], sigma[e.to], e.weight}];
    if (img == edges) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

// Groups of interchangeable elements: equal-weight parallel elevators and
// sources/sinks sharing a floor. Keyed by (kind, from, to, weight).
std::map<std::tuple<int, int, int, int>, std::vector<int>> element_classes(const DiagramPoset& P) {
  std::map<std::tuple<int, int, int, int>, std::vector<int>> cls;
  for (int i = 0; i < P.size(); ++i) {
    const auto& e = P.elements[i];
    if (e.kind == PosetElement::FloorEl) continue;
    cls[{static_cast<int>(e.kind), e.from, e.to, e.weight}].push_back(i);
  }
  return cls;
}

}  // namespace

std::vector<std::vector<int>> automorphism_permutations(const FloorDiagram& d) {
  DiagramPoset P = build_poset(d);
  auto cls = element_classes(P);
  const int f = d.num_floors();
  std::vector<std::vector<int>> perms;
  for (const auto& sigma : floor_automorphisms_brute(d)) {
    // Base map: k-th element of a class to the k-th element of the image class.
    std::vector<int> base(P.size());
    for (int v = 0; v < f; ++v) base[v] = sigma[v];
    for (const auto& [key, members] : cls) {
      auto [kind, from, to, w] = key;
      const auto& img = cls.at({kind, from < 0 ? -1 : sigma[from], to < 0 ? -1 : sigma[to], w});
      for (std::size_t k = 0; k < members.size(); ++k) base[members[k]] = img[k];
    }
    // Compose with all permutations inside each class.
    std::vector<std::vector<int>> layer{base};
    for (const auto& [key, members] : cls) {
      if (members.size() < 2) continue;
      std::vector<std::vector<int>> next;
      std::vector<int> order(members.size());
      std::iota(order.begin(), order.end(), 0);
      for (const auto& g : layer) {
        auto o = order;
        do {
          auto h = g;
          for (std::size_t k = 0; k < members.size(); ++k) h[members[k]] = g[members[o[k]]];
          next.push_back(std::move(h));
        } while (std::next_permutation(o.begin(), o.end()));
      }
      layer = std::move(next);
    }
    for (auto& g : layer) perms.push_back(std::move(g));
  }
  return perms;
}

OrbitReport marking_orbits(const FloorDiagram& d) {
  OrbitReport rep;
  auto labeled = enumerate_labeled_markings(d);
  rep.labeled = labeled.size();
  auto group = automorphism_permutations(d);
  rep.group_order = group.size();
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < labeled.size(); ++i) index[labeled[i].assignment] = i;
  std::vector<char> seen(labeled.size(), 0);
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    Marking least = labeled[i];
    for (const auto& g : group) {
      std::vector<int> img(labeled[i].assignment.size());
      for (std::size_t k = 0; k < img.size(); ++k) img[k] = g[labeled[i].assignment[k]];
      auto it = index.find(img);
      if (it == index.end()) throw std::logic_error("automorphism image is not a marking");
      if (!seen[it->second]) {
        seen[it->second] = 1;
        orbit.push_back(it->second);
        if (labeled[it->second] < least) least = labeled[it->second];
      }
    }
    if (orbit.size() != group.size()) rep.free_action = false;
    rep.representatives.push_back(least);
  }
  std::sort(rep.representatives.begin(), rep.representatives.end());
  return rep;
}

std::vector<Marking> enumerate_markings(const FloorDiagram& d) { return marking_orbits(d).representatives; }

// ---------------------------------------------------------------------------
// Compatibility and mu_S

namespace {

// Floor an elevator emanates from / ends at, -1 if none.
int out_floor(const PosetElement& e) { return e.kind == PosetElement::InternalEl || e.kind == PosetElement::SinkEl ? e.from : -1; }
int in_floor(const PosetElement& e) { return e.kind == PosetElement::InternalEl || e.kind == PosetElement::SourceEl ? e.to : -1; }

bool adjacent(const PosetElement& elev, int v) { return elev.from == v || elev.to == v; }

bool pair_ok(const PosetElement& x, const PosetElement& y) {
  const bool fx = !x.is_elevator(), fy = !y.is_elevator();
  if (fx && fy) return false;
  if (fx) return adjacent(y, x.floor);
  if (fy) return adjacent(x, y.floor);
  const int ox = out_floor(x), oy = out_floor(y), ix = in_floor(x), iy = in_floor(y);
  return (ox >= 0 && ox == oy) || (ix >= 0 && ix == iy);
}

const LaurentPoly& e2_factor(int w1, int w2) {
  static thread_local std::map<std::pair<int, int>, LaurentPoly> cache;
  auto key = std::minmax(w1, w2);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LaurentPoly num = quantum_integer(w1) * quantum_integer(w2) * quantum_integer(w1 + w2);
  return cache.emplace(key, divide_exact(num, quantum_integer(2))).first->second;
}

const LaurentPoly& e1_factor(int w) {
  static thread_local std::map<int, LaurentPoly> cache;
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  return cache.emplace(w, substitute_q_squared(quantum_integer(w))).first->second;
}

const LaurentPoly& e0_factor(int w) {
  static thread_local std::map<int, LaurentPoly> cache;
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  return cache.emplace(w, quantum_square(w)).first->second;
}

}  // namespace

bool is_compatible(const FloorDiagram& d, const Marking& m, const Pairing& s) {
  DiagramPoset P = build_poset(d);
  for (int i : s.firsts) {
    if (i + 1 > static_cast<int>(m.assignment.size())) return false;
    if (!pair_ok(P.elements[m.assignment[i - 1]], P.elements[m.assignment[i]])) return false;
  }
  return true;
}

LaurentPoly mu_S(const FloorDiagram& d, const Marking& m, const Pairing& s) {
  if (!is_compatible(d, m, s)) return {};
  DiagramPoset P = build_poset(d);
  std::vector<char> paired(P.size(), 0);
  LaurentPoly mu(1);
  for (int i : s.firsts) {
    const auto& x = P.elements[m.assignment[i - 1]];
    const auto& y = P.elements[m.assignment[i]];
    paired[m.assignment[i - 1]] = paired[m.assignment[i]] = 1;
    if (x.is_elevator() && y.is_elevator())
      mu *= e2_factor(x.weight, y.weight);  // E_2
    else
      mu *= e1_factor(x.is_elevator() ? x.weight : y.weight);  // E_1
  }
  for (int i = 0; i < P.size(); ++i)
    if (P.elements[i].is_elevator() && !paired[i]) mu *= e0_factor(P.elements[i].weight);  // E_0
  return mu;
}

// ---------------------------------------------------------------------------
// Compressed down-set DP

namespace {

struct ElementClass {
  PosetElement proto;  // representative element
  int size = 1;
};

struct Compressed {
  std::vector<ElementClass> classes;
  std::vector<std::vector<int>> blockers;  // classes that must be exhausted first
  int n = 0;
};

Compressed compress(const FloorDiagram& d) {
  Compressed c;
  DiagramPoset P = build_poset(d);
  c.n = P.size();
  const int f = d.num_floors();
  for (int v = 0; v < f; ++v) c.classes.push_back({P.elements[v], 1});
  for (const auto& [key, members] : element_classes(P))
    c.classes.push_back({P.elements[members.front()], static_cast<int>(members.size())});
  c.blockers.assign(c.classes.size(), {});
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    const auto& e = c.classes[k].proto;
    if (e.kind == PosetElement::FloorEl) {
      for (std::size_t j = 0; j < c.classes.size(); ++j) {
        const auto& x = c.classes[j].proto;
        if (x.is_elevator() && x.to == e.floor) c.blockers[k].push_back(static_cast<int>(j));
      }
    } else if (e.from >= 0) {
      c.blockers[k].push_back(e.from);  // floor classes share the floor index
    }
  }
  return c;
}

template <typename Value, typename Step>
class ClassDP {
 public:
  ClassDP(const Compressed& c, const Pairing& s, Step step) : c_(c), step_(step) {
    first_.assign(c.n + 2, 0);
    second_.assign(c.n + 2, 0);
    for (int i : s.firsts) {
      first_[i] = 1;
      second_[i + 1] = 1;
    }
  }

  Value run() {
    std::string state(c_.classes.size(), '\0');
    return go(state, -1, 0);
  }

 private:
  Value go(std::string& state, int pending, int placed) {
    if (placed == c_.n) return step_.one();
    std::string key = state;
    key.push_back(static_cast<char>(pending + 1));
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const int pos = placed + 1;
    Value acc = step_.zero();
    for (std::size_t k = 0; k < c_.classes.size(); ++k) {
      if (static_cast<int>(static_cast<unsigned char>(state[k])) >= c_.classes[k].size) continue;
      bool ready = true;
      for (int b : c_.blockers[k])
        if (static_cast<unsigned char>(state[b]) < c_.classes[b].size) {
          ready = false;
          break;
        }
      if (!ready) continue;
      int next_pending = -1;
      const PosetElement* pend = nullptr;
      if (second_[pos]) {
        pend = &c_.classes[pending].proto;
        if (!pair_ok(*pend, c_.classes[k].proto)) continue;
      } else if (first_[pos]) {
        next_pending = static_cast<int>(k);
      }
      ++state[k];
      Value sub = go(state, next_pending, placed + 1);
      --state[k];
      step_.accumulate(acc, pend, c_.classes[k].proto, first_[pos] != 0, sub);
    }
    memo_.emplace(std::move(key), acc);
    return acc;
  }

  const Compressed& c_;
  Step step_;
  std::vector<char> first_, second_;
  std::unordered_map<std::string, Value> memo_;
};

struct CountStep {
  BigInt one() const { return 1; }
  BigInt zero() const { return 0; }
  void accumulate(BigInt& acc, const PosetElement*, const PosetElement&, bool, const BigInt& sub) const { acc += sub; }
};

struct MuStep {
  int keep = -1;
  LaurentPoly one() const { return LaurentPoly(1); }
  LaurentPoly zero() const { return {}; }
  void accumulate(LaurentPoly& acc, const PosetElement* pend, const PosetElement& cur, bool opens_pair,
                  const LaurentPoly& sub) const {
    if (sub.is_zero()) return;
    const LaurentPoly* factor = nullptr;
    if (pend) {
      if (pend->is_elevator() && cur.is_elevator())
        factor = &e2_factor(pend->weight, cur.weight);
      else
        factor = &e1_factor(pend->is_elevator() ? pend->weight : cur.weight);
    } else if (!opens_pair && cur.is_elevator() && cur.weight > 1) {
      factor = &e0_factor(cur.weight);
    }
    if (!factor) {
      acc += sub;
    } else if (keep >= 0) {
      acc += mul_top(*factor, sub, keep);
    } else {
      acc += *factor * sub;
    }
  }
};

}  // namespace

BigInt count_markings(const FloorDiagram& d) {
  Compressed c = compress(d);
  ClassDP<BigInt, CountStep> dp(c, Pairing{}, CountStep{});
  BigInt words = dp.run();
  const long long aut = canonicalize(d).floor_automorphisms;
  if (words % aut != 0) throw std::logic_error("count_markings: automorphism action is not free");
  return words / aut;
}

LaurentPoly sum_mu_S(const FloorDiagram& d, const Pairing& s, int keep) {
  if (!pairing_fits(s, d.n_marks())) throw std::invalid_argument("sum_mu_S: pairing exceeds n(D)");
  const long long aut = canonicalize(d).floor_automorphisms;
  Compressed c = compress(d);
  LaurentPoly total;
  if (s.firsts.empty()) {
    ClassDP<BigInt, CountStep> dp(c, s, CountStep{});
    total = (keep >= 0 ? mult_top(d, keep) : mult(d)) * dp.run();
  } else {
    ClassDP<LaurentPoly, MuStep> dp(c, s, MuStep{keep});
    total = dp.run();
  }
  LaurentPoly out;
  for (const auto& [e, coef] : total.terms()) {
    if (coef % aut != 0) throw std::logic_error("sum_mu_S: automorphism action is not free");
    out += LaurentPoly::monomial(e, coef / aut);
  }
  return out;
}

}  // namespace floorq
