#include "floorq/templates.hpp"

#include "floorq/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace floorq {

int Template::sources_total() const { return std::accumulate(sources.begin(), sources.end(), 0); }
int Template::sinks_total() const { return std::accumulate(sinks.begin(), sinks.end(), 0); }

int Template::genus() const {
  int e = static_cast<int>(long_edges.size()) + std::accumulate(short_counts.begin(), short_counts.end(), 0);
  return e - length + 1;
}

int Template::codeg() const {
  int c = 0;
  for (int v = 0; v < length; ++v) c += sources[v] * v + sinks[v] * (length - 1 - v);
  for (const auto& e : long_edges) c += (e.to - e.from - 1) * e.weight;
  return c;
}

bool has_separating_edge(const Template& t) {
  struct Edge {
    int from, to;
  };
  std::vector<Edge> internal;
  for (int j = 0; j + 1 < t.length; ++j)
    for (int c = 0; c < t.short_counts[j]; ++c) internal.push_back({j, j + 1});
  for (const auto& e : t.long_edges) internal.push_back({e.from, e.to});

  for (std::size_t x = 0; x < internal.size(); ++x) {
    std::vector<int> comp(t.length);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
    for (std::size_t y = 0; y < internal.size(); ++y)
      if (y != x) comp[find(internal[y].from)] = find(internal[y].to);
    bool connected = true;
    for (int v = 1; v < t.length; ++v) connected = connected && find(v) == find(0);
    if (connected) continue;
    // Vertices are totally ordered by index; check comparability with the rest.
    const Edge e = internal[x];
    // a vertex strictly between the ends would be incomparable
    bool comparable = e.to == e.from + 1;
    for (std::size_t y = 0; y < internal.size() && comparable; ++y)
      if (y != x && !(e.to <= internal[y].from || internal[y].to <= e.from)) comparable = false;
    for (int w = 0; w < t.length && comparable; ++w) {
      if (t.sources[w] > 0 && w > e.from) comparable = false;
      if (t.sinks[w] > 0 && w < e.to) comparable = false;
    }
    if (comparable) return true;
  }
  return false;
}

std::vector<Template> enumerate_templates(int max_genus, int max_codeg) {
  std::vector<Template> out;
  if (max_genus < 0 || max_codeg < 0) return out;
  // codeg + genus >= length - 1 bounds the length.
  for (int l = 1; l <= max_codeg + max_genus + 1; ++l) {
    struct Item {
      int from, to, w, cost;
    };
    std::vector<Item> items;
    for (int j = 0; j < l; ++j)
      for (int k = j + 2; k < l; ++k)
        for (int w = 1; (k - j - 1) * w <= max_codeg; ++w) items.push_back({j, k, w, (k - j - 1) * w});

    Template t;
    t.length = l;
    std::vector<Elevator> longs;
    auto emit_ends = [&](int budget) {
      // sources at v >= 1 cost v, sinks at v <= l-2 cost l-1-v
      t.sources.assign(l, 0);
      t.sinks.assign(l, 0);
      std::function<void(int, int)> rec = [&](int slot, int left) {
        if (slot == 2 * (l - 1)) {
          if (!has_separating_edge(t)) out.push_back(t);
          return;
        }
        const bool src = slot < l - 1;
        const int v = src ? slot + 1 : slot - (l - 1);
        const int cost = src ? v : l - 1 - v;
        int& cnt = src ? t.sources[v] : t.sinks[v];
        for (cnt = 0; cnt * cost <= left; ++cnt) rec(slot + 1, left - cnt * cost);
        cnt = 0;
      };
      rec(0, budget);
    };
    auto emit_shorts = [&](int extra, int budget) {
      t.short_counts.assign(std::max(l - 1, 0), 1);
      std::function<void(int, int)> rec = [&](int gap, int left) {
        if (gap == l - 1 || l == 1) {
          if (left == 0) emit_ends(budget);
          return;
        }
        for (int x = 0; x <= left; ++x) {
          t.short_counts[gap] = 1 + x;
          rec(gap + 1, left - x);
        }
        t.short_counts[gap] = 1;
      };
      rec(0, extra);
    };
    std::function<void(std::size_t, int)> choose_longs = [&](std::size_t idx, int budget) {
      if (idx == items.size()) {
        t.long_edges = longs;
        std::sort(t.long_edges.begin(), t.long_edges.end());
        const int base_genus = static_cast<int>(longs.size());
        for (int extra = 0; base_genus + extra <= max_genus; ++extra) {
          if (l == 1 && extra > 0) break;
          emit_shorts(extra, budget);
        }
        return;
      }
      const Item& it = items[idx];
      int used = 0;
      choose_longs(idx + 1, budget);
      while (static_cast<int>(longs.size()) < max_genus && budget - it.cost * (used + 1) >= 0) {
        ++used;
        longs.push_back({it.from, it.to, it.w});
        choose_longs(idx + 1, budget - it.cost * used);
      }
      longs.resize(longs.size() - used);
    };
    choose_longs(0, max_codeg);
  }
  std::sort(out.begin(), out.end(), [](const Template& x, const Template& y) {
    auto kx = std::make_tuple(x.genus(), x.codeg(), x.length);
    auto ky = std::make_tuple(y.genus(), y.codeg(), y.length);
    if (kx != ky) return kx < ky;
    return x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_json(const Template& t) {
  nlohmann::ordered_json j;
  j["length"] = t.length;
  j["genus"] = t.genus();
  j["codegree"] = t.codeg();
  j["unweighted_short_edges"] = t.short_counts;
  j["elevators"] = nlohmann::json::array();
  for (const auto& e : t.long_edges) j["elevators"].push_back({e.from, e.to, e.weight});
  j["sources"] = t.sources;
  j["sinks"] = t.sinks;
  return j.dump();
}

int CappingTree::codeg(int n) const {
  const int na = a();
  int c = (na - 1) * (n * na - 2) / 2;
  for (int v = 1; v < na; ++v) c -= weight[v] - 1;
  return c;
}

std::string canonical_tree_string(const std::vector<int>& parent) {
  const int a = static_cast<int>(parent.size());
  std::vector<std::vector<int>> kids(a);
  int root = -1;
  for (int v = 0; v < a; ++v) {
    if (parent[v] < 0)
      root = v;
    else
      kids[parent[v]].push_back(v);
  }
  std::function<std::string(int)> enc = [&](int v) {
    std::vector<std::string> cs;
    for (int c : kids[v]) cs.push_back(enc(c));
    std::sort(cs.begin(), cs.end());
    std::string s = "(";
    for (auto& c : cs) s += c;
    return s + ")";
  };
  return root < 0 ? std::string() : enc(root);
}

namespace {

// Canonical strings of rooted unordered trees by size.
std::vector<std::vector<std::string>> rooted_trees(int max_size) {
  std::vector<std::vector<std::string>> by_size(max_size + 1);
  if (max_size >= 1) by_size[1] = {"()"};
  for (int s = 2; s <= max_size; ++s) {
    std::set<std::string> found;
    std::vector<std::string> chosen;
    // children as a non-increasing sequence of (size, index)
    std::function<void(int, int, int)> rec = [&](int left, int max_sz, int max_idx) {
      if (left == 0) {
        auto cs = chosen;
        std::sort(cs.begin(), cs.end());
        std::string t = "(";
        for (auto& c : cs) t += c;
        found.insert(t + ")");
        return;
      }
      for (int sz = std::min(left, max_sz); sz >= 1; --sz) {
        const int top = sz == max_sz ? max_idx : static_cast<int>(by_size[sz].size()) - 1;
        for (int idx = top; idx >= 0; --idx) {
          chosen.push_back(by_size[sz][idx]);
          rec(left - sz, sz, idx);
          chosen.pop_back();
        }
      }
    };
    rec(s - 1, s - 1, static_cast<int>(by_size[s - 1].size()) - 1);
    by_size[s].assign(found.begin(), found.end());
  }
  return by_size;
}

std::vector<int> parse_tree(const std::string& s) {
  std::vector<int> parent;
  std::vector<int> stack;
  for (char c : s) {
    if (c == '(') {
      parent.push_back(stack.empty() ? -1 : stack.back());
      stack.push_back(static_cast<int>(parent.size()) - 1);
    } else {
      stack.pop_back();
    }
  }
  return parent;
}

}  // namespace

std::vector<CappingTree> enumerate_capping_trees(int a, int n, int max_codeg) {
  std::vector<CappingTree> out;
  if (a < 2) return out;
  auto trees = rooted_trees(a);
  for (const auto& s : trees[a]) {
    CappingTree t;
    t.parent = parse_tree(s);
    int root_children = 0;
    for (int v = 1; v < a; ++v) root_children += t.parent[v] == 0;
    if (root_children < 2) continue;
    std::vector<int> sub(a, 1);
    for (int v = a - 1; v >= 1; --v) sub[t.parent[v]] += sub[v];  // children follow parents in preorder
    t.weight.assign(a, 0);
    for (int v = 1; v < a; ++v) t.weight[v] = n * sub[v];
    if (t.codeg(n) <= max_codeg) out.push_back(std::move(t));
  }
  return out;
}

std::vector<Collection> admissible_collections(int g, int i) {
  std::vector<Collection> out;
  if (g < 0 || i < 0) return out;
  const auto all = enumerate_templates(g, i);
  // m = 1
  for (const auto& t : all)
    if (t.genus() == g && t.codeg() == i) out.push_back({t});
  Collection cur;
  std::function<void(int, int)> rec = [&](int gl, int il) {
    // try closing with a last template
    for (const auto& t : all) {
      if (t.genus() != gl || t.codeg() != il || t.sources_total() > 0) continue;
      cur.push_back(t);
      out.push_back(cur);
      cur.pop_back();
    }
    // or insert another middle template
    for (const auto& t : all) {
      if (!t.closed() || t.genus() > gl || t.codeg() > il) continue;
      cur.push_back(t);
      rec(gl - t.genus(), il - t.codeg());
      cur.pop_back();
    }
  };
  for (const auto& t : all) {
    if (t.sinks_total() > 0 || t.genus() > g || t.codeg() > i) continue;
    cur = {t};
    rec(g - t.genus(), i - t.codeg());
  }
  return out;
}

std::vector<std::vector<int>> enumerate_A(const Collection& xi, int a) {
  std::vector<std::vector<int>> out;
  const int m = static_cast<int>(xi.size());
  int total = 0;
  for (const auto& t : xi) total += t.length;
  const int slack = a - total;
  if (m == 0 || slack < 0 || (m == 1 && slack != 0)) return out;
  std::vector<int> kappa(m, 1);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == m - 1) {
      kappa[j] = kappa[j - 1] + xi[j - 1].length + left;
      out.push_back(kappa);
      return;
    }
    for (int t = 0; t <= left; ++t) {
      kappa[j] = kappa[j - 1] + xi[j - 1].length + t;
      rec(j + 1, left - t);
    }
  };
  if (m == 1) {
    out.push_back(kappa);
  } else {
    rec(1, slack);
  }
  return out;
}

namespace {

// Global skeleton of the reconstruction before short weights are chosen.
struct Skeleton {
  int a = 0;
  std::vector<Elevator> longs;
  std::vector<int> counts;  // short or chain edges per gap
  std::vector<int> sources, sinks;
  std::vector<long long> residual;  // flow left for short edges per gap
  bool feasible = true;
};

Skeleton skeleton(const Collection& xi, const std::vector<int>& kappa, int a, int b, int n) {
  Skeleton sk;
  sk.a = a;
  sk.counts.assign(std::max(a - 1, 0), 1);
  sk.sources.assign(a, 0);
  sk.sinks.assign(a, 0);
  int src = 0, snk = 0;
  for (std::size_t j = 0; j < xi.size(); ++j) {
    const auto& t = xi[j];
    const int base = kappa[j] - 1;
    if (base + t.length > a) throw std::invalid_argument("reconstruct: kappa overruns the floors");
    for (int g = 0; g + 1 < t.length; ++g) sk.counts[base + g] = t.short_counts[g];
    for (const auto& e : t.long_edges) sk.longs.push_back({base + e.from, base + e.to, e.weight});
    for (int v = 0; v < t.length; ++v) {
      sk.sources[base + v] += t.sources[v];
      sk.sinks[base + v] += t.sinks[v];
      src += t.sources[v];
      snk += t.sinks[v];
    }
  }
  const long long extra_src = static_cast<long long>(a) * n + b - src;
  const long long extra_snk = static_cast<long long>(b) - snk;
  if (extra_src < 0 || extra_snk < 0) {
    sk.feasible = false;
    return sk;
  }
  sk.sources[0] += static_cast<int>(extra_src);
  sk.sinks[a - 1] += static_cast<int>(extra_snk);
  long long flow = 0;
  for (int p = 0; p + 1 < a; ++p) {
    flow += sk.sources[p] - sk.sinks[p] - n;
    long long r = flow;
    for (const auto& e : sk.longs)
      if (e.from <= p && p < e.to) r -= e.weight;
    sk.residual.push_back(r);
    if (r < sk.counts[p]) sk.feasible = false;
  }
  return sk;
}

void partitions_exact(long long total, int parts, long long max_part, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (long long p = std::min(max_part, total - (parts - 1)); p >= 1; --p) {
    if (p * parts < total) break;
    cur.push_back(static_cast<int>(p));
    partitions_exact(total - p, parts - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ShortWeights> enumerate_B(const Collection& xi, const std::vector<int>& kappa, int a, int b, int n) {
  std::vector<ShortWeights> out;
  Skeleton sk = skeleton(xi, kappa, a, b, n);
  if (!sk.feasible) return out;
  std::vector<std::vector<std::vector<int>>> options(sk.residual.size());
  for (std::size_t p = 0; p < sk.residual.size(); ++p) {
    std::vector<int> cur;
    partitions_exact(sk.residual[p], sk.counts[p], sk.residual[p], cur, options[p]);
    if (options[p].empty()) return out;
  }
  ShortWeights cur(options.size());
  std::function<void(std::size_t)> rec = [&](std::size_t p) {
    if (p == options.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& o : options[p]) {
      cur[p] = o;
      rec(p + 1);
    }
  };
  rec(0);
  return out;
}

FloorDiagram reconstruct(const Collection& xi, const std::vector<int>& kappa, const ShortWeights& omega, int a, int b,
                         int n) {
  Skeleton sk = skeleton(xi, kappa, a, b, n);
  if (!sk.feasible) throw std::invalid_argument("reconstruct: infeasible weight extension");
  if (omega.size() != sk.counts.size()) throw std::invalid_argument("reconstruct: omega has the wrong number of gaps");
  FloorDiagram d;
  d.floors.assign(a, Floor{0, n});
  d.sources = sk.sources;
  d.sinks = sk.sinks;
  d.internal = sk.longs;
  for (std::size_t p = 0; p < omega.size(); ++p) {
    if (static_cast<int>(omega[p].size()) != sk.counts[p])
      throw std::invalid_argument("reconstruct: wrong number of short weights in a gap");
    for (int w : omega[p]) {
      if (w <= 0) throw std::invalid_argument("reconstruct: nonpositive weight");
      d.internal.push_back({static_cast<int>(p), static_cast<int>(p) + 1, w});
    }
  }
  std::sort(d.internal.begin(), d.internal.end());
  auto problems = validate_diagram(d, make_delta_abn(a, b, n));
  if (!problems.empty()) throw std::invalid_argument("reconstruct: " + problems.front());
  return d;
}

BijectionReport verify_bijection(int a, int b, int n, int g, int i, bool enforce_region, int jobs) {
  if (enforce_region && !(b > i && a > i)) throw std::domain_error("verify_bijection: requires b > i and a > i");
  BijectionReport rep;
  const auto poly = make_delta_abn(a, b, n);

  std::vector<std::vector<int>> rebuilt;
  for (const auto& xi : admissible_collections(g, i))
    for (const auto& kappa : enumerate_A(xi, a))
      for (const auto& omega : enumerate_B(xi, kappa, a, b, n)) {
        FloorDiagram d = reconstruct(xi, kappa, omega, a, b, n);
        if (codegree(d, poly) != i || d.genus() != g) {
          rep.ok = false;
          rep.messages.push_back("reconstruction with wrong codegree or genus: " + to_text(d));
        }
        rebuilt.push_back(canonical_form(d));
      }
  rep.reconstructed = rebuilt.size();
  std::sort(rebuilt.begin(), rebuilt.end());
  if (std::adjacent_find(rebuilt.begin(), rebuilt.end()) != rebuilt.end()) {
    rep.injective = false;
    rep.ok = false;
    rep.messages.push_back("two triples reconstruct the same diagram");
  }

  std::vector<std::vector<int>> direct;
  for (const auto& d : enumerate_floor_diagrams(poly, g, {i, jobs})) {
    if (codegree(d, poly) != i) continue;
    if (!is_layered(d)) {
      rep.all_layered = false;
      rep.ok = false;
      rep.messages.push_back("non-layered diagram: " + to_text(d));
    }
    direct.push_back(canonical_form(d));
  }
  rep.enumerated = direct.size();
  std::sort(direct.begin(), direct.end());
  if (direct != rebuilt) {
    rep.ok = false;
    std::vector<std::vector<int>> only_r, only_e;
    std::set_difference(rebuilt.begin(), rebuilt.end(), direct.begin(), direct.end(), std::back_inserter(only_r));
    std::set_difference(direct.begin(), direct.end(), rebuilt.begin(), rebuilt.end(), std::back_inserter(only_e));
    rep.messages.push_back(std::to_string(only_r.size()) + " reconstructed only, " + std::to_string(only_e.size()) +
                           " enumerated only");
  }
  return rep;
}

}  // namespace floorq
