#include "floorq/diagram.hpp"

#include "floorq/parallel.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace floorq {

int FloorDiagram::num_sources() const { return std::accumulate(sources.begin(), sources.end(), 0); }
int FloorDiagram::num_sinks() const { return std::accumulate(sinks.begin(), sinks.end(), 0); }

int FloorDiagram::degree() const {
  int d = 0;
  for (const auto& e : internal) d += e.weight - 1;
  return d;
}

int FloorDiagram::n_marks() const {
  return num_floors() + static_cast<int>(internal.size()) + num_sources() + num_sinks();
}

int FloorDiagram::divergence(int v) const {
  int div = sources[v] - sinks[v];
  for (const auto& e : internal) {
    if (e.to == v) div += e.weight;
    if (e.from == v) div -= e.weight;
  }
  return div;
}

std::vector<std::vector<bool>> floor_order(const FloorDiagram& d) {
  const int f = d.num_floors();
  std::vector<std::vector<bool>> reach(f, std::vector<bool>(f, false));
  for (const auto& e : d.internal) reach[e.from][e.to] = true;
  for (int k = 0; k < f; ++k)
    for (int i = 0; i < f; ++i)
      if (reach[i][k])
        for (int j = 0; j < f; ++j)
          if (reach[k][j]) reach[i][j] = true;
  return reach;
}

bool is_layered(const FloorDiagram& d) {
  auto reach = floor_order(d);
  for (int i = 0; i < d.num_floors(); ++i)
    for (int j = i + 1; j < d.num_floors(); ++j)
      if (!reach[i][j] && !reach[j][i]) return false;
  return true;
}

namespace {

bool connected(int f, const std::vector<Elevator>& edges) {
  if (f == 0) return false;
  std::vector<int> parent(f);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int comps = f;
  for (const auto& e : edges) {
    int a = find(e.from), b = find(e.to);
    if (a != b) parent[a] = b, --comps;
  }
  return comps == 1;
}

std::vector<int> sorted_multiset(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<std::string> validate_diagram(const FloorDiagram& d, const HTransversePolygon& p) {
  std::vector<std::string> v;
  const int f = d.num_floors();
  if (f != p.rows()) v.push_back("floor count differs from |d_l|");
  if (static_cast<int>(d.sources.size()) != f || static_cast<int>(d.sinks.size()) != f) {
    v.push_back("source/sink arrays have wrong length");
    return v;
  }
  for (const auto& e : d.internal) {
    if (e.from < 0 || e.from >= f || e.to < 0 || e.to >= f || e.from == e.to) v.push_back("bad elevator endpoint");
    if (e.weight < 1) v.push_back("nonpositive weight");
  }
  if (!v.empty()) return v;
  if (d.num_sources() != p.db) v.push_back("source count differs from d_b");
  if (d.num_sinks() != p.dt) v.push_back("sink count differs from d_t");
  std::vector<int> ls, rs;
  for (const auto& fl : d.floors) ls.push_back(fl.l), rs.push_back(fl.r);
  if (sorted_multiset(ls) != sorted_multiset(p.dl)) v.push_back("l labels are not a bijection onto d_l");
  if (sorted_multiset(rs) != sorted_multiset(p.dr)) v.push_back("r labels are not a bijection onto d_r");
  for (int i = 0; i < f; ++i)
    if (d.divergence(i) != d.floors[i].r - d.floors[i].l) v.push_back("divergence mismatch at floor " + std::to_string(i));
  if (!connected(f, d.internal)) v.push_back("not connected");
  auto reach = floor_order(d);
  for (int i = 0; i < f; ++i)
    if (reach[i][i]) {
      v.push_back("oriented cycle");
      break;
    }
  if (d.genus() < 0) v.push_back("negative genus");
  return v;
}

int codegree(const FloorDiagram& d, const HTransversePolygon& p) {
  return static_cast<int>(lattice_stats(p).interior) - d.genus() - d.degree();
}

LaurentPoly mult(const FloorDiagram& d) {
  LaurentPoly m(1);
  for (const auto& e : d.internal)
    if (e.weight > 1) m *= quantum_square(e.weight);
  return m;
}

LaurentPoly mult_top(const FloorDiagram& d, int keep) {
  LaurentPoly m(1);
  for (const auto& e : d.internal)
    if (e.weight > 1) m = mul_top(m, quantum_square(e.weight), keep);
  return m;
}

// ---------------------------------------------------------------------------
// Canonical form

Canonical canonicalize(const FloorDiagram& d) {
  const int f = d.num_floors();
  std::vector<std::vector<std::pair<int, int>>> in(f);  // (from, weight)
  std::vector<int> indeg(f, 0);
  for (const auto& e : d.internal) {
    in[e.to].emplace_back(e.from, e.weight);
    ++indeg[e.to];
  }
  std::vector<std::vector<int>> out(f);
  for (const auto& e : d.internal) out[e.from].push_back(e.to);

  std::vector<int> best, enc, order, best_order, pos(f, -1);
  long long ties = 0;
  std::vector<int> remaining = indeg;

  // Returns -1/0/1 comparing enc against the same-length prefix of best.
  auto cmp_prefix = [&]() {
    if (best.empty()) return -1;
    for (std::size_t i = 0; i < enc.size(); ++i) {
      if (enc[i] != best[i]) return enc[i] < best[i] ? -1 : 1;
    }
    return 0;
  };

  std::function<void(int)> place = [&](int k) {
    if (k == f) {
      int c = cmp_prefix();
      if (c < 0) {
        best = enc;
        best_order = order;
        ties = 1;
      } else if (c == 0) {
        ++ties;
      }
      return;
    }
    for (int v = 0; v < f; ++v) {
      if (pos[v] >= 0 || remaining[v] != 0) continue;
      const std::size_t mark = enc.size();
      enc.push_back(d.floors[v].l);
      enc.push_back(d.floors[v].r);
      enc.push_back(d.sources[v]);
      enc.push_back(d.sinks[v]);
      enc.push_back(static_cast<int>(in[v].size()));
      std::vector<std::pair<int, int>> inc;
      for (auto [u, w] : in[v]) inc.emplace_back(pos[u], w);
      std::sort(inc.begin(), inc.end());
      for (auto [pu, w] : inc) enc.push_back(pu), enc.push_back(w);
      if (cmp_prefix() <= 0) {
        pos[v] = k;
        order.push_back(v);
        for (int t : out[v]) --remaining[t];
        place(k + 1);
        for (int t : out[v]) ++remaining[t];
        order.pop_back();
        pos[v] = -1;
      }
      enc.resize(mark);
    }
  };
  place(0);
  if (best_order.size() != static_cast<std::size_t>(f)) throw std::invalid_argument("canonicalize: diagram has a cycle");

  Canonical c;
  c.key = best;
  c.floor_automorphisms = ties;
  std::vector<int> newpos(f);
  for (int k = 0; k < f; ++k) newpos[best_order[k]] = k;
  c.rep.floors.resize(f);
  c.rep.sources.resize(f);
  c.rep.sinks.resize(f);
  for (int v = 0; v < f; ++v) {
    c.rep.floors[newpos[v]] = d.floors[v];
    c.rep.sources[newpos[v]] = d.sources[v];
    c.rep.sinks[newpos[v]] = d.sinks[v];
  }
  for (const auto& e : d.internal) c.rep.internal.push_back({newpos[e.from], newpos[e.to], e.weight});
  std::sort(c.rep.internal.begin(), c.rep.internal.end());
  return c;
}

std::vector<int> canonical_form(const FloorDiagram& d) { return canonicalize(d).key; }

namespace {
BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}
}  // namespace

BigInt automorphism_count(const FloorDiagram& d) {
  BigInt total = canonicalize(d).floor_automorphisms;
  std::map<Elevator, int> classes;
  for (const auto& e : d.internal) ++classes[e];
  for (const auto& kv : classes) total *= factorial(kv.second);
  for (int c : d.sources) total *= factorial(c);
  for (int c : d.sinks) total *= factorial(c);
  return total;
}

// ---------------------------------------------------------------------------
// Enumeration
//
// Floors are placed at positions 0..F-1 along a topological order and every
// internal elevator points to a later position. For a fixed label sequence
//   codeg = K + sum_src pos + sum_sink (F-1-pos) + sum_edges (gap-1)*w
// where K depends only on the labels, so partial sums bound the codegree.

namespace {

struct Unionfind {
  std::vector<int> p;
  explicit Unionfind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

using ResultMap = std::map<std::vector<int>, FloorDiagram>;

class Search {
 public:
  Search(const HTransversePolygon& poly, int genus, std::vector<Floor> labels, int budget, bool bounded,
         ResultMap& out)
      : f_(poly.rows()),
        genus_(genus),
        labels_(std::move(labels)),
        budget_(budget),
        bounded_(bounded),
        out_(out),
        incoming_(f_),
        src_(f_, 0),
        snk_(f_, 0),
        rem_src_(poly.db),
        rem_snk_(poly.dt),
        uf_(f_) {
    for (const auto& fl : labels_) div_.push_back(fl.r - fl.l);
  }

  // Runs the search for floor 0 restricted to `s0` sources (or all when -1).
  void run(int s0) {
    only_s0_ = s0;
    floor_step(0);
  }

  std::vector<int> source_choices_at_zero() const {
    std::vector<int> c;
    for (int s = 0; s <= rem_src_; ++s) c.push_back(s);
    return c;
  }

 private:
  bool over(int c) const { return bounded_ && c > budget_; }

  void floor_step(int p) {
    if (p == f_) {
      finish();
      return;
    }
    int in = 0;
    for (auto [u, w] : incoming_[p]) in += w;
    const bool last = (p == f_ - 1);
    for (int s = last ? rem_src_ : 0; s <= rem_src_; ++s) {
      if (p == 0 && only_s0_ >= 0 && s != only_s0_) continue;
      const int c1 = cost_ + s * p;
      // Sources left for later floors cost at least p+1 each.
      if (over(c1 + (rem_src_ - s) * (p + 1))) continue;
      const int outw = in + s - div_[p];
      if (outw < 0) continue;
      const int tmax = std::min(rem_snk_, outw);
      for (int t = last ? rem_snk_ : 0; t <= tmax; ++t) {
        const int c2 = c1 + t * (f_ - 1 - p);
        if (over(c2)) break;
        const int w = outw - t;
        if (last && w != 0) continue;
        src_[p] = s;
        snk_[p] = t;
        rem_src_ -= s;
        rem_snk_ -= t;
        const int saved_cost = cost_;
        cost_ = c2;
        Unionfind saved_uf = uf_;
        const int saved_rank = rank_;
        out_edges(p, p + 1, w);
        uf_ = saved_uf;
        rank_ = saved_rank;
        cost_ = saved_cost;
        rem_src_ += s;
        rem_snk_ += t;
        src_[p] = snk_[p] = 0;
      }
    }
  }

  // Distributes weight `w` of floor p over targets q, q+1, ...
  void out_edges(int p, int q, int w) {
    if (w == 0) {
      close_floor(p);
      return;
    }
    if (q >= f_) return;
    const int gap = q - p - 1;
    // Amount sent to q, from largest to smallest; zero means skip q.
    for (int amount = w; amount >= 0; --amount) {
      if (amount > 0 && over(cost_ + gap * amount)) continue;
      if (amount == 0) {
        out_edges(p, q + 1, w);
        continue;
      }
      const int saved_cost = cost_;
      cost_ += gap * amount;
      std::vector<int> parts;
      const int max_parts = genus_ - rank_ + (uf_.find(p) != uf_.find(q) ? 1 : 0);
      partitions(p, q, amount, amount, max_parts, parts, w - amount);
      cost_ = saved_cost;
    }
  }

  // Non-increasing partitions of `left` into parts <= `maxpart`, each an edge p->q.
  void partitions(int p, int q, int left, int maxpart, int max_parts, std::vector<int>& parts, int rest) {
    if (left == 0) {
      Unionfind saved = uf_;
      const int saved_rank = rank_;
      bool ok = true;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!uf_.unite(p, q)) {
          if (++rank_ > genus_) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        for (int x : parts) {
          edges_.push_back({p, q, x});
          incoming_[q].emplace_back(p, x);
        }
        out_edges(p, q + 1, rest);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          edges_.pop_back();
          incoming_[q].pop_back();
        }
      }
      uf_ = saved;
      rank_ = saved_rank;
      return;
    }
    // Parallel edges beyond the first raise the genus.
    if (static_cast<int>(parts.size()) >= max_parts) return;
    for (int x = std::min(left, maxpart); x >= 1; --x) {
      parts.push_back(x);
      partitions(p, q, left - x, x, max_parts, parts, rest);
      parts.pop_back();
    }
  }

  void close_floor(int p) {
    // Every component touching floors <= p must reach a later floor.
    if (p < f_ - 1) {
      std::vector<char> alive(f_, 0);
      for (int v = p + 1; v < f_; ++v) alive[uf_.find(v)] = 1;
      for (int v = 0; v <= p; ++v)
        if (!alive[uf_.find(v)]) return;
      int comps = 0;
      for (int v = 0; v < f_; ++v)
        if (uf_.find(v) == v) ++comps;
      const int edges_left = (genus_ + f_ - 1) - static_cast<int>(edges_.size());
      if (edges_left < comps - 1) return;
    }
    floor_step(p + 1);
  }

  void finish() {
    if (rank_ != genus_) return;
    if (static_cast<int>(edges_.size()) != genus_ + f_ - 1) return;
    FloorDiagram d;
    d.floors = labels_;
    d.internal = edges_;
    d.sources = src_;
    d.sinks = snk_;
    Canonical c = canonicalize(d);
    out_.emplace(std::move(c.key), std::move(c.rep));
  }

  int f_;
  int genus_;
  std::vector<Floor> labels_;
  std::vector<int> div_;
  int budget_;
  bool bounded_;
  ResultMap& out_;

  std::vector<std::vector<std::pair<int, int>>> incoming_;
  std::vector<Elevator> edges_;
  std::vector<int> src_, snk_;
  int rem_src_, rem_snk_;
  int cost_ = 0;
  int rank_ = 0;
  int only_s0_ = -1;
  Unionfind uf_;
};

std::vector<std::vector<int>> distinct_permutations(std::vector<int> v, bool descending) {
  std::vector<std::vector<int>> out;
  std::sort(v.begin(), v.end());
  do out.push_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  if (descending) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<FloorDiagram> enumerate_floor_diagrams(const HTransversePolygon& p, int genus,
                                                   const EnumerationOptions& opts) {
  auto errs = validate(p);
  if (!errs.empty()) throw std::invalid_argument("enumerate_floor_diagrams: " + errs.front());
  const long long iota = lattice_stats(p).interior;
  if (genus < 0 || genus > iota) return {};
  const int f = p.rows();
  const bool bounded = opts.max_codegree >= 0;

  struct Task {
    std::vector<Floor> labels;
    int budget;
    int s0;
  };
  std::vector<Task> tasks;
  for (const auto& ls : distinct_permutations(p.dl, true)) {
    for (const auto& rs : distinct_permutations(p.dr, false)) {
      std::vector<Floor> labels(f);
      long long k = iota + f - 1 - static_cast<long long>(p.db) * (f - 1);
      long long prefix = 0;
      for (int i = 0; i < f; ++i) {
        labels[i] = {ls[i], rs[i]};
        if (i < f - 1) {
          prefix += rs[i] - ls[i];
          k += prefix;
        }
      }
      const long long budget = bounded ? opts.max_codegree - k : 0;
      if (bounded && budget < 0) continue;
      for (int s0 = 0; s0 <= p.db; ++s0) tasks.push_back({labels, static_cast<int>(budget), s0});
    }
  }

  ResultMap merged;
  std::mutex mu;
  auto run_task = [&](const Task& t) {
    ResultMap local;
    Search s(p, genus, t.labels, t.budget, bounded, local);
    s.run(t.s0);
    std::lock_guard<std::mutex> lock(mu);
    merged.merge(local);
  };
  parallel_for(tasks.size(), opts.jobs, [&](std::size_t i) { run_task(tasks[i]); });
  std::vector<FloorDiagram> out;
  out.reserve(merged.size());
  for (auto& kv : merged) out.push_back(std::move(kv.second));
  return out;
}

// ---------------------------------------------------------------------------
// Operations A+/A-/B^l/B^r

namespace {

void require_acyclic(const FloorDiagram& d, const char* op) {
  auto reach = floor_order(d);
  for (int i = 0; i < d.num_floors(); ++i)
    if (reach[i][i]) throw std::invalid_argument(std::string(op) + ": result contains an oriented cycle");
}

int ref_weight(const FloorDiagram& d, ElevatorRef r) {
  return r.kind == ElevatorRef::Internal ? d.internal.at(r.index).weight : 1;
}

void check_index(const FloorDiagram& d, int e, const char* op) {
  if (e < 0 || e >= static_cast<int>(d.internal.size())) throw std::invalid_argument(std::string(op) + ": bad elevator index");
}

}  // namespace

FloorDiagram op_A_plus(const FloorDiagram& d, int e1, ElevatorRef e2) {
  check_index(d, e1, "A+");
  const int v1 = d.internal[e1].from, v2 = d.internal[e1].to;
  FloorDiagram r = d;
  const int w2 = ref_weight(d, e2);
  switch (e2.kind) {
    case ElevatorRef::Internal: {
      if (e2.index == e1) throw std::invalid_argument("A+: e2 must differ from e1");
      const auto& x = d.internal.at(e2.index);
      if (x.from != v1 || x.to == v2) throw std::invalid_argument("A+: e2 must leave v1 and avoid v2");
      r.internal[e2.index].from = v2;
      break;
    }
    case ElevatorRef::Sink:
      if (e2.index != v1 || d.sinks[v1] == 0) throw std::invalid_argument("A+: no sink at v1");
      --r.sinks[v1];
      ++r.sinks[v2];
      break;
    case ElevatorRef::Source:
      throw std::invalid_argument("A+: a source does not leave a floor");
  }
  r.internal[e1].weight += w2;
  require_acyclic(r, "A+");
  return r;
}

FloorDiagram op_A_minus(const FloorDiagram& d, int e1, ElevatorRef e2) {
  check_index(d, e1, "A-");
  const int v1 = d.internal[e1].from, v2 = d.internal[e1].to;
  FloorDiagram r = d;
  const int w2 = ref_weight(d, e2);
  switch (e2.kind) {
    case ElevatorRef::Internal: {
      if (e2.index == e1) throw std::invalid_argument("A-: e2 must differ from e1");
      const auto& x = d.internal.at(e2.index);
      if (x.to != v2 || x.from == v1) throw std::invalid_argument("A-: e2 must enter v2 and avoid v1");
      r.internal[e2.index].to = v1;
      break;
    }
    case ElevatorRef::Source:
      if (e2.index != v2 || d.sources[v2] == 0) throw std::invalid_argument("A-: no source at v2");
      --r.sources[v2];
      ++r.sources[v1];
      break;
    case ElevatorRef::Sink:
      throw std::invalid_argument("A-: a sink does not enter a floor");
  }
  r.internal[e1].weight += w2;
  require_acyclic(r, "A-");
  return r;
}

FloorDiagram op_B_l(const FloorDiagram& d, int e) {
  check_index(d, e, "B^l");
  const int v1 = d.internal[e].from, v2 = d.internal[e].to;
  if (!(d.floors[v1].l < d.floors[v2].l)) throw std::invalid_argument("B^l: needs l(v1) < l(v2)");
  FloorDiagram r = d;
  r.internal[e].weight += d.floors[v2].l - d.floors[v1].l;
  std::swap(r.floors[v1].l, r.floors[v2].l);
  return r;
}

FloorDiagram op_B_r(const FloorDiagram& d, int e) {
  check_index(d, e, "B^r");
  const int v1 = d.internal[e].from, v2 = d.internal[e].to;
  if (!(d.floors[v1].r > d.floors[v2].r)) throw std::invalid_argument("B^r: needs r(v1) > r(v2)");
  FloorDiagram r = d;
  r.internal[e].weight += d.floors[v1].r - d.floors[v2].r;
  std::swap(r.floors[v1].r, r.floors[v2].r);
  return r;
}

// ---------------------------------------------------------------------------

std::string to_json(const FloorDiagram& d) {
  nlohmann::ordered_json j;
  j["floors"] = nlohmann::ordered_json::array();
  for (const auto& f : d.floors) j["floors"].push_back({{"l", f.l}, {"r", f.r}});
  j["elevators"] = nlohmann::ordered_json::array();
  for (const auto& e : d.internal) j["elevators"].push_back({e.from, e.to, e.weight});
  j["sources"] = d.sources;
  j["sinks"] = d.sinks;
  return j.dump();
}

std::string to_text(const FloorDiagram& d) {
  std::ostringstream os;
  for (int v = 0; v < d.num_floors(); ++v) {
    os << "f" << v << "(l=" << d.floors[v].l << ",r=" << d.floors[v].r << ")";
    if (d.sources[v]) os << " src=" << d.sources[v];
    if (d.sinks[v]) os << " snk=" << d.sinks[v];
    os << "; ";
  }
  for (const auto& e : d.internal) os << e.from << "->" << e.to << "[" << e.weight << "] ";
  return os.str();
}

}  // namespace floorq
