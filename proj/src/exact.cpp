#include "forest/exact.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <deque>
#include <mutex>
#include <thread>

#include "forest/union_find.hpp"

namespace forest {

namespace {

constexpr int kMaxOrder = 256;
constexpr int kFail = 1 << 28;

struct Bits {
  std::array<std::uint64_t, 4> w{};

  void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ULL; }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  bool empty() const { return (w[0] | w[1] | w[2] | w[3]) == 0; }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r;
    for (int i = 0; i < 4; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  int first() const {
    for (int i = 0; i < 4; ++i)
      if (w[i]) return i * 64 + __builtin_ctzll(w[i]);
    return -1;
  }
  template <class F>
  void each(F&& f) const {
    for (int i = 0; i < 4; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        int b = __builtin_ctzll(x);
        f(i * 64 + b);
        x &= x - 1;
      }
    }
  }
};

using Clock = std::chrono::steady_clock;

class FvsSolver {
 public:
  FvsSolver(const Graph& g, const SolverConfig& cfg, std::atomic<bool>* stop = nullptr)
      : n_(g.order()), adj_(g.order()), cfg_(cfg), external_stop_(stop) {
    for (int v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[v].set(w);
    start_ = Clock::now();
  }

  Bits all() const {
    Bits b;
    for (int v = 0; v < n_; ++v) b.set(v);
    return b;
  }

  // Minimum decycling set of G[alive] avoiding kept, if smaller than budget.
  // With target >= 0 the search stops at the first solution of that size.
  int search(Bits alive, Bits kept, int budget, int target, Bits& sol) {
    if (aborted_) return kFail;
    if ((++nodes_ & 1023) == 0) check_limits();
    if (nodes_ > cfg_.node_limit) aborted_ = true;
    if (aborted_) return kFail;

    Bits forced;
    int fc = 0;
    if (!reduce(alive, kept, forced, fc)) return kFail;
    if (fc >= budget) return kFail;
    if (alive.empty()) {
      sol = forced;
      return fc;
    }
    auto comps = components(alive);
    if (comps.size() > 1) {
      std::vector<int> lbs;
      int sum_lb = 0;
      for (const auto& c : comps) {
        lbs.push_back(lower_bound(c, kept));
        sum_lb += lbs.back();
      }
      if (fc + sum_lb >= budget) return kFail;
      int acc = fc;
      Bits acc_sol = forced;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        sum_lb -= lbs[i];
        Bits part;
        int x = search(comps[i], kept, budget - acc - sum_lb, -1, part);
        if (x >= kFail) return kFail;
        acc += x;
        acc_sol = acc_sol | part;
      }
      sol = acc_sol;
      return acc;
    }
    const int lb = lower_bound(alive, kept);
    if (fc + lb >= budget) return kFail;

    VertexList cyc = branch_cycle(alive, kept);
    int local_budget = budget - fc;
    int best = kFail;
    Bits best_sol;
    Bits keep_more = kept;
    for (Vertex c : cyc) {
      Bits sub_sol;
      Bits next = alive;
      next.reset(c);
      int r = search(next, keep_more, local_budget - 1, target >= 0 ? target - fc - 1 : -1, sub_sol);
      if (r < kFail) {
        int cand = r + 1;
        if (cand < local_budget) {
          best = cand;
          local_budget = cand;
          best_sol = sub_sol;
          best_sol.set(c);
          if (target >= 0 && fc + cand <= target) break;
          if (cand <= lb) break;
        }
      }
      if (aborted_) break;
      keep_more.set(c);
    }
    if (best >= kFail) return kFail;
    sol = best_sol | forced;
    return fc + best;
  }

  // Decycling set from repeatedly deleting a highest-degree cyclic vertex.
  Bits greedy_solution(Bits alive) const {
    Bits sol;
    while (true) {
      reduce_degrees(alive);
      if (alive.empty()) break;
      int best = -1, best_deg = -1;
      alive.each([&](int v) {
        int d = (adj_[v] & alive).count();
        if (d > best_deg) {
          best_deg = d;
          best = v;
        }
      });
      alive.reset(best);
      sol.set(best);
    }
    // Give back deleted vertices that no longer close a cycle.
    std::vector<int> order;
    sol.each([&](int v) { order.push_back(v); });
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Bits trial = sol;
      trial.reset(*it);
      if (is_forest(all().minus(trial))) sol = trial;
    }
    return sol;
  }

  bool is_forest(const Bits& s) const {
    UnionFind uf(n_);
    bool ok = true;
    s.each([&](int v) {
      (adj_[v] & s).each([&](int w) {
        if (v < w && !uf.unite(v, w)) ok = false;
      });
    });
    return ok;
  }

  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }
  int order() const { return n_; }
  int lower_bound_all() { return lower_bound(all(), Bits{}); }

 private:
  void check_limits() {
    double secs = std::chrono::duration<double>(Clock::now() - start_).count();
    if (secs > cfg_.time_limit_s) aborted_ = true;
    if (external_stop_ && external_stop_->load(std::memory_order_relaxed)) aborted_ = true;
  }

  int deg(int v, const Bits& alive) const { return (adj_[v] & alive).count(); }

  void reduce_degrees(Bits& alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      alive.each([&](int v) {
        if (alive.test(v) && deg(v, alive) <= 1) {
          alive.reset(v);
          changed = true;
        }
      });
    }
  }

  // Strips vertices on no cycle and deletes vertices that would close a
  // cycle through kept vertices. False when kept vertices already do.
  bool reduce(Bits& alive, const Bits& kept, Bits& forced, int& fc) const {
    while (true) {
      reduce_degrees(alive);
      Bits k = kept & alive;
      UnionFind uf(n_);
      bool cyclic = false;
      k.each([&](int v) {
        (adj_[v] & k).each([&](int w) {
          if (v < w && !uf.unite(v, w)) cyclic = true;
        });
      });
      if (cyclic) return false;
      int victim = -1;
      alive.minus(kept).each([&](int v) {
        if (victim != -1) return;
        std::vector<int> roots;
        bool clash = false;
        (adj_[v] & k).each([&](int w) {
          int r = uf.find(w);
          if (std::find(roots.begin(), roots.end(), r) != roots.end()) clash = true;
          roots.push_back(r);
        });
        if (clash) victim = v;
      });
      if (victim == -1) return true;
      alive.reset(victim);
      forced.set(victim);
      ++fc;
    }
  }

  std::vector<Bits> components(const Bits& alive) const {
    std::vector<Bits> out;
    Bits left = alive;
    while (!left.empty()) {
      int s = left.first();
      Bits comp;
      comp.set(s);
      Bits frontier = comp;
      while (!frontier.empty()) {
        Bits next;
        frontier.each([&](int v) { next = next | adj_[v]; });
        next = (next & left).minus(comp);
        comp = comp | next;
        frontier = next;
      }
      out.push_back(comp);
      left = left.minus(comp);
    }
    return out;
  }

  // Shortest cycle of G[alive] as a vertex list, fewest kept vertices first
  // among ties; empty when acyclic.
  VertexList shortest_cycle_in(const Bits& alive, const Bits& kept) const {
    int best_len = kFail, best_free = kFail;
    VertexList best;
    std::array<int, kMaxOrder> dist{}, parent{};
    alive.each([&](int root) {
      if (best_len == 3) return;
      alive.each([&](int v) { dist[v] = -1; });
      dist[root] = 0;
      parent[root] = -1;
      std::deque<int> q{root};
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (2 * dist[x] + 1 > best_len) break;
        (adj_[x] & alive).each([&](int y) {
          if (dist[y] == -1) {
            dist[y] = dist[x] + 1;
            parent[y] = x;
            q.push_back(y);
          } else if (y != parent[x] && dist[y] >= dist[x]) {
            VertexList left, right;
            for (int a = x; a != -1; a = parent[a]) left.push_back(a);
            for (int b = y; b != -1; b = parent[b]) right.push_back(b);
            while (left.size() > 1 && right.size() > 1 &&
                   left[left.size() - 2] == right[right.size() - 2]) {
              left.pop_back();
              right.pop_back();
            }
            VertexList cyc(left.rbegin(), left.rend());
            for (std::size_t i = 0; i + 1 < right.size(); ++i) cyc.push_back(right[i]);
            int len = static_cast<int>(cyc.size());
            int free = 0;
            for (int c : cyc) free += !kept.test(c);
            if (len < best_len || (len == best_len && free < best_free)) {
              best_len = len;
              best_free = free;
              best = cyc;
            }
          }
        });
      }
    });
    return best;
  }

  VertexList branch_cycle(const Bits& alive, const Bits& kept) const {
    VertexList cyc = shortest_cycle_in(alive, kept);
    VertexList free;
    for (int c : cyc)
      if (!kept.test(c)) free.push_back(c);
    std::stable_sort(free.begin(), free.end(), [&](int a, int b) {
      int da = deg(a, alive), db = deg(b, alive);
      if (da != db) return da > db;
      return a < b;
    });
    return free;
  }

  int lower_bound(Bits alive, const Bits& kept) const {
    // Cyclomatic number against the largest deletion gains.
    int edges = 0;
    std::vector<int> gains;
    alive.each([&](int v) {
      int d = deg(v, alive);
      edges += d;
      if (!kept.test(v)) gains.push_back(d - 1);
    });
    edges /= 2;
    int comps = static_cast<int>(components(alive).size());
    int mu = edges - alive.count() + comps;
    std::sort(gains.rbegin(), gains.rend());
    int degree_lb = 0, acc = 0;
    while (acc < mu && degree_lb < static_cast<int>(gains.size()) && gains[degree_lb] > 0)
      acc += gains[degree_lb++];
    if (acc < mu) degree_lb = kFail;  // infeasible

    // Greedy packing of vertex-disjoint cycles.
    int packing = 0;
    Bits rest = alive;
    while (true) {
      reduce_degrees(rest);
      if (rest.empty()) break;
      VertexList cyc = shortest_cycle_in(rest, kept);
      if (cyc.empty()) break;
      ++packing;
      for (int c : cyc) rest.reset(c);
    }
    return std::max(degree_lb, packing);
  }

  int n_;
  std::vector<Bits> adj_;
  SolverConfig cfg_;
  std::atomic<bool>* external_stop_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

VertexList to_list(const Bits& b) {
  VertexList out;
  b.each([&](int v) { out.push_back(v); });
  return out;
}

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

// Value of the optimum using several threads over the root branches.
int parallel_value(const Graph& g, const SolverConfig& cfg, int upper, std::uint64_t& nodes,
                   bool& aborted) {
  FvsSolver probe(g, cfg);
  Bits alive = probe.all();
  // Root branches on a shortest cycle, each with its earlier siblings kept.
  VertexList cyc = shortest_cycle(g);
  if (cyc.empty()) return 0;
  std::atomic<int> best{upper};
  std::atomic<std::uint64_t> total_nodes{0};
  std::atomic<bool> any_abort{false};
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= cyc.size()) return;
      FvsSolver s(g, cfg, &stop);
      Bits a = alive, k;
      a.reset(cyc[i]);
      for (std::size_t j = 0; j < i; ++j) k.set(cyc[j]);
      Bits sol;
      int r = s.search(a, k, best.load() - 1, -1, sol);
      total_nodes += s.nodes();
      if (s.aborted()) any_abort = true;
      if (r < kFail) {
        int cand = r + 1;
        int cur = best.load();
        while (cand < cur && !best.compare_exchange_weak(cur, cand)) {
        }
      }
    }
  };
  int threads = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(cyc.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  nodes += total_nodes.load();
  aborted = any_abort.load();
  return best.load();
}

}  // namespace

SolveResult forest_number_exact(const Graph& g, const SolverConfig& cfg) {
  if (g.order() > kMaxOrder) throw GraphError("exact solver handles at most 256 vertices");
  if (cfg.node_limit == 0 || cfg.time_limit_s <= 0 || cfg.jobs < 1)
    throw GraphError("solver limits must be positive");
  auto t0 = Clock::now();
  SolveResult res;
  FvsSolver solver(g, cfg);
  Bits incumbent = solver.greedy_solution(solver.all());
  int upper = incumbent.count();

  int value = upper;
  bool limited = false;
  if (cfg.jobs > 1) {
    value = parallel_value(g, cfg, upper, res.nodes, limited);
  } else {
    Bits sol;
    int r = solver.search(solver.all(), Bits{}, upper, -1, sol);
    res.nodes += solver.nodes();
    limited = solver.aborted();
    if (r < kFail) {
      value = r;
      incumbent = sol;
    }
  }

  // Witness from a deterministic single-threaded pass at the known value.
  Bits witness_del = incumbent;
  if (!limited) {
    FvsSolver again(g, cfg);
    Bits sol;
    int r = again.search(again.all(), Bits{}, value + 1, value, sol);
    res.nodes += again.nodes();
    if (again.aborted()) {
      limited = true;
    } else if (r < kFail) {
      witness_del = sol;
    }
  }
  if (!limited && cfg.tie_break == TieBreak::lexicographic) {
    // Admit the smallest vertices one by one while a solution of the
    // optimal size survives.
    Bits kept, removed;
    int removed_count = 0;
    for (int v = 0; v < g.order() && !limited; ++v) {
      FvsSolver s(g, cfg);
      Bits alive = s.all().minus(removed);
      Bits k = kept;
      k.set(v);
      Bits sol;
      int budget = value - removed_count;
      int r = s.search(alive, k, budget + 1, budget, sol);
      res.nodes += s.nodes();
      if (s.aborted()) limited = true;
      if (r < kFail) {
        kept = k;
      } else {
        removed.set(v);
        ++removed_count;
      }
    }
    if (!limited) witness_del = removed;
  }
  if (limited) witness_del = incumbent.count() <= witness_del.count() ? incumbent : witness_del;

  Bits forest_set = solver.all().minus(witness_del);
  res.witness = to_list(forest_set);
  res.decycling_number = witness_del.count();
  res.forest_number = g.order() - res.decycling_number;
  res.optimal = !limited;
  res.elapsed_ms = ms_since(t0);
  return res;
}

namespace {

bool subset_is_forest(const std::vector<std::uint32_t>& adj, std::uint32_t mask, int n) {
  UnionFind uf(n);
  for (int v = 0; v < n; ++v) {
    if (!((mask >> v) & 1)) continue;
    std::uint32_t nb = adj[v] & mask & ~((2u << v) - 1);
    while (nb) {
      int w = __builtin_ctz(nb);
      nb &= nb - 1;
      if (!uf.unite(v, w)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> small_adjacency(const Graph& g) {
  if (g.order() > 25) throw GraphError("brute force handles at most 25 vertices");
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1u << w;
  return adj;
}

// Calls f on every size-k subset of 0..n-1 in lexicographic order until f
// returns true.
template <class F>
bool for_each_combination(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    std::uint32_t mask = 0;
    for (int i : idx) mask |= 1u << i;
    if (f(mask)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VertexList mask_list(std::uint32_t mask) {
  VertexList out;
  while (mask) {
    out.push_back(__builtin_ctz(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

SolveResult forest_number_bruteforce(const Graph& g) {
  auto t0 = Clock::now();
  auto adj = small_adjacency(g);
  const int n = g.order();
  SolveResult res;
  for (int s = n; s >= 0; --s) {
    std::uint32_t found = 0;
    bool ok = for_each_combination(n, s, [&](std::uint32_t mask) {
      ++res.nodes;
      if (subset_is_forest(adj, mask, n)) {
        found = mask;
        return true;
      }
      return false;
    });
    if (ok) {
      res.forest_number = s;
      res.decycling_number = n - s;
      res.witness = mask_list(found);
      break;
    }
  }
  res.elapsed_ms = ms_since(t0);
  return res;
}

std::vector<VertexList> induced_forests_of_size(const Graph& g, int size) {
  auto adj = small_adjacency(g);
  std::vector<VertexList> out;
  for_each_combination(g.order(), size, [&](std::uint32_t mask) {
    if (subset_is_forest(adj, mask, g.order())) out.push_back(mask_list(mask));
    return false;
  });
  return out;
}

IndependentSet max_independent_set(const Graph& g) {
  const int n = g.order();
  if (n > 64) throw GraphError("independent set search handles at most 64 vertices");
  std::vector<std::uint64_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= 1ULL << w;
  std::uint64_t best_set = 0;
  int best = 0;
  // Branch on a highest-degree vertex: take it or drop it.
  auto rec = [&](auto&& self, std::uint64_t cand, std::uint64_t chosen, int size) -> void {
    if (size + __builtin_popcountll(cand) <= best) return;
    if (cand == 0) {
      best = size;
      best_set = chosen;
      return;
    }
    int pick = -1, pick_deg = -1;
    for (std::uint64_t c = cand; c; c &= c - 1) {
      int v = __builtin_ctzll(c);
      int d = __builtin_popcountll(adj[v] & cand);
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    if (pick_deg == 0) {
      self(self, 0, chosen | cand, size + __builtin_popcountll(cand));
      return;
    }
    self(self, cand & ~adj[pick] & ~(1ULL << pick), chosen | (1ULL << pick), size + 1);
    self(self, cand & ~(1ULL << pick), chosen, size);
  };
  std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  rec(rec, all, 0, 0);
  IndependentSet out;
  out.size = best;
  for (int v = 0; v < n; ++v)
    if ((best_set >> v) & 1) out.witness.push_back(v);
  return out;
}

}  // namespace forest
