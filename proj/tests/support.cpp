#include "support.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <tuple>

#include "forest/embedding.hpp"
#include "forest/families.hpp"

namespace testing_support {

using forest::Edge;

std::string data_path(const std::string& name) { return std::string(FOREST_DATA_DIR) + "/" + name; }

bool oracle_acyclic(const Graph& g, std::uint64_t mask) {
  // A forest has exactly (vertices - components) edges; count both by DFS.
  const int n = g.order();
  std::vector<int> seen(n, 0);
  long verts = 0, edges = 0, comps = 0;
  for (int s = 0; s < n; ++s) {
    if (!(mask >> s & 1) || seen[s]) continue;
    ++comps;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++verts;
      for (Vertex x : g.neighbors(v)) {
        if (!(mask >> x & 1)) continue;
        if (x > v) ++edges;
        if (!seen[x]) {
          seen[x] = 1;
          stack.push_back(x);
        }
      }
    }
  }
  return edges == verts - comps;
}

int oracle_forest_number(const Graph& g) {
  const int n = g.order();
  if (n > 26) throw std::invalid_argument("oracle limited to 26 vertices");
  int best = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    int size = __builtin_popcountll(mask);
    if (size > best && oracle_acyclic(g, mask)) best = size;
  }
  return best;
}

int oracle_girth(const Graph& g) {
  // Shortest cycle through edge uv is 1 + dist(u, v) without that edge.
  int best = forest::kInfiniteGirth;
  for (auto [u, v] : g.edges()) {
    std::vector<int> dist(g.order(), -1);
    std::vector<int> queue{u};
    dist[u] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (Vertex y : g.neighbors(x)) {
        if ((x == u && y == v) || (x == v && y == u) || dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    if (dist[v] >= 0) best = std::min(best, dist[v] + 1);
  }
  return best;
}

long oracle_components(const Graph& g) {
  std::vector<int> label(g.order());
  for (int v = 0; v < g.order(); ++v) label[v] = v;
  std::function<int(int)> root = [&](int x) { return label[x] == x ? x : label[x] = root(label[x]); };
  long comps = g.order();
  for (auto [u, v] : g.edges()) {
    int a = root(u), b = root(v);
    if (a != b) {
      label[a] = b;
      --comps;
    }
  }
  return comps;
}

std::optional<Rational> oracle_triple_max(const std::vector<forest::HalfPlane>& cons,
                                          const forest::Triple& tr) {
  // Rows: ca*a + cb*b + ct*t <= rhs, with t = alpha*a - beta*b.
  using Row = std::array<Rational, 4>;
  std::vector<Row> rows;
  for (const auto& h : cons) rows.push_back({h.ca, h.cb, Rational(0), h.rhs});
  rows.push_back({Rational(tr.alpha), Rational(-tr.beta), Rational(-1), Rational(0)});
  rows.push_back({Rational(-tr.alpha), Rational(tr.beta), Rational(1), Rational(0)});
  for (int var = 0; var < 2; ++var) {
    std::vector<Row> pos, neg, next;
    for (const Row& r : rows) {
      if (r[var] > 0)
        pos.push_back(r);
      else if (r[var] < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const Row& p : pos)
      for (const Row& q : neg) {
        Row c;
        for (int i = 0; i < 4; ++i) c[i] = p[i] * (-q[var]) + q[i] * p[var];
        next.push_back(c);
      }
    rows = std::move(next);
  }
  std::optional<Rational> best;
  for (const Row& r : rows)
    if (r[2] > 0) {
      Rational bound = r[3] / r[2];
      if (!best || bound < *best) best = bound;
    }
  return best;
}

std::vector<forest::PolygonVertex> oracle_vertices(const std::vector<forest::HalfPlane>& cons) {
  std::set<std::pair<Rational, Rational>> pts;
  for (std::size_t i = 0; i < cons.size(); ++i)
    for (std::size_t j = i + 1; j < cons.size(); ++j) {
      const auto& p = cons[i];
      const auto& q = cons[j];
      Rational det = p.ca * q.cb - p.cb * q.ca;
      if (det == 0) continue;
      Rational a = (p.rhs * q.cb - p.cb * q.rhs) / det;
      Rational b = (p.ca * q.rhs - p.rhs * q.ca) / det;
      bool ok = std::all_of(cons.begin(), cons.end(),
                            [&](const auto& h) { return h.ca * a + h.cb * b <= h.rhs; });
      if (ok) pts.insert({a, b});
    }
  std::vector<forest::PolygonVertex> out;
  for (auto& [a, b] : pts) out.push_back({a, b});
  return out;
}

Graph random_plane_subgraph(const Graph& base, std::mt19937& rng, int max_order, double edge_drop) {
  VertexList order(base.order());
  for (int v = 0; v < base.order(); ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> keep_dist(std::min(3, max_order), std::min(max_order, base.order()));
  int keep = keep_dist(rng);
  VertexList doomed(order.begin() + keep, order.end());
  std::sort(doomed.begin(), doomed.end());
  Graph g = forest::delete_vertices(base, doomed).first;
  std::bernoulli_distribution drop(edge_drop);
  std::vector<Edge> gone;
  for (Edge e : g.edges())
    if (drop(rng)) gone.push_back(e);
  return forest::delete_edges(g, gone);
}

Graph subdivide(const Graph& g, Vertex u, Vertex v) {
  Edge e{u, v};
  Graph h = forest::delete_edges(g, std::span(&e, 1));
  if (!h.has_rotation()) return forest::add_vertex_with_edges(h, std::vector<Vertex>{u, v}).first;
  forest::FaceSet fs = forest::trace_faces(h);
  for (int f = 0; f < static_cast<int>(fs.count()); ++f)
    if ((h.degree(u) == 0 || fs.contains(f, u)) && (h.degree(v) == 0 || fs.contains(f, v)))
      return forest::add_vertex_with_edges(h, std::vector<Vertex>{u, v}, f).first;
  throw forest::EmbeddingError("no face holds both ends");
}

Graph random_girth_plane_graph(std::mt19937& rng, int order, int girth, int chords_per_vertex,
                               bool saturate) {
  std::uniform_int_distribution<int> start(girth, std::max(girth, std::min(order, girth + 3)));
  Graph g = forest::cycle_graph(start(rng));
  auto chord = [&] {
    forest::FaceSet fs = forest::trace_faces(g);
    int f = static_cast<int>(rng() % fs.count());
    const VertexList& w = fs.walks[f];
    Vertex u = w[rng() % w.size()], v = w[rng() % w.size()];
    if (u == v || g.has_edge(u, v)) return;
    forest::EdgeAddition a = forest::add_edge(g, u, v, girth, f);
    if (a.accepted()) g = *a.graph;
  };
  while (g.order() < order) {
    auto es = g.edges();
    Edge e = es[rng() % es.size()];
    g = subdivide(g, e.first, e.second);
    for (int i = 0; i < chords_per_vertex; ++i) chord();
  }
  for (bool grew = saturate; grew;) {
    grew = false;
    forest::FaceSet fs = forest::trace_faces(g);
    std::vector<std::tuple<int, Vertex, Vertex>> options;
    for (int f = 0; f < static_cast<int>(fs.count()); ++f)
      for (Vertex u : fs.walks[f])
        for (Vertex v : fs.walks[f])
          if (u < v && !g.has_edge(u, v) && forest::distance(g, u, v) >= girth - 1) options.emplace_back(f, u, v);
    if (options.empty()) break;
    auto [f, u, v] = options[rng() % options.size()];
    forest::EdgeAddition a = forest::add_edge(g, u, v, girth, f);
    if (a.accepted()) {
      g = *a.graph;
      grew = true;
    }
  }
  return g;
}

VertexList to_list(std::uint64_t mask, int n) {
  VertexList out;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

}  // namespace testing_support
