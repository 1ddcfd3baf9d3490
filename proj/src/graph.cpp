#include "forest/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <string>

#include "forest/union_find.hpp"

namespace forest {

Graph::Graph(int n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw GraphError("parallel edge");
  }
  m_ = edges.size();
}

Graph Graph::with_rotation(int n, std::span<const Edge> edges,
                           std::vector<VertexList> rotation,
                           std::optional<Dart> outer) {
  Graph g(n, edges);
  if (static_cast<int>(rotation.size()) != n)
    throw EmbeddingError("rotation table size differs from vertex count");
  for (int v = 0; v < n; ++v) {
    VertexList sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.adj_[v])
      throw EmbeddingError("rotation at vertex " + std::to_string(v) +
                           " is not a permutation of its neighbours");
  }
  g.rot_ = std::move(rotation);
  g.set_outer_dart(outer);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw GraphError("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (adj_.empty()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

std::span<const Vertex> Graph::rotation(Vertex v) const {
  check_vertex(v);
  if (rot_.empty()) throw EmbeddingError("graph has no rotation system");
  return rot_[v];
}

Vertex Graph::rotation_successor(Vertex v, Vertex u) const {
  auto r = rotation(v);
  auto it = std::find(r.begin(), r.end(), u);
  if (it == r.end()) throw EmbeddingError("dart not present in rotation");
  ++it;
  return it == r.end() ? r.front() : *it;
}

void Graph::set_outer_dart(std::optional<Dart> d) {
  if (d && !has_edge(d->tail, d->head)) d.reset();
  outer_ = d;
}

Graph Graph::without_rotation() const {
  Graph g = *this;
  g.rot_.clear();
  g.outer_.reset();
  return g;
}

std::pair<Graph, Relabel> delete_vertices(const Graph& g, std::span<const Vertex> doomed) {
  const int n = g.order();
  std::vector<char> gone(n, 0);
  for (Vertex v : doomed) {
    if (v < 0 || v >= n) throw GraphError("vertex " + std::to_string(v) + " out of range");
    gone[v] = 1;
  }
  Relabel map;
  map.old_to_new.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (!gone[v]) {
      map.old_to_new[v] = static_cast<int>(map.new_to_old.size());
      map.new_to_old.push_back(v);
    }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (!gone[u] && !gone[v]) edges.emplace_back(map.old_to_new[u], map.old_to_new[v]);
  const int k = static_cast<int>(map.new_to_old.size());
  if (!g.has_rotation() || n == 0) return {Graph(k, edges), map};

  std::vector<VertexList> rot(k);
  for (int nv = 0; nv < k; ++nv)
    for (Vertex w : g.rotation(map.new_to_old[nv]))
      if (!gone[w]) rot[nv].push_back(map.old_to_new[w]);
  std::optional<Dart> outer;
  if (auto d = g.outer_dart(); d && !gone[d->tail] && !gone[d->head])
    outer = Dart{map.old_to_new[d->tail], map.old_to_new[d->head]};
  return {Graph::with_rotation(k, edges, std::move(rot), outer), map};
}

Graph delete_edges(const Graph& g, std::span<const Edge> doomed) {
  auto is_doomed = [&](Vertex a, Vertex b) {
    for (auto [x, y] : doomed)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  };
  for (auto [x, y] : doomed)
    if (!g.has_edge(x, y)) throw GraphError("cannot delete a missing edge");
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (!is_doomed(e.first, e.second)) edges.push_back(e);
  if (!g.has_rotation() || g.order() == 0) return Graph(g.order(), edges);
  std::vector<VertexList> rot(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (Vertex w : g.rotation(v))
      if (!is_doomed(v, w)) rot[v].push_back(w);
  auto outer = g.outer_dart();
  if (outer && is_doomed(outer->tail, outer->head)) outer.reset();
  return Graph::with_rotation(g.order(), edges, std::move(rot), outer);
}

std::pair<Graph, Relabel> induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<char> kept(g.order(), 0);
  for (Vertex v : keep) kept.at(v) = 1;
  VertexList doomed;
  for (int v = 0; v < g.order(); ++v)
    if (!kept[v]) doomed.push_back(v);
  return delete_vertices(g, doomed);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int shift = a.order();
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  const int n = a.order() + b.order();
  bool rotate = a.has_rotation() && b.has_rotation();
  if (!rotate) return Graph(n, edges);
  std::vector<VertexList> rot = a.order() ? a.rotation_table() : std::vector<VertexList>{};
  rot.resize(a.order());
  for (int v = 0; v < b.order(); ++v) {
    VertexList r;
    for (Vertex w : b.rotation(v)) r.push_back(w + shift);
    rot.push_back(std::move(r));
  }
  auto outer = a.outer_dart();
  if (!outer && b.outer_dart())
    outer = Dart{b.outer_dart()->tail + shift, b.outer_dart()->head + shift};
  return Graph::with_rotation(n, edges, std::move(rot), outer);
}

std::vector<VertexList> connected_components(const Graph& g) {
  std::vector<VertexList> out;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexList comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<Edge> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> out;
  int timer = 0;
  // Iterative DFS: (vertex, parent, next neighbour index).
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] != -1) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex p = stack.back().v;
          low[p] = std::min(low[p], low[done.v]);
          if (low[done.v] > disc[p]) out.emplace_back(std::min(p, done.v), std::max(p, done.v));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_two_edge_connected(const Graph& g) {
  return g.order() >= 1 && is_connected(g) && bridges(g).empty();
}

namespace {

// Shortest cycle through BFS from every root; returns length and the cycle.
std::pair<int, VertexList> shortest_cycle_impl(const Graph& g, bool want_cycle) {
  const int n = g.order();
  int best = kInfiniteGirth;
  VertexList best_cycle;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::deque<Vertex> queue{root};
    bool stop = false;
    while (!queue.empty() && !stop) {
      Vertex x = queue.front();
      queue.pop_front();
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          int len = dist[x] + dist[y] + 1;
          if (len < best) {
            best = len;
            if (want_cycle) {
              VertexList left, right;
              for (Vertex a = x; a != -1; a = parent[a]) left.push_back(a);
              for (Vertex b = y; b != -1; b = parent[b]) right.push_back(b);
              // Trim to the lowest common ancestor.
              while (left.size() > 1 && right.size() > 1 &&
                     left[left.size() - 2] == right[right.size() - 2]) {
                left.pop_back();
                right.pop_back();
              }
              VertexList cyc(left.rbegin(), left.rend());
              for (std::size_t i = 0; i + 1 < right.size(); ++i) cyc.push_back(right[i]);
              best_cycle = cyc;
              best = static_cast<int>(cyc.size());
            }
          }
          if (best == 3) stop = true;
        }
      }
    }
    if (best == 3) break;
  }
  return {best, best_cycle};
}

}  // namespace

int girth(const Graph& g) { return shortest_cycle_impl(g, false).first; }

VertexList shortest_cycle(const Graph& g) { return shortest_cycle_impl(g, true).second; }

VertexList shortest_path(const Graph& g, Vertex u, Vertex v) {
  const int n = g.order();
  std::vector<int> parent(n, -2);
  parent[u] = -1;
  std::deque<Vertex> queue{u};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (Vertex y : g.neighbors(x))
      if (parent[y] == -2) {
        parent[y] = x;
        queue.push_back(y);
      }
  }
  if (parent[v] == -2) return {};
  VertexList path;
  for (Vertex x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  auto p = shortest_path(g, u, v);
  return p.empty() ? -1 : static_cast<int>(p.size()) - 1;
}

bool is_induced_forest(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.order() || in[v]) return false;
    in[v] = 1;
  }
  UnionFind uf(g.order());
  for (Vertex u : vertices)
    for (Vertex w : g.neighbors(u))
      if (u < w && in[w] && !uf.unite(u, w)) return false;
  return true;
}

}  // namespace forest
