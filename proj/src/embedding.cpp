#include "forest/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "forest/union_find.hpp"

namespace forest {

namespace {

int rotation_index(const Graph& g, Dart d) {
  auto r = g.rotation(d.tail);
  auto it = std::find(r.begin(), r.end(), d.head);
  if (it == r.end()) throw EmbeddingError("dart not present in rotation");
  return static_cast<int>(it - r.begin());
}

}  // namespace

int FaceSet::face_of(const Graph& g, Dart d) const {
  return dart_face[d.tail][rotation_index(g, d)];
}

bool FaceSet::contains(int face, Vertex v) const {
  const auto& w = walks.at(face);
  return std::find(w.begin(), w.end(), v) != w.end();
}

FaceSet trace_faces(const Graph& g) {
  if (!g.has_rotation()) throw EmbeddingError("graph has no rotation system");
  const int n = g.order();
  FaceSet fs;
  fs.dart_face.resize(n);
  for (int v = 0; v < n; ++v) fs.dart_face[v].assign(g.degree(v), -1);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < g.degree(v); ++i) {
      if (fs.dart_face[v][i] != -1) continue;
      const int id = static_cast<int>(fs.walks.size());
      VertexList walk;
      Dart d{v, g.rotation(v)[i]};
      int idx = i;
      while (fs.dart_face[d.tail][idx] == -1) {
        fs.dart_face[d.tail][idx] = id;
        walk.push_back(d.tail);
        Vertex next = g.rotation_successor(d.head, d.tail);
        d = Dart{d.head, next};
        idx = rotation_index(g, d);
      }
      if (d.tail != v || idx != i) throw EmbeddingError("face walk failed to close");
      fs.walks.push_back(std::move(walk));
    }
  }

  // Euler's formula on every component that has an edge.
  UnionFind uf(n);
  for (auto [u, v] : g.edges()) uf.unite(u, v);
  std::vector<char> has_edge(n, 0);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 0) has_edge[uf.find(v)] = 1;
  std::vector<long> faces_in(n, 0);
  for (const auto& w : fs.walks) faces_in[uf.find(w.front())] += 1;
  for (int r = 0; r < n; ++r) {
    if (uf.find(r) != r || !has_edge[r]) continue;
    long verts = 0, twice_edges = 0;
    for (int v = 0; v < n; ++v)
      if (uf.find(v) == r) {
        ++verts;
        twice_edges += g.degree(v);
      }
    if (verts - twice_edges / 2 + faces_in[r] != 2)
      throw EmbeddingError("rotation system is not planar: n - m + f = " +
                           std::to_string(verts - twice_edges / 2 + faces_in[r]));
  }

  if (auto d = g.outer_dart()) {
    fs.outer = fs.face_of(g, *d);
  } else if (!fs.walks.empty()) {
    fs.outer = 0;
    for (std::size_t i = 1; i < fs.walks.size(); ++i)
      if (fs.walks[i].size() > fs.walks[fs.outer].size()) fs.outer = static_cast<int>(i);
  }
  return fs;
}

bool is_plane_embedding(const Graph& g) {
  try {
    trace_faces(g);
    return true;
  } catch (const EmbeddingError&) {
    return false;
  }
}

CycleSides cycle_sides(const Graph& g, const FaceSet& faces, std::span<const Vertex> cycle) {
  const int len = static_cast<int>(cycle.size());
  if (len < 3) throw GraphError("cycle too short");
  std::set<std::pair<Vertex, Vertex>> on_cycle;
  std::vector<char> on_vertex(g.order(), 0);
  for (int i = 0; i < len; ++i) {
    Vertex a = cycle[i], b = cycle[(i + 1) % len];
    if (!g.has_edge(a, b)) throw GraphError("cycle uses a missing edge");
    if (on_vertex[a]) throw GraphError("cycle is not simple");
    on_vertex[a] = 1;
    on_cycle.insert({std::min(a, b), std::max(a, b)});
  }
  UnionFind dual(static_cast<int>(faces.count()));
  for (auto [u, v] : g.edges())
    if (!on_cycle.count({u, v})) dual.unite(faces.face_of(g, {u, v}), faces.face_of(g, {v, u}));
  int side_a = dual.find(faces.face_of(g, {cycle[0], cycle[1]}));
  int side_b = dual.find(faces.face_of(g, {cycle[1], cycle[0]}));
  if (side_a == side_b) throw GraphError("cycle does not separate the faces");

  int outer_group = faces.outer >= 0 ? dual.find(faces.outer) : -1;
  int interior_group;
  if (outer_group == side_a)
    interior_group = side_b;
  else if (outer_group == side_b)
    interior_group = side_a;
  else
    interior_group = side_b;

  CycleSides out;
  out.side.assign(g.order(), -2);
  for (int v = 0; v < g.order(); ++v) {
    if (on_vertex[v]) {
      out.side[v] = -1;
      continue;
    }
    if (g.degree(v) == 0) continue;
    int grp = dual.find(faces.dart_face[v][0]);
    if (grp == interior_group) {
      out.side[v] = 1;
      out.interior.push_back(v);
    } else if (grp == side_a || grp == side_b) {
      out.side[v] = 0;
      out.exterior.push_back(v);
    }
  }
  return out;
}

Graph insert_edge_at(const Graph& g, const FaceSet& faces, Vertex u, int face_u, Vertex v,
                     int face_v) {
  if (u == v || g.has_edge(u, v)) throw GraphError("edge already present or a loop");
  std::vector<VertexList> rot = g.rotation_table();
  auto place = [&](Vertex x, int face, Vertex other) {
    if (g.degree(x) == 0) {
      rot[x] = {other};
      return;
    }
    const auto& walk = faces.walks.at(face);
    const int len = static_cast<int>(walk.size());
    for (int k = 0; k < len; ++k) {
      if (walk[k] != x) continue;
      Vertex incoming = walk[(k + len - 1) % len];
      auto& r = rot[x];
      auto it = std::find(r.begin(), r.end(), incoming);
      r.insert(it + 1, other);
      return;
    }
    throw EmbeddingError("vertex " + std::to_string(x) + " is not on the chosen face");
  };
  place(u, face_u, v);
  place(v, face_v, u);
  std::vector<Edge> edges = g.edges();
  edges.emplace_back(u, v);
  return Graph::with_rotation(g.order(), edges, std::move(rot), g.outer_dart());
}

Graph insert_edges_embedded(const Graph& g, std::span<const Edge> edges) {
  if (!g.has_rotation()) {
    std::vector<Edge> all = g.edges();
    all.insert(all.end(), edges.begin(), edges.end());
    return Graph(g.order(), all);
  }
  Graph cur = g;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    FaceSet fs = trace_faces(cur);
    auto on = [&](int f, Vertex x) { return cur.degree(x) == 0 || fs.contains(f, x); };
    int best = -1, best_score = -1;
    for (int f = 0; f < static_cast<int>(fs.count()); ++f) {
      if (!on(f, u) || !on(f, v)) continue;
      if (cur.degree(u) == 0 && cur.degree(v) == 0) continue;
      int score = 0;
      for (std::size_t j = i + 1; j < edges.size(); ++j)
        score += fs.contains(f, edges[j].first) + fs.contains(f, edges[j].second);
      if (score > best_score) {
        best_score = score;
        best = f;
      }
    }
    if (best == -1) {
      if (cur.degree(u) == 0 && cur.degree(v) == 0) {
        // Two isolated vertices: a new component.
        std::vector<VertexList> rot = cur.rotation_table();
        rot[u] = {v};
        rot[v] = {u};
        std::vector<Edge> all = cur.edges();
        all.emplace_back(u, v);
        cur = Graph::with_rotation(cur.order(), all, std::move(rot), cur.outer_dart());
        continue;
      }
      // Endpoints in different components may use any face of each.
      int fu = -1, fv = -1;
      for (int f = 0; f < static_cast<int>(fs.count()); ++f) {
        if (fu == -1 && fs.contains(f, u)) fu = f;
        if (fv == -1 && fs.contains(f, v)) fv = f;
      }
      auto comps = connected_components(cur);
      bool same = false;
      for (const auto& c : comps)
        if (std::binary_search(c.begin(), c.end(), u) && std::binary_search(c.begin(), c.end(), v))
          same = true;
      if (same || (fu == -1 && cur.degree(u) > 0) || (fv == -1 && cur.degree(v) > 0))
        throw EmbeddingError("no face contains both endpoints of the new edge");
      cur = insert_edge_at(cur, fs, u, fu, v, fv);
      continue;
    }
    cur = insert_edge_at(cur, fs, u, best, v, best);
  }
  trace_faces(cur);
  return cur;
}

std::pair<Graph, Vertex> add_vertex_with_edges(const Graph& g, std::span<const Vertex> nbrs,
                                               std::optional<int> face) {
  const int n = g.order();
  const Vertex w = n;
  std::vector<Edge> edges = g.edges();
  std::set<Vertex> seen;
  for (Vertex x : nbrs) {
    if (x < 0 || x >= n) throw GraphError("neighbour out of range");
    if (!seen.insert(x).second) throw GraphError("repeated neighbour");
  }
  if (!g.has_rotation()) {
    for (Vertex x : nbrs) edges.emplace_back(w, x);
    return {Graph(n + 1, edges), w};
  }
  std::vector<VertexList> rot = g.rotation_table();
  rot.emplace_back();
  Graph cur = Graph::with_rotation(n + 1, edges, std::move(rot), g.outer_dart());
  if (nbrs.empty()) return {cur, w};
  if (!face) throw EmbeddingError("a face is required to place the new vertex");
  FaceSet fs = trace_faces(g);
  for (Vertex x : nbrs)
    if (g.degree(x) > 0 && !fs.contains(*face, x))
      throw EmbeddingError("neighbour " + std::to_string(x) + " is not on the chosen face");
  // First edge goes into the chosen face; later ones into the face holding w.
  FaceSet cur_faces = trace_faces(cur);
  cur = insert_edge_at(cur, cur_faces, w, -1, nbrs[0], *face);
  for (std::size_t i = 1; i < nbrs.size(); ++i) {
    cur_faces = trace_faces(cur);
    int chosen = -1;
    for (int f = 0; f < static_cast<int>(cur_faces.count()); ++f)
      if (cur_faces.contains(f, w) && cur_faces.contains(f, nbrs[i])) {
        chosen = f;
        break;
      }
    if (chosen == -1) throw EmbeddingError("neighbours are not on a common face");
    cur = insert_edge_at(cur, cur_faces, w, chosen, nbrs[i], chosen);
  }
  trace_faces(cur);
  return {cur, w};
}

EdgeAddition add_edge(const Graph& g, Vertex u, Vertex v, int guard, std::optional<int> face) {
  if (u == v) throw GraphError("cannot add a loop");
  if (g.has_edge(u, v)) throw GraphError("vertices are already adjacent");
  EdgeAddition out;
  VertexList path = shortest_path(g, u, v);
  if (!path.empty() && static_cast<int>(path.size()) < guard) {
    out.short_cycle = path;
    return out;
  }
  if (!g.has_rotation()) {
    std::vector<Edge> edges = g.edges();
    edges.emplace_back(u, v);
    out.graph = Graph(g.order(), edges);
    return out;
  }
  if (face) {
    FaceSet fs = trace_faces(g);
    Graph h = insert_edge_at(g, fs, u, *face, v, *face);
    trace_faces(h);
    out.graph = std::move(h);
  } else {
    Edge e{u, v};
    out.graph = insert_edges_embedded(g, std::span<const Edge>(&e, 1));
  }
  return out;
}

Graph embed_from_coordinates(int n, std::span<const Edge> edges, std::span<const Point> coords) {
  if (static_cast<int>(coords.size()) != n) throw GraphError("one coordinate per vertex needed");
  Graph plain(n, edges);
  std::vector<VertexList> rot(n);
  for (int v = 0; v < n; ++v) {
    VertexList r(plain.neighbors(v).begin(), plain.neighbors(v).end());
    auto angle = [&](Vertex w) {
      return std::atan2(coords[w].y - coords[v].y, coords[w].x - coords[v].x);
    };
    std::sort(r.begin(), r.end(), [&](Vertex a, Vertex b) { return angle(a) > angle(b); });
    rot[v] = std::move(r);
  }
  Graph g = Graph::with_rotation(n, edges, std::move(rot));
  FaceSet fs = trace_faces(g);
  int best = -1;
  double best_area = -1;
  for (int f = 0; f < static_cast<int>(fs.count()); ++f) {
    const auto& w = fs.walks[f];
    double area = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Point& a = coords[w[i]];
      const Point& b = coords[w[(i + 1) % w.size()]];
      area += a.x * b.y - b.x * a.y;
    }
    area = std::abs(area) / 2;
    if (area > best_area + 1e-9) {
      best_area = area;
      best = f;
    }
  }
  if (best >= 0) {
    const auto& w = fs.walks[best];
    g.set_outer_dart(Dart{w[0], w[1 % w.size()]});
  }
  return g;
}

}  // namespace forest
