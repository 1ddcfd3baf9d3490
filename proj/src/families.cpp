#include "forest/families.hpp"

#include <cmath>
#include <numbers>

#include "fixture_data.hpp"
#include "forest/embedding.hpp"

namespace forest {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw FamilyError(what);
}

struct Drawing {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<Point> coords;

  void append(const Drawing& d, double dx) {
    for (auto [u, v] : d.edges) edges.emplace_back(u + n, v + n);
    for (Point p : d.coords) coords.push_back({p.x + dx, p.y});
    n += d.n;
  }
  Graph embed() const { return embed_from_coordinates(n, edges, coords); }
};

Drawing cube_drawing() {
  Drawing d;
  d.n = 8;
  d.coords = {{-2, -2}, {2, -2}, {2, 2}, {-2, 2}, {-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  for (int i = 0; i < 4; ++i) {
    d.edges.emplace_back(i, (i + 1) % 4);
    d.edges.emplace_back(4 + i, 4 + (i + 1) % 4);
    d.edges.emplace_back(i, i + 4);
  }
  return d;
}

Drawing dodecahedron_drawing() {
  // Inner pentagon 0-4, middle decagon 5-14, outer pentagon 15-19.
  Drawing d;
  d.n = 20;
  d.coords.resize(20);
  auto polar = [](double r, double deg) {
    double a = deg * std::numbers::pi / 180.0;
    return Point{r * std::cos(a), r * std::sin(a)};
  };
  for (int k = 0; k < 5; ++k) {
    d.coords[k] = polar(1, 90 + 72 * k);
    d.coords[5 + 2 * k] = polar(2, 90 + 72 * k);
    d.coords[5 + 2 * k + 1] = polar(2, 90 + 72 * k + 36);
    d.coords[15 + k] = polar(3, 90 + 72 * k + 36);
  }
  for (int k = 0; k < 5; ++k) {
    d.edges.emplace_back(k, (k + 1) % 5);
    d.edges.emplace_back(k, 5 + 2 * k);
    d.edges.emplace_back(5 + 2 * k + 1, 15 + k);
    d.edges.emplace_back(15 + k, 15 + (k + 1) % 5);
  }
  for (int j = 0; j < 10; ++j) d.edges.emplace_back(5 + j, 5 + (j + 1) % 10);
  return d;
}

Graph repeated(const Drawing& unit, int k, double spacing) {
  require(k >= 1, "k must be at least 1");
  Drawing all;
  for (int i = 0; i < k; ++i) all.append(unit, spacing * i);
  return all.embed();
}

Graph from_fixture(const fixture_data::FixtureData& f) {
  return Graph::with_rotation(f.n, f.edges, f.rotation, f.outer);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

void check_profile(const Graph& g, const FamilyProfile& p, const std::string& label) {
  auto fail = [&](const std::string& field) {
    throw FamilyError(label + ": generated graph fails its profile (" + field + ")");
  };
  if (g.order() != p.n) fail("vertex count");
  if (static_cast<long>(g.size()) != p.m) fail("edge count");
  if (girth(g) != p.girth) fail("girth");
  if (p.regular_degree && (g.min_degree() != *p.regular_degree || g.max_degree() != *p.regular_degree))
    fail("regularity");
  if (is_connected(g) != p.connected) fail("connectivity");
  if ((bridges(g).empty() && p.connected) != p.two_edge_connected) fail("2-edge-connectivity");
  if (g.has_rotation()) trace_faces(g);
}

Graph cube() {
  Graph g = cube_drawing().embed();
  check_profile(g, family_profile("cube", {}), "cube");
  return g;
}

Graph cubes_disjoint(int k) {
  Graph g = repeated(cube_drawing(), k, 6);
  int p[] = {k};
  check_profile(g, family_profile("cubes_disjoint", p), "cubes_disjoint");
  return g;
}

Graph cube_minus_edge_disjoint(int k) {
  Drawing unit = cube_drawing();
  unit.edges.erase(unit.edges.begin());  // edge 0-1
  Graph g = repeated(unit, k, 6);
  int p[] = {k};
  check_profile(g, family_profile("cube_minus_edge_disjoint", p), "cube_minus_edge_disjoint");
  return g;
}

Graph cubes_linked(int k) {
  require(k >= 2, "cubes_linked needs k >= 2");
  Graph g = repeated(cube_drawing(), k, 6);
  // Link vertex 0 of cube i to vertex 1 of cube i+1 through the outer faces;
  // a face avoiding the inner spoke end of the endpoint is the outer one.
  for (int i = 0; i < k; ++i) {
    Vertex u = 8 * i, v = 8 * ((i + 1) % k) + 1;
    FaceSet fs = trace_faces(g);
    auto outer_of = [&](Vertex x, std::optional<Vertex> also) {
      for (int f = 0; f < static_cast<int>(fs.count()); ++f)
        if (fs.contains(f, x) && !fs.contains(f, x + 4) && (!also || fs.contains(f, *also)))
          return f;
      return -1;
    };
    bool same = distance(g, u, v) >= 0;
    int fu = outer_of(u, same ? std::optional<Vertex>(v) : std::nullopt);
    int fv = same ? fu : outer_of(v, std::nullopt);
    require(fu >= 0 && fv >= 0, "cubes_linked: no outer face for a link");
    g = insert_edge_at(g, fs, u, fu, v, fv);
  }
  int p[] = {k};
  check_profile(g, family_profile("cubes_linked", p), "cubes_linked");
  return g;
}

Graph dodecahedron() {
  Graph g = dodecahedron_drawing().embed();
  check_profile(g, family_profile("dodecahedron", {}), "dodecahedron");
  return g;
}

Graph dodecahedra_disjoint(int k) {
  Graph g = repeated(dodecahedron_drawing(), k, 8);
  int p[] = {k};
  check_profile(g, family_profile("dodecahedra_disjoint", p), "dodecahedra_disjoint");
  return g;
}

Graph hosono_chain(int t) {
  require(t >= 1, "hosono_chain needs t >= 1");
  // Top path 0..t at height 1, bottom path t+1..2t+1 at height 0.
  Drawing d;
  d.n = 2 * (t + 1);
  for (int x = 0; x <= t; ++x) d.coords.push_back({double(x), 1});
  for (int x = 0; x <= t; ++x) d.coords.push_back({double(x), 0});
  const int bot = t + 1;
  for (int x = 0; x < t; ++x) {
    d.edges.emplace_back(x, x + 1);
    d.edges.emplace_back(bot + x, bot + x + 1);
    d.edges.emplace_back(x, bot + x + 1);
  }
  for (int x = 0; x <= t; ++x) d.edges.emplace_back(x, bot + x);
  Graph g = d.embed();
  int p[] = {t};
  check_profile(g, family_profile("hosono_chain", p), "hosono_chain");
  return g;
}

Graph girth6_fixture() {
  Graph g = from_fixture(fixture_data::girth6());
  check_profile(g, family_profile("girth6_fixture", {}), "girth6_fixture");
  return g;
}

Graph girth7_fixture() {
  Graph g = from_fixture(fixture_data::girth7());
  check_profile(g, family_profile("girth7_fixture", {}), "girth7_fixture");
  return g;
}

Graph grid_quadrangulation(int p, int q) {
  require(p >= 1 && q >= 1, "grid needs p, q >= 1");
  Drawing d;
  d.n = p * q;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      d.coords.push_back({double(j), -double(i)});
      if (j + 1 < q) d.edges.emplace_back(i * q + j, i * q + j + 1);
      if (i + 1 < p) d.edges.emplace_back(i * q + j, (i + 1) * q + j);
    }
  Graph g = d.embed();
  int pr[] = {p, q};
  check_profile(g, family_profile("grid_quadrangulation", pr), "grid_quadrangulation");
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Drawing d;
  d.n = n;
  for (int i = 0; i < n; ++i) {
    double a = 2 * std::numbers::pi * i / n;
    d.coords.push_back({std::cos(a), std::sin(a)});
    d.edges.emplace_back(i, (i + 1) % n);
  }
  Graph g = d.embed();
  int p[] = {n};
  check_profile(g, family_profile("cycle", p), "cycle");
  return g;
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  Drawing d;
  d.n = n;
  for (int i = 0; i < n; ++i) {
    d.coords.push_back({double(i), 0});
    if (i + 1 < n) d.edges.emplace_back(i, i + 1);
  }
  Graph g = d.embed();
  int p[] = {n};
  check_profile(g, family_profile("path", p), "path");
  return g;
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = {
      {"cube", {}, "3-cube, 8 vertices, 12 edges"},
      {"cubes_disjoint", {"k"}, "k disjoint cubes"},
      {"cube_minus_edge_disjoint", {"k"}, "k disjoint cubes each missing one edge"},
      {"cubes_linked", {"k"}, "k cubes in a ring, vertex 0 of cube i joined to vertex 1 of cube i+1"},
      {"dodecahedron", {}, "dodecahedron, 20 vertices, 30 edges"},
      {"dodecahedra_disjoint", {"k"}, "k disjoint dodecahedra"},
      {"hosono_chain", {"t"}, "two paths of t+1 vertices with rungs and one diagonal per square"},
      {"girth6_fixture", {}, "cubic-ish plane graph of girth 6, 30 vertices"},
      {"girth7_fixture", {}, "plane graph of girth 7, 42 vertices"},
      {"grid_quadrangulation", {"p", "q"}, "p by q grid"},
      {"cycle", {"n"}, "cycle on n vertices"},
      {"path", {"n"}, "path on n vertices"},
  };
  return catalog;
}

FamilyProfile family_profile(const std::string& name, std::span<const int> params) {
  auto arg = [&](std::size_t i) {
    if (params.size() <= i) throw FamilyError(name + ": missing parameter");
    return params[i];
  };
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw FamilyError(name + " takes " + std::to_string(k) + " parameter(s)");
  };
  FamilyProfile p;
  if (name == "cube") {
    arity(0);
    p = {8, 12, 4, 3, true, true, 5};
  } else if (name == "cubes_disjoint") {
    arity(1);
    int k = arg(0);
    require(k >= 1, "k must be at least 1");
    p = {8 * k, 12L * k, 4, 3, k == 1, k == 1, 5 * k};
  } else if (name == "cube_minus_edge_disjoint") {
    arity(1);
    int k = arg(0);
    require(k >= 1, "k must be at least 1");
    p = {8 * k, 11L * k, 4, std::nullopt, k == 1, k == 1, std::nullopt};
  } else if (name == "cubes_linked") {
    arity(1);
    int k = arg(0);
    require(k >= 2, "cubes_linked needs k >= 2");
    p = {8 * k, 13L * k, 4, std::nullopt, true, true, std::nullopt};
  } else if (name == "dodecahedron") {
    arity(0);
    p = {20, 30, 5, 3, true, true, 14};
  } else if (name == "dodecahedra_disjoint") {
    arity(1);
    int k = arg(0);
    require(k >= 1, "k must be at least 1");
    p = {20 * k, 30L * k, 5, 3, k == 1, k == 1, 14 * k};
  } else if (name == "hosono_chain") {
    arity(1);
    int t = arg(0);
    require(t >= 1, "hosono_chain needs t >= 1");
    int n = 2 * (t + 1);
    p = {n, 4L * t + 1, 3, std::nullopt, true, true, std::nullopt};
    if (t % 3 == 2) p.forest_number = ceil_div(2 * n, 3);
  } else if (name == "girth6_fixture") {
    arity(0);
    p = {30, 42, 6, std::nullopt, true, true, 23};
  } else if (name == "girth7_fixture") {
    arity(0);
    p = {42, 56, 7, std::nullopt, true, true, 34};
  } else if (name == "grid_quadrangulation") {
    arity(2);
    int a = arg(0), b = arg(1);
    require(a >= 1 && b >= 1, "grid needs p, q >= 1");
    bool cyclic = a >= 2 && b >= 2;
    p = {a * b, 2L * a * b - a - b, cyclic ? 4 : kInfiniteGirth, std::nullopt, true,
         cyclic || a * b == 1, std::nullopt};
  } else if (name == "cycle") {
    arity(1);
    int n = arg(0);
    require(n >= 3, "cycle needs n >= 3");
    p = {n, n, n, 2, true, true, n - 1};
  } else if (name == "path") {
    arity(1);
    int n = arg(0);
    require(n >= 1, "path needs n >= 1");
    p = {n, n - 1L, kInfiniteGirth, std::nullopt, true, n == 1, n};
  } else {
    throw FamilyError("unknown family '" + name + "'");
  }
  return p;
}

Graph make_family(const std::string& name, std::span<const int> params) {
  family_profile(name, params);  // arity and range checks
  auto arg = [&](std::size_t i) { return params[i]; };
  if (name == "cube") return cube();
  if (name == "cubes_disjoint") return cubes_disjoint(arg(0));
  if (name == "cube_minus_edge_disjoint") return cube_minus_edge_disjoint(arg(0));
  if (name == "cubes_linked") return cubes_linked(arg(0));
  if (name == "dodecahedron") return dodecahedron();
  if (name == "dodecahedra_disjoint") return dodecahedra_disjoint(arg(0));
  if (name == "hosono_chain") return hosono_chain(arg(0));
  if (name == "girth6_fixture") return girth6_fixture();
  if (name == "girth7_fixture") return girth7_fixture();
  if (name == "grid_quadrangulation") return grid_quadrangulation(arg(0), arg(1));
  if (name == "cycle") return cycle_graph(arg(0));
  return path_graph(arg(0));
}

}  // namespace forest
