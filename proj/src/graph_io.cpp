#include "forest/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "forest/embedding.hpp"

namespace forest {

namespace {

std::vector<long> read_ints(std::istringstream& ss, int line) {
  std::vector<long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
    if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  long m = -1;
  std::vector<Edge> edges;
  std::vector<VertexList> rot;
  std::vector<char> rot_seen;
  bool any_rot = false;
  VertexList outer_walk;
  int outer_line = 0;
  int header_line = 0;

  auto vertex = [&](long x, int line) {
    if (x < 1 || x > n) throw ParseError(line, "vertex " + std::to_string(x) + " out of range 1.." + std::to_string(n));
    return static_cast<Vertex>(x - 1);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream ss(raw);
    std::string kind;
    if (!(ss >> kind)) continue;
    if (kind == "c") continue;
    if (kind == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      std::string tag;
      ss >> tag;
      if (tag != "forest") throw ParseError(line_no, "problem line must read 'p forest <n> <m>'");
      auto nums = read_ints(ss, line_no);
      if (nums.size() != 2 || nums[0] < 0 || nums[1] < 0)
        throw ParseError(line_no, "problem line must read 'p forest <n> <m>'");
      n = static_cast<int>(nums[0]);
      m = nums[1];
      rot.assign(n, {});
      rot_seen.assign(n, 0);
      header_line = line_no;
      continue;
    }
    if (n < 0) throw ParseError(line_no, "'" + kind + "' line before the problem line");
    auto nums = read_ints(ss, line_no);
    if (kind == "e") {
      if (nums.size() != 2) throw ParseError(line_no, "edge line needs two vertices");
      Vertex u = vertex(nums[0], line_no), v = vertex(nums[1], line_no);
      if (u == v) throw ParseError(line_no, "self-loop");
      edges.emplace_back(std::min(u, v), std::max(u, v));
    } else if (kind == "r") {
      if (nums.empty()) throw ParseError(line_no, "rotation line needs a vertex");
      Vertex v = vertex(nums[0], line_no);
      if (rot_seen[v]) throw ParseError(line_no, "duplicate rotation for vertex " + std::to_string(v + 1));
      rot_seen[v] = 1;
      any_rot = true;
      for (std::size_t i = 1; i < nums.size(); ++i) rot[v].push_back(vertex(nums[i], line_no));
    } else if (kind == "f") {
      if (!outer_walk.empty()) throw ParseError(line_no, "duplicate outer face line");
      if (nums.size() < 2) throw ParseError(line_no, "outer face needs at least two vertices");
      for (long x : nums) outer_walk.push_back(vertex(x, line_no));
      outer_line = line_no;
    } else {
      throw ParseError(line_no, "unknown line type '" + kind + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing problem line");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(header_line, "header declares " + std::to_string(m) + " edges but " +
                                      std::to_string(edges.size()) + " were given");
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ParseError(header_line, "parallel edge");

  if (!any_rot) {
    if (!outer_walk.empty()) throw ParseError(outer_line, "outer face given without rotations");
    return Graph(n, edges);
  }
  Graph g;
  try {
    g = Graph::with_rotation(n, edges, rot);
    trace_faces(g);
  } catch (const GraphError& e) {
    throw ParseError(line_no, e.what());
  }
  if (!outer_walk.empty()) {
    Dart d{outer_walk[0], outer_walk[1]};
    if (!g.has_edge(d.tail, d.head)) throw ParseError(outer_line, "outer face uses a missing edge");
    FaceSet fs = trace_faces(g);
    const VertexList& walk = fs.walks[fs.face_of(g, d)];
    // The walk traced from dart d must be the listed one.
    bool ok = walk.size() == outer_walk.size();
    if (ok) {
      const std::size_t len = walk.size();
      ok = false;
      for (std::size_t s = 0; s < len && !ok; ++s) {
        bool all = true;
        for (std::size_t k = 0; k < len && all; ++k) all = walk[(s + k) % len] == outer_walk[k];
        ok = all;
      }
    }
    if (!ok) throw ParseError(outer_line, "outer face line is not a face of the rotation system");
    g.set_outer_dart(d);
  }
  return g;
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

std::string emit_graph(const Graph& g, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string l;
    while (std::getline(lines, l)) out << "c " << l << '\n';
  }
  if (g.has_rotation() && g.order() > 0) out << "c rotations are clockwise\n";
  out << "p forest " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  if (g.has_rotation() && g.order() > 0) {
    for (int v = 0; v < g.order(); ++v) {
      auto r = g.rotation(v);
      if (r.empty()) continue;
      auto start = std::min_element(r.begin(), r.end()) - r.begin();
      out << "r " << v + 1;
      for (std::size_t k = 0; k < r.size(); ++k) out << ' ' << r[(start + k) % r.size()] + 1;
      out << '\n';
    }
    FaceSet fs = trace_faces(g);
    if (fs.outer >= 0) {
      const VertexList& walk = fs.walks[fs.outer];
      const std::size_t len = walk.size();
      std::size_t best = 0;
      for (std::size_t s = 1; s < len; ++s) {
        Dart a{walk[s], walk[(s + 1) % len]}, b{walk[best], walk[(best + 1) % len]};
        if (a < b) best = s;
      }
      out << 'f';
      for (std::size_t k = 0; k < len; ++k) out << ' ' << walk[(best + k) % len] + 1;
      out << '\n';
    }
  }
  return out.str();
}

void write_graph_file(const Graph& g, const std::string& path, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << emit_graph(g, comment);
}

}  // namespace forest
